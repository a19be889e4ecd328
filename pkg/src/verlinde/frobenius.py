"""Symmetric Frobenius structures on a StructureAlgebra.

A symmetric nondegenerate trace form lambda plays the role of the modified
trace at algebra level (it is unique up to an invertible scalar; we verify
scale invariance of everything that should not depend on the choice). From it:
dual bases, the Frobenius coproduct Delta(a) = sum (a e_i) (x) f_i, the
product a * b = a' b a'', handle traces, and block-diagonality certification.
"""

from .errors import ValidationError
from . import linalg
from .linalg import Matrix


class SweedlerTensor:
    """Canonicalized sum of simple tensors: left entries are distinct basis
    vectors, so there are at most dim(A) terms."""

    def __init__(self, algebra, terms):
        acc = {}
        for left, right in terms:
            for i, c in enumerate(left):
                if c.is_zero():
                    continue
                cur = acc.get(i)
                scaled = linalg.vec_scale(c, right)
                acc[i] = linalg.vec_add(cur, scaled) if cur is not None else scaled
        self.algebra = algebra
        self.terms = [(i, acc[i]) for i in sorted(acc) if not linalg.vec_is_zero(acc[i])]

    def pairs(self):
        """Terms as (left vector, right vector) pairs."""
        A = self.algebra
        return [(A.basis_vector(i), r) for i, r in self.terms]

    def sandwich(self, b):
        """sum a' b a'' for this tensor sum a' (x) a''."""
        A = self.algebra
        out = A.zero_vector()
        for i, right in self.terms:
            out = linalg.vec_add(out, A.multiply(A.multiply(A.basis_vector(i), b), right))
        return out

    def contract_left(self, functional):
        """(functional (x) id) applied to the tensor."""
        A = self.algebra
        out = A.zero_vector()
        for i, right in self.terms:
            c = functional[i]
            if not c.is_zero():
                out = linalg.vec_add(out, linalg.vec_scale(c, right))
        return out

    def contract_right(self, functional):
        A = self.algebra
        out = A.zero_vector()
        for i, right in self.terms:
            c = A.spec.zero()
            for j, r in enumerate(right):
                if not r.is_zero():
                    c = c + functional[j] * r
            out = linalg.vec_add(out, linalg.vec_scale(c, A.basis_vector(i)))
        return out


class FrobeniusAlgebra:
    """StructureAlgebra plus a symmetric nondegenerate trace form."""

    def __init__(self, algebra, form, validate=True):
        self.algebra = algebra
        spec = algebra.spec
        self.form = [spec.element(v) for v in form]
        rows = []
        for i in range(algebra.dim):
            row = []
            for j in range(algebra.dim):
                row.append(self.evaluate(algebra.multiply(
                    algebra.basis_vector(i), algebra.basis_vector(j))))
            rows.append(row)
        self.gram = Matrix.from_rows(spec, rows)
        if validate:
            for i in range(algebra.dim):
                for j in range(i):
                    if self.gram[i, j] != self.gram[j, i]:
                        raise ValidationError(
                            "form is not symmetric at (e%d, e%d)" % (i, j))
        try:
            self.gram_inverse = linalg.inverse(self.gram)
        except ValidationError:
            raise ValidationError("Frobenius form is degenerate")
        self._duals = self.gram_inverse.columns()

    def evaluate(self, x):
        out = self.algebra.spec.zero()
        for i, c in enumerate(x):
            if not c.is_zero():
                out = out + c * self.form[i]
        return out

    def rescaled(self, c):
        """Same algebra with the form scaled by an invertible scalar."""
        if c.is_zero():
            raise ValidationError("form scale must be invertible")
        return FrobeniusAlgebra(self.algebra, [c * v for v in self.form], validate=False)

    def dual_bases(self):
        """({e_i}, {f_i}) with lambda(e_i f_j) = delta_ij."""
        A = self.algebra
        return [A.basis_vector(i) for i in range(A.dim)], [list(f) for f in self._duals]

    def coproduct(self, a):
        """Delta(a) = sum_i (a e_i) (x) f_i as a SweedlerTensor."""
        A = self.algebra
        terms = []
        for i in range(A.dim):
            left = A.multiply(a, A.basis_vector(i))
            if not linalg.vec_is_zero(left):
                terms.append((left, self._duals[i]))
        return SweedlerTensor(A, terms)

    def star(self, a, b):
        """a * b = a' b a'' (descends to a commutative associative product
        on A/[A,A], not on A itself)."""
        return self.coproduct(a).sandwich(b)

    def casimir(self):
        """The element sum e_i (x) f_i."""
        return SweedlerTensor(self.algebra,
                              [(self.algebra.basis_vector(i), self._duals[i])
                               for i in range(self.algebra.dim)])

    def handle_trace(self, pi, rho):
        """lambda(pi * rho) for idempotents; equals dim(pi A rho) * 1_k."""
        A = self.algebra
        for name, e in (("first", pi), ("second", rho)):
            if A.multiply(e, e) != list(e):
                raise ValidationError("%s argument is not idempotent" % name)
        return self.evaluate(self.star(pi, rho))

    def modified_dimension(self, pi):
        if self.algebra.multiply(pi, pi) != list(pi):
            raise ValidationError("argument is not idempotent")
        return self.evaluate(pi)


def certify_block_diagonal(F, block_units):
    """Check that * respects the block decomposition, basis pair by basis pair.

    A_l * A_l' = 0 in A/[A,A] for distinct blocks, and A_l * A_l inside A_l
    at the level of A. Takes the central block idempotents (see
    algebra.block_units). Returns (True, None) or (False, witness) with
    witness = (block, block', basis index, basis index).
    """
    from .algebra import hh0

    A = F.algebra
    _, proj = hh0(A)
    block_basis = []
    for u in block_units:
        cols = [A.multiply(A.multiply(u, A.basis_vector(i)), u) for i in range(A.dim)]
        block_basis.append(linalg.column_space_basis(
            Matrix.from_columns(A.spec, cols, nrows=A.dim)))
    for l1, B1 in enumerate(block_basis):
        for l2, B2 in enumerate(block_basis):
            for i in range(B1.cols):
                a = B1.column(i)
                for j in range(B2.cols):
                    b = B2.column(j)
                    s = F.star(a, b)
                    if l1 != l2:
                        if not linalg.vec_is_zero(proj.apply(s)):
                            return False, (l1, l2, i, j)
                    else:
                        inside = A.multiply(A.multiply(block_units[l1], s),
                                            block_units[l1])
                        if inside != s:
                            return False, (l1, l2, i, j)
    return True, None
