"""Exact scalar arithmetic: rationals, prime fields F_p, cyclotomic fields Q(zeta_n).

Elements are immutable and kept in canonical form, so equality is plain
coefficient comparison:

  * rationals       -- reduced fraction, positive denominator
  * prime field     -- residue in [0, p)
  * cyclotomic(n)   -- length-phi(n) integer coefficient vector in the power
                       basis of the n-th cyclotomic polynomial, over a common
                       positive denominator, gcd-reduced

cyclotomic(1) is the rationals and FieldSpec normalizes it away.
"""

from fractions import Fraction
from math import gcd

from .errors import ValidationError

_KQ, _KP, _KC = 0, 1, 2  # kind tags: rationals, prime field, cyclotomic


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_divmod_exact(num, den):
    """Exact division of integer polynomials (coefficient lists, low to high)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        lead = num[k + len(den) - 1]
        assert lead % den[-1] == 0
        q = lead // den[-1]
        out[k] = q
        for i, c in enumerate(den):
            num[k + i] -= q * c
    assert all(c == 0 for c in num)
    return out


_CYCLO_CACHE = {1: [-1, 1]}


def cyclotomic_polynomial(n):
    """Integer coefficients of the n-th cyclotomic polynomial, low to high."""
    if n not in _CYCLO_CACHE:
        num = [0] * (n + 1)
        num[0], num[n] = -1, 1
        for d in range(1, n):
            if n % d == 0:
                phi_d = cyclotomic_polynomial(d)
                num = _poly_divmod_exact(num, phi_d)
        _CYCLO_CACHE[n] = num
    return _CYCLO_CACHE[n]


class FieldSpec:
    """Ground field description: rationals, prime-field(p) or cyclotomic(n)."""

    __slots__ = ("kind", "p", "n", "_k", "degree", "_redrows", "_fp_elems", "_fp_invs")

    def __init__(self, kind, p=None, n=None):
        if kind == "cyclotomic" and n == 1:
            kind, n = "rationals", None  # cyclotomic(1) coincides with Q
        self.kind = kind
        self.p = p
        self.n = n
        self._fp_elems = None
        self._fp_invs = None
        if kind == "rationals":
            self._k = _KQ
            self.degree = 1
            self._redrows = None
        elif kind == "prime-field":
            if not _is_prime(p):
                raise ValidationError("prime-field order %r is not prime" % (p,))
            self._k = _KP
            self.degree = 1
            self._redrows = None
            # residues are interned so arithmetic is allocation-free
            self._fp_elems = [FieldElement(self, (v,), 1, True) for v in range(p)]
            self._fp_invs = [None] + [self._fp_elems[pow(v, p - 2, p)]
                                      for v in range(1, p)]
        elif kind == "cyclotomic":
            if n is None or n < 1:
                raise ValidationError("cyclotomic order must be >= 1")
            self._k = _KC
            poly = cyclotomic_polynomial(n)
            phi = len(poly) - 1
            self.degree = phi
            # x^(phi+j) reduced mod the (monic) cyclotomic polynomial
            rows = []
            prev = [-c for c in poly[:phi]]
            rows.append(tuple(prev))
            for _ in range(phi - 2):
                shifted = [0] + prev[:-1]
                top = prev[-1]
                prev = [shifted[i] + top * rows[0][i] for i in range(phi)]
                rows.append(tuple(prev))
            self._redrows = rows
        else:
            raise ValidationError("unknown field kind %r" % (kind,))

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and self.kind == other.kind and self.p == other.p and self.n == other.n)

    def __hash__(self):
        return hash((self.kind, self.p, self.n))

    def __repr__(self):
        if self._k == _KQ:
            return "Q"
        if self._k == _KP:
            return "F%d" % self.p
        return "Q(zeta_%d)" % self.n

    @property
    def characteristic(self):
        return self.p if self._k == _KP else 0

    # -- element constructors -------------------------------------------------

    def zero(self):
        if self._k == _KP:
            return self._fp_elems[0]
        return FieldElement(self, (0,) * self.degree, 1)

    def one(self):
        if self._k == _KP:
            return self._fp_elems[1]
        return FieldElement(self, (1,) + (0,) * (self.degree - 1), 1)

    def from_int(self, k):
        if self._k == _KP:
            return self._fp_elems[k % self.p]
        return FieldElement(self, (k,) + (0,) * (self.degree - 1), 1)

    def from_fraction(self, a, b=1):
        if isinstance(a, Fraction):
            a, b = a.numerator, a.denominator
        if self._k == _KP:
            if b % self.p == 0:
                raise ZeroDivisionError("denominator %d vanishes in F_%d" % (b, self.p))
            binv = pow(b % self.p, self.p - 2, self.p)
            return FieldElement(self, ((a * binv) % self.p,), 1)
        return FieldElement(self, (a,) + (0,) * (self.degree - 1), b)

    def zeta(self):
        """The chosen primitive n-th root of unity (cyclotomic fields only)."""
        if self._k != _KC:
            raise ValidationError("zeta only exists in cyclotomic fields")
        if self.degree == 1:
            # n = 2: zeta = -1
            return self.from_int(-1)
        coeffs = [0] * self.degree
        coeffs[1] = 1
        return FieldElement(self, tuple(coeffs), 1)

    def element(self, value):
        """Coerce an int, Fraction or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise ValidationError("field mismatch: %r vs %r" % (value.spec, self))
            return value
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        raise ValidationError("cannot coerce %r into %r" % (value, self))

    def random_element(self, rng, span=5):
        """Small random element; used by property tests."""
        if self._k == _KP:
            return self.from_int(rng.randrange(self.p))
        coeffs = tuple(rng.randint(-span, span) for _ in range(self.degree))
        return FieldElement(self, coeffs, rng.randint(1, 3))


def rationals():
    return FieldSpec("rationals")


def prime_field(p):
    return FieldSpec("prime-field", p=p)


def cyclotomic_field(n):
    return FieldSpec("cyclotomic", n=n)


class FieldElement:
    """Immutable canonical field element; see module docstring."""

    __slots__ = ("spec", "num", "den")

    def __init__(self, spec, num, den=1, _normalized=False):
        self.spec = spec
        if _normalized:
            self.num = num
            self.den = den
            return
        k = spec._k
        if k == _KP:
            self.num = (num[0] % spec.p,)
            self.den = 1
            return
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        self.num = tuple(num)
        self.den = den

    # -- predicates -----------------------------------------------------------

    def is_zero(self):
        return not any(self.num)

    def is_one(self):
        return self.den == 1 and self.num[0] == 1 and all(c == 0 for c in self.num[1:])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.num == other.num and self.den == other.den and self.spec == other.spec

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        spec = self.spec
        if spec._k == _KP:
            return spec._fp_elems[(self.num[0] + other.num[0]) % spec.p]
        da, db = self.den, other.den
        if da == db:
            return FieldElement(spec, tuple(a + b for a, b in zip(self.num, other.num)), da)
        return FieldElement(spec, tuple(a * db + b * da for a, b in zip(self.num, other.num)),
                            da * db)

    def __sub__(self, other):
        spec = self.spec
        if spec._k == _KP:
            return spec._fp_elems[(self.num[0] - other.num[0]) % spec.p]
        da, db = self.den, other.den
        if da == db:
            return FieldElement(spec, tuple(a - b for a, b in zip(self.num, other.num)), da)
        return FieldElement(spec, tuple(a * db - b * da for a, b in zip(self.num, other.num)),
                            da * db)

    def __neg__(self):
        spec = self.spec
        if spec._k == _KP:
            return spec._fp_elems[(spec.p - self.num[0]) % spec.p]
        return FieldElement(spec, tuple(-c for c in self.num), self.den, True)

    def __mul__(self, other):
        spec = self.spec
        k = spec._k
        if k == _KP:
            return spec._fp_elems[(self.num[0] * other.num[0]) % spec.p]
        if k == _KQ or spec.degree == 1:
            return FieldElement(spec, (self.num[0] * other.num[0],), self.den * other.den)
        a, b = self.num, other.num
        phi = spec.degree
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        red = spec._redrows
        out = conv[:phi]
        for j in range(phi, 2 * phi - 1):
            cj = conv[j]
            if cj:
                row = red[j - phi]
                for i in range(phi):
                    if row[i]:
                        out[i] += cj * row[i]
        return FieldElement(spec, tuple(out), self.den * other.den)

    def inverse(self):
        spec = self.spec
        if self.is_zero():
            raise ZeroDivisionError("division by zero in %r" % (spec,))
        k = spec._k
        if k == _KP:
            return spec._fp_invs[self.num[0]]
        if k == _KQ or spec.degree == 1:
            return FieldElement(spec, (self.den,), self.num[0])
        # solve self * x = 1 via the multiplication matrix in the power basis
        phi = spec.degree
        cols = []
        basis = [spec.zero()] * phi
        for j in range(phi):
            coeffs = [0] * phi
            coeffs[j] = 1
            basis[j] = FieldElement(spec, tuple(coeffs), 1, True)
        for j in range(phi):
            prod = self * basis[j]
            cols.append([Fraction(c, prod.den) for c in prod.num])
        aug = [[cols[j][i] for j in range(phi)] + [Fraction(1 if i == 0 else 0)]
               for i in range(phi)]
        # small Gauss-Jordan over Fraction
        row = 0
        for col in range(phi):
            piv = next((r for r in range(row, phi) if aug[r][col] != 0), None)
            if piv is None:
                continue
            aug[row], aug[piv] = aug[piv], aug[row]
            inv = 1 / aug[row][col]
            aug[row] = [c * inv for c in aug[row]]
            for r in range(phi):
                if r != row and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [c - f * d for c, d in zip(aug[r], aug[row])]
            row += 1
        if row < phi:
            raise ZeroDivisionError("non-invertible cyclotomic element")
        sol = [aug[i][phi] for i in range(phi)]
        den = 1
        for f in sol:
            den = den * f.denominator // gcd(den, f.denominator)
        return FieldElement(spec, tuple(int(f * den) for f in sol), den)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def galois_conjugate(self, t=-1):
        """Apply zeta -> zeta^t (t coprime to n); identity on Q and F_p."""
        spec = self.spec
        if spec._k != _KC:
            return self
        n = spec.n
        t %= n
        if gcd(t, n) != 1:
            raise ValidationError("galois exponent %d not coprime to %d" % (t, n))
        zt = spec.zeta() ** t
        out = spec.zero()
        power = spec.one()
        for i, c in enumerate(self.num):
            if c:
                out = out + FieldElement(spec, (c,) + (0,) * (spec.degree - 1), self.den) * power
            power = power * zt
        return out

    # -- printing -------------------------------------------------------------

    def __repr__(self):
        return self.token()

    def token(self):
        """Compact space-free token, also accepted by the file parsers."""
        spec = self.spec
        if spec._k == _KP:
            return str(self.num[0])
        if spec.degree == 1:
            if self.den == 1:
                return str(self.num[0])
            return "%d/%d" % (self.num[0], self.den)
        inner = ",".join(str(c) for c in self.num)
        if self.den == 1:
            return "[%s]" % inner
        return "[%s]/%d" % (inner, self.den)


def parse_value(spec, token, line=None):
    """Parse a value token (see FieldElement.token) into the given field."""
    from .errors import ParseError

    token = token.strip()
    try:
        if token.startswith("["):
            if spec._k != _KC:
                raise ValueError("bracketed value in a non-cyclotomic field")
            body, _, denpart = token[1:].partition("]")
            den = 1
            if denpart.startswith("/"):
                den = int(denpart[1:])
            coeffs = [Fraction(c) for c in body.split(",")]
            if len(coeffs) > spec.degree:
                raise ValueError("too many cyclotomic coefficients")
            coeffs += [Fraction(0)] * (spec.degree - len(coeffs))
            out = spec.zero()
            zeta = spec.zeta()
            power = spec.one()
            for c in coeffs:
                out = out + spec.from_fraction(c / den) * power
                power = power * zeta
            return out
        return spec.from_fraction(Fraction(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("bad value %r for %r (%s)" % (token, spec, exc), line=line)
