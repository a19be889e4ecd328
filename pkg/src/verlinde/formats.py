"""Text file formats: algebras, groups, Hopf data, S-matrices, irreps.

All indices are 0-based; values use the field token syntax of
fields.parse_value ('3', '-1/2', '[1,-1]/2'). Lines starting with '#' and
blank lines are ignored. Parse errors carry line numbers.
"""

from .errors import ParseError
from . import linalg
from .algebra import StructureAlgebra
from .catalog import field_token, parse_field_token
from .fields import parse_value
from .frobenius import FrobeniusAlgebra
from .hopf import HopfAlgebraData, QuasiTriangularData, SparseTensor
from .linalg import Matrix


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _expect(cond, message, lineno):
    if not cond:
        raise ParseError(message, line=lineno)


def parse_algebra(text, name=None):
    """Returns (StructureAlgebra, form vector or None)."""
    it = list(_lines(text))
    _expect(bool(it), "empty algebra file", 1)
    lineno, header = it[0]
    parts = header.split()
    _expect(len(parts) == 3 and parts[0] == "algebra",
            "expected 'algebra <field> <dim>'", lineno)
    spec = parse_field_token(parts[1])
    try:
        dim = int(parts[2])
    except ValueError:
        raise ParseError("bad dimension %r" % parts[2], line=lineno)
    entries = []
    unit = None
    form = None
    for lineno, line in it[1:]:
        parts = line.split()
        if parts[0] == "unit":
            _expect(len(parts) == dim + 1, "unit needs %d values" % dim, lineno)
            unit = [parse_value(spec, tok, lineno) for tok in parts[1:]]
        elif parts[0] == "form":
            _expect(len(parts) == dim + 1, "form needs %d values" % dim, lineno)
            form = [parse_value(spec, tok, lineno) for tok in parts[1:]]
        else:
            _expect(len(parts) == 4, "expected 'i j k value'", lineno)
            try:
                i, j, k = int(parts[0]), int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("bad index in %r" % line, line=lineno)
            _expect(0 <= i < dim and 0 <= j < dim and 0 <= k < dim,
                    "structure-constant index out of range", lineno)
            entries.append((i, j, k, parse_value(spec, parts[3], lineno)))
    _expect(unit is not None, "missing 'unit' line", it[-1][0])
    A = StructureAlgebra.from_sparse(spec, dim, entries, unit, name=name)
    return A, form


def format_algebra(A, form=None):
    out = ["algebra %s %d" % (field_token(A.spec), A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            for k, v in A.mult[i][j]:
                out.append("%d %d %d %s" % (i, j, k, v.token()))
    out.append("unit " + " ".join(x.token() for x in A.unit))
    if form is not None:
        out.append("form " + " ".join(x.token() for x in form))
    return "\n".join(out) + "\n"


def parse_group(text, name=None):
    from .doubles import FiniteGroup

    it = list(_lines(text))
    _expect(bool(it), "empty group file", 1)
    lineno, header = it[0]
    parts = header.split()
    _expect(len(parts) == 2 and parts[0] == "group", "expected 'group <n>'", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError("bad group order %r" % parts[1], line=lineno)
    _expect(len(it) == n + 1, "expected %d table rows" % n, lineno)
    table = []
    for lineno, line in it[1:]:
        row = line.split()
        _expect(len(row) == n, "row needs %d entries" % n, lineno)
        try:
            table.append([int(x) for x in row])
        except ValueError:
            raise ParseError("bad table entry in %r" % line, line=lineno)
    return FiniteGroup(table, name=name)


def format_group(G):
    out = ["group %d" % G.order]
    for row in G.table:
        out.append(" ".join(str(x) for x in row))
    return "\n".join(out) + "\n"


def parse_hopf(text, name=None):
    """Hopf data file: algebra block, 'coproduct i j k value' lines,
    'counit ...', 'antipode' + n rows, optional 'R i j value' and
    'ribbon ...' lines. Returns (HopfAlgebraData, QuasiTriangularData or None)."""
    it = list(_lines(text))
    _expect(bool(it), "empty hopf file", 1)
    lineno, header = it[0]
    parts = header.split()
    _expect(len(parts) == 3 and parts[0] == "algebra",
            "expected 'algebra <field> <dim>'", lineno)
    spec = parse_field_token(parts[1])
    dim = int(parts[2])
    entries = []
    unit = None
    cop = [[] for _ in range(dim)]
    counit = None
    antipode_rows = []
    r_entries = []
    ribbon = None
    mode = "body"
    rows_needed = 0
    for lineno, line in it[1:]:
        parts = line.split()
        if mode == "antipode":
            _expect(len(parts) == dim, "antipode row needs %d values" % dim, lineno)
            antipode_rows.append([parse_value(spec, tok, lineno) for tok in parts])
            rows_needed -= 1
            if rows_needed == 0:
                mode = "body"
            continue
        key = parts[0]
        if key == "unit":
            unit = [parse_value(spec, tok, lineno) for tok in parts[1:]]
        elif key == "coproduct":
            _expect(len(parts) == 5, "expected 'coproduct i j k value'", lineno)
            i, j, k = int(parts[1]), int(parts[2]), int(parts[3])
            cop[i].append((j, k, parse_value(spec, parts[4], lineno)))
        elif key == "counit":
            _expect(len(parts) == dim + 1, "counit needs %d values" % dim, lineno)
            counit = [parse_value(spec, tok, lineno) for tok in parts[1:]]
        elif key == "antipode":
            mode = "antipode"
            rows_needed = dim
        elif key == "R":
            _expect(len(parts) == 4, "expected 'R i j value'", lineno)
            r_entries.append((int(parts[1]), int(parts[2]),
                              parse_value(spec, parts[3], lineno)))
        elif key == "ribbon":
            _expect(len(parts) == dim + 1, "ribbon needs %d values" % dim, lineno)
            ribbon = [parse_value(spec, tok, lineno) for tok in parts[1:]]
        else:
            _expect(len(parts) == 4, "expected 'i j k value'", lineno)
            entries.append((int(parts[0]), int(parts[1]), int(parts[2]),
                            parse_value(spec, parts[3], lineno)))
    _expect(unit is not None, "missing 'unit' line", it[-1][0])
    _expect(counit is not None, "missing 'counit' line", it[-1][0])
    _expect(len(antipode_rows) == dim, "missing or short antipode block", it[-1][0])
    A = StructureAlgebra.from_sparse(spec, dim, entries, unit, name=name)
    antipode = Matrix.from_rows(spec, antipode_rows)
    H = HopfAlgebraData(A, cop, counit, antipode)
    qt = None
    if r_entries:
        _expect(ribbon is not None, "R given without ribbon line", it[-1][0])
        r = SparseTensor(A, 2, {(i, j): v for i, j, v in r_entries})
        qt = QuasiTriangularData(H, r, ribbon)
    return H, qt


def format_hopf(H, qt=None):
    A = H.algebra
    out = [format_algebra(A).rstrip("\n")]
    for i in range(A.dim):
        for j, k, v in H.coproduct[i]:
            out.append("coproduct %d %d %d %s" % (i, j, k, v.token()))
    out.append("counit " + " ".join(x.token() for x in H.counit))
    out.append("antipode")
    for i in range(A.dim):
        out.append(" ".join(x.token() for x in H.antipode.row(i)))
    if qt is not None:
        for (i, j), v in sorted(qt.r.data.items()):
            out.append("R %d %d %s" % (i, j, v.token()))
        out.append("ribbon " + " ".join(x.token() for x in qt.ribbon))
    return "\n".join(out) + "\n"


def parse_smatrix(text):
    """Returns (FieldSpec, Matrix)."""
    it = list(_lines(text))
    _expect(bool(it), "empty smatrix file", 1)
    lineno, header = it[0]
    parts = header.split()
    _expect(len(parts) == 3 and parts[0] == "smatrix",
            "expected 'smatrix <field> <n>'", lineno)
    spec = parse_field_token(parts[1])
    n = int(parts[2])
    _expect(len(it) == n + 1, "expected %d matrix rows" % n, lineno)
    rows = []
    for lineno, line in it[1:]:
        toks = line.split()
        _expect(len(toks) == n, "row needs %d entries" % n, lineno)
        rows.append([parse_value(spec, tok, lineno) for tok in toks])
    return spec, Matrix.from_rows(spec, rows)


def format_smatrix(spec, m):
    out = ["smatrix %s %d" % (field_token(spec), m.rows)]
    for i in range(m.rows):
        out.append(" ".join(x.token() for x in m.row(i)))
    return "\n".join(out) + "\n"


def parse_irreps(text, G):
    """Irrep blocks: 'irrep <class-rep> <dim> <cyclotomic-n>' then
    'generators g1 ... gk' then, per generator, <dim> rows of <dim> values.
    Attaches the irreps for the named centralizers to the group and returns
    the list of (class-rep, dim) headers parsed."""
    from .fields import cyclotomic_field

    it = list(_lines(text))
    pos = 0
    parsed = []
    pending = {}
    while pos < len(it):
        lineno, line = it[pos]
        parts = line.split()
        _expect(parts[0] == "irrep" and len(parts) == 4,
                "expected 'irrep <class-rep> <dim> <cyclotomic-n>'", lineno)
        rep, d, n = int(parts[1]), int(parts[2]), int(parts[3])
        spec = cyclotomic_field(n)
        pos += 1
        lineno, line = it[pos]
        parts = line.split()
        _expect(parts[0] == "generators", "expected 'generators ...'", lineno)
        gens = [int(x) for x in parts[1:]]
        pos += 1
        mats = {}
        for g in gens:
            rows = []
            for _ in range(d):
                lineno, line = it[pos]
                toks = line.split()
                _expect(len(toks) == d, "matrix row needs %d values" % d, lineno)
                rows.append([parse_value(spec, tok, lineno) for tok in toks])
                pos += 1
            mats[g] = Matrix.from_rows(spec, rows)
        cent = tuple(sorted(G.centralizer(rep)))
        pending.setdefault(cent, []).append((d, gens, mats, spec))
        parsed.append((rep, d))

    def extend(d, gens, mats, spec):
        """Images of all centralizer elements from the generator images."""
        table = {0: Matrix.identity(spec, d)}
        frontier = dict(table)
        while frontier:
            new = {}
            for h, mh in frontier.items():
                for g in gens:
                    hg = G.mul(h, g)
                    if hg not in table and hg not in new:
                        new[hg] = mh * mats[g]
            table.update(new)
            frontier = new
        return table

    for cent, blocks in pending.items():
        def build(spec_out, blocks=blocks, cent=cent):
            from .errors import UnsupportedRegimeError

            out = []
            for d, gens, mats, spec in blocks:
                if spec != spec_out:
                    raise UnsupportedRegimeError(
                        "irrep file field %r does not match requested %r"
                        % (spec, spec_out))
                full = extend(d, gens, mats, spec)
                missing = [h for h in cent if h not in full]
                if missing:
                    raise ParseError("generators do not generate the centralizer "
                                     "(missing %r)" % missing[:3])
                out.append({"dim": d, "matrix": full})
            return out
        G.nonabelian_irreps[cent] = build
    return parsed
