"""Batch command-line front end.

Every command prints human-readable tables followed by machine-readable
`RESULT <check> PASS|FAIL` lines; the exit status is 0 exactly when every
check passed. Output is deterministic (fixed orderings, no timestamps).

Exit codes: 0 all checks pass; 1 some check failed; 2 usage error;
3 parse error; 4 validation error; 5 unsupported regime; 6 catalog gap;
7 non-split quotient; 8 degree-bound overflow.
"""

import argparse
import os
import random
import sys

from .errors import (CatalogGapError, DegreeOverflowError, NonSplitError,
                     ParseError, UnsupportedRegimeError, ValidationError)
from . import algebra as alg
from . import catalog, doubles, formats, fusion, hochschild, hopf, linalg

EXIT_CODES = [
    (ParseError, 3),
    (NonSplitError, 7),       # before its parent UnsupportedRegimeError
    (DegreeOverflowError, 8),
    (UnsupportedRegimeError, 5),
    (CatalogGapError, 6),
    (ValidationError, 4),
]


def _table(rows, out):
    """Aligned text table."""
    rows = [[str(x) for x in r] for r in rows]
    if not rows:
        return
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
    for r in rows:
        out.write("  ".join(x.rjust(w) for x, w in zip(r, widths)).rstrip() + "\n")


def _load_group(args):
    name = args.group
    if os.sep in name or name.endswith(".txt"):
        with open(name) as fh:
            return formats.parse_group(fh.read(), name=os.path.basename(name))
    return catalog.group(name)


def _double_name(args):
    field = _field_choice(args)
    if field is None or field.characteristic == 0:
        return "d-%s" % args.group
    return "d-%s-char%d" % (args.group, field.characteristic)


def _field_choice(args):
    if getattr(args, "field", None):
        return catalog.parse_field_token(args.field)
    char = getattr(args, "char", None)
    if char in (None, "0"):
        return None
    return catalog.parse_field_token("fp:%s" % char)


def _load_frobenius(args):
    name = args.algebra
    if os.sep in name or name.endswith(".txt"):
        with open(name) as fh:
            A, form = formats.parse_algebra(fh.read(), name=os.path.basename(name))
        if form is None:
            return None, A
        from .frobenius import FrobeniusAlgebra

        return FrobeniusAlgebra(A, form), A
    F = catalog.frobenius_algebra(name)
    return F, F.algebra


def _catalog_idempotents(name, A):
    """Primitive idempotents, routing doubles through their simples."""
    if name and name.startswith("d-") and A.spec.characteristic == 0:
        simples = catalog.double_simples(name)
        return alg.primitive_idempotents(A, simples=simples), simples
    return alg.primitive_idempotents(A), None


def cmd_modular_data(args, out):
    G = _load_group(args)
    field = _field_choice(args)
    md, simples, H, qt = doubles.smatrix_modular(G, field)
    out.write("modular data of D(%s) over %s: %d simples\n"
              % (G.name, catalog.field_token(md.smatrix.spec), md.rank))
    out.write("labels: %s\n" % " ".join(md.labels))
    out.write("S matrix:\n")
    _table([[md.smatrix[i, j].token() for j in range(md.rank)]
            for i in range(md.rank)], out)
    out.write("T diagonal: %s\n" % " ".join(t.token() for t in md.tdiagonal))
    out.write("RESULT modular-data PASS\n")
    return True


def cmd_fusion(args, out):
    G = _load_group(args)
    name = _double_name(args)
    F, H, qt = catalog.double_context(name)
    simples = catalog.double_simples(name)
    tensor = fusion.fusion_oracle(H, simples)
    out.write("fusion oracle for %s (%d simples)\n" % (name, len(simples)))
    for i in range(len(simples)):
        for j in range(len(simples)):
            terms = ["%d*X%d" % (tensor[i][j][l], l)
                     for l in range(len(simples)) if tensor[i][j][l]]
            out.write("X%d (x) X%d = %s\n" % (i, j, " + ".join(terms) or "0"))
    out.write("RESULT fusion PASS\n")
    return True


def cmd_verlinde_check(args, out):
    G = _load_group(args)
    field = _field_choice(args)
    if args.smatrix:
        with open(args.smatrix) as fh:
            spec, S = formats.parse_smatrix(fh.read())
        md_std, simples, H, qt = doubles.smatrix_modular(G, spec)
        md = fusion.ModularData(md_std.labels, S, None)
    else:
        md, simples, H, qt = doubles.smatrix_modular(G, field)
    report = fusion.verlinde_check(md, H, simples)
    out.write("verlinde check on D(%s): %d triples\n"
              % (G.name, md.rank ** 3))
    for line in report.lines():
        out.write(line + "\n")
    return report.passed


def cmd_diagonalize(args, out):
    G = _load_group(args)
    md, simples, H, qt = doubles.smatrix_modular(G, _field_choice(args))
    tensor = fusion.verlinde_coefficients(md)
    report = fusion.diagonalization_check(md, tensor)
    for line in report.lines():
        out.write(line + "\n")
    return report.passed


def cmd_star_product(args, out):
    F, A = _load_frobenius(args)
    if F is None:
        raise ValidationError("algebra %r carries no Frobenius form" % args.algebra)
    comm, proj = alg.hh0(A)
    out.write("star products of basis elements, as classes in A/[A,A] "
              "(dim %d)\n" % proj.rows)
    for i in range(A.dim):
        for j in range(A.dim):
            s = F.star(A.basis_vector(i), A.basis_vector(j))
            cls = proj.apply(s)
            if not linalg.vec_is_zero(cls):
                out.write("[%s * %s] = (%s)\n"
                          % (A.basis_names[i], A.basis_names[j],
                             ",".join(x.token() for x in cls)))
    out.write("RESULT star-product PASS\n")
    return True


def cmd_cartan(args, out):
    F, A = _load_frobenius(args)
    idems, simples = _catalog_idempotents(args.algebra, A)
    classes = alg.pim_classes(A, idems, simples=simples)
    cartan = alg.cartan_matrix(A, idems, classes=classes)
    out.write("cartan matrix (%d projective classes)\n" % len(cartan))
    _table(cartan, out)
    out.write("RESULT cartan PASS\n")
    return True


def cmd_blocks(args, out):
    F, A = _load_frobenius(args)
    idems, simples = _catalog_idempotents(args.algebra, A)
    classes = alg.pim_classes(A, idems, simples=simples)
    cartan = alg.cartan_matrix(A, idems, classes=classes)
    partition = alg.blocks(A, cartan)
    out.write("blocks of %s: %d\n" % (args.algebra, len(partition.classes)))
    for t, cls in enumerate(partition.classes):
        out.write("block %d: projectives %s\n"
                  % (t, " ".join(str(i) for i in cls)))
    out.write("RESULT blocks PASS\n")
    return True


def cmd_hochschild(args, out):
    F, A = _load_frobenius(args)
    bound = args.degree
    for p in range(bound + 1):
        dim, reps, space = hochschild.cohomology(A, p)
        out.write("HH^%d dimension %d\n" % (p, dim))
        for t, rep in enumerate(reps):
            out.write("representative %d:\n" % t)
            for line in rep.sparse_lines():
                out.write("  %s\n" % line)
    out.write("RESULT hochschild PASS\n")
    return True


def cmd_bracket(args, out):
    name = args.algebra
    if not name.startswith("fp-truncated-"):
        raise UnsupportedRegimeError(
            "bracket witness runs on fp-truncated-<p> catalog algebras")
    p = int(name.split("-")[-1])
    alpha, beta, bracket, report = fusion.bracket_witness(p)
    out.write("bracket witness on F_%d[t]/(t^%d)\n" % (p, p))
    out.write("alpha (t -> 1):\n")
    for line in alpha.sparse_lines():
        out.write("  %s\n" % line)
    out.write("beta (t -> t):\n")
    for line in beta.sparse_lines():
        out.write("  %s\n" % line)
    out.write("[alpha, beta]:\n")
    for line in bracket.sparse_lines():
        out.write("  %s\n" % line)
    for line in report.lines():
        out.write(line + "\n")
    return report.passed


def cmd_homotopy_check(args, out):
    F, A = _load_frobenius(args)
    rng = random.Random(2024)
    bound = args.degree
    samples = args.samples
    failures = 0
    for p in range(bound + 1):
        for q in range(bound + 1):
            for _ in range(samples):
                a = hochschild.Cochain.random(A, p, rng)
                b = hochschild.Cochain.random(A, q, rng)
                if not hochschild.homotopy_identity_defect(a, b).is_zero():
                    failures += 1
                    out.write("homotopy identity FAILS at degrees (%d,%d)\n" % (p, q))
                if not hochschild.circle_sign_defect(a, b).is_zero():
                    failures += 1
                    out.write("circle resummation FAILS at degrees (%d,%d)\n" % (p, q))
    out.write("checked degrees <= %d with %d samples per pair\n" % (bound, samples))
    out.write("RESULT homotopy %s\n" % ("PASS" if failures == 0 else "FAIL"))
    return failures == 0


def cmd_sl2z(args, out):
    G = _load_group(args)
    orbits = doubles.pbun_orbits(G)
    out.write("%d commuting-pair orbits of %s\n" % (len(orbits), G.name))
    for t, o in enumerate(orbits):
        out.write("orbit %d: rep %r size %d\n" % (t, o.representative, o.size))
    s_perm = doubles.sl2z_action(G, doubles.SL2Z_S, orbits)
    t_perm = doubles.sl2z_action(G, doubles.SL2Z_T, orbits)
    out.write("S permutation: %s\n" % s_perm)
    out.write("T permutation: %s\n" % t_perm)

    def compose(p1, p2):  # apply p1 then p2
        return [p2[p1[i]] for i in range(len(p1))]

    ident = list(range(len(orbits)))
    s2 = compose(s_perm, s_perm)
    s4 = compose(s2, s2)
    st = compose(s_perm, t_perm)  # action(ST) = action(T) o action(S)
    st3 = compose(compose(st, st), st)
    ok = s4 == ident and st3 == s2
    out.write("S^4 = id: %s\n" % (s4 == ident))
    out.write("(ST)^3 = S^2: %s\n" % (st3 == s2))
    out.write("RESULT sl2z %s\n" % ("PASS" if ok else "FAIL"))
    return ok


def cmd_k0_check(args, out):
    name = _double_name(args)
    if "-char" not in name:
        raise UnsupportedRegimeError("k0-check targets mod-p doubles; pass --char p")
    F, H, idems, pims, simples, pairs, sperm = catalog.double_k0_ingredients(name)
    comm, proj = alg.hh0(H.algebra)
    report = fusion.k0_check(F, H, idems, pims, simples, pairs, sperm, proj)
    out.write("k0 congruence on %s: %d projectives\n" % (name, len(pims)))
    mults = report.details.get("k0-multiplicities")
    if mults:
        for i in range(len(pims)):
            for j in range(len(pims)):
                terms = ["%d*P%d" % (mults[i][j][l], l)
                         for l in range(len(pims)) if mults[i][j][l]]
                out.write("P%d (x) P%d = %s\n" % (i, j, " + ".join(terms) or "0"))
    for witness, text in report.failures:
        out.write("witness %r: %s\n" % (witness, text))
    out.write("RESULT k0 %s\n" % ("PASS" if report.passed else "FAIL"))
    return report.passed


def cmd_corgrv_check(args, out):
    name = _double_name(args)
    F, H, qt = catalog.double_context(name)
    simples = catalog.double_simples(name)
    tensor = fusion.fusion_oracle(H, simples)
    ok, failures = hopf.corgrv_check(H, qt, simples, tensor)
    out.write("corgrv identity on %s: %d simples, %d pairs\n"
              % (name, len(simples), len(simples) ** 2))
    for i, j, lhs, rhs in failures:
        out.write("witness (%d,%d): lhs (%s) != rhs (%s)\n"
                  % (i, j, ",".join(x.token() for x in lhs),
                     ",".join(x.token() for x in rhs)))
    out.write("RESULT corgrv %s\n" % ("PASS" if ok else "FAIL"))
    return ok


COMMANDS = {
    "modular-data": cmd_modular_data,
    "fusion": cmd_fusion,
    "verlinde-check": cmd_verlinde_check,
    "diagonalize": cmd_diagonalize,
    "star-product": cmd_star_product,
    "cartan": cmd_cartan,
    "blocks": cmd_blocks,
    "hochschild": cmd_hochschild,
    "bracket": cmd_bracket,
    "homotopy-check": cmd_homotopy_check,
    "sl2z": cmd_sl2z,
    "k0-check": cmd_k0_check,
    "corgrv-check": cmd_corgrv_check,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="verlinde",
        description="Exact checks for fusion rules, star products and "
                    "Hochschild structures of Drinfeld doubles at desk scale.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in sorted(COMMANDS):
        p = sub.add_parser(name)
        p.add_argument("--group", help="catalog group name (z2, z3, z4, s3, ...) or file path")
        p.add_argument("--algebra", help="catalog algebra name or file path")
        p.add_argument("--hopf", help="hopf data file path")
        p.add_argument("--field", help="field token: q | fp:<p> | cyc:<n>")
        p.add_argument("--char", help="characteristic shortcut: 0 or a prime")
        p.add_argument("--degree", type=int, default=2, help="degree bound")
        p.add_argument("--samples", type=int, default=4,
                       help="random samples per degree pair (homotopy-check)")
        p.add_argument("--smatrix", help="S-matrix file path (verlinde-check)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    fn = COMMANDS[args.command]
    try:
        ok = fn(args, sys.stdout)
    except Exception as exc:  # map typed errors to exit codes
        for klass, code in EXIT_CODES:
            if isinstance(exc, klass):
                sys.stderr.write("error: %s\n" % exc)
                return code
        raise
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
