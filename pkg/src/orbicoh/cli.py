"""Command-line front end.

Subcommands: validate, vertices, complex, sectors, sr, product-table,
multiply, restrict, check.  Exit status is 0 on success, 1 on a validation
or property failure, 2 on a parse error (file, class expression, or
command line).  ``--format machine`` emits JSON with stable field names and
canonical orderings; the default pretty output renders the same content as
aligned text tables.  Facet, vertex and sector indices are 1-based in all
input and output.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from .chen_ruan import ChenRuanRing, CRClass
from .errors import OrbicohError, ParseError
from .polynomial import Polynomial, monomials_up_to_degree, mono_support
from .polytope import validate as validate_polytope
from .polytope_file import format_rational, parse_polytope
from .restriction import check_homomorphism, injectivity_rank_check, nh_multiply, restrict
from .sectors import SectorElement
from .stanley_reisner import SRPresentation

CHECK_SEED = 20120914
CHECK_TRIALS = 100


# ---------------------------------------------------------------------------
# input handling

def _read_polytope(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc.strerror or exc)) from None
    return parse_polytope(text)


_TERM_RE = re.compile(
    r"""^\s*
        (?P<sign>-)?\s*
        (?P<coeff>\d+)?\s*
        \*?\s*
        (?P<monomial>x\d+(?:\^\d+)?(?:\s*\*\s*x\d+(?:\^\d+)?)*)?\s*
        @\s*(?P<sector>\d+)\s*$""",
    re.VERBOSE,
)


def parse_class(text: str, ring: ChenRuanRing) -> CRClass:
    """Parse ``coeff * x1^e1*...*xm^em @ sector`` terms joined by + or -.

    Sector indices refer to the canonical ordering printed by the
    ``sectors`` subcommand (1-based).
    """
    pieces = [p.strip() for p in text.replace("-", "+-").split("+")]
    pieces = [p for p in pieces if p]
    if not pieces:
        raise ParseError("empty class expression")
    accumulated: dict[SectorElement, Polynomial] = {}
    for piece in pieces:
        match = _TERM_RE.match(piece)
        if match is None:
            raise ParseError(
                "bad class term %r (expected 'coeff * x1^e1*...*xm^em @ sector')" % piece)
        if match.group("coeff") is None and match.group("monomial") is None:
            raise ParseError("class term %r has neither coefficient nor monomial" % piece)
        coeff = int(match.group("coeff") or 1)
        if match.group("sign"):
            coeff = -coeff
        exps = [0] * ring.num_vars
        if match.group("monomial"):
            for factor in match.group("monomial").split("*"):
                factor = factor.strip()
                if "^" in factor:
                    var_text, exp_text = factor.split("^")
                    power = int(exp_text)
                else:
                    var_text, power = factor, 1
                index = int(var_text[1:])
                if not 1 <= index <= ring.num_vars:
                    raise ParseError(
                        "variable x%d out of range (the polytope has %d facets)"
                        % (index, ring.num_vars))
                exps[index - 1] += power
        sector_index = int(match.group("sector"))
        if not 1 <= sector_index <= len(ring.sectors):
            raise ParseError(
                "sector index %d out of range (the table has %d sectors)"
                % (sector_index, len(ring.sectors)))
        g = ring.sectors[sector_index - 1]
        term = Polynomial.monomial(ring.num_vars, exps, coeff)
        accumulated[g] = accumulated[g] + term if g in accumulated else term
    return ring.cr_class(accumulated)


# ---------------------------------------------------------------------------
# rendering helpers

def _poly_machine(p: Polynomial):
    return [
        {"coefficient": coeff, "exponents": list(exps)}
        for exps, coeff in p.items()
    ]


def _indices_1based(s):
    return sorted(i + 1 for i in s)


def _print_table(headers, rows, out):
    widths = [len(h) for h in headers]
    for row in rows:
        for k, cell in enumerate(row):
            widths[k] = max(widths[k], len(cell))
    def fmt(cells):
        return "  ".join(cell.ljust(widths[k]) for k, cell in enumerate(cells)).rstrip()
    out.write(fmt(headers) + "\n")
    out.write("  ".join("-" * w for w in widths) + "\n")
    for row in rows:
        out.write(fmt(row) + "\n")


def _monomial_text(indices):
    if not indices:
        return "1"
    return "*".join("x%d" % i for i in _indices_1based(indices))


def _sector_label(index: int) -> str:
    return "g%d" % (index + 1)


def _entry_text(sc, ring) -> str:
    if sc.is_zero:
        return "0"
    target = "1_%s" % _sector_label(ring.sectors.index_of(sc.target))
    if not sc.virtual_indices and not sc.euler_indices:
        return target
    return "(%s)*(%s)*%s" % (
        _monomial_text(sc.virtual_indices),
        _monomial_text(sc.euler_indices),
        target,
    )


def _class_text(a: CRClass, ring) -> str:
    if not a:
        return "0"
    chunks = []
    for g, p in a.items():
        label = _sector_label(ring.sectors.index_of(g))
        if p == Polynomial.one(ring.num_vars):
            chunks.append("1_%s" % label)
        else:
            chunks.append("(%s)*1_%s" % (p, label))
    return " + ".join(chunks)


def _emit(args, payload, pretty_fn):
    if args.format == "machine":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        pretty_fn(sys.stdout)


# ---------------------------------------------------------------------------
# subcommands

def cmd_validate(args):
    p = _read_polytope(args.file)
    report = validate_polytope(p)
    payload = {
        "command": "validate",
        "valid": report.ok,
        "condition": report.condition,
        "message": report.message,
        "num_vertices": report.num_vertices,
    }

    def pretty(out):
        if report.ok:
            out.write("valid: %d facets, %d vertices\n" % (p.num_facets, report.num_vertices))
        else:
            out.write("invalid (%s): %s\n" % (report.condition, report.message))

    _emit(args, payload, pretty)
    return 0 if report.ok else 1


def _ring_for(args) -> ChenRuanRing:
    p = _read_polytope(args.file)
    return ChenRuanRing.from_polytope(p)


def cmd_vertices(args):
    ring = _ring_for(args)
    vertices = ring.complex.vertices
    payload = {
        "command": "vertices",
        "vertices": [
            {
                "index": k + 1,
                "point": [format_rational(c) for c in v.point],
                "facets": _indices_1based(v.facet_set),
            }
            for k, v in enumerate(vertices)
        ],
    }

    def pretty(out):
        rows = [
            (
                str(k + 1),
                "(" + ", ".join(format_rational(c) for c in v.point) + ")",
                "{" + ", ".join(str(i) for i in _indices_1based(v.facet_set)) + "}",
            )
            for k, v in enumerate(vertices)
        ]
        _print_table(("vertex", "point", "facets"), rows, out)

    _emit(args, payload, pretty)
    return 0


def cmd_complex(args):
    ring = _ring_for(args)
    fc = ring.complex
    payload = {
        "command": "complex",
        "num_facets": fc.num_facets,
        "minimal_nonfaces": [_indices_1based(nf) for nf in fc.minimal_nonfaces],
        "edges": [
            {
                "vertices": [e.v + 1, e.w + 1],
                "only_in_first": e.facet_v + 1,
                "only_in_second": e.facet_w + 1,
            }
            for e in fc.edges
        ],
    }

    def pretty(out):
        out.write("minimal non-faces:\n")
        for nf in fc.minimal_nonfaces:
            out.write("  {%s}\n" % ", ".join(str(i) for i in _indices_1based(nf)))
        out.write("edges (vertex pair: facet only in first / only in second):\n")
        for e in fc.edges:
            out.write(
                "  v%d-v%d: %d / %d\n" % (e.v + 1, e.w + 1, e.facet_v + 1, e.facet_w + 1))

    _emit(args, payload, pretty)
    return 0


def _ideal_strings(pres: SRPresentation):
    return [_monomial_text(gen) for gen in pres.ideal_generators()]


def cmd_sectors(args):
    ring = _ring_for(args)
    table = ring.sectors
    records = []
    for k, g in enumerate(table):
        pres = table.module(g)
        records.append(
            {
                "index": k + 1,
                "coords": [format_rational(c) for c in g.coords],
                "roots_of_unity": list(g.unit_circle_labels()),
                "support": _indices_1based(g.support),
                "fixed_face_vertices": [v + 1 for v in table.fixed_face_vertices(g)],
                "two_age": format_rational(2 * g.age()),
                "ideal": [_indices_1based(gen) for gen in pres.ideal_generators()],
            }
        )
    payload = {"command": "sectors", "num_sectors": len(table), "sectors": records}

    def pretty(out):
        rows = []
        for rec, g in zip(records, table):
            pres = table.module(g)
            rows.append(
                (
                    _sector_label(rec["index"] - 1),
                    "(" + ", ".join(rec["coords"]) + ")",
                    "(" + ", ".join(rec["roots_of_unity"]) + ")",
                    "{" + ", ".join(map(str, rec["support"])) + "}",
                    "all" if not rec["support"] else
                    " ".join("v%d" % v for v in rec["fixed_face_vertices"]),
                    rec["two_age"],
                    "<" + ", ".join(_ideal_strings(pres)) + ">",
                )
            )
        _print_table(
            ("sector", "coords", "on unit circle", "support", "fixed face", "2*age", "ideal"),
            rows, out)

    _emit(args, payload, pretty)
    return 0


def cmd_sr(args):
    ring = _ring_for(args)
    pres = SRPresentation(ring.complex)
    payload = {
        "command": "sr",
        "num_vars": pres.num_vars,
        "ideal": [_indices_1based(gen) for gen in pres.ideal_generators()],
    }

    def pretty(out):
        variables = ", ".join("x%d" % (i + 1) for i in range(pres.num_vars))
        out.write("Z[%s] / <%s>\n" % (variables, ", ".join(_ideal_strings(pres))))

    _emit(args, payload, pretty)
    return 0


def cmd_product_table(args):
    ring = _ring_for(args)
    table = ring.multiplication_table()
    k = len(table.sectors)
    payload = {
        "command": "product-table",
        "num_sectors": k,
        "entries": [
            {
                "g": i + 1,
                "h": j + 1,
                "zero": table.entries[(i, j)].is_zero,
                "target": None if table.entries[(i, j)].is_zero
                else ring.sectors.index_of(table.entries[(i, j)].target) + 1,
                "virtual": _indices_1based(table.entries[(i, j)].virtual_indices),
                "euler": _indices_1based(table.entries[(i, j)].euler_indices),
            }
            for i in range(k)
            for j in range(k)
        ],
    }

    def pretty(out):
        headers = ("*",) + tuple("1_" + _sector_label(j) for j in range(k))
        rows = []
        for i in range(k):
            row = ["1_" + _sector_label(i)]
            for j in range(k):
                row.append(_entry_text(table.entries[(i, j)], ring))
            rows.append(tuple(row))
        _print_table(headers, rows, out)

    _emit(args, payload, pretty)
    return 0


def cmd_multiply(args):
    ring = _ring_for(args)
    a = parse_class(args.class_a, ring)
    b = parse_class(args.class_b, ring)
    product = ring.multiply(a, b)
    payload = {
        "command": "multiply",
        "product": [
            {
                "sector": ring.sectors.index_of(g) + 1,
                "polynomial": _poly_machine(p),
            }
            for g, p in product.items()
        ],
    }

    def pretty(out):
        out.write(_class_text(product, ring) + "\n")

    _emit(args, payload, pretty)
    return 0


def cmd_restrict(args):
    ring = _ring_for(args)
    a = parse_class(args.class_a, ring)
    restricted = restrict(ring, a)
    payload = {
        "command": "restrict",
        "components": [
            {
                "sector": ring.sectors.index_of(g) + 1,
                "vertex": v + 1,
                "polynomial": _poly_machine(p),
            }
            for (g, v), p in restricted.items()
        ],
    }

    def pretty(out):
        if not restricted:
            out.write("0\n")
            return
        rows = [
            (
                _sector_label(ring.sectors.index_of(g)),
                "v%d" % (v + 1),
                str(p),
            )
            for (g, v), p in restricted.items()
        ]
        _print_table(("sector", "vertex", "restriction"), rows, out)

    _emit(args, payload, pretty)
    return 0


# ---------------------------------------------------------------------------
# the property suite

def _random_class(ring, rng, max_degree=3, coeff_bound=9, max_terms=3) -> CRClass:
    monomials = monomials_up_to_degree(ring.num_vars, max_degree)
    components = {}
    for _ in range(rng.randint(1, 2)):
        g = ring.sectors[rng.randrange(len(ring.sectors))]
        p = Polynomial.zero(ring.num_vars)
        for _ in range(rng.randint(1, max_terms)):
            exps = monomials[rng.randrange(len(monomials))]
            p = p + Polynomial.monomial(ring.num_vars, exps, rng.randint(-coeff_bound, coeff_bound))
        components[g] = components[g] + p if g in components else p
    return ring.cr_class(components)


def _random_homogeneous_class(ring, rng, max_degree=3, coeff_bound=9) -> CRClass:
    g = ring.sectors[rng.randrange(len(ring.sectors))]
    degree = rng.randint(0, max_degree)
    monomials = [e for e in monomials_up_to_degree(ring.num_vars, degree) if sum(e) == degree]
    p = Polynomial.zero(ring.num_vars)
    for _ in range(rng.randint(1, 3)):
        exps = monomials[rng.randrange(len(monomials))]
        p = p + Polynomial.monomial(ring.num_vars, exps, rng.randint(-coeff_bound, coeff_bound))
    return ring.cr_class({g: p})


def run_property_suite(ring, trials=CHECK_TRIALS, degree_bound=3, strict_z=False, seed=CHECK_SEED):
    """Run the ring/restriction property checks; returns a result list."""
    rng = random.Random(seed)
    results = []

    ok = True
    for _ in range(trials):
        a, b, c = (_random_class(ring, rng) for _ in range(3))
        if ring.multiply(ring.multiply(a, b), c) != ring.multiply(a, ring.multiply(b, c)):
            ok = False
            break
    results.append(("associativity", ok, "%d random triples" % trials))

    ok = True
    for _ in range(trials):
        a, b = _random_class(ring, rng), _random_class(ring, rng)
        if ring.multiply(a, b) != ring.multiply(b, a):
            ok = False
            break
    results.append(("commutativity", ok, "%d random pairs" % trials))

    one = ring.identity_class(ring.sectors.identity)
    ok = all(
        ring.multiply(one, ring.identity_class(g)) == ring.identity_class(g)
        and ring.multiply(ring.identity_class(g), one) == ring.identity_class(g)
        for g in ring.sectors
    )
    for _ in range(trials // 4):
        a = _random_class(ring, rng)
        if ring.multiply(one, a) != a or ring.multiply(a, one) != a:
            ok = False
            break
    results.append(("unit", ok, "all sector identities and %d random classes" % (trials // 4)))

    ok = True
    graded_pairs = 0
    for _ in range(trials):
        a, b = _random_homogeneous_class(ring, rng), _random_homogeneous_class(ring, rng)
        da, db = ring.rational_degree(a), ring.rational_degree(b)
        if da is None or db is None:
            continue
        product = ring.multiply(a, b)
        if not product:
            continue
        graded_pairs += 1
        if ring.rational_degree(product) != da + db:
            ok = False
            break
    results.append(("grading", ok, "%d homogeneous pairs with nonzero product" % graded_pairs))

    ok = all(
        check_homomorphism(ring, ring.identity_class(g), ring.identity_class(h))
        for g in ring.sectors
        for h in ring.sectors
    )
    for _ in range(trials // 2):
        a, b = _random_class(ring, rng), _random_class(ring, rng)
        if not check_homomorphism(ring, a, b):
            ok = False
            break
    results.append(
        ("restriction homomorphism", ok,
         "all identity pairs and %d random pairs" % (trials // 2)))

    ok = True
    for _ in range(trials // 4):
        triple = [restrict(ring, _random_class(ring, rng)) for _ in range(3)]
        left = nh_multiply(ring, nh_multiply(ring, triple[0], triple[1]), triple[2])
        right = nh_multiply(ring, triple[0], nh_multiply(ring, triple[1], triple[2]))
        if left != right:
            ok = False
            break
    results.append(("star associativity", ok, "%d random triples" % (trials // 4)))

    reports = injectivity_rank_check(ring, degree_bound, strict_z=strict_z)
    ok = all(r.injective for r in reports)
    detail = "all %d sector modules injective up to degree %d" % (len(reports), degree_bound)
    if strict_z:
        ok = ok and all(
            r.elementary_divisors is not None and all(d == 1 for d in r.elementary_divisors)
            for r in reports
        )
        detail += ", all elementary divisors 1"
    results.append(("injectivity rank", ok, detail))

    return results


def cmd_check(args):
    ring = _ring_for(args)
    results = run_property_suite(
        ring, degree_bound=args.degree_bound, strict_z=args.strict_z)
    overall = all(ok for _, ok, _ in results)
    payload = {
        "command": "check",
        "ok": overall,
        "results": [
            {"property": name, "ok": ok, "detail": detail} for name, ok, detail in results
        ],
    }

    def pretty(out):
        for name, ok, detail in results:
            out.write("%-26s %s  (%s)\n" % (name, "ok" if ok else "FAILED", detail))
        out.write("overall: %s\n" % ("ok" if overall else "FAILED"))

    _emit(args, payload, pretty)
    return 0 if overall else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbicoh",
        description="equivariant and orbifold cohomology of toric orbifolds "
                    "from labeled polytope files",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="labeled polytope file")
        p.add_argument("--format", choices=("pretty", "machine"), default="pretty")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the polytope construction preconditions")
    add("vertices", cmd_vertices, "enumerate the vertices with their facet sets")
    add("complex", cmd_complex, "minimal non-faces and edges of the face complex")
    add("sectors", cmd_sectors, "twisted sector table with ages and module ideals")
    add("sr", cmd_sr, "the face ring presentation")
    add("product-table", cmd_product_table, "products of all sector identities")

    p_mult = add("multiply", cmd_multiply, "multiply two classes given inline")
    p_mult.add_argument("class_a", help="first class, e.g. '2*x1^2 @ 1 + x2 @ 2'")
    p_mult.add_argument("class_b", help="second class")

    p_restr = add("restrict", cmd_restrict, "restrict a class to the fixed points")
    p_restr.add_argument("class_a", help="class to restrict")

    p_check = add("check", cmd_check, "run the ring/restriction property suite")
    p_check.add_argument("--degree-bound", type=int, default=3,
                         help="polynomial degree bound for the injectivity rank check")
    p_check.add_argument("--strict-z", action="store_true",
                         help="also verify integrality via elementary divisors")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write("parse error: %s\n" % exc)
        return 2
    except OrbicohError as exc:
        sys.stderr.write("%s: %s\n" % (exc.condition, exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
