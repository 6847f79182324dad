"""Command-line front end: ``petitalg analyze|aut|iso|classify|paper-examples``."""
import argparse
import json
import sys

from . import automorphism as aut
from . import isomorphism as iso
from .errors import ConsistencyError, ParseError, PetitError
from .field_tower import DESK_SCALE, parse_field_spec
from .petit_algebra import PetitAlgebra
from .skew_poly import SkewPoly, parse_poly

ORACLE_DEFAULT_LIMIT = 4096

EXIT_OK, EXIT_INPUT, EXIT_CONSISTENCY = 0, 2, 3


def _oracle_flag(value):
    if value in ("on", "off"):
        return value
    raise argparse.ArgumentTypeError("expected on or off")


def build_parser():
    p = argparse.ArgumentParser(prog="petitalg", description="Petit algebras S_f over K[t;sigma]")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, g=False):
        sp.add_argument("--field", required=True, help="finite:p,r,n or quadratic:base,b")
        sp.add_argument("--f", required=True, help="monic polynomial literal in t")
        if g:
            sp.add_argument("--g", required=True, help="second polynomial literal")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--oracle", nargs="?", const="on", default=None, type=_oracle_flag,
                        help="brute-force cross-check (default: on when |K|^m <= 4096)")
        sp.add_argument("--scale-bound", type=int, default=DESK_SCALE)

    common(sub.add_parser("analyze", help="structure of S_f"))
    common(sub.add_parser("aut", help="automorphism group of S_f"))
    common(sub.add_parser("iso", help="decide S_f = S_g"), g=True)

    c = sub.add_parser("classify", help="isomorphism classes of a family")
    c.add_argument("--field", required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--shape", choices=["all", "monomial"], default="all")
    c.add_argument("--json", action="store_true")
    c.add_argument("--oracle", nargs="?", const="on", default=None, type=_oracle_flag)
    c.add_argument("--scale-bound", type=int, default=DESK_SCALE)

    e = sub.add_parser("paper-examples", help="the two quaternion examples over Q(i)")
    e.add_argument("--json", action="store_true")
    e.add_argument("--jbound", type=int, default=aut.JBOUND)
    return p


def _field(args):
    return parse_field_spec(args.field)


def _algebra(E, text):
    return PetitAlgebra(parse_poly(E, text))


def _oracle_on(args, E, m):
    if args.oracle is not None:
        return args.oracle == "on"
    return E.backend == "finite" and E.q ** m <= ORACLE_DEFAULT_LIMIT


def _try(fn):
    try:
        return fn()
    except PetitError as exc:
        if isinstance(exc, ConsistencyError):
            raise
        return None


def cmd_analyze(args):
    E = _field(args)
    A = _algebra(E, args.f)
    finite = E.backend == "finite"
    invariant = A.is_invariant()
    rep = {
        "algebra": A.descriptor(),
        "field": str(E),
        "f": str(A.f),
        "m": A.m,
        "n": A.n,
        "dim_over_F": A.dim,
        "invariant": invariant,
        "irreducible": _try(A.is_irreducible),
        "associative": A.is_associative(),
        "division": _try(lambda: A.is_division(args.scale_bound)) if finite else None,
        "nuclei": {
            "left": A.nucleus_left().dim,
            "middle": A.nucleus_middle().dim,
            "right": A.nucleus_right().dim,
            "right_eigen": A.nucleus_right_eigen().dim,
        },
        "center": A.center().dim,
        "F0": A.F0().dim,
        "powers_of_t_associative": A.powers_of_t_associative(),
    }
    if rep["associative"] != invariant:
        raise ConsistencyError("associativity disagrees with invariance of f")
    if A.nucleus_right() != A.nucleus_right_eigen():
        raise ConsistencyError("right nucleus disagrees with {g : fg in Rf}")
    if not invariant:
        K = A.image_of_K()
        rep["nuc_l_eq_K"] = A.nucleus_left() == K
        rep["nuc_m_eq_K"] = A.nucleus_middle() == K
        if not (rep["nuc_l_eq_K"] and rep["nuc_m_eq_K"]):
            raise ConsistencyError("left/middle nucleus differs from K")
    if rep["division"] is not None and rep["irreducible"] is not None and rep["division"] != rep["irreducible"]:
        raise ConsistencyError("division test disagrees with irreducibility")
    if args.json:
        return rep
    lines = [f"S_f with f = {rep['f']} over {rep['field']}",
             f"m = {A.m}, n = {A.n}, dim over F = {A.dim}"]
    if invariant:
        lines.append("f is invariant: S_f is the associative quotient algebra")
    lines.append(f"associative: {_yn(rep['associative'])}")
    lines.append(f"irreducible: {_yn(rep['irreducible'])}")
    lines.append(f"division algebra: {_yn(rep['division'])}")
    nuc = rep["nuclei"]
    lines.append(f"nucleus dims over F: left {nuc['left']}, middle {nuc['middle']}, right {nuc['right']}")
    if not invariant:
        lines.append("Nuc_l = Nuc_m = K: yes")
    lines.append(f"Nuc_r = {{g : fg in Rf}}: yes (dim {nuc['right_eigen']})")
    lines.append(f"center dim: {rep['center']}, F_0 dim: {rep['F0']}")
    lines.append(f"t^m t = t t^m: {_yn(rep['powers_of_t_associative'])}")
    return "\n".join(lines)


def _yn(v):
    return "unknown" if v is None else ("yes" if v else "no")


def cmd_aut(args):
    E = _field(args)
    A = _algebra(E, args.f)
    formula = aut.enumerate_aut_formula(A)
    out = {"formula": formula.to_json()}
    lines = [f"Aut_F(S_f) for f = {A.f} over {E}",
             f"closed form: order {formula.order}, {formula.describe()}"
             + ("" if formula.complete else " (H_(tau,k) subgroup only, n < m - 1)")]
    lines += [f"  {H}" for H in formula.elements]
    if _oracle_on(args, E, A.m):
        oracle = aut.enumerate_aut_oracle(A, args.scale_bound)
        agree = set(oracle.elements) == set(formula.elements)
        if formula.complete and not agree:
            raise ConsistencyError("closed form and oracle disagree although n >= m - 1")
        if not set(formula.elements) <= set(oracle.elements):
            raise ConsistencyError("closed-form automorphism missing from the oracle")
        out["oracle"] = oracle.to_json()
        out["agreement"] = agree
        if agree:
            lines.append(f"oracle agreement: yes (order {oracle.order})")
        else:
            lines.append(f"oracle: full group of order {oracle.order}, {oracle.describe()}")
    return out if args.json else "\n".join(lines)


def cmd_iso(args):
    E = _field(args)
    Af, Ag = _algebra(E, args.f), _algebra(E, args.g)
    res = iso.decide(Af, Ag, oracle=_oracle_on(args, E, Af.m), bound=args.scale_bound)
    if args.json:
        return res
    head = f"f = {Af.f}, g = {Ag.f}"
    if res["isomorphic"]:
        w = res["witness"]
        if "tau" in w:
            tau = "id" if w["tau"] == 0 else ("sigma" if w["tau"] == 1 else f"sigma^{w['tau']}")
            body = f"isomorphic: witness (tau={tau}, k={w['k']})"
        else:
            body = "isomorphic: found by the oracle"
    else:
        body = f"non-isomorphic: {res['reason']}"
    if "oracle" in res:
        body += "\noracle agreement: yes"
    return head + "\n" + body


def cmd_classify(args):
    E = _field(args)
    oracle = None if args.oracle is None else args.oracle == "on"
    rep = iso.classify(E, args.m, args.shape, args.scale_bound, oracle)
    if args.json:
        return rep
    lines = [f"family: degree {args.m}, shape {args.shape}, over {E}: {rep['family']['size']} algebras",
             f"mode: {rep['mode']}",
             f"{len(rep['classes'])} classes"]
    for c in rep["classes"]:
        f = _poly_from_coeffs(E, c["rep"])
        lines.append(f"  rep {f}: size {c['size']}, |Aut| = {c['aut_order']}")
    return "\n".join(lines)


def _poly_from_coeffs(E, cs):
    return SkewPoly(E, [E.parse(c) for c in cs])


EXAMPLES = [
    {
        "name": "(i)",
        "field": "quadratic:Q(i),-3",
        "f": "t^2 - sqrt(-3)",
        "k": "i",
        "c": "1 + sqrt(-3)",
        "powers": {2: "-2 + 2*sqrt(-3)", 3: "-8"},
        "j": 3,
        "structure": ("semidirect", [3, 4, 2]),
        "order": 12,
    },
    {
        "name": "(ii)",
        "field": "quadratic:Q(i),-1/12",
        "f": "t^2 - sqrt(-1/12)",
        "k": "i",
        "c": "1 + 2*sqrt(-1/12)",
        "powers": {2: "2/3 + 4*sqrt(-1/12)", 3: "16/3*sqrt(-1/12)", 4: "-8/9 + 16/3*sqrt(-1/12)",
                   5: "-16/9 + 32/9*sqrt(-1/12)", 6: "-64/27"},
        "j": 6,
        "structure": ("dicyclic", [3]),
        "order": 12,
    },
]


def run_example(ex, jbound=aut.JBOUND):
    E = parse_field_spec(ex["field"])
    A = PetitAlgebra(ex["f"], E)
    c = E(ex["c"])
    deviations = []
    powers = {}
    for e, expected in ex["powers"].items():
        got = c ** e
        powers[e] = str(got)
        if got != E(expected):
            deviations.append(f"c^{e} = {got}, expected {expected}")
    rep = aut.quaternion_subgroups(A, ex["k"], c, jbound)
    if rep.j != ex["j"]:
        deviations.append(f"j = {rep.j}, expected {ex['j']}")
    if (rep.tag, rep.params) != (ex["structure"][0], ex["structure"][1]) or rep.order != ex["order"]:
        deviations.append(f"structure {rep.tag}{rep.params} of order {rep.order}")
    return {
        "example": ex["name"],
        "field": str(E),
        "f": str(A.f),
        "k": ex["k"],
        "c": str(c),
        "powers": {str(e): v for e, v in powers.items()},
        "j": rep.j,
        "group": rep.to_json(),
        "description": rep.describe(),
        "deviations": deviations,
    }


def cmd_paper_examples(args):
    results = [run_example(ex, args.jbound) for ex in EXAMPLES]
    bad = [d for r in results for d in r["deviations"]]
    if args.json:
        out = results
    else:
        lines = []
        for r in results:
            lines.append(f"example {r['example']}: K = {r['field']}, f = {r['f']}, k = {r['k']}, c = {r['c']}")
            for e, v in r["powers"].items():
                lines.append(f"  c^{e} = {v}")
            lines.append(f"  minimal j with c^j in F: {r['j']}")
            lines.append(f"  <H[sigma, {r['k']}], G_c>: order {r['group']['order']}, {r['description']} (verified)")
        out = "\n".join(lines)
    if bad:
        raise ConsistencyError("; ".join(bad))
    return out


COMMANDS = {
    "analyze": cmd_analyze,
    "aut": cmd_aut,
    "iso": cmd_iso,
    "classify": cmd_classify,
    "paper-examples": cmd_paper_examples,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        out = COMMANDS[args.command](args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except ParseError as exc:
        print(f"error: {exc.annotated()}", file=sys.stderr)
        return EXIT_INPUT
    except (PetitError, ValueError, TypeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(out, str):
        print(out)
    else:
        print(json.dumps(out, indent=2, sort_keys=True))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
