"""Command-line front end.

Every subcommand reads a complex as JSON ({"n": ..., "facets": [[...]]}),
prints deterministic JSON (sorted keys) on stdout, and exits 0 on success,
1 when a checked property fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import axioms, posets, stanley, tutte
from .activities import activity, h_from_activities, is_shelling, lex_order
from .complexes import OrderedComplex, lex_key
from .laplacian import integrality_survey, laplacian_spectrum
from .shifted import (
    Multicomplex,
    Partition,
    is_shifted,
    multicomplex_of_shifted,
    shifted_from_ideal,
    verify_conjecture_conditions,
)

EXHAUSTIVE_LIMIT = 20


class UsageError(Exception):
    pass


def load_complex(path, force=False):
    try:
        with open(path) as fh:
            data = json.load(fh)
        c = OrderedComplex.from_json(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read complex from {path}: {exc}")
    if c.n > EXHAUSTIVE_LIMIT and not force:
        raise UsageError(
            f"ground set of size {c.n} exceeds the exhaustive-computation "
            f"guard ({EXHAUSTIVE_LIMIT}); pass --force to proceed"
        )
    return c


def emit(payload):
    print(json.dumps(payload, sort_keys=True, indent=2))


def _parse_face(text):
    return frozenset(int(x) for x in text.replace(",", " ").split())


# -- subcommand handlers ------------------------------------------------------


def cmd_check(args):
    c = load_complex(args.file, args.force)
    predicate = axioms.PREDICATES[args.axiom]
    if args.all_orderings:
        report = axioms.holds_for_all_orderings(c, args.axiom)
    elif args.hereditary and args.axiom in ("lex", "gale"):
        report = predicate(c, hereditary=True)
    else:
        report = predicate(c)
    emit({"axiom": args.axiom, **report.to_json()})
    return 0 if report.holds else 1


def cmd_activity(args):
    c = load_complex(args.file, args.force)
    if args.basis:
        bases = [_parse_face(args.basis)]
    else:
        bases = sorted(c.facets, key=lex_key)
    records = [activity(c, b) for b in bases]
    payload = {"records": [r.to_json() for r in records]}
    if args.oracle:
        from .oracle import activity_by_definition

        agree = all(
            activity_by_definition(c, b) == r for b, r in zip(bases, records)
        )
        payload["oracle_agrees"] = agree
        emit(payload)
        return 0 if agree else 1
    emit(payload)
    return 0


def cmd_shelling(args):
    c = load_complex(args.file, args.force)
    if args.order:
        order = [_parse_face(part) for part in args.order.split(";")]
    else:
        order = lex_order(c)
    valid, restrictions = is_shelling(c, order)
    payload = {
        "order": [sorted(b) for b in order],
        "valid": valid,
    }
    if valid:
        payload["restriction_sets"] = [sorted(r) for r in restrictions]
        payload["h_from_passive_sets"] = list(h_from_activities(c).coeffs)
        payload["h_vector"] = list(c.h_vector())
    emit(payload)
    return 0 if valid else 1


def cmd_poset(args):
    c = load_complex(args.file, args.force)
    builder = {
        "gale": posets.gale_poset,
        "int": posets.int_poset,
        "weak-gale": posets.weak_gale_poset,
    }[args.kind]
    poset = builder(c)
    payload = poset.to_json()
    if args.dot:
        lines = ["digraph poset {"]
        for a, b in poset.covers():
            lines.append(
                f'  "{"".join(map(str, sorted(a)))}" -> '
                f'"{"".join(map(str, sorted(b)))}";'
            )
        lines.append("}")
        payload["dot"] = "\n".join(lines)
    if args.plot:
        from .plotting import save_poset_figure

        payload["figure"] = save_poset_figure(poset, args.plot)
    emit(payload)
    return 0


def cmd_tutte(args):
    c = load_complex(args.file, args.force)
    payload = {}
    results = {}
    if args.method in ("activities", "both"):
        results["activities"] = tutte.tutte_activities(c)
    if args.method in ("delcon", "both"):
        results["delcon"] = tutte.tutte_deletion_contraction(c)
    for name, poly in results.items():
        payload[name] = poly.to_json()
    ok = True
    if len(results) == 2:
        ok = results["activities"] == results["delcon"]
        payload["methods_agree"] = ok
    if args.oracle:
        from .oracle import corank_nullity_tutte

        oracle_poly = corank_nullity_tutte(c)
        payload["oracle"] = oracle_poly.to_json()
        ok = ok and all(p == oracle_poly for p in results.values())
        payload["oracle_agrees"] = ok
    emit(payload)
    return 0 if ok else 1


def cmd_nbc(args):
    c = load_complex(args.file, args.force)
    nbc = tutte.nbc_complex(c)
    payload = {
        "broken_circuits": [sorted(b) for b in sorted(tutte.broken_circuits(c), key=lex_key)],
        "nbc": None if nbc is None else nbc.to_json(),
        "h_identity": tutte.nbc_h_identity(c),
    }
    emit(payload)
    return 0 if payload["h_identity"] else 1


def cmd_shifted(args):
    if args.box:
        if not args.ideal:
            raise UsageError("--box requires --ideal")
        try:
            rows, cols = (int(x) for x in args.box.lower().split("x"))
        except ValueError:
            raise UsageError(f"malformed box {args.box!r}; expected like 3x4")
        try:
            with open(args.ideal) as fh:
                data = json.load(fh)
            partitions = {Partition(tuple(p), rows, cols) for p in data}
        except (OSError, ValueError, TypeError) as exc:
            raise UsageError(f"cannot read ideal: {exc}")
        c = shifted_from_ideal(rows, rows + cols, partitions)
        emit({"complex": c.to_json(), "shifted": True})
        return 0
    if not args.file:
        raise UsageError("need a complex file or --box/--ideal")
    c = load_complex(args.file, args.force)
    result = is_shifted(c)
    emit({"shifted": result})
    return 0 if result else 1


def cmd_multicomplex(args):
    c = load_complex(args.file, args.force)
    if not is_shifted(c):
        emit({"error": "complex is not shifted"})
        return 1
    mc, assignment = multicomplex_of_shifted(c)

    def family(sub):
        return multicomplex_of_shifted(sub)

    report = verify_conjecture_conditions(c, mc, assignment, family=family)
    payload = {
        "monomials": mc.to_json(),
        "assignment": [
            {"basis": sorted(b), "monomial": m.to_json()}
            for b, m in sorted(assignment.items(), key=lambda kv: lex_key(kv[0]))
        ],
        "clauses": report,
    }
    emit(payload)
    # The passive-order half of the divisibility sandwich is known to fail on
    # concrete shifted complexes (no assignment can satisfy it), so it is
    # reported but does not gate the exit status.
    gating = {k: v for k, v in report.items()
              if k != "divisibility_extends_passive_order"}
    return 0 if all(v is not False for v in gating.values()) else 1


def cmd_stanley(args):
    c = load_complex(args.file, args.force)
    if args.check == "o-seq":
        h = list(c.h_vector())
        ok = stanley.is_O_sequence(h)
        emit({"h_vector": h, "o_sequence": ok})
        return 0 if ok else 1
    if args.check == "pure-o-seq":
        h = list(c.h_vector())
        ok = stanley.is_pure_O_sequence(h)
        emit({"h_vector": h, "pure_o_sequence": ok})
        return 0 if ok else 1
    found = stanley.search_multicomplex(c)
    if found is None:
        emit({"witness": None})
        return 1
    mc, assignment = found
    emit(
        {
            "witness": mc.to_json(),
            "assignment": [
                {"basis": sorted(b), "monomial": m.to_json()}
                for b, m in sorted(assignment.items(), key=lambda kv: lex_key(kv[0]))
            ],
            "pure": stanley.stanley_purity_check(c, mc),
        }
    )
    return 0


def cmd_laplacian(args):
    c = load_complex(args.file, args.force)
    if args.dim is not None:
        reports = [laplacian_spectrum(c, args.dim, args.tol)]
    else:
        reports = integrality_survey(c, args.tol)
    payload = {"spectra": [r.to_json() for r in reports]}
    if args.plot:
        from .plotting import save_spectrum_figure

        payload["figure"] = save_spectrum_figure(reports, args.plot)
    emit(payload)
    return 0


# -- sweeps -------------------------------------------------------------------


def _prop_lex_shelling(c):
    if not axioms.check_qe(c).holds:
        return True
    from .activities import lex_shelling_check

    return lex_shelling_check(c) and h_from_activities(c) == c.h_polynomial()


def _prop_tutte_agree(c):
    if not (axioms.check_qe(c).holds and axioms.check_qc(c).holds):
        return True
    return tutte.tutte_activities(c) == tutte.tutte_deletion_contraction(c)


def _prop_nbc_identity(c):
    if not (axioms.check_qe(c).holds and axioms.check_qc(c).holds):
        return True
    return tutte.nbc_h_identity(c)


def _prop_gale_extends_int(c):
    if not axioms.check_qe(c).holds:
        return True
    return posets.is_extension(posets.gale_poset(c), posets.int_poset(c))


def _prop_orderings_classify_matroids(c):
    matroid = axioms.is_matroid(c).holds
    for name in ("qi", "qe", "qc", "fbp", "pure", "lex", "gale"):
        if axioms.holds_for_all_orderings(c, name).holds != matroid:
            return False
    return True


SWEEP_PROPERTIES = {
    "lex-shelling-matches-passive-sets": _prop_lex_shelling,
    "tutte-methods-agree": _prop_tutte_agree,
    "nbc-h-identity": _prop_nbc_identity,
    "gale-extends-int": _prop_gale_extends_int,
    "orderings-classify-matroids": _prop_orderings_classify_matroids,
    "always-false-control": lambda c: False,
}


def _family_instances(spec):
    kind = spec.get("kind")
    if kind == "pure":
        from .oracle import enumerate_all_pure_complexes, enumerate_pure_complexes

        n = int(spec["n"])
        if "rank" in spec:
            return enumerate_pure_complexes(n, int(spec["rank"]))
        return enumerate_all_pure_complexes(n)
    if kind == "matroids-rank3":
        from .oracle import enumerate_matroids_rank_le3

        return enumerate_matroids_rank_le3(int(spec.get("max_n", 6)))
    if kind == "shifted-random":
        import random

        from .oracle import random_shifted_complex

        rng = random.Random(int(spec.get("seed", 0)))
        return (
            random_shifted_complex(rng, int(spec.get("max_n", 9)))
            for _ in range(int(spec.get("count", 20)))
        )
    if kind == "files":
        return (load_complex(path) for path in spec["paths"])
    raise UsageError(f"unknown family kind {kind!r}")


def cmd_sweep(args):
    try:
        with open(args.file) as fh:
            spec = json.load(fh)
        family = spec["family"]
        properties = spec["properties"]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"invalid sweep file: {exc}")
    unknown = [p for p in properties if p not in SWEEP_PROPERTIES]
    if unknown:
        raise UsageError(f"unknown properties: {unknown}")
    counts = {p: {"passed": 0, "failed": 0} for p in properties}
    first_counterexample = {}
    for c in _family_instances(family):
        for p in properties:
            if SWEEP_PROPERTIES[p](c):
                counts[p]["passed"] += 1
            else:
                counts[p]["failed"] += 1
                first_counterexample.setdefault(p, c.to_json())
    payload = {"counts": counts, "first_counterexample": first_counterexample}
    if args.plot:
        from .plotting import save_sweep_figure

        payload["figure"] = save_sweep_figure(counts, args.plot)
    emit(payload)
    return 0 if not first_counterexample else 1


# -- argument parsing ---------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quasimat",
        description="Class checks, activities, polynomials and spectra for "
        "ordered simplicial complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        p.add_argument("--force", action="store_true",
                       help="bypass the large-ground-set guard")
        return p

    p = add("check", cmd_check, help="evaluate a class predicate")
    p.add_argument("file")
    p.add_argument("--axiom", required=True, choices=sorted(axioms.PREDICATES))
    p.add_argument("--all-orderings", action="store_true")
    p.add_argument("--hereditary", action="store_true")

    p = add("activity", cmd_activity, help="activity partitions of the bases")
    p.add_argument("file")
    p.add_argument("--basis")
    p.add_argument("--oracle", action="store_true")

    p = add("shelling", cmd_shelling, help="verify a shelling order")
    p.add_argument("file")
    p.add_argument("--order", help='semicolon-separated facets, e.g. "1,2;1,3"')

    p = add("poset", cmd_poset, help="basis posets")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=["gale", "int", "weak-gale"])
    p.add_argument("--dot", action="store_true")
    p.add_argument("--plot", metavar="PNG")

    p = add("tutte", cmd_tutte, help="activity polynomial")
    p.add_argument("file")
    p.add_argument("--method", default="both",
                   choices=["activities", "delcon", "both"])
    p.add_argument("--oracle", action="store_true")

    p = add("nbc", cmd_nbc, help="broken-circuit sub-complex")
    p.add_argument("file")

    p = add("shifted", cmd_shifted, help="shifted complexes")
    p.add_argument("file", nargs="?")
    p.add_argument("--box", help="like 3x4 (rows x cols)")
    p.add_argument("--ideal", help="JSON file with a list of partitions")

    p = add("multicomplex", cmd_multicomplex,
            help="monomial family of a shifted complex")
    p.add_argument("file")

    p = add("stanley", cmd_stanley, help="O-sequences and witness search")
    p.add_argument("file")
    p.add_argument("--check", default="conjecture",
                   choices=["o-seq", "pure-o-seq", "conjecture"])

    p = add("laplacian", cmd_laplacian, help="Laplacian spectra")
    p.add_argument("file")
    p.add_argument("--dim", type=int)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--plot", metavar="PNG")

    p = add("sweep", cmd_sweep, help="batch property verification")
    p.add_argument("file")
    p.add_argument("--plot", metavar="PNG")

    return parser


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.handler(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
