"""Command line surface.

Commands: betti, decompose, scan, check-family, oracle, product.
Exit codes: 0 success, 1 validation error, 2 cap exceeded, 3 internal
oracle/consistency mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .errors import CapExceeded, NotACharacter, OracleMismatch, ValidationError
from .cellular import compare_with_hochster
from .documents import dumps_report, make_report, parse_complex
from .families import (
    CustomFamily,
    betti_growth,
    check_consistent,
    check_r_face_stable,
    check_r_vertex_stable,
    check_stabiliser_consistent,
    multiplicity_scan,
    parse_family,
)
from .hochster import (
    SpherePair,
    basis_classes,
    betti,
    betti_split,
    class_is_zero_in_cohomology,
    cup_product,
    equivariant_decomposition,
    g_algebra_equivariance_check,
    sym_irreducible_decomposition,
)
from .homology import reduced_cohomology
from .perms import PermGroup
from .simplicial import SimplicialComplex, full_subcomplex


def _add_common(p: argparse.ArgumentParser, family_ok=True, input_ok=True):
    if input_ok:
        p.add_argument("--input", help="complex document (JSON file, '-' for stdin)")
    if family_ok:
        p.add_argument("--family", help="family spec: skeleton:k | join:k1,k2 | vccube | custom:FILE")
        p.add_argument("--m", type=int, help="family rank")
    else:
        p.add_argument("--family", required=True,
                       help="family spec: skeleton:k | join:k1,k2 | vccube | custom:FILE")
    p.add_argument("--d", type=int, default=1, help="sphere dimension of the pair (default 1)")
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    p.add_argument("--deterministic", action="store_true", default=True,
                   help="accepted for compatibility; runs are always deterministic")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap-subsets", type=int, default=1 << 21)
    p.add_argument("--cap-group", type=int, default=200_000)
    p.add_argument("--cap-support", type=int, default=8)
    p.add_argument("--cap-oracle", type=int, default=7)


def _caps(args) -> dict:
    return {
        "subsets": args.cap_subsets,
        "group": args.cap_group,
        "support": args.cap_support,
        "oracle_vertices": args.cap_oracle,
    }


def _load_custom(path: str):
    with open(path) as fh:
        data = json.load(fh)
    complexes = {}
    for key, doc in data.get("complexes", {}).items():
        K, _ = parse_complex(doc)
        complexes[int(key)] = K

    def builder(m: int) -> SimplicialComplex:
        if m not in complexes:
            raise ValidationError(f"custom family has no complex for m={m}")
        return complexes[m]

    return CustomFamily(data.get("name", path), builder)


def _resolve_input(args) -> tuple[SimplicialComplex, PermGroup | None, int | None]:
    """Returns (complex, group, family rank when instantiated from a family)."""
    if getattr(args, "family", None):
        if args.m is None:
            raise ValidationError("--family needs --m")
        fam = parse_family(args.family, custom_loader=_load_custom)
        K, G = fam.instantiate(args.m)
        return K, G, args.m
    if getattr(args, "input", None):
        raw = sys.stdin.read() if args.input == "-" else open(args.input).read()
        try:
            doc = json.loads(raw)
        except json.JSONDecodeError as err:
            raise ValidationError(f"input is not valid JSON: {err}") from None
        K, G = parse_complex(doc)
        return K, G, None
    raise ValidationError("provide --input FILE or --family SPEC --m N")


def _emit(args, doc: dict) -> None:
    text = dumps_report(doc)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _subset_key(J) -> str:
    return "{" + ",".join(str(v) for v in sorted(J)) + "}"


def _partition_key(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def cmd_betti(args) -> int:
    K, G, _ = _resolve_input(args)
    pair = SpherePair(args.d)
    table = betti(K, pair, group=G, cap=args.cap_subsets)
    payload = {"degrees": {str(i): b for i, b in table.items()}}
    if args.per_multidegree:
        split = betti_split(K, pair, cap=args.cap_subsets)
        payload["multidegrees"] = {
            _subset_key(J): {str(i): d for i, d in row.items()}
            for J, row in sorted(split.items(), key=lambda kv: _subset_key(kv[0]))
        }
    _emit(args, make_report("betti", payload, _caps(args)))
    return 0


def cmd_decompose(args) -> int:
    K, G, m = _resolve_input(args)
    pair = SpherePair(args.d)
    if G is None:
        raise ValidationError("decompose needs a group (document group or --family)")
    report = equivariant_decomposition(
        K, G, pair, args.degree,
        subset_cap=args.cap_subsets, group_cap=args.cap_group,
    )
    comps = []
    for c in report.components:
        entry = {
            "orbit_representative": _subset_key(c.rep),
            "orbit_size": c.orbit_size,
            "restriction_degree": c.degree_p,
            "dimension": c.dim,
            "stabilizer_order": c.stabilizer_order,
            "generator_traces": {
                str(g): str(t) for g, t in c.generator_character.items()
            },
        }
        if c.element_character is not None:
            entry["character"] = {
                str(g): str(t) for g, t in sorted(
                    c.element_character.items(), key=lambda kv: str(kv[0])
                )
            }
        comps.append(entry)
    payload = {
        "degree": args.degree,
        "betti": report.betti,
        "components": comps,
    }
    if args.irreducibles:
        if m is None:
            raise ValidationError("--irreducibles needs a family input (index action)")
        report.irreducibles = sym_irreducible_decomposition(
            K, pair, args.degree, m, support_cap=args.cap_support
        )
        payload["irreducibles"] = {
            _partition_key(b): mult for b, mult in report.irreducibles.items()
        }
    _emit(args, make_report("decompose", payload, _caps(args)))
    return 0


def _parse_range(text: str) -> range:
    lo, _, hi = text.partition("..")
    if not hi:
        raise ValidationError("range must look like A..B")
    return range(int(lo), int(hi) + 1)


def cmd_scan(args) -> int:
    fam = parse_family(args.family, custom_loader=_load_custom)
    pair = SpherePair(args.d)
    ms = _parse_range(args.m_range)
    payload: dict = {"family": fam.description, "degree": args.degree}
    scan = None
    if not args.betti_only:
        scan = multiplicity_scan(fam, pair, args.degree, ms, threads=args.threads)
        payload["multiplicities"] = {
            str(m): {_partition_key(b): mult for b, mult in t.items()}
            for m, t in scan.tables.items()
        }
        payload["onset"] = scan.onset
        payload["certified_within_window"] = scan.certified
        payload["weight"] = scan.weight
        payload["betti"] = {str(m): b for m, b in scan.betti.items()}
    fit, values, diffs = betti_growth(fam, pair, args.degree, ms)
    payload["betti_values"] = dict(zip(map(str, sorted(set(ms))), values))
    payload["difference_table"] = diffs
    if fit is None:
        payload["growth"] = "not yet polynomial in the scanned window"
    else:
        payload["growth"] = {
            "degree": fit.degree,
            "coefficients_ascending": fit.as_strings(),
            "onset_m": fit.onset_m,
        }
    if args.csv:
        _write_scan_csv(args.csv, fam.description, args.degree, scan, values, sorted(set(ms)))
    _emit(args, make_report("scan", payload, _caps(args)))
    return 0


def _write_scan_csv(path, family, degree, scan, values, ms):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        bases = sorted({b for t in scan.tables.values() for b in t}) if scan else []
        writer.writerow(["family", "degree", "m", "betti"] + [_partition_key(b) for b in bases])
        for m, b in zip(ms, values):
            row = [family, degree, m, b]
            if scan:
                row += [scan.tables[m].get(base, 0) for base in bases]
            writer.writerow(row)


def cmd_check_family(args) -> int:
    from itertools import combinations

    fam = parse_family(args.family, custom_loader=_load_custom)
    ms = _parse_range(args.m_range)
    d0 = min(ms)
    results: dict = {"family": fam.description}
    results["consistent"] = check_consistent(fam, ms)
    stability = {}
    for r in range(args.max_r + 1):
        stability[str(r)] = {
            "vertex_stable_at_degree": r + 1,
            "vertex_stable": check_r_vertex_stable(fam, r, r + 1, ms),
            "face_stable": check_r_face_stable(fam, r, r + 1, ms),
        }
    results["stability"] = stability
    Kd, _ = fam.instantiate(d0)
    stab_results = {}
    ok_all = True
    for size in range(1, args.max_stab_size + 1):
        for J in combinations(Kd.vertices, size):
            ok = check_stabiliser_consistent(fam, frozenset(J), ms)
            stab_results[_subset_key(J)] = ok
            ok_all = ok_all and ok
    results["stabiliser_consistent"] = stab_results
    # vertex stability + stabiliser splitting is what the stability theory
    # needs; face stability at the same degree is reported informationally
    results["all_passed"] = bool(
        results["consistent"]
        and ok_all
        and all(v["vertex_stable"] for v in stability.values())
    )
    _emit(args, make_report("check-family", results, _caps(args)))
    return 0 if results["all_passed"] else 3


def cmd_oracle(args) -> int:
    K, G, _ = _resolve_input(args)
    if G is None:
        G = PermGroup.trivial(max(len(K.vertices), 1))
    if args.degrees:
        degrees = [int(x) for x in args.degrees.split(",")]
    else:
        degrees = list(range(0, 2 * len(K.vertices) + 1))
    diff = compare_with_hochster(
        K, G, degrees,
        flip_koszul=args.flip_koszul, cap=args.cap_oracle, group_cap=args.cap_group,
    )
    payload = {
        "degrees": degrees,
        "flip_koszul": bool(args.flip_koszul),
        "discrepancies": [
            {
                "kind": e.kind,
                "subset": list(e.subset),
                "degree": e.degree,
                "element": e.element,
                "combinatorial": e.combinatorial,
                "cellular": e.cellular,
            }
            for e in diff.entries
        ],
        "verdict": "no discrepancies" if diff.empty else f"{len(diff.entries)} discrepancies",
    }
    _emit(args, make_report("oracle", payload, _caps(args)))
    return 0 if diff.empty else 3


def cmd_product(args) -> int:
    from itertools import combinations as combos

    K, G, _ = _resolve_input(args)
    n = len(K.vertices)
    if 2**n > args.cap_subsets:
        raise CapExceeded("too many subsets for a product table")
    supports = []
    for r in range(n + 1):
        for J in combos(K.vertices, r):
            Jw = frozenset(J)
            if reduced_cohomology(full_subcomplex(K, Jw)).total_dim():
                supports.append(Jw)
    classes = [c for J in supports for c in basis_classes(K, J)]
    table = []
    for a in classes:
        for b in classes:
            prod = cup_product(K, a, b)
            table.append(
                {
                    "left": {"subset": _subset_key(a.subset), "degree": a.degree},
                    "right": {"subset": _subset_key(b.subset), "degree": b.degree},
                    "zero": class_is_zero_in_cohomology(K, prod),
                }
            )
    payload: dict = {"classes": len(classes), "products": table}
    ok = True
    if args.check_equivariance:
        if G is None:
            raise ValidationError("--check-equivariance needs a group")
        ok = g_algebra_equivariance_check(K, G)
        payload["equivariant"] = ok
    _emit(args, make_report("product", payload, _caps(args)))
    return 0 if ok else 3


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="macstab", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="Betti numbers of the polyhedral product")
    _add_common(p)
    p.add_argument("--per-multidegree", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("decompose", help="orbit decomposition at one degree")
    _add_common(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--irreducibles", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("scan", help="stability scan over a family")
    _add_common(p, family_ok=False, input_ok=False)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--m-range", "--m", dest="m_range", required=True,
                   help="rank window A..B")
    p.add_argument("--betti-only", action="store_true")
    p.add_argument("--csv", help="also write the scan table as CSV")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("check-family", help="structural checks over a family")
    _add_common(p, family_ok=False, input_ok=False)
    p.add_argument("--m-range", "--m", dest="m_range", required=True)
    p.add_argument("--max-r", type=int, default=2)
    p.add_argument("--max-stab-size", type=int, default=3)
    p.set_defaults(func=cmd_check_family)

    p = sub.add_parser("oracle", help="cross-check the two pipelines")
    _add_common(p)
    p.add_argument("--degrees", help="comma separated ambient degrees")
    p.add_argument("--flip-koszul", action="store_true",
                   help="deliberately corrupt the smash twist (negative control)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("product", help="cup product table and equivariance check")
    _add_common(p)
    p.add_argument("--check-equivariance", action="store_true")
    p.set_defaults(func=cmd_product)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except CapExceeded as err:
        print(f"cap exceeded: {err}", file=sys.stderr)
        return 2
    except (NotACharacter, OracleMismatch) as err:
        print(f"internal mismatch: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
