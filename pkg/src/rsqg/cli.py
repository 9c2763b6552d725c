"""Command-line driver: table dumps, matrix exports, and the certificate
runner.  Exit code 0 when every selected check passes, 1 on a failing check
(with a witness), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .affine import (
    build_affine_rhat,
    check_affine_intertwiner,
    check_baxterize_match,
    check_degree_bounds,
    check_spectral_ybe,
    check_unit_point,
    run_affine_checks,
)
from .embed import run_embed_checks
from .lyndon import is_convex, lalonde_ram, minimal_pair
from .matrices import matrix_to_json
from .pairing import (
    PairingOracle,
    closed_form_pairing,
    pairing_power,
    verify_pairing_constants,
    verify_pbw_orthogonality,
)
from .rep import (
    build_evaluation,
    build_fundamental,
    verify_affine_relations,
    verify_finite_relations,
    verify_highest_weight,
)
from .report import Report
from .rmatrix import (
    build_rbar_inverse,
    build_rhat_explicit,
    build_rhat_factorized,
    run_rmatrix_checks,
)
from .rootdata import affine_data, build_root_system, weyl_dimension
from .rootvec import build_root_vector_matrices, verify_closed_forms, verify_nilpotency
from .scalars import rs_ring, scalar_to_json, text_form

FAMILIES = ("A", "B", "C", "D")
AFFINE_MIN = {"A": 1, "B": 2, "C": 2, "D": 3}


def _write_json(obj, path: str | None) -> None:
    text = json.dumps(obj, indent=1)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_rootdata_dump(args) -> int:
    rs = build_root_system(args.family, args.rank)
    ring = rs_ring()
    obj = {
        "family": rs.family,
        "rank": rs.n,
        "d": list(rs.d),
        "cartan": [list(r) for r in rs.cartan],
        "ringel": [list(r) for r in rs.ringel],
        "positive_roots": [
            {
                "label": rt.label(),
                "alpha": list(rt.alpha),
                "eps": [str(x) for x in rt.eps],
            }
            for rt in rs.positive
        ],
    }
    if rs.n >= AFFINE_MIN[rs.family]:
        aff = affine_data(rs, ring)
        obj["omega"] = {
            f"{i},{j}": text_form(aff.omega[(i, j)]) for i in range(rs.n + 1) for j in range(rs.n + 1)
        }
        obj["cartan_extended"] = [
            [aff.cartan_ext[(i, j)] for j in range(rs.n + 1)] for i in range(rs.n + 1)
        ]
        obj["highest_root"] = list(aff.theta.alpha)
    _write_json(obj, args.out)
    return 0


def cmd_lyndon_table(args) -> int:
    rs = build_root_system(args.family, args.rank)
    order = lalonde_ram(rs)
    rows = []
    for rt in order.roots:
        row = {
            "root": rt.label(),
            "alpha": list(rt.alpha),
            "word": list(order.word(rt)),
        }
        if not rt.is_simple():
            a, b = minimal_pair(order, rt)
            row["minimal_pair"] = [a.label(), b.label()]
        rows.append(row)
    obj = {"family": rs.family, "rank": rs.n, "convex": is_convex(order), "roots": rows}
    if args.json or args.out:
        _write_json(obj, args.out)
    else:
        for row in rows:
            pair = " ".join(row.get("minimal_pair", []))
            print(f"{row['root']:<14} word={''.join(map(str, row['word'])):<8} {pair}")
    return 0


def cmd_rep_dump(args) -> int:
    if args.affine:
        erep = build_evaluation(args.family, args.rank, mode="symbolic-a")
        rep = erep.fin
        gens = {}
        for i in range(args.rank + 1):
            gens[f"e{i}"] = matrix_to_json(erep.e_at(i))
            gens[f"f{i}"] = matrix_to_json(erep.f_at(i))
            gens[f"omega{i}"] = matrix_to_json(erep.omega_at(i))
            gens[f"omega_prime{i}"] = matrix_to_json(erep.omega_prime_at(i))
        gens["central_scalar"] = scalar_to_json(erep.c)
    else:
        rep = build_fundamental(args.family, args.rank)
        gens = {}
        for i in range(1, args.rank + 1):
            gens[f"e{i}"] = matrix_to_json(rep.e[i])
            gens[f"f{i}"] = matrix_to_json(rep.f[i])
            gens[f"omega{i}"] = matrix_to_json(rep.omega[i])
            gens[f"omega_prime{i}"] = matrix_to_json(rep.omega_prime[i])
    order = lalonde_ram(rep.rs)
    rvm = build_root_vector_matrices(rep, order)
    obj = {
        "family": args.family,
        "rank": args.rank,
        "dimension": rep.N,
        "generators": gens,
        "root_vectors": {
            rt.label(): {
                "e": matrix_to_json(rvm.e_of(rt)),
                "f": matrix_to_json(rvm.f_of(rt)),
            }
            for rt in rep.rs.positive
        },
    }
    _write_json(obj, args.out)
    return 0


def cmd_pairing_constants(args) -> int:
    rs = build_root_system(args.family, args.rank)
    ring = rs_ring()
    order = lalonde_ram(rs)
    oracle = PairingOracle(rs, ring)
    ok = True
    for rt in order.roots:
        for m in range(1, args.max_m + 1):
            via_oracle = pairing_power(oracle, order, rt, m)
            via_closed = closed_form_pairing(rs, ring, rt, m)
            match = via_oracle == via_closed
            ok = ok and match
            print(
                f"{rt.label():<14} m={m} closed={text_form(via_closed)} "
                f"oracle={text_form(via_oracle)} [{'ok' if match else 'MISMATCH'}]"
            )
    return 0 if ok else 1


def _rmatrix_builder(args):
    if args.route == "explicit":
        return build_rhat_explicit(args.family, args.rank)
    return build_rhat_factorized(args.family, args.rank)


def cmd_rmatrix_build(args) -> int:
    _write_json(matrix_to_json(_rmatrix_builder(args)), args.out)
    return 0


def cmd_rmatrix_verify(args) -> int:
    checks = args.checks.split(",")
    rep = run_rmatrix_checks(args.family, args.rank, checks)
    return _finish(rep)


def cmd_affine_build(args) -> int:
    _write_json(matrix_to_json(build_affine_rhat(args.family, args.rank)), args.out)
    return 0


def cmd_affine_verify(args) -> int:
    checks = args.checks.split(",")
    rep = run_affine_checks(args.family, args.rank, checks)
    return _finish(rep)


def cmd_embed_verify(args) -> int:
    checks = args.checks.split(",")
    rep = run_embed_checks(args.family, args.rank, checks)
    return _finish(rep)


def _finish(rep: Report) -> int:
    for it in rep.sorted_items():
        print(it.line())
    return 0 if rep.ok() else 1


# ---------------------------------------------------------------------------
# certify-all
# ---------------------------------------------------------------------------


def _desk_cases(max_rank: int) -> list[tuple[str, int]]:
    cases = []
    for fam in FAMILIES:
        lo = 3 if fam == "D" else 2
        for rank in range(lo, max(lo, max_rank) + 1):
            cases.append((fam, rank))
    return cases


def _certify_one(case: tuple[str, int, bool]) -> Report:
    fam, rank, long_mode = case
    rep = build_fundamental(fam, rank)
    out = Report()
    out = out.merged(verify_finite_relations(rep))
    out = out.merged(verify_highest_weight(rep))
    order = lalonde_ram(rep.rs)
    rvm = build_root_vector_matrices(rep, order)
    out = out.merged(verify_closed_forms(rvm))
    out = out.merged(verify_nilpotency(rvm))
    out = out.merged(verify_pairing_constants(rep.rs, rep.ring, order, max_m=2))
    out = out.merged(
        run_rmatrix_checks(
            fam, rank, ["route", "eigen", "intertwine", "minpoly", "inverse", "weights", "tables", "braid"]
        )
    )
    if fam in ("A", "B"):
        out = out.merged(run_rmatrix_checks(fam, rank, ["specialize"]))
    if rank >= AFFINE_MIN[fam]:
        erep = build_evaluation(fam, rank)
        out = out.merged(verify_affine_relations(erep))
        out = out.merged(check_baxterize_match(fam, rank))
        out = out.merged(check_degree_bounds(fam, rank))
        out = out.merged(check_unit_point(fam, rank))
        out = out.merged(check_affine_intertwiner(fam, rank))
        if long_mode or (fam, rank) in (("A", 2), ("C", 2)):
            out = out.merged(check_spectral_ybe(fam, rank))
    out = out.merged(run_embed_checks(fam, rank, ["dj", "kappa", "rootvec", "twist"]))
    if fam in ("A", "B"):
        out = out.merged(verify_pbw_orthogonality(rep.rs, rep.ring, order, 3))
    return out


def cmd_certify_all(args) -> int:
    cases = [(f, r, args.long) for (f, r) in _desk_cases(args.max_rank)]
    jobs = int(os.environ.get("RSQG_JOBS", "1"))
    reports: list[Report]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_certify_one, cases))
    else:
        reports = [_certify_one(c) for c in cases]
    total = Report()
    for rp in reports:
        total = total.merged(rp)
    for it in total.sorted_items():
        print(it.line())
    n_fail = sum(1 for it in total.items if not it.ok)
    print(f"{len(total.items)} checks, {n_fail} failures")
    if args.out:
        _write_json(total.to_json(), args.out)
    return 0 if n_fail == 0 else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_family_rank(p, affine_min=False):
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--rank", required=True, type=int)


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rsqg",
        description="Exact two-parameter R-matrices of classical type: builders and certificates.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("rootdata", help="root system data")
    ssub = p.add_subparsers(dest="sub", required=True)
    d = ssub.add_parser("dump", help="emit roots, forms and affine constants as JSON")
    _add_family_rank(d)
    d.add_argument("--out")
    d.set_defaults(fn=cmd_rootdata_dump)

    p = sub.add_parser("lyndon", help="word combinatorics")
    ssub = p.add_subparsers(dest="sub", required=True)
    d = ssub.add_parser("table", help="root/word/minimal-pair table")
    _add_family_rank(d)
    d.add_argument("--json", action="store_true")
    d.add_argument("--out")
    d.set_defaults(fn=cmd_lyndon_table)

    p = sub.add_parser("rep", help="fundamental representations")
    ssub = p.add_subparsers(dest="sub", required=True)
    d = ssub.add_parser("dump", help="emit generator matrices as JSON")
    _add_family_rank(d)
    d.add_argument("--affine", action="store_true")
    d.add_argument("--out")
    d.set_defaults(fn=cmd_rep_dump)

    p = sub.add_parser("pairing", help="Hopf pairing oracle")
    ssub = p.add_subparsers(dest="sub", required=True)
    d = ssub.add_parser("constants", help="closed form vs oracle, side by side")
    _add_family_rank(d)
    d.add_argument("--max-m", type=int, default=2)
    d.set_defaults(fn=cmd_pairing_constants)

    p = sub.add_parser("rmatrix", help="finite R-matrices")
    ssub = p.add_subparsers(dest="sub", required=True)
    d = ssub.add_parser("build")
    _add_family_rank(d)
    d.add_argument("--route", choices=("explicit", "factorized"), default="explicit")
    d.add_argument("--out")
    d.set_defaults(fn=cmd_rmatrix_build)
    d = ssub.add_parser("verify")
    _add_family_rank(d)
    d.add_argument(
        "--checks",
        default="route,eigen,intertwine,braid,minpoly,inverse,weights,tables",
    )
    d.set_defaults(fn=cmd_rmatrix_verify)

    p = sub.add_parser("affine", help="spectral R-matrices")
    ssub = p.add_subparsers(dest="sub", required=True)
    d = ssub.add_parser("build")
    _add_family_rank(d)
    d.add_argument("--out")
    d.set_defaults(fn=cmd_affine_build)
    d = ssub.add_parser("verify")
    _add_family_rank(d)
    d.add_argument("--checks", default="intertwine,baxterize-match,degree,unit")
    d.set_defaults(fn=cmd_affine_verify)

    p = sub.add_parser("embed", help="one-parameter subalgebra and twists")
    ssub = p.add_subparsers(dest="sub", required=True)
    d = ssub.add_parser("verify")
    _add_family_rank(d)
    d.add_argument("--checks", default="dj,kappa,rootvec,twist")
    d.set_defaults(fn=cmd_embed_verify)

    d = sub.add_parser("certify-all", help="run the full certificate suite")
    d.add_argument("--max-rank", type=int, default=3)
    d.add_argument("--long", action="store_true", help="include the long spectral YBE cases")
    d.add_argument("--out", help="also write the report as JSON")
    d.set_defaults(fn=cmd_certify_all)

    return ap


def run(argv: list[str] | None = None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
