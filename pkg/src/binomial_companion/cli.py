"""Command line entry point: ``python -m binomial_companion <command> ...``.

Exit status is 0 on success, 1 when a mathematical check fails and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Sequence

from . import __version__, abgroup, checks, companion, idealfamily, polyring, quotientbasis, zlattice
from .intmatrix import det_via_snf, snf

VERIFY_GROUPS = {
    "groebner": ["groebner", "basis"],
    "commute": ["commute"],
    "derangement": ["derangement"],
    "cycles": ["cycles"],
    "intertwine": ["intertwine", "presentation"],
    "lattice": ["snf", "variety", "decomposition"],
    "group": ["closure", "aut"],
}
ALL_CHECKS = list(checks.CHECKS)

REPORT_CSV_COLUMNS = [
    "n", "colength", "basis_size", "group_order", "invariant_factors", "snf",
    "variety_count", "aut_order", "pass",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _n_arg(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--n", type=int, required=required, help="number of variables (n >= 3)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="binomial-companion", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ideal", help="generators of the ideal")
    p.add_argument("what", choices=["gens"])
    _n_arg(p)
    p.add_argument("--json", action="store_true", help="emit the whole instance as JSON")

    p = sub.add_parser("groebner", help="lex Groebner basis")
    _n_arg(p)
    p.add_argument("--from-scratch", action="store_true", help="run Buchberger on the raw generators")

    p = sub.add_parser("basis", help="monomial basis of the quotient")
    _n_arg(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--order", choices=["canonical", "example"], default="canonical")

    p = sub.add_parser("companion", help="companion matrices")
    _n_arg(p)
    p.add_argument("--var", type=int, help="variable index j (default: all)")
    p.add_argument("--reduced", action="store_true", help="drop the constant's row and column")
    p.add_argument("--format", choices=["matrix", "cycles", "oneline", "json"], default="matrix")
    p.add_argument("--order", choices=["canonical", "example"], default="canonical")

    p = sub.add_parser("verify", help="check the structural claims")
    _n_arg(p)
    p.add_argument("--all", action="store_true")
    for name in VERIFY_GROUPS:
        p.add_argument(f"--{name}", action="store_true")
    p.add_argument("--max-n-closure", type=int, default=checks.DEFAULT_MAX_N_CLOSURE)

    p = sub.add_parser("group", help="the abelian group generated by the P_j")
    _n_arg(p)
    p.add_argument("--closure", action="store_true", help="enumerate the permutation group")
    p.add_argument("--max-n-closure", type=int, default=checks.DEFAULT_MAX_N_CLOSURE)

    p = sub.add_parser("aut", help="automorphism group orders")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--table", metavar="A..B")
    p.add_argument("--format", choices=["text", "csv"], default="text")

    p = sub.add_parser("lattice", help="lattice, Smith form and variety")
    lsub = p.add_subparsers(dest="lattice_command", required=True, parser_class=_Parser)
    q = lsub.add_parser("snf")
    _n_arg(q)
    q.add_argument("--transforms", action="store_true", help="include U and V")
    q = lsub.add_parser("variety")
    _n_arg(q)
    q.add_argument("--list", action="store_true")
    q = lsub.add_parser("verify")
    _n_arg(q)

    p = sub.add_parser("report", help="sweep all checks over a range of n")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--max-n-closure", type=int, default=checks.DEFAULT_MAX_N_CLOSURE)
    p.add_argument("--timing", action="store_true", help="record wall-clock time per n")
    return parser


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _require_n(n: int) -> None:
    if n < 3:
        raise UsageError(f"--n must be at least 3, got {n}")


# ---------------------------------------------------------------------------
# commands

def _cmd_ideal(args, out) -> int:
    inst = idealfamily.make_instance(args.n)
    if args.json:
        out.write(json.dumps(inst.to_json()) + "\n")
    else:
        for f in inst.generators:
            out.write(f"{f}\n")
    return 0


def _cmd_groebner(args, out) -> int:
    if args.from_scratch:
        if args.n > checks.GROEBNER_MAX_N:
            raise UsageError(f"--from-scratch is limited to n <= {checks.GROEBNER_MAX_N}")
        gb = polyring.reduce_basis(polyring.buchberger(idealfamily.ideal_generators(args.n)))
    else:
        gb = idealfamily.groebner_basis(args.n)
    for g in gb:
        out.write(f"{g}\n")
    return 0


def _basis_for(n: int, order: str) -> list[quotientbasis.BasisMonomial]:
    if order == "example" and n not in (3, 4):
        raise UsageError("--order example is available only for n = 3 and n = 4")
    return quotientbasis.basis_order(n, order)


def _cmd_basis(args, out) -> int:
    basis = _basis_for(args.n, args.order)
    labels = [m.label(args.n) for m in basis]
    if args.format == "json":
        out.write(json.dumps({"n": args.n, "order": args.order, "monomials": labels}) + "\n")
    else:
        out.write("\n".join(labels) + "\n")
    return 0


def _cmd_companion(args, out) -> int:
    n = args.n
    basis = _basis_for(n, args.order)
    if args.var is not None and not 1 <= args.var <= n:
        raise UsageError(f"--var must lie in 1..{n}")
    vars_ = [args.var] if args.var is not None else list(range(1, n + 1))
    gb = idealfamily.groebner_basis(n)
    order = args.order if args.order == "canonical" else basis
    records = []
    for j in vars_:
        T = companion.full_matrix(j, n, order, gb)
        P = T.reduced()
        rec = {"var": j}
        if args.format == "matrix":
            rows = P.to_matrix() if args.reduced else T.entries()
            rec["text"] = "\n".join(" ".join(map(str, r)) for r in rows)
        elif args.format == "cycles":
            if not args.reduced:
                raise UsageError("--format cycles needs --reduced")
            rec["text"] = P.cycle_notation()
        elif args.format == "oneline":
            imgs = P.images if args.reduced else tuple(c + 1 for c in T.images)
            rec["text"] = " ".join(map(str, imgs))
        else:
            rec["matrix"] = P.to_matrix() if args.reduced else T.entries()
            rec["images"] = list(P.images) if args.reduced else [c + 1 for c in T.images]
            rec["cycle_type"] = [list(x) for x in companion.cycle_type(P)]
        records.append(rec)
    if args.format == "json":
        out.write(json.dumps({
            "n": n, "order": args.order, "reduced": args.reduced,
            "basis": [m.label(n) for m in basis], "matrices": records,
        }) + "\n")
    else:
        for rec in records:
            if len(records) > 1:
                out.write(f"# x{rec['var']}\n")
            out.write(rec["text"] + "\n")
    return 0


def _cmd_verify(args, out, err) -> int:
    names: list[str] = []
    if args.all or not any(getattr(args, g) for g in VERIFY_GROUPS):
        names = ALL_CHECKS
    else:
        for g, members in VERIFY_GROUPS.items():
            if getattr(args, g):
                names.extend(m for m in members if m not in names)
    results = checks.run_checks(args.n, names, {"closure": args.max_n_closure})
    failed = []
    for name, ok in results.items():
        status = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
        out.write(f"{status} {name}: {checks.CLAIM_TAGS[name]}\n")
        if ok is False:
            failed.append(name)
    for name in failed:
        err.write(f"check failed for n={args.n}: {name} ({checks.CLAIM_TAGS[name]})\n")
    return 1 if failed else 0


def _cmd_group(args, out, err) -> int:
    n = args.n
    gs = abgroup.generator_images(n)
    out.write(f"G_{n} = C2^{n - 2} x C{2 * n - 4}, order {(n - 2) * 2 ** (n - 1)}\n")
    for j, g in enumerate(gs, start=1):
        out.write(f"g{j} = {g} (order {abgroup.element_order(g)})\n")
    ok = abgroup.verify_presentation(n)
    out.write(f"presentation relations: {'PASS' if ok else 'FAIL'}\n")
    if args.closure:
        if n > args.max_n_closure:
            raise UsageError(f"closure refused for n > {args.max_n_closure}; raise --max-n-closure")
        rep = abgroup.closure(companion.all_reduced_permutations(n))
        out.write(f"closure order: {rep.order}\n")
        out.write("element orders: " + ", ".join(f"{k}:{v}" for k, v in rep.order_histogram.items()) + "\n")
        out.write(f"invariant factors (element orders): {list(rep.invariant_factors)}\n")
        out.write(f"invariant factors (relation lattice): {list(rep.relation_invariant_factors)}\n")
        ok = ok and rep.consistent and rep.order == (n - 2) * 2 ** (n - 1)
    if not ok:
        err.write(f"check failed for n={n}: {checks.CLAIM_TAGS['closure']}\n")
    return 0 if ok else 1


def _aut_rows(lo: int, hi: int) -> list[abgroup.AutReport]:
    for n in (lo, hi):
        _require_n(n)
    return [abgroup.aut_report(n) for n in range(lo, hi + 1)]


def _cmd_aut(args, out) -> int:
    if args.table:
        rows = _aut_rows(*_parse_range(args.table))
    else:
        rows = _aut_rows(args.n, args.n)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "group", "aut_structure", "aut_order"])
        for r in rows:
            w.writerow([r.n, r.group, r.structure, str(r.order)])
    else:
        for r in rows:
            out.write(f"{r.n}\t{r.group}\t{r.structure}\t{r.order}\n")
    return 0


def _cmd_lattice(args, out, err) -> int:
    n = args.n
    if args.lattice_command == "snf":
        res = snf(idealfamily.relation_matrix(n))
        payload = {"n": n, "S": res.invariant_factors, "det": str(det_via_snf(idealfamily.relation_matrix(n)))}
        if args.transforms:
            payload["U"] = res.U.tolist()
            payload["V"] = res.V.tolist()
        out.write(json.dumps(payload) + "\n")
        return 0
    if args.lattice_command == "variety":
        pts = zlattice.enumerate_variety(n)
        if args.list:
            payload = {"n": n, "modulus": 2 * n - 4, "count": len(pts), "points": [list(p.exps) for p in pts]}
            out.write(json.dumps(payload) + "\n")
        else:
            out.write(f"{len(pts)}\n")
        return 0
    names = ["snf", "variety"] + (["decomposition"] if n <= checks.DECOMPOSITION_MAX_N else [])
    results = checks.run_checks(n, names)
    failed = [k for k, v in results.items() if v is False]
    for k, v in results.items():
        out.write(f"{'PASS' if v else 'FAIL'} {k}: {checks.CLAIM_TAGS[k]}\n")
    for k in failed:
        err.write(f"check failed for n={n}: {k} ({checks.CLAIM_TAGS[k]})\n")
    return 1 if failed else 0


def build_record(n: int, max_n_closure: int = checks.DEFAULT_MAX_N_CLOSURE) -> dict:
    """One per-n entry of the sweep report."""
    results = checks.run_checks(n, ALL_CHECKS, {"closure": max_n_closure})
    if n <= max_n_closure:
        rep = abgroup.closure(companion.all_reduced_permutations(n))
        group_order, factors = rep.order, list(rep.invariant_factors)
    else:
        coker = zlattice.lattice_cokernel(n)
        group_order, factors = coker.order, list(coker.factors)
    return {
        "n": n,
        "colength": idealfamily.colength(n),
        "basis_size": len(quotientbasis.enumerate_basis(n)),
        "checks": {k: v for k, v in results.items() if v is not None},
        "group_order": group_order,
        "invariant_factors": factors,
        "snf": snf(idealfamily.relation_matrix(n)).invariant_factors,
        "variety_count": zlattice.variety_count(n),
        "aut_order": str(abgroup.aut_report(n).order),
    }


def _cmd_report(args, out) -> int:
    _require_n(args.n_min)
    if args.n_max < args.n_min:
        raise UsageError("--n-max must be >= --n-min")
    records = []
    for n in range(args.n_min, args.n_max + 1):
        t0 = time.perf_counter()
        rec = build_record(n, args.max_n_closure)
        if args.timing:
            rec["seconds"] = round(time.perf_counter() - t0, 3)
        records.append(rec)
    ok = all(all(r["checks"].values()) for r in records)
    if args.format == "json":
        text = json.dumps({
            "version": __version__, "n_min": args.n_min, "n_max": args.n_max,
            "records": records, "pass": ok,
        }, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(REPORT_CSV_COLUMNS)
        for r in records:
            w.writerow([
                r["n"], r["colength"], r["basis_size"], r["group_order"],
                " ".join(map(str, r["invariant_factors"])), " ".join(map(str, r["snf"])),
                r["variety_count"], r["aut_order"], all(r["checks"].values()),
            ])
        text = buf.getvalue()
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    out.write(f"wrote {args.out}: {'all checks pass' if ok else 'FAILURES'}\n")
    return 0 if ok else 1


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "n", None) is not None:
            _require_n(args.n)
        cmd = args.command
        if cmd == "ideal":
            return _cmd_ideal(args, out)
        if cmd == "groebner":
            return _cmd_groebner(args, out)
        if cmd == "basis":
            return _cmd_basis(args, out)
        if cmd == "companion":
            return _cmd_companion(args, out)
        if cmd == "verify":
            return _cmd_verify(args, out, err)
        if cmd == "group":
            return _cmd_group(args, out, err)
        if cmd == "aut":
            return _cmd_aut(args, out)
        if cmd == "lattice":
            return _cmd_lattice(args, out, err)
        return _cmd_report(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())
