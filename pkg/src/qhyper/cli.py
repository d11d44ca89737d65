"""Command-line verifier: ``qhyper-verify``.

Runs ``check`` for every selected (identity, rank, seed) triple and writes a
JSON report.  Exit status is 0 when every executed check passed, 1 when at
least one did not, and 2 on operational errors (bad arguments, I/O).
"""

import argparse
import json
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from fnmatch import fnmatchcase

from gmpy2 import mpfr

from . import __version__
from .errors import QHyperError
from .registry import CATALOGUE, PASS, check
from .scalars import EXACT, FLOAT, MODES, PSERIES, scalar_to_json

SKIPPED = "skipped"
MODE_NAMES = {"exact": EXACT, "pseries": PSERIES, "float": FLOAT}


class UsageError(QHyperError):
    pass


def _parse_ints(text, what):
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers") from None
    if not vals:
        raise UsageError(f"{what} is empty")
    return vals


def build_parser():
    p = argparse.ArgumentParser(
        prog="qhyper-verify",
        description="Verify multivariable basic and elliptic hypergeometric identities.",
    )
    p.add_argument("--identity", default="*", help="glob over identity ids (comma-separated globs allowed)")
    p.add_argument("--mode", choices=sorted(MODE_NAMES), help="evaluation mode (default: each entry's first mode)")
    p.add_argument("--ranks", help="comma-separated ranks (default: 1,2 intersected with each entry's ranks)")
    p.add_argument("--seeds", type=int, default=3, help="number of seeds per (identity, rank)")
    p.add_argument("--seed", type=int, default=0, help="base seed")
    p.add_argument("--precision", type=int, default=256, help="float precision in bits")
    p.add_argument("--p-order", type=int, default=8, help="p-series truncation order K")
    p.add_argument("--tolerance", type=float, help="float tolerance override")
    p.add_argument("--max-n", type=int, help="cap on sampled discrete parameters")
    p.add_argument("--out", help="write the JSON report here (default: stdout)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--list", action="store_true", help="print the catalogue and exit")
    p.add_argument("--version", action="version", version=__version__)
    return p


def select_entries(pattern):
    globs = [g.strip() for g in pattern.split(",") if g.strip()]
    return [d for d in CATALOGUE.values() if any(fnmatchcase(d.id, g) for g in globs)]


def plan(args):
    """Ordered list of work items and skip notices."""
    entries = select_entries(args.identity)
    ranks = _parse_ints(args.ranks, "--ranks") if args.ranks else None
    mode = MODE_NAMES[args.mode] if args.mode else None
    if args.seeds < 0:
        raise UsageError("--seeds must be nonnegative")
    items = []
    for d in entries:
        m = mode or d.modes[0]
        wanted = ranks if ranks is not None else [r for r in (1, 2) if r in d.ranks]
        for r in wanted:
            for j in range(args.seeds):
                seed = args.seed + j
                if m not in d.modes:
                    items.append(("skip", d.id, r, seed, m, f"{d.id} has no {m} mode"))
                elif r not in d.ranks:
                    items.append(("skip", d.id, r, seed, m, f"{d.id} does not support rank {r}"))
                else:
                    items.append(("run", d.id, r, seed, m, ""))
    return items


def _text(x):
    if x is None:
        return None
    if isinstance(x, int) and x == 0:
        return "0"
    return str(mpfr(x)) if not isinstance(x, str) else x


def run_item(item, precision, order, max_n, tolerance):
    """Execute one work item and return its report record."""
    kind, ident, r, seed, mode, why = item
    base = {"identity": ident, "r": r, "mode": mode, "seed": seed}
    if kind == "skip":
        return {**base, "verdict": SKIPPED, "detail": why}
    res = check(CATALOGUE[ident], r, seed, mode, precision=precision, order=order,
                max_n=max_n, tolerance=tolerance)
    rel = res.relative_error
    return {
        **base,
        "digest": res.digest,
        "discrete": {k: list(v) if isinstance(v, tuple) else v for k, v in sorted(res.discrete.items())},
        "as_printed": res.as_printed,
        "verdict": res.verdict,
        "lhs": None if res.lhs is None else scalar_to_json(res.lhs),
        "rhs": None if res.rhs is None else scalar_to_json(res.rhs),
        "residual": None if res.residual is None else scalar_to_json(res.residual),
        "relative_error": "0" if rel == 0 else _text(rel),
        "detail": res.detail,
        "elapsed": round(res.elapsed, 6),
    }


def _worker(payload):
    return run_item(*payload)


def execute(items, args):
    payloads = [(it, args.precision, args.p_order, args.max_n, args.tolerance) for it in items]
    if args.jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(_worker, payloads))
    return [_worker(p) for p in payloads]


def _relkey(text):
    return mpfr(text) if text is not None else mpfr(0)


def build_report(records, config, wall):
    per = {}
    for rec in records:
        agg = per.setdefault(rec["identity"], {"pass": 0, "fail": 0, "skipped": 0,
                                               "max_relative_error": None, "time": 0.0})
        v = rec["verdict"]
        if v == PASS:
            agg["pass"] += 1
        elif v == SKIPPED:
            agg["skipped"] += 1
        else:
            agg["fail"] += 1
        if rec.get("relative_error") is not None:
            cur = agg["max_relative_error"]
            if cur is None or _relkey(rec["relative_error"]) > _relkey(cur):
                agg["max_relative_error"] = rec["relative_error"]
        agg["time"] = round(agg["time"] + rec.get("elapsed", 0.0), 6)
    executed = [r for r in records if r["verdict"] != SKIPPED]
    summary = {
        "checks": len(executed),
        "pass": sum(r["verdict"] == PASS for r in executed),
        "fail": sum(r["verdict"] != PASS for r in executed),
        "skipped": len(records) - len(executed),
        "wall_time": round(wall, 6),
    }
    return {
        "tool": "qhyper-verify",
        "version": __version__,
        "generated": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "config": config,
        "checks": records,
        "identities": per,
        "summary": summary,
    }


def write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qhyper-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def print_catalogue(out=sys.stdout):
    basic = elliptic = 0
    for d in CATALOGUE.values():
        if d.family == "elliptic":
            elliptic += 1
        else:
            basic += 1
        modes = ",".join(d.modes)
        ranks = ",".join(str(r) for r in d.ranks)
        flag = "" if d.as_printed else "  [corrected]"
        print(f"{d.id:12s} {d.family:8s} modes={modes:12s} ranks={ranks:8s} {d.name}{flag}", file=out)
        print(f"{'':12s} {d.citation}", file=out)
    print(f"{basic} basic + {elliptic} elliptic entries", file=out)


def run(argv=None, out=sys.stdout, err=sys.stderr):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.list:
        print_catalogue(out)
        return 0
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        if args.precision < 53:
            raise UsageError("--precision must be at least 53 bits")
        if args.p_order < 1:
            raise UsageError("--p-order must be positive")
        items = plan(args)
        start = time.perf_counter()
        records = execute(items, args)
        wall = time.perf_counter() - start
    except QHyperError as exc:
        print(f"error: {exc}", file=err)
        return 2
    config = {
        "identity": args.identity, "mode": args.mode, "ranks": args.ranks, "seeds": args.seeds,
        "seed": args.seed, "precision": args.precision, "p_order": args.p_order,
        "tolerance": args.tolerance, "max_n": args.max_n,
    }
    report = build_report(records, config, wall)
    text = json.dumps(report, indent=2) + "\n"
    s = report["summary"]
    for rec in records:
        if rec["verdict"] != PASS:
            print(f"{rec['verdict']:>13s}  {rec['identity']} r={rec['r']} seed={rec['seed']} "
                  f"{rec.get('detail', '')}".rstrip(), file=err)
    if not records:
        print("0 checks selected", file=err)
    print(f"{s['checks']} checks: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped", file=err)
    try:
        if args.out:
            write_atomic(args.out, text)
        else:
            out.write(text)
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=err)
        return 2
    return 1 if s["fail"] else 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
