"""Command-line front end.

Subcommands: list, gen, verify, wd, geom-check, enumerate, repair.
Exit codes: 0 success / all checks PASS, 1 verification FAIL, 2 usage or
input error.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import constructions as cons
from . import geometry, repair
from .code import (
    LinearCode,
    is_mds,
    mds_weight_distribution,
    min_distance,
    weight_distribution_bruteforce,
)
from .errors import CapacityError, Lrc4Error, RangeError
from .lrc import (
    LrcProfile,
    exact_locality,
    is_optimal_lrc,
    profile_from_comments,
    singleton_like_bound,
    verify_locality_certificate,
)
from .matrix import MatrixFormatError, rank, read_matrix_text

USAGE_ERROR = 2

#: options are build knobs that do not change the claimed parameters
_OPTION_KEYS = ("alpha", "beta", "variant")


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return USAGE_ERROR


def _split_params(params: dict) -> tuple[str, str]:
    primary = ";".join(
        f"{k}={v}" for k, v in params.items() if k not in _OPTION_KEYS
    )
    options = ";".join(
        f"{k}={v}" for k, v in params.items() if k in _OPTION_KEYS
    )
    return primary or "-", options or "-"


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return read_matrix_text(fh.read())


def _load_with_profile(path: str) -> tuple[LinearCode, LrcProfile, dict]:
    h, comments = _load(path)
    profile = profile_from_comments(h, comments)
    if profile is None:
        raise MatrixFormatError(
            f"{path}: missing locality_rows/r metadata comments"
        )
    return LinearCode(h), profile, comments


# --- subcommands -----------------------------------------------------------

def cmd_list(args) -> int:
    classes = cons.catalog()
    if args.id is not None:
        try:
            classes = [cons.get_class(args.id)]
        except KeyError as exc:
            return _fail(str(exc))
    for cc in classes:
        print(f"{cc.id}  {cc.formula:28s}  {cc.param_spec}")
    return 0


def cmd_gen(args) -> int:
    params = {}
    for key in ("s", "k", "r", "n", "alpha", "beta", "variant"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    if args.variant_name is not None:
        params["variant"] = args.variant_name
    try:
        inst = cons.build(cons.BuildRequest(args.class_id, params))
    except KeyError as exc:
        return _fail(str(exc))
    except (RangeError, TypeError) as exc:
        try:
            cc = cons.get_class(args.class_id)
            print(f"{cc.id}: {cc.formula}; valid range: {cc.param_spec}",
                  file=sys.stderr)
        except KeyError:
            pass
        return _fail(str(exc))
    text = inst.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {inst.h.rows}x{inst.h.cols} matrix to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _rebuild_from_comments(comments: dict) -> Optional[cons.BuiltInstance]:
    """Rebuild the cataloged instance named by metadata comments, or None."""
    params: dict = {}
    for key in ("s", "k", "n", "alpha", "beta"):
        if key in comments:
            params[key] = int(comments[key])
    # "r" doubles as the profile sidecar; it is a build parameter only for
    # classes that declare it
    class_id = comments["class"]
    try:
        cc = cons.get_class(class_id)
    except KeyError:
        return None
    if "r" in comments and class_id in (
        "C01", "C07", "C08", "C09", "C20", "C21", "C22", "C23"
    ):
        params["r"] = int(comments["r"])
    if "variant" in comments:
        raw = comments["variant"]
        params["variant"] = int(raw) if raw.isdigit() else raw
    try:
        return cons.build(cons.BuildRequest(class_id, params))
    except (Lrc4Error, TypeError, ValueError):
        return None


def _parse_claimed(comments: dict) -> Optional[tuple[int, int, int, int]]:
    raw = comments.get("claimed")
    if raw is None:
        return None
    parts = raw.strip("()").split(",")
    if len(parts) != 4:
        raise MatrixFormatError(f"bad claimed tuple {raw!r}")
    n, k, r, d = (int(p) for p in parts)
    return n, k, r, d


def cmd_verify(args) -> int:
    try:
        c, profile, comments = _load_with_profile(args.file)
        claimed = _parse_claimed(comments)
    except (OSError, MatrixFormatError, ValueError) as exc:
        return _fail(str(exc))
    checks: list[tuple[str, bool, str]] = []

    if "class" in comments:
        rebuilt = _rebuild_from_comments(comments)
        if rebuilt is None:
            checks.append(("catalog-match", False,
                           f"cannot rebuild class {comments['class']} from metadata"))
        else:
            checks.append(("catalog-match", rebuilt.h == c.parity_check,
                           f"matrix is entry-for-entry the cataloged "
                           f"{comments['class']} instance"))

    full_rank = rank(c.parity_check) == c.parity_check.rows
    checks.append(("rank", full_rank, f"rank {c.n - c.k} of {c.parity_check.rows} rows"))
    if claimed is not None:
        n, k, r, d_claim = claimed
        checks.append(("dimensions", (c.n, c.k) == (n, k),
                       f"built [{c.n},{c.k}] vs claimed [{n},{k}]"))
    else:
        d_claim = None

    cert = verify_locality_certificate(c, profile)
    checks.append(("locality-certificate", cert,
                   f"designated rows have weight <= {profile.r_claimed + 1} and cover all coordinates"))

    d: Optional[int] = None
    try:
        d = min_distance(c)
    except CapacityError as exc:
        checks.append(("min-distance", False, str(exc)))
    if d is not None:
        if d_claim is not None:
            checks.append(("min-distance", d == d_claim,
                           f"d = {d} vs claimed {d_claim}"))
        bound = singleton_like_bound(c.n, c.k, profile.r_claimed)
        checks.append(("distance-bound", d == bound, f"d = {d}, bound = {bound}"))

    try:
        per = exact_locality(c)
        ok = all(v is not None and v <= profile.r_claimed for v in per)
        checks.append(("exact-locality", ok,
                       f"max per-coordinate locality = "
                       f"{max((v for v in per if v is not None), default=None)}"
                       f" vs claimed {profile.r_claimed}"))
    except CapacityError:
        print("note: locality <= r certified, exactness unverified", file=sys.stderr)

    failed = False
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'}: {name} ({detail})")
        failed |= not ok
    return 1 if failed else 0


def cmd_wd(args) -> int:
    try:
        h, _ = _load(args.file)
        c = LinearCode(h)
        dist = weight_distribution_bruteforce(c)
    except (OSError, MatrixFormatError, ValueError, CapacityError) as exc:
        return _fail(str(exc))
    sys.stdout.write(dist.to_csv())
    if is_mds(c):
        closed = mds_weight_distribution(c.n, c.k)
        agree = closed.counts == dist.counts
        print(f"{'PASS' if agree else 'FAIL'}: closed-form MDS weight "
              f"distribution {'matches' if agree else 'differs from'} brute force")
        return 0 if agree else 1
    return 0


def cmd_geom_check(args) -> int:
    if args.case == "r5":
        if args.s is None:
            return _fail("--case r5 requires --s")
        lhs, rhs, ok = geometry.keylemma_r5_variant(args.s)
        print(f"{'PASS' if ok else 'FAIL'}: point count {lhs} <= {rhs}")
        return 0 if ok else 1
    try:
        c, profile, _ = _load_with_profile(args.file)
        report = geometry.keylemma_check(c.parity_check, profile, int(args.case))
    except (OSError, MatrixFormatError, ValueError,
            geometry.DependencyError) as exc:
        return _fail(str(exc))
    status = "PASS" if report.passed else "FAIL"
    print(f"{status}: case {report.case} with l={report.l}, r={report.r}, "
          f"u={report.u}: count {report.lhs} <= {report.rhs}: {report.count_ok}; "
          f"points distinct: {report.distinct_ok}"
          + (f"; {report.detail}" if report.detail else ""))
    if report.cap is not None:
        print(report.cap.render())
    return 0 if report.passed else 1


def cmd_enumerate(args) -> int:
    caps = cons.EnumerationCaps(
        max_s=args.max_s, exhaustive_options=args.exhaustive_options
    )
    out = open(args.csv, "w", encoding="utf-8") if args.csv else sys.stdout
    any_fail = False
    try:
        print("class,params,options,n,k,r,d,optimal", file=out)
        for req in cons.enumerate_instances(caps):
            inst = cons.build(req)
            verdict = is_optimal_lrc(inst.code, inst.profile)
            n, k, r, d_claim = inst.claimed
            ok = (
                verdict.is_optimal
                and verdict.d == d_claim
                and (inst.code.n, inst.code.k) == (n, k)
            )
            any_fail |= not ok
            primary, options = _split_params(inst.params)
            print(
                f"{inst.class_id},{primary},{options},{n},{k},{r},"
                f"{verdict.d},{str(ok).lower()}",
                file=out,
            )
            if not ok:
                print(f"FAIL: {inst.class_id} {inst.params}: "
                      f"{';'.join(verdict.failures) or 'parameter mismatch'}",
                      file=sys.stderr)
    finally:
        if out is not sys.stdout:
            out.close()
    return 1 if any_fail else 0


def cmd_repair(args) -> int:
    try:
        c, profile, _ = _load_with_profile(args.file)
    except (OSError, MatrixFormatError, ValueError) as exc:
        return _fail(str(exc))
    report = repair.simulate_local_repair(c, profile, args.trials, args.seed)
    sys.stdout.write(report.to_csv())
    ok = report.all_ok and all(a <= profile.r_claimed for a in report.max_accesses)
    print(f"{'PASS' if ok else 'FAIL'}: {report.trials} trials x {c.n} "
          f"coordinates, access <= {profile.r_claimed}")
    return 0 if ok else 1


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrc4",
        description="Construct and verify optimal quaternary locally repairable codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="show the catalog of code families")
    p.add_argument("--id", help="show a single class, e.g. C02")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("gen", help="build one instance and write its matrix")
    p.add_argument("--class", dest="class_id", required=True, metavar="CID")
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=int, choices=(0, 1))
    p.add_argument("--beta", type=int, choices=(0, 1))
    p.add_argument("--variant", type=int, choices=(1, 2, 3))
    p.add_argument("--variant-name", choices=("plain", "low"),
                   help="named variant for the distance-2 family")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="re-check all claims of a matrix file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("wd", help="weight distribution of a matrix file")
    p.add_argument("file")
    p.set_defaults(func=cmd_wd)

    p = sub.add_parser("geom-check", help="projective-geometry necessary conditions")
    p.add_argument("file", nargs="?")
    p.add_argument("--case", required=True, choices=("1", "2", "3", "r5"))
    p.add_argument("--s", type=int, help="parameter for --case r5")
    p.set_defaults(func=cmd_geom_check)

    p = sub.add_parser("enumerate", help="build and verify the whole catalog")
    p.add_argument("--max-s", type=int, default=5)
    p.add_argument("--exhaustive-options", action="store_true",
                   help="all puncture depths instead of endpoints + midpoint")
    p.add_argument("--csv", help="write the CSV here instead of stdout")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("repair", help="seeded local-repair simulation")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_repair)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "geom-check" and args.case != "r5" and args.file is None:
        parser.error("geom-check requires a matrix file unless --case r5")
    try:
        return args.func(args)
    except Lrc4Error as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
