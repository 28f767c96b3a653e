"""Command-line front end: ``schubert analyze|enumerate|verify|bp``.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from . import config, suites
from .bp import LEFT, RIGHT, decompose, find_chain_bp
from .cache import DiskCache
from .errors import ConstructionError, InternalInconsistencyError, ResourceCapError, SchubertError
from .inversion import inversions_left, inversions_right, simple_inversions, simple_inversions_via_covers
from .rootsys import CartanType, RootSystem, build_root_system, leaves
from .smooth import is_smooth
from .spherical import SPHERICAL, check_certificate, decide_spherical, toral_cell_test
from .weyl import (
    WeylElement,
    enumerate_group,
    format_element,
    format_simple_subset,
    left_descents,
    parse_element,
    parse_simple_subset,
    reduced_word,
    right_descents,
    support,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
FILTERS = ("all", "smooth", "toral-cell", "spherical")
FORMATS = ("jsonl", "table")

log = logging.getLogger("schubert_spherical")


class UsageError(Exception):
    pass


@dataclass
class AnalysisReport:
    type: str
    rank: int
    element_spec: str
    w: WeylElement
    check: bool = False

    def to_json(self) -> dict:
        w = self.w
        smooth = is_smooth(w)
        cert = decide_spherical(w.system, w)
        chain = find_chain_bp(w)
        out = {
            "input": {"type": self.type, "rank": self.rank, "element": self.element_spec},
            "element": format_element(w),
            "reduced_word": [f"s{i + 1}" for i in reduced_word(w)],
            "length": w.length,
            "support": format_simple_subset(support(w)),
            "left_descents": format_simple_subset(left_descents(w)),
            "right_descents": format_simple_subset(right_descents(w)),
            "N": inversions_left(w).pretty(),
            "I": inversions_right(w).pretty(),
            "N_Delta": format_simple_subset(simple_inversions(w)),
            "toral_cell": toral_cell_test(w),
            "smoothness": smooth.to_json(),
            "bp": {
                "leaf_decompositions": [
                    decompose(w, support(w) - {s}, side).to_json()
                    for side in (RIGHT, LEFT)
                    for s in leaves(w.system, support(w))
                ],
                "chain_bp": None if chain is None else chain.to_json(),
            },
            "certificate": cert.to_json(),
        }
        if self.check:
            problems = revalidate(w)
            out["check"] = {"passed": not problems, "problems": problems}
        return out


def revalidate(w: WeylElement) -> list[str]:
    """Cross-check the report against independent recomputations."""
    problems = []
    if simple_inversions_via_covers(w) != simple_inversions(w):
        problems.append("N_Delta from covers disagrees with the left descents")
    if w.length != len(reduced_word(w)) or inversions_left(w).mask != w.inverse().rinv_mask:
        problems.append("length or N(w) = I(w^-1) check failed")
    problems.extend(check_certificate(decide_spherical(w.system, w)))
    return problems


# --- helpers ----------------------------------------------------------------


def _system(args) -> RootSystem:
    try:
        return build_root_system(CartanType(args.type.upper(), args.rank))
    except ConstructionError as exc:
        raise UsageError(str(exc)) from exc


def _element(sys: RootSystem, spec: str) -> WeylElement:
    try:
        return parse_element(sys, spec)
    except ConstructionError as exc:
        raise UsageError(f"cannot parse element {spec!r}: {exc}") from exc


def _cache(args) -> DiskCache:
    return DiskCache(args.cache_dir)


def group_elements(sys: RootSystem, cache: DiskCache) -> list[WeylElement]:
    """W in deterministic (length, serialized form) order, via the disk cache."""
    perms = cache.get_or_compute(
        str(sys.ctype), "group-enumeration", "", lambda: [list(w.perm) for w in enumerate_group(sys)]
    )
    elems = [WeylElement(sys, tuple(p)) for p in perms]
    return sorted(elems, key=lambda w: (w.length, format_element(w)))


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


# --- subcommands ------------------------------------------------------------


def cmd_analyze(args, out) -> int:
    sys_ = _system(args)
    w = _element(sys_, args.element)
    report = AnalysisReport(str(sys_.ctype.family), sys_.rank, args.element, w, args.check).to_json()
    out.write(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    if args.check and not report["check"]["passed"]:
        return EXIT_FAIL
    return EXIT_OK


def _row(w: WeylElement, flt: str) -> dict | None:
    row = {
        "element": format_element(w),
        "length": w.length,
        "levi": format_simple_subset(left_descents(w)),
    }
    if flt == "smooth":
        rep = is_smooth(w)
        ok = rep.smooth if rep.smooth is not None else rep.rationally_smooth
        if not ok:
            return None
        row["smoothness"] = rep.to_json()
    elif flt == "toral-cell":
        if not toral_cell_test(w):
            return None
    elif flt == "spherical":
        cert = decide_spherical(w.system, w)
        if cert.verdict != SPHERICAL:
            return None
        row["reason"] = cert.kind
    return row


def _table_line(row: dict, width: int) -> str:
    extra = row.get("reason") or ""
    if "smoothness" in row:
        extra = row["smoothness"]["method"]
    levi = ",".join(row["levi"]) or "-"
    return f"{row['element']:<{width}}  {row['length']:>4}  {levi:<24}  {extra}".rstrip()


def cmd_enumerate(args, out) -> int:
    sys_ = _system(args)
    elems = group_elements(sys_, _cache(args))
    rows = [r for r in (_row(w, args.filter) for w in elems) if r is not None]
    if args.format == "jsonl":
        for r in rows:
            out.write(_dump(r) + "\n")
    else:
        width = max([len("element")] + [len(r["element"]) for r in rows])
        out.write(f"{'element':<{width}}  {'len':>4}  {'levi':<24}  info\n".rstrip() + "\n")
        for r in rows:
            out.write(_table_line(r, width) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = suites.SUITES if args.suite == "all" else (args.suite,)
    ok = True
    for name in names:
        res = suites.run_suite(name, args.max_rank)
        for c in res.checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {name}: {c.name}"
            if not c.passed and c.detail:
                line += f" ({c.detail})"
            elif c.detail and args.verbose:
                line += f" ({c.detail})"
            out.write(line + "\n")
        verdict = "PASS" if res.passed else "FAIL"
        out.write(f"{verdict} {name} ({sum(c.passed for c in res.checks)}/{len(res.checks)} checks)\n")
        ok &= res.passed
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bp(args, out) -> int:
    sys_ = _system(args)
    w = _element(sys_, args.element)
    if args.leaf is not None and args.parabolic is not None:
        raise UsageError("give either --leaf or -J, not both")
    try:
        if args.leaf is not None:
            J = frozenset(range(sys_.rank)) - parse_simple_subset(sys_, args.leaf)
        elif args.parabolic is not None:
            J = parse_simple_subset(sys_, args.parabolic)
        else:
            raise UsageError("bp needs --leaf or -J")
    except ConstructionError as exc:
        raise UsageError(str(exc)) from exc
    d = decompose(w, J, args.side, verify=args.check)
    report = {"element": format_element(w), **d.to_json()}
    out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


# --- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=None, help="cache directory (default: $SCHUBERT_CACHE_DIR or ~/.cache)")
    common.add_argument("--interval-cap", type=int, default=None, help="largest interval or group to enumerate")
    common.add_argument("-v", "--verbose", action="store_true")

    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument("-t", "--type", required=True, help="Cartan family, one of A B C D E F G")
    typed.add_argument("-r", "--rank", required=True, type=int)

    p = argparse.ArgumentParser(prog="schubert", description="Sphericity of Schubert varieties.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common, typed], help="full JSON report for one element")
    a.add_argument("-e", "--element", required=True, help="one-line permutation (type A) or word 's1 s2 ...'")
    a.add_argument("--check", action="store_true", help="re-derive and cross-check every certificate step")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", parents=[common, typed], help="list group elements")
    e.add_argument("--filter", choices=FILTERS, default="all")
    e.add_argument("--format", choices=FORMATS, default="jsonl")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", parents=[common], help="run a reproduction suite")
    v.add_argument("--suite", choices=suites.SUITES + ("all",), required=True)
    v.add_argument("--max-rank", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bp", parents=[common, typed], help="parabolic / BP decomposition")
    b.add_argument("-e", "--element", required=True)
    b.add_argument("--leaf", default=None, help="J is every simple reflection except this one, e.g. s3")
    b.add_argument("-J", "--parabolic", default=None, help="explicit J, e.g. 's1 s2' (empty string for J = {})")
    b.add_argument("--side", choices=(RIGHT, LEFT), default=RIGHT)
    b.add_argument("--check", action="store_true", help="evaluate all three BP conditions")
    b.set_defaults(func=cmd_bp)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    saved = config.LIMITS.interval_cap
    if args.interval_cap is not None:
        config.LIMITS.interval_cap = args.interval_cap
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"schubert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"schubert: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalInconsistencyError as exc:
        print(f"schubert: internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except SchubertError as exc:
        print(f"schubert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        config.LIMITS.interval_cap = saved
