"""Command-line front end: compute, ortho, diagram, verify, report.

Exit codes: 0 success, 1 verification failure, 2 usage error.

Permutations are written as a digit string for rank at most 9 (31542)
and comma-separated otherwise (10,3,1,...).  The verify subcommand
streams one JSON record per permutation per suite, followed by a summary
record per suite; its stdout is byte-identical across runs and worker
counts.  Results can be cached in an append-only JSON-lines file given
by --cache or the ORTHODONTIA_CACHE environment variable; cached records
are trusted only when their version stamp matches.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import multiprocessing
import os
import sys
from typing import Sequence, TextIO

from orthodontia import __version__
from orthodontia.analysis import (
    analysis_record,
    check_conjecture,
    check_divisibility,
    degree_report,
)
from orthodontia.diagram import orthodontia, orthodontia_trace, rothe_diagram, upper_closure
from orthodontia.grothendieck import (
    RankOverflowError,
    grothendieck_recursive,
    is_sorted_permutation,
    monk_terms,
    orthodontia_grothendieck,
    orthodontia_schubert,
    os_predecessor,
    primary_column_data,
    schubert_recursive,
    sigma,
    sort_permutation,
    warm_caches,
)
from orthodontia.permutation import Permutation, from_one_line, symmetric_group
from orthodontia.polynomial import Polynomial

SUITES = ("main", "divisibility", "degree", "sorted", "monk", "conjecture")
GATING_SUITES = frozenset(SUITES) - {"conjecture"}
DEFAULT_MAX_RANK = 7
CACHE_ENV = "ORTHODONTIA_CACHE"


def parse_permutation(text: str) -> Permutation:
    """Digit string for rank <= 9, comma-separated for larger ranks."""
    text = text.strip()
    try:
        if "," in text:
            return from_one_line([int(v) for v in text.split(",")])
        return from_one_line([int(ch) for ch in text])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# verify suite checks (module level so worker processes can pickle them)

def _check_main(w: Permutation) -> dict:
    D = rothe_diagram(w)
    groth_match = grothendieck_recursive(w) == orthodontia_grothendieck(D)
    schubert = schubert_recursive(w)
    schubert_match = schubert == orthodontia_schubert(D)
    lowest_match = grothendieck_recursive(w).lowest_degree_component() == schubert
    return {
        "groth_match": groth_match,
        "schubert_match": schubert_match,
        "lowest_degree_match": lowest_match,
        "ok": groth_match and schubert_match and lowest_match,
    }


def _check_divisibility(w: Permutation) -> dict:
    ok, witness = check_divisibility(w)
    return {"ok": ok, "witness": None if witness is None else list(witness)}


def _check_degree(w: Permutation) -> dict:
    try:
        report = degree_report(w)
    except ValueError:
        return {"ok": False}
    return {
        "ok": True,
        "deg_groth": report.deg_groth,
        "bound_prop": report.bound_prop,
        "bound_cor": report.bound_cor,
        "tight_prop": report.deg_groth == report.bound_prop,
        "tight_cor": report.deg_groth == report.bound_cor,
    }


def _check_sorted(w: Permutation) -> dict:
    seq_w = orthodontia(rothe_diagram(w))
    w_sorted = sort_permutation(w)
    seq_sorted = orthodontia(rothe_diagram(w_sorted))
    data = primary_column_data(w)
    # the sequences of w and sort(w) agree except for the interval counts,
    # which shift by the interval counts of the pattern sigma(w)
    pattern_counts = orthodontia(rothe_diagram(sigma(w))).interval_multiplicities
    expected_k = list(seq_sorted.interval_multiplicities)
    if data.prefix > 0:
        expected_k[data.prefix - 1] -= sum(pattern_counts)
    for j in range(data.prefix + 1, data.tooth + 1):
        expected_k[j - 1] += pattern_counts[j - data.prefix - 1]
    unsort_ok = (
        seq_w.teeth == seq_sorted.teeth
        and seq_w.tooth_multiplicities == seq_sorted.tooth_multiplicities
        and list(seq_w.interval_multiplicities) == expected_k
    )

    parts_ok: bool | None = None
    if is_sorted_permutation(w) and not w.is_identity():
        gap = data.gap
        k = seq_w.interval_multiplicities
        m = seq_w.tooth_multiplicities
        part_i = all(seq_w.teeth[t] == data.tooth - t for t in range(gap))
        part_ii = data.prefix == 0 or k[data.prefix - 1] >= gap
        part_iii = all(k[j - 1] == 0 for j in range(data.prefix + 1, data.tooth + 1))
        part_iv = all(m[t] == 0 for t in range(gap - 1))
        up = os_predecessor(w)
        seq_up = orthodontia(rothe_diagram(up))
        expected_up_k = list(k)
        if data.prefix > 0:
            expected_up_k[data.prefix - 1] -= gap
        expected_up_k[data.prefix] = gap + m[gap - 1]
        part_v = (
            seq_up.teeth == seq_w.teeth[gap:]
            and seq_up.tooth_multiplicities == m[gap:]
            and list(seq_up.interval_multiplicities) == expected_up_k
        )
        parts_ok = part_i and part_ii and part_iii and part_iv and part_v

    ok = unsort_ok and (parts_ok is None or parts_ok)
    return {
        "sorted": is_sorted_permutation(w),
        "parts_ok": parts_ok,
        "unsort_ok": unsort_ok,
        "ok": ok,
    }


def _check_monk(w: Permutation) -> dict:
    n = w.n
    checked = 0
    skipped = 0
    ok = True
    base = grothendieck_recursive(w)
    for j in range(1, n + 1):
        try:
            terms = monk_terms(j, w)
        except RankOverflowError:
            skipped += 1
            continue
        checked += 1
        xj = Polynomial.variable(j, n)
        total = Polynomial.zero(n)
        for term in terms:
            total = total + term.sign * grothendieck_recursive(term.target)
        if total != xj * base:
            ok = False
    return {"ok": ok, "checked": checked, "skipped": skipped}


def _check_conjecture(w: Permutation) -> dict:
    ok, witness = check_conjecture(w)
    return {"ok": ok, "witness": None if witness is None else list(witness)}


_SUITE_CHECKS = {
    "main": _check_main,
    "divisibility": _check_divisibility,
    "degree": _check_degree,
    "sorted": _check_sorted,
    "monk": _check_monk,
    "conjecture": _check_conjecture,
}


def _verify_task(args: tuple[tuple[int, ...], tuple[str, ...]]) -> tuple[tuple[int, ...], dict]:
    word, suites = args
    w = Permutation(word)
    return word, {suite: _SUITE_CHECKS[suite](w) for suite in suites}


# ---------------------------------------------------------------------------
# result cache

def _cache_key(n: int, suite: str, word: tuple[int, ...]) -> str:
    return f"{n}|{suite}|{','.join(map(str, word))}"


def _load_cache(path: str) -> dict[str, dict]:
    cache: dict[str, dict] = {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                try:
                    entry = json.loads(line)
                except json.JSONDecodeError:
                    continue
                if entry.get("version") != __version__:
                    continue
                cache[entry["key"]] = entry["record"]
    except OSError:
        pass
    return cache


def _append_cache(path: str, entries: list[tuple[str, dict]]) -> None:
    with open(path, "a", encoding="utf-8") as handle:
        for key, record in entries:
            handle.write(_dump({"version": __version__, "key": key, "record": record}) + "\n")


# ---------------------------------------------------------------------------
# subcommands

def cmd_compute(
    w: Permutation,
    kind: str,
    method: str,
    fmt: str,
    out: TextIO,
    err: TextIO,
) -> int:
    recursive = {"schubert": schubert_recursive, "grothendieck": grothendieck_recursive}[kind](w)
    formula = {"schubert": orthodontia_schubert, "grothendieck": orthodontia_grothendieck}[kind](
        rothe_diagram(w)
    )
    if recursive != formula:
        err.write(
            f"ERROR: methods disagree for {w} ({kind})\n"
            f"  recursive:   {recursive}\n"
            f"  orthodontia: {formula}\n"
        )
        return 1
    poly = recursive if method == "recursive" else formula
    if fmt == "json":
        out.write(
            _dump({"w": list(w.word), "kind": kind, "method": method, "polynomial": poly.to_json()})
            + "\n"
        )
    else:
        out.write(str(poly) + "\n")
    return 0


def cmd_ortho(w: Permutation, fmt: str, show_trace: bool, out: TextIO) -> int:
    seq, trace = orthodontia_trace(rothe_diagram(w))
    if fmt == "json":
        out.write(
            _dump(
                {
                    "w": list(w.word),
                    "teeth": list(seq.teeth),
                    "interval_multiplicities": list(seq.interval_multiplicities),
                    "tooth_multiplicities": list(seq.tooth_multiplicities),
                }
            )
            + "\n"
        )
        return 0
    out.write(f"teeth:                    {list(seq.teeth)}\n")
    out.write(f"interval multiplicities:  {list(seq.interval_multiplicities)}\n")
    out.write(f"tooth multiplicities:     {list(seq.tooth_multiplicities)}\n")
    if show_trace:
        for label, snapshot in trace:
            out.write(f"\n[{label}]\n{snapshot.render_ascii()}\n")
    return 0


def cmd_diagram(w: Permutation, closure: bool, fmt: str, out: TextIO) -> int:
    D = rothe_diagram(w)
    if closure:
        D = upper_closure(D)
    if fmt == "json":
        out.write(_dump(D.to_json()) + "\n")
    else:
        out.write(D.render_ascii() + "\n")
    return 0


def cmd_report(n: int, out: TextIO) -> int:
    for w in symmetric_group(n):
        out.write(_dump(analysis_record(w)) + "\n")
    return 0


def cmd_verify(
    n: int,
    suites: Sequence[str],
    jobs: int,
    cache_path: str | None,
    out: TextIO,
    err: TextIO,
    max_rank: int = DEFAULT_MAX_RANK,
) -> int:
    if n < 1 or n > max_rank:
        err.write(f"rank {n} outside 1..{max_rank}\n")
        return 2
    bad = [s for s in suites if s not in SUITES]
    if bad:
        err.write(f"unknown suites: {', '.join(bad)}\n")
        return 2
    if n >= 7:
        err.write(f"warning: rank {n} sweeps {n}! permutations; expect a long run\n")

    selected = [s for s in SUITES if s in set(suites)]
    words = [w.word for w in symmetric_group(n)]

    cache: dict[str, dict] = {}
    if cache_path:
        cache = _load_cache(cache_path)

    results: dict[tuple[int, ...], dict[str, dict]] = {word: {} for word in words}
    tasks: list[tuple[tuple[int, ...], tuple[str, ...]]] = []
    for word in words:
        missing = []
        for suite in selected:
            record = cache.get(_cache_key(n, suite, word))
            if record is not None:
                results[word][suite] = record
            else:
                missing.append(suite)
        if missing:
            tasks.append((word, tuple(missing)))

    if tasks:
        heavy = set(selected) - {"sorted"}
        if heavy:
            warm_caches(n)
        if jobs > 1:
            context = multiprocessing.get_context("fork")
            with concurrent.futures.ProcessPoolExecutor(jobs, mp_context=context) as pool:
                chunk = max(1, len(tasks) // (jobs * 4))
                for word, records in pool.map(_verify_task, tasks, chunksize=chunk):
                    results[word].update(records)
        else:
            for task in tasks:
                word, records = _verify_task(task)
                results[word].update(records)

    fresh: list[tuple[str, dict]] = []
    failures = 0
    for suite in selected:
        total = 0
        failed = 0
        extra: dict[str, int] = {}
        for word in words:
            record = results[word][suite]
            total += 1
            if not record.get("ok", False):
                failed += 1
            if suite == "degree" and record.get("ok"):
                extra["tight_prop_count"] = extra.get("tight_prop_count", 0) + int(
                    record["tight_prop"]
                )
                extra["tight_cor_count"] = extra.get("tight_cor_count", 0) + int(
                    record["tight_cor"]
                )
            if suite == "monk":
                extra["checked_total"] = extra.get("checked_total", 0) + record["checked"]
                extra["skipped_total"] = extra.get("skipped_total", 0) + record["skipped"]
            key = _cache_key(n, suite, word)
            if cache_path and key not in cache:
                fresh.append((key, record))
            out.write(_dump({"suite": suite, "n": n, "w": list(word), **record}) + "\n")
        summary = {"suite": suite, "n": n, "summary": True, "total": total, "failed": failed}
        summary.update(extra)
        out.write(_dump(summary) + "\n")
        if suite == "conjecture" and failed:
            err.write(
                f"CONJECTURE COUNTEREXAMPLE(S): {failed} permutation(s) in S_{n}; "
                "see the conjecture records above\n"
            )
        elif suite in GATING_SUITES:
            failures += failed

    if cache_path and fresh:
        try:
            _append_cache(cache_path, fresh)
        except OSError as exc:
            err.write(f"cache write failed: {exc}\n")
            return 2
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# argument parsing

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthodontia",
        description="Exact Schubert and Grothendieck polynomial computations.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute a polynomial for a permutation")
    compute.add_argument("permutation", type=parse_permutation)
    compute.add_argument(
        "--kind", choices=("schubert", "grothendieck"), default="grothendieck"
    )
    compute.add_argument("--method", choices=("recursive", "orthodontia"), default="recursive")
    compute.add_argument("--format", choices=("text", "json"), default="text")

    ortho = sub.add_parser("ortho", help="orthodontic sequence of a permutation")
    ortho.add_argument("permutation", type=parse_permutation)
    ortho.add_argument("--format", choices=("text", "json"), default="text")
    ortho.add_argument("--trace", action="store_true", help="print intermediate diagrams")

    diagram = sub.add_parser("diagram", help="Rothe diagram of a permutation")
    diagram.add_argument("permutation", type=parse_permutation)
    diagram.add_argument("--closure", action="store_true", help="show the upper closure")
    diagram.add_argument("--format", choices=("ascii", "json"), default="ascii")

    verify = sub.add_parser("verify", help="run verification suites over all of S_n")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument(
        "--suite",
        action="append",
        help="suite name or comma list (default: all); one of "+ ", ".join(SUITES),
    )
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument(
        "--cache",
        default=os.environ.get(CACHE_ENV),
        help=f"JSON-lines result cache (default: ${CACHE_ENV})",
    )
    verify.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)

    report = sub.add_parser("report", help="degree/support report for all of S_n")
    report.add_argument("--n", type=int, required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out, err = sys.stdout, sys.stderr

    if args.command == "compute":
        return cmd_compute(args.permutation, args.kind, args.method, args.format, out, err)
    if args.command == "ortho":
        return cmd_ortho(args.permutation, args.format, args.trace, out)
    if args.command == "diagram":
        return cmd_diagram(args.permutation, args.closure, args.format, out)
    if args.command == "report":
        if args.n < 1 or args.n > DEFAULT_MAX_RANK:
            err.write(f"rank {args.n} outside 1..{DEFAULT_MAX_RANK}\n")
            return 2
        return cmd_report(args.n, out)
    if args.command == "verify":
        suites: list[str] = []
        for item in args.suite or [",".join(SUITES)]:
            suites.extend(s.strip() for s in item.split(",") if s.strip())
        if args.jobs < 1:
            err.write("--jobs must be at least 1\n")
            return 2
        return cmd_verify(args.n, suites, args.jobs, args.cache, out, err, args.max_rank)
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
