"""Command-line front end.

Exit codes: 0 success, 2 capacity exceeded or value unknown below the cap,
64 malformed input or violated precondition, 70 internal invariant violated.
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

from . import io, kernels
from .blockers import BOTH, STRATEGIES, criticalize, is_blocker, is_critical, lemma_report
from .core import Subposet
from .errors import CapacityError, InvalidInput, InvariantViolation
from .family import assert_family, bound_report, build_family, classify_pair, extract_antichain
from .ramsey import compute_m_P, layered_lower_bound, ramsey_bracket, ramsey_number
from .sp_nfree import MAX, MIN, find_root, is_n_free, sp_decompose, tree_to_json

EXIT_OK = 0
EXIT_UNKNOWN = 2
EXIT_INPUT = 64
EXIT_INVARIANT = 70


class Run:
    """Collects the report of one command."""

    def __init__(self, args):
        self.args = args
        self.inputs: dict[str, str] = {}
        self.results: dict = {}
        self.lemmas: dict = {}
        self.exit = EXIT_OK

    def add_input(self, path, raw: bytes):
        self.inputs[Path(path).name] = io.digest(raw)

    def report(self) -> dict:
        flags = {
            k: v for k, v in sorted(vars(self.args).items())
            if k not in ("func", "command", "out", "dot", "timing", "file", "pattern")
        }
        out = {
            "command": self.args.command,
            "inputs": self.inputs,
            "flags": flags,
            "results": self.results,
            "lemmas": self.lemmas,
        }
        return out


def _y_mask(args, ground) -> int:
    if args.y is not None and args.k is not None:
        raise InvalidInput("give either --y or --k, not both")
    if args.y is not None:
        labels = [s.strip() for s in args.y.split(",") if s.strip()]
        if not labels:
            raise InvalidInput("--y is empty")
        return ground.mask(labels)
    if args.k is not None:
        if args.k < 1:
            raise InvalidInput("--k must be at least 1")
        return ground.last(args.k)
    raise InvalidInput("one of --y or --k is required")


def _load_family(run: Run) -> tuple[Subposet, int]:
    f, raw = io.load_subposet(run.args.file)
    run.add_input(run.args.file, raw)
    return f, _y_mask(run.args, f.ground)


def _write_dot(args, text: str):
    if args.dot:
        Path(args.dot).write_text(text)


def cmd_verify_blocker(run: Run):
    f, y = _load_family(run)
    cert = is_blocker(f, y, run.args.strategy)
    run.results["certificate"] = cert.to_json(f.ground)


def cmd_criticalize(run: Run):
    f, y = _load_family(run)
    core = criticalize(f, y)
    run.results["critical"] = io.subposet_to_json(core)
    run.results["removed"] = [f.ground.labels_of(v) for v in f.vertices if v not in core]
    run.lemmas["critical_blocker"] = lemma_report(core, y)
    _write_dot(run.args, io.subposet_to_dot(core, "critical"))


def cmd_decompose(run: Run):
    data, raw = io.read_json(run.args.file)
    run.add_input(run.args.file, raw)
    if isinstance(data, dict) and "ground" in data:
        p = io.subposet_from_json(data, str(run.args.file)).to_poset()
    else:
        p = io.poset_from_json(data, str(run.args.file))
    if p.n == 0:
        raise InvalidInput("cannot decompose the empty poset")
    tree = sp_decompose(p)
    n_free = is_n_free(p)
    run.results["n_free"] = n_free
    run.results["series_parallel"] = tree is not None
    run.results["tree"] = tree_to_json(tree, p.names) if tree is not None else None
    run.lemmas["n_free_iff_series_parallel"] = n_free == (tree is not None)
    if not run.lemmas["n_free_iff_series_parallel"]:
        raise InvariantViolation("N-free iff series-parallel", "decomposition disagrees with N search")
    _write_dot(run.args, io.poset_to_dot(p))


def _family_results(run: Run, f: Subposet, y: int, anti_only=False):
    fam = build_family(f, y, run.args.prefer)
    checks = assert_family(fam)
    anti = extract_antichain(fam)
    g = f.ground
    if not anti_only:
        run.results["family"] = fam.to_json()
        top = fam.top()
        run.results["pair_classes"] = [
            {"s1": [g.labels[a] for a in s1], "s2": [g.labels[a] for a in s2], **classify_pair(s1, s2, fam)}
            for i, s1 in enumerate(top) for s2 in top[i + 1:]
        ]
    run.results["antichain"] = {
        "sequences": [[g.labels[a] for a in s] for s in anti.sequences],
        "vertices": [g.labels_of(v) for v in anti.vertices],
        "type_class_size": anti.type_class_size,
    }
    run.results["bound"] = bound_report(fam, anti)
    run.lemmas["family"] = checks
    return fam, anti


def _require_nfree_critical(f, y):
    if not is_critical(f, y):
        raise InvalidInput("input is not a critical Y-blocker (run criticalize first)")
    if not is_n_free(f):
        raise InvalidInput("input contains an induced N")


def cmd_construct_family(run: Run):
    f, y = _load_family(run)
    _require_nfree_critical(f, y)
    fam, _ = _family_results(run, f, y)
    roots = {e.z_s for e in fam.entries.values()}
    _write_dot(run.args, io.subposet_to_dot(f, "family", marked=roots))


def cmd_extract_antichain(run: Run):
    f, y = _load_family(run)
    _require_nfree_critical(f, y)
    _, anti = _family_results(run, f, y, anti_only=True)
    _write_dot(run.args, io.subposet_to_dot(f, "antichain", marked=anti.vertices))


def cmd_pipeline(run: Run):
    f, y = _load_family(run)
    cert = is_blocker(f, y, run.args.strategy)
    run.results["certificate"] = cert.to_json(f.ground)
    if not cert.is_blocker:
        run.results["stopped"] = "input is not a Y-blocker"
        return
    core = criticalize(f, y)
    run.results["critical"] = io.subposet_to_json(core)
    run.lemmas["critical_blocker"] = lemma_report(core, y)
    if not all(run.lemmas["critical_blocker"].values()):
        bad = [k for k, v in run.lemmas["critical_blocker"].items() if not v][0]
        raise InvariantViolation(bad, "criticalized core fails a structural property")
    p = core.to_poset()
    tree = sp_decompose(p)
    n_free = is_n_free(core)
    if n_free != (tree is not None):
        raise InvariantViolation("N-free iff series-parallel", "decomposition disagrees with N search")
    names = [core.ground.format(v) for v in core.vertices]
    run.results["n_free"] = n_free
    run.results["tree"] = tree_to_json(tree, names) if tree is not None else None
    if not n_free:
        run.results["stopped"] = "critical core contains an induced N"
        _write_dot(run.args, io.subposet_to_dot(core, "critical"))
        return
    root, kind = find_root(core, y, run.args.prefer)
    run.results["root"] = {"vertex": core.ground.labels_of(root), "type": kind}
    fam, anti = _family_results(run, core, y)
    _write_dot(run.args, io.subposet_to_dot(core, "critical", marked=anti.vertices))


def _load_pattern(run: Run):
    p, raw = io.load_poset(run.args.pattern)
    run.add_input(run.args.pattern, raw)
    if p.n == 0:
        raise InvalidInput("pattern must be non-empty")
    return p


def _stats(run: Run, stats: dict) -> dict:
    if run.args.timing:
        return stats
    return {k: {kk: vv for kk, vv in v.items() if kk != "wall_time"} for k, v in stats.items()}


def cmd_ramsey(run: Run):
    p = _load_pattern(run)
    n = run.args.n
    res = ramsey_number(p, n, run.args.nmax, run.args.symmetry, run.args.jobs)
    lo, hi = ramsey_bracket(p, n)
    run.results["value"] = res.value if res.known else f"unknown above {res.n_max}"
    run.results["bracket"] = [lo, hi]
    run.results["witnesses"] = {str(N): io.coloring_to_json(c) for N, c in res.witnesses.items()}
    run.results["stats"] = {str(N): s for N, s in _stats(run, res.stats).items()}
    run.results["layered_lower_bound"] = layered_lower_bound(p, n)
    if res.known:
        run.lemmas["bracket"] = lo <= res.value <= hi
    else:
        run.exit = EXIT_UNKNOWN


def cmd_mpn(run: Run):
    p = _load_pattern(run)
    res = compute_m_P(p, run.args.n, run.args.nmax)
    run.results["value"] = res.value if res.value is not None else f"unknown above {res.n_max}"
    run.results["convention"] = res.convention
    run.results["witnesses"] = {str(N): io.subposet_to_json(f) for N, f in res.witnesses.items()}
    run.results["stats"] = {str(N): s for N, s in res.stats.items()}
    if res.value is None:
        run.exit = EXIT_UNKNOWN


def cmd_selftest(run: Run):
    from .selftest import run_all

    out = run_all(random.Random(run.args.seed), quick=not run.args.full)
    run.results.update(out)
    run.lemmas = {k: v["ok"] for k, v in out.items()}
    bad = [k for k, ok in run.lemmas.items() if not ok]
    if bad:
        raise InvariantViolation(bad[0], "self-test suite failed")


def _add_y(sp):
    sp.add_argument("file", help="JSON subposet {ground, vertices}")
    sp.add_argument("--y", help="comma-separated labels of Y")
    sp.add_argument("--k", type=int, help="take Y as the last K ground elements")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="posetramsey", description="Blockers and poset Ramsey numbers in Boolean lattices.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--dot", help="write a Graphviz diagram here")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--timing", action="store_true", help="include wall-clock times")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("verify-blocker", cmd_verify_blocker, "decide whether a family is a Y-blocker")
    _add_y(sp)
    sp.add_argument("--strategy", choices=STRATEGIES, default=BOTH)
    sp = add("criticalize", cmd_criticalize, "shrink a blocker to a critical one")
    _add_y(sp)
    sp = add("decompose", cmd_decompose, "series-parallel decomposition and N-freeness")
    sp.add_argument("file", help="JSON poset {elements, covers} or subposet")
    for name, func in (("construct-family", cmd_construct_family), ("extract-antichain", cmd_extract_antichain)):
        sp = add(name, func, f"{name.replace('-', ' ')} from an N-free critical blocker")
        _add_y(sp)
        sp.add_argument("--prefer", choices=(MIN, MAX), default=MIN)
    sp = add("pipeline", cmd_pipeline, "verify, criticalize, decompose, build family, extract antichain")
    _add_y(sp)
    sp.add_argument("--prefer", choices=(MIN, MAX), default=MIN)
    sp.add_argument("--strategy", choices=STRATEGIES, default=BOTH)
    for name, func in (("ramsey", cmd_ramsey), ("mpn", cmd_mpn)):
        sp = add(name, func, "exact R(P, Q_n)" if name == "ramsey" else "extremal m_P(n)")
        sp.add_argument("--pattern", required=True, help="JSON poset {elements, covers}")
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--nmax", type=int, default=4)
        if name == "ramsey":
            sp.add_argument("--symmetry", action="store_true", help="prune colorings by ground permutations")
    sp = add("selftest", cmd_selftest, "run the small exhaustive invariant suites")
    sp.add_argument("--full", action="store_true", help="larger instances")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    run = Run(args)
    t0 = time.perf_counter()
    try:
        args.func(run)
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except InvalidInput as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rep = run.report()
    if args.timing:
        rep["timing"] = {"wall_time": time.perf_counter() - t0, "backend": kernels.BACKEND}
    text = io.dumps(rep)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return run.exit


if __name__ == "__main__":
    sys.exit(main())
