"""Exact small Ramsey numbers R(P, Q_n), layered colorings and m_P(n)."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

from . import kernels
from .blockers import blocks, coloring_has_red_qn
from .core import Coloring, GroundSet, Poset, Subposet, canonical_sort, height, two_dimension
from .errors import CapacityError, InvalidInput, InvariantViolation
from .morphisms import _reordered, _search_order, find_induced_copy

MAX_RAMSEY_N = 4
MAX_M_N = 4


def _check_cap(N: int, cap: int, what: str):
    if N > cap:
        raise CapacityError(f"{what} at N={N} exceeds the cap N <= {cap}", bound=cap)


def _pattern_tables(p: Poset):
    up, down = _reordered(p, _search_order(p))
    return up, down


def _perm_maps(N: int) -> list[list[int]]:
    maps = []
    for perm in permutations(range(N)):
        if list(perm) == list(range(N)):
            continue
        vm = []
        for v in range(1 << N):
            w = 0
            for i in range(N):
                if v >> i & 1:
                    w |= 1 << perm[i]
            vm.append(w)
        maps.append(vm)
    return maps


def _scan_chunk(args):
    return kernels.ramsey_scan(*args)


def validate_witness(p: Poset, n: int, coloring: Coloring) -> dict:
    """Check a coloring for a blue copy of `p` and a red copy of Q_n."""
    red = coloring_has_red_qn(coloring, n)
    blue_copy = find_induced_copy(p, coloring.blue_subposet())
    return {
        "red_qn": red.has_red_copy,
        "blue_p": blue_copy is not None,
        "avoids_both": not red.has_red_copy and blue_copy is None,
    }


@dataclass
class RamseyDecision:
    holds: bool
    N: int
    witness: Coloring | None
    stats: dict = field(default_factory=dict)


def ramsey_decision(p: Poset, n: int, N: int, symmetry: bool = False, jobs: int = 1) -> RamseyDecision:
    """Does every coloring of Q_N contain a blue `p` or a red Q_n?

    On failure the witness is the coloring with the smallest blue bitset,
    which does not depend on `symmetry` or `jobs`.
    """
    if p.n == 0:
        raise InvalidInput("pattern must be non-empty")
    if not 0 <= n <= N:
        raise InvalidInput(f"need 0 <= n <= N, got n={n}, N={N}")
    _check_cap(N, MAX_RAMSEY_N, "coloring search")
    up, down = _pattern_tables(p)
    total = 1 << (1 << N)
    maps = _perm_maps(N) if symmetry else []
    jobs = max(1, min(jobs, total))
    bounds = [total * i // jobs for i in range(jobs + 1)]
    tasks = [(N, up, down, n, bounds[i], bounds[i + 1], maps) for i in range(jobs)]
    t0 = time.perf_counter()
    if jobs == 1:
        results = [_scan_chunk(tasks[0])]
    else:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_scan_chunk, tasks))
    found = [r[0] for r in results if r[0] >= 0]
    stats = {
        "colorings": total,
        "examined": sum(r[1] for r in results),
        "symmetry_skipped": sum(r[2] for r in results),
        "wall_time": time.perf_counter() - t0,
    }
    if not found:
        return RamseyDecision(True, N, None, stats)
    ground = GroundSet.of_size(N)
    witness = Coloring.from_blue(ground, min(found))
    check = validate_witness(p, n, witness)
    if not check["avoids_both"]:
        raise InvariantViolation("witness validity", f"counterexample coloring at N={N} fails re-validation")
    return RamseyDecision(False, N, witness, stats)


def ramsey_bracket(p: Poset, n: int) -> tuple[int, int]:
    h = height(p)
    d = two_dimension(p, p.n)
    return n + h - 1, h * n + d


@dataclass
class RamseyResult:
    pattern: Poset
    n: int
    value: int | None
    n_max: int
    witnesses: dict[int, Coloring] = field(default_factory=dict)
    stats: dict = field(default_factory=dict)

    @property
    def known(self) -> bool:
        return self.value is not None


def ramsey_number(p: Poset, n: int, n_max: int, symmetry: bool = False, jobs: int = 1) -> RamseyResult:
    """Scan N = n, n+1, ... up to `n_max`; the value is None if it lies above `n_max`."""
    _check_cap(n_max, MAX_RAMSEY_N, "Ramsey scan")
    lo, hi = ramsey_bracket(p, n)
    res = RamseyResult(p, n, None, n_max)
    for N in range(n, n_max + 1):
        d = ramsey_decision(p, n, N, symmetry, jobs)
        res.stats[N] = d.stats
        if d.holds:
            res.value = N
            break
        res.witnesses[N] = d.witness
    if res.value is None:
        if hi <= n_max:
            raise InvariantViolation("ramsey bracket", f"no value up to {n_max} but upper bound is {hi}")
        return res
    if not lo <= res.value <= hi:
        raise InvariantViolation("ramsey bracket", f"R={res.value} outside [{lo}, {hi}]")
    if res.value + 1 <= MAX_RAMSEY_N and not ramsey_decision(p, n, res.value + 1, symmetry, 1).holds:
        raise InvariantViolation("ramsey monotonicity", f"holds at N={res.value} but not at N={res.value + 1}")
    return res


def layered_coloring(N: int, red_layer_count: int) -> Coloring:
    """Red on the `red_layer_count` lowest layers of Q_N, blue above."""
    if not 0 <= red_layer_count <= N + 1:
        raise InvalidInput(f"red_layer_count must lie in [0, {N + 1}]")
    ground = GroundSet.of_size(N)
    red = 0
    for v in range(1 << N):
        if v.bit_count() < red_layer_count:
            red |= 1 << v
    return Coloring(ground, red)


def layered_lower_bound(p: Poset, n: int) -> dict:
    """Validate n red layers under h(P) - 1 blue layers.

    The layers fill Q_D with D = n + h(P) - 2; a valid coloring certifies
    R(P, Q_n) > D.
    """
    h = height(p)
    D = n + h - 2
    if D < 0:
        return {"dimension": D, "valid": False, "certifies": None}
    _check_cap(D, 10, "layered coloring validation")
    col = layered_coloring(D, n)
    check = validate_witness(p, n, col)
    return {
        "dimension": D,
        "red_layers": n,
        "blue_layers": h - 1,
        **check,
        "valid": check["avoids_both"],
        "certifies": f"R > {D}" if check["avoids_both"] else None,
    }


@dataclass
class MResult:
    pattern: Poset
    n: int
    value: int | None
    n_max: int
    witnesses: dict[int, Subposet] = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    convention: str = "scan starts at N = n + 1 since Y must be non-empty"


def _find_p_free_blocker(p: Poset, ground: GroundSet, y: int, stats: dict) -> Subposet | None:
    """DFS over P-free families in canonical vertex order.

    Blocking is preserved under adding vertices, so only maximal P-free
    families are tested.  Leaves are also filtered by the size bound and the
    requirement that every Y-part appears.
    """
    order = canonical_sort(range(1 << ground.size))
    need = 1 << y.bit_count()
    chosen: list[int] = []
    skipped: list[int] = []

    def free_with(extra: int) -> bool:
        fam = Subposet(ground, tuple(canonical_sort(chosen + [extra])))
        return find_induced_copy(p, fam) is None

    def rec(i: int):
        stats["nodes"] += 1
        if i == len(order):
            if len(chosen) < need or len({v & y for v in chosen}) < need:
                stats["pruned"] += 1
                return None
            if any(free_with(v) for v in skipped):
                stats["pruned"] += 1
                return None
            fam = Subposet(ground, tuple(chosen))
            stats["blocker_tests"] += 1
            return fam if blocks(fam, y) else None
        v = order[i]
        if free_with(v):
            chosen.append(v)
            hit = rec(i + 1)
            chosen.pop()
            if hit is not None:
                return hit
        else:
            stats["pruned"] += 1
        skipped.append(v)
        hit = rec(i + 1)
        skipped.pop()
        return hit

    return rec(0)


def compute_m_P(p: Poset, n: int, n_max: int) -> MResult:
    """Least N with no P-free Y-blocker in Q([N]) for |Y| = N - n; None above `n_max`.

    Y is fixed to the last N - n ground elements: permuting the ground set
    maps Y-blockers to Y'-blockers and preserves P-freeness, and it acts
    transitively on subsets of equal size.
    """
    if p.n == 0:
        raise InvalidInput("pattern must be non-empty")
    if n < 0:
        raise InvalidInput("n must be non-negative")
    _check_cap(n_max, MAX_M_N, "P-free blocker search")
    res = MResult(p, n, None, n_max)
    for N in range(n + 1, n_max + 1):
        ground = GroundSet.of_size(N)
        y = ground.last(N - n)
        stats = {"nodes": 0, "pruned": 0, "blocker_tests": 0}
        fam = _find_p_free_blocker(p, ground, y, stats)
        res.stats[N] = stats
        if fam is None:
            res.value = N
            break
        if not blocks(fam, y) or find_induced_copy(p, fam) is not None:
            raise InvariantViolation("witness validity", f"stored P-free blocker at N={N} fails re-validation")
        res.witnesses[N] = fam
    return res
