"""N-free testing, series-parallel decomposition and roots of N-free blockers."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Union

from .blockers import blocks, is_critical
from .core import N_POSET, Poset, Subposet, bits_of, parallel_composition, series_composition
from .errors import InvalidInput, InvariantViolation
from .morphisms import find_induced_copy


@dataclass(frozen=True)
class Leaf:
    element: int


@dataclass(frozen=True)
class Series:
    left: "SPTree"
    right: "SPTree"


@dataclass(frozen=True)
class Parallel:
    left: "SPTree"
    right: "SPTree"


SPTree = Union[Leaf, Series, Parallel]


def leaves(tree: SPTree) -> list[int]:
    if isinstance(tree, Leaf):
        return [tree.element]
    return leaves(tree.left) + leaves(tree.right)


def evaluate(tree: SPTree, names=None) -> Poset:
    """Build the poset described by `tree`; element k is the k-th leaf."""
    if isinstance(tree, Leaf):
        return Poset(1, (0,), (names[tree.element],) if names else ())
    left, right = evaluate(tree.left, names), evaluate(tree.right, names)
    if isinstance(tree, Series):
        return series_composition(left, right)
    return parallel_composition(left, right)


def tree_to_json(tree: SPTree, names=None):
    if isinstance(tree, Leaf):
        return {"leaf": names[tree.element] if names else tree.element}
    kind = "series" if isinstance(tree, Series) else "parallel"
    return {kind: [tree_to_json(tree.left, names), tree_to_json(tree.right, names)]}


def _components(elems: int, adj) -> list[int]:
    comps = []
    left = elems
    while left:
        seen = left & -left
        frontier = seen
        while frontier:
            nxt = 0
            for i in bits_of(frontier):
                nxt |= adj(i)
            nxt &= elems
            frontier = nxt & ~seen
            seen |= nxt
        comps.append(seen)
        left &= ~seen
    return comps


def _fold(kind, parts):
    tree = parts[0]
    for part in parts[1:]:
        tree = kind(tree, part)
    return tree


def sp_decompose(p: Poset) -> SPTree | None:
    """Series-parallel decomposition tree of `p`, or None if `p` is not series-parallel.

    Splits into connected components (parallel), else into components of the
    incomparability graph, which must then be stacked in a chain (series).
    """
    if p.n == 0:
        raise InvalidInput("cannot decompose the empty poset")
    everything = (1 << p.n) - 1
    rel = [p.up[i] | p.down[i] for i in range(p.n)]

    def rec(elems: int) -> SPTree | None:
        if elems.bit_count() == 1:
            return Leaf(elems.bit_length() - 1)
        comps = _components(elems, lambda i: rel[i])
        if len(comps) > 1:
            kind, parts = Parallel, comps
        else:
            comps = _components(elems, lambda i: everything & ~rel[i] & ~(1 << i))
            if len(comps) == 1:
                return None
            comps.sort(key=lambda c: min(p.down[i].bit_count() for i in bits_of(c)))
            for lower, upper in zip(comps, comps[1:]):
                if any(p.up[i] & upper != upper for i in bits_of(lower)):
                    return None
            kind, parts = Series, comps
        subtrees = []
        for c in parts:
            t = rec(c)
            if t is None:
                return None
            subtrees.append(t)
        return _fold(kind, subtrees)

    return rec(everything)


def is_n_free(p) -> bool:
    """True iff `p` (a Poset or Subposet) has no induced copy of N."""
    return find_induced_copy(N_POSET, p) is None


MIN = "min"
MAX = "max"


def find_root(f: Subposet, y: int, prefer: str = MIN, check: bool = True) -> tuple[int, str]:
    """A vertex of the N-free critical Y-blocker `f` comparable to all others.

    Returns ``(vertex, "min")`` or ``(vertex, "max")``; when both a minimum and
    a maximum exist, `prefer` decides.
    """
    if prefer not in (MIN, MAX):
        raise InvalidInput(f"prefer must be {MIN!r} or {MAX!r}")
    if check:
        if not blocks(f, y):
            raise InvalidInput("find_root needs a Y-blocker")
        if not is_critical(f, y):
            raise InvalidInput("find_root needs a critical blocker")
        if not is_n_free(f):
            raise InvalidInput("find_root needs an N-free blocker")
    lo, hi = f.minimum(), f.maximum()
    options = [(lo, MIN), (hi, MAX)]
    if prefer == MAX:
        options.reverse()
    for vertex, kind in options:
        if vertex is None:
            continue
        expected = 0 if kind == MIN else y
        if vertex & y != expected:
            raise InvariantViolation("root y-part", f"{kind} root has the wrong Y-part")
        return vertex, kind
    raise InvariantViolation("root theorem", "N-free critical blocker has neither minimum nor maximum")


def canonical_form(p: Poset) -> tuple[int, ...]:
    """Isomorphism invariant: lexicographically least relabelled relation."""
    best = None
    for perm in permutations(range(p.n)):
        up = [0] * p.n
        for i in range(p.n):
            up[perm[i]] = sum(1 << perm[j] for j in bits_of(p.up[i]))
        key = tuple(up)
        if best is None or key < best:
            best = key
    return best


def all_posets(n: int) -> list[Poset]:
    """One representative of every isomorphism class of posets on n elements."""
    pairs = list(combinations(range(n), 2))
    seen = {}
    for bits in range(1 << len(pairs)):
        up = [0] * n
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                up[i] |= 1 << j
        if any(up[j] & ~up[i] for i in range(n) for j in bits_of(up[i])):
            continue
        p = Poset(n, tuple(up))
        seen.setdefault(canonical_form(p), p)
    return [seen[k] for k in sorted(seen)]


def random_poset(rng: random.Random, n: int, density: float | None = None) -> Poset:
    """Random poset: random pairs along a random linear order, then closure."""
    if density is None:
        density = rng.uniform(0.05, 0.6)
    order = list(range(n))
    rng.shuffle(order)
    up = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                up[order[a]] |= 1 << order[b]
    return Poset.from_covers(n, [(i, j) for i in range(n) for j in bits_of(up[i])])
