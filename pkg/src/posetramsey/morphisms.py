"""Embeddings and homomorphisms between posets and Boolean-lattice subposets."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from . import kernels
from .core import Poset, Subposet, bits_of, canonical_sort, is_subset, submasks
from .errors import CapacityError, InvalidInput, InvariantViolation

# enumerate_x_good_copies refuses above 2^MAX_COPY_LOG2 candidate maps
MAX_COPY_LOG2 = 24


@dataclass(frozen=True)
class SetMap:
    """A map from vertices of a family to subsets of ``y``."""

    domain: tuple[int, ...]
    images: tuple[int, ...]
    y: int

    def __post_init__(self):
        if len(self.domain) != len(self.images):
            raise InvalidInput("SetMap domain and images differ in length")
        for v in self.images:
            if v & ~self.y:
                raise InvalidInput(f"image {v:#x} is not a subset of Y")

    def __getitem__(self, vertex: int) -> int:
        return self.images[self.domain.index(vertex)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.domain, self.images))

    def is_weak_homomorphism(self) -> bool:
        pairs = list(zip(self.domain, self.images))
        return all(
            is_subset(ia, ib)
            for a, ia in pairs
            for b, ib in pairs
            if is_subset(a, b)
        )

    def is_avoiding(self) -> bool:
        return all(img != v & self.y for v, img in zip(self.domain, self.images))

    def to_json(self, ground) -> list:
        return [[ground.labels_of(v), ground.labels_of(img)] for v, img in zip(self.domain, self.images)]


@dataclass(frozen=True)
class Embedding:
    """Element-wise map of a domain into vertex masks.

    For pattern embeddings `domain` holds pattern element indices; for X-good
    embeddings it holds the subsets of X in canonical order.
    """

    domain: tuple[int, ...]
    images: tuple[int, ...]

    def __getitem__(self, key):
        return self.images[self.domain.index(key)]

    def image_set(self) -> set[int]:
        return set(self.images)

    def as_pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.domain, self.images))

    def to_json(self, ground=None, domain_names=None) -> list:
        out = []
        for a, img in zip(self.domain, self.images):
            if domain_names is not None:
                key = domain_names[a]
            elif ground is not None:
                key = ground.labels_of(a)
            else:
                key = a
            out.append([key, ground.labels_of(img) if ground is not None else img])
        return out


def is_strong_embedding(pattern: Poset, emb: Embedding) -> bool:
    imgs = emb.images
    if len(set(imgs)) != len(imgs):
        return False
    for a in range(pattern.n):
        for b in range(pattern.n):
            if pattern.leq(a, b) != is_subset(imgs[a], imgs[b]):
                return False
    return True


def is_x_good_embedding(emb: Embedding, x: int) -> bool:
    """Domain is Q(x) and the embedding is strong with image(X') & x == X'."""
    if sorted(emb.domain) != sorted(submasks(x)):
        return False
    if len(set(emb.images)) != len(emb.images):
        return False
    pairs = emb.as_pairs()
    for a, ia in pairs:
        if ia & x != a:
            return False
        for b, ib in pairs:
            if is_subset(a, b) != is_subset(ia, ib):
                return False
    return True


def _search_order(p: Poset) -> list[int]:
    """Greedy order keeping each new element related to earlier ones."""
    rel = [p.up[i] | p.down[i] for i in range(p.n)]
    order: list[int] = []
    chosen = 0
    left = set(range(p.n))
    while left:
        best = max(
            left,
            key=lambda i: ((rel[i] & chosen).bit_count(), rel[i].bit_count(), -i),
        )
        order.append(best)
        chosen |= 1 << best
        left.remove(best)
    return order


def _reordered(p: Poset, order: Sequence[int]) -> tuple[list[int], list[int]]:
    pos = {e: k for k, e in enumerate(order)}
    up = [sum(1 << pos[j] for j in bits_of(p.up[e])) for e in order]
    down = [sum(1 << pos[j] for j in bits_of(p.down[e])) for e in order]
    return up, down


def find_induced_copy(pattern: Poset, host, allowed: int | None = None) -> Embedding | None:
    """An induced copy of `pattern` in `host` (a Subposet or a Poset), or None.

    For a Subposet host the embedding images are vertex masks; for a Poset host
    they are element indices.  `allowed` optionally restricts usable host
    positions (bitset over host indices).
    """
    if isinstance(host, Subposet):
        h_up, h_down, labels = host.up, host.down, host.vertices
    elif isinstance(host, Poset):
        h_up, h_down, labels = host.up, host.down, tuple(range(host.n))
    else:
        raise InvalidInput(f"unsupported host type {type(host).__name__}")
    if allowed is None:
        allowed = (1 << len(labels)) - 1
    if pattern.n > len(labels):
        return None
    order = _search_order(pattern)
    pu, pd = _reordered(pattern, order)
    img = kernels.induced_copy(pu, pd, list(h_up), list(h_down), allowed)
    if img is None:
        return None
    images = [0] * pattern.n
    for k, e in enumerate(order):
        images[e] = labels[img[k]]
    return Embedding(tuple(range(pattern.n)), tuple(images))


def is_isomorphic(p: Poset, q: Poset) -> bool:
    if p.n != q.n:
        return False
    if sum(u.bit_count() for u in p.up) != sum(u.bit_count() for u in q.up):
        return False
    return find_induced_copy(p, q) is not None


def defining_set(copy: Subposet) -> int | None:
    """The defining set X of a copy of Q_n, or None if `copy` is not a copy of Q_n.

    Checks every n-subset X of (top minus bottom): X defines the copy when the
    X-parts of the vertices are exactly the 2^n subsets of X and the induced
    map X' -> vertex is a strong embedding.  Returns the canonically first X.
    """
    size = len(copy)
    if size == 0 or size & (size - 1):
        raise InvalidInput(f"copy has {size} vertices, not a power of two")
    n = size.bit_length() - 1
    bottom, top = copy.minimum(), copy.maximum()
    if bottom is None or top is None:
        return None
    span = top & ~bottom
    candidates = canonical_sort(sum(1 << b for b in c) for c in combinations(bits_of(span), n))
    for x in candidates:
        by_part = {}
        for v in copy.vertices:
            by_part.setdefault(v & x, v)
        if len(by_part) != size:
            continue
        if all(
            is_subset(a, b) == is_subset(by_part[a], by_part[b])
            for a in by_part
            for b in by_part
        ):
            return x
    return None


def _check_y(ground_full: int, y: int):
    if y == 0:
        raise InvalidInput("Y must be non-empty")
    if y & ~ground_full:
        raise InvalidInput("Y is not a subset of the ground set")


def find_avoiding_homomorphism(f: Subposet, y: int) -> SetMap | None:
    """A Y-avoiding weak homomorphism f -> Q(Y), or None if every one is Y-hitting."""
    _check_y(f.ground.full, y)
    phi = kernels.avoiding_hom(list(f.vertices), y, list(f.down))
    if phi is None:
        return None
    return SetMap(f.vertices, tuple(phi), y)


def avoiding_iteration(f: Subposet, phi: SetMap, xprime: int) -> list[int]:
    """The chain f_0 = {} <= f_1 <= ... up to its first repeated value.

    f_i is the union of phi over the vertices of `f` below ``xprime | f_{i-1}``.
    The returned list ends at the fixed point f_j (listed once).
    """
    values = phi.as_dict()
    seq = [0]
    for _ in range(phi.y.bit_count() + 1):
        cur = xprime | seq[-1]
        nxt = 0
        for v in f.vertices:
            if is_subset(v, cur):
                nxt |= values[v]
        if nxt == seq[-1]:
            return seq
        if not is_subset(seq[-1], nxt):
            raise InvariantViolation("avoiding-iteration", "f_i is not increasing")
        seq.append(nxt)
    raise InvariantViolation("avoiding-iteration", f"no fixed point within {phi.y.bit_count() + 1} rounds")


def construct_avoiding_embedding(f: Subposet, phi: SetMap, x: int, y: int) -> Embedding:
    """X-good embedding of Q(x) whose image misses every vertex of `f`.

    Built from a Y-avoiding homomorphism by iterating down-sets to a fixed point.
    """
    if x & y or (x | y) != f.ground.full:
        raise InvalidInput("x and y must partition the ground set")
    _check_y(f.ground.full, y)
    if phi.y != y or tuple(phi.domain) != f.vertices:
        raise InvalidInput("phi is not a map on f into Q(y)")
    if not phi.is_weak_homomorphism():
        raise InvalidInput("phi is not a weak homomorphism")
    if not phi.is_avoiding():
        raise InvalidInput("phi is not Y-avoiding")
    dom = tuple(submasks(x))
    images = tuple(xp | avoiding_iteration(f, phi, xp)[-1] for xp in dom)
    emb = Embedding(dom, images)
    if not is_x_good_embedding(emb, x):
        raise InvariantViolation("constructed-embedding", "result is not an X-good embedding")
    if emb.image_set() & set(f.vertices):
        raise InvariantViolation("constructed-embedding", "image meets the family")
    return emb


def count_bound_log2(x: int, y: int) -> int:
    return y.bit_count() * (1 << x.bit_count())


def monotone_maps(x: int, y: int) -> Iterator[tuple[int, ...]]:
    """Every monotone g: Q(x) -> Q(y), values listed over canonical subsets of x."""
    dom = submasks(x)
    pos = {s: k for k, s in enumerate(dom)}
    ipreds = [[pos[s ^ (1 << b)] for b in bits_of(s)] for s in dom]
    g = [0] * len(dom)

    def rec(k):
        if k == len(dom):
            yield tuple(g)
            return
        lo = 0
        for j in ipreds[k]:
            lo |= g[j]
        for t in canonical_sort(lo | s for s in submasks(y & ~lo)):
            g[k] = t
            yield from rec(k + 1)

    yield from rec(0)


def enumerate_x_good_copies(x: int, y: int) -> Iterator[Embedding]:
    """Every X-good embedding of Q(x) into Q(x | y), each exactly once.

    X-good embeddings are exactly X' -> X' | g(X') for monotone g: Q(x) -> Q(y).
    """
    if x & y:
        raise InvalidInput("x and y must be disjoint")
    bound = count_bound_log2(x, y)
    if bound > MAX_COPY_LOG2:
        raise CapacityError(
            f"up to 2^{bound} X-good copies exceeds the 2^{MAX_COPY_LOG2} cap", bound=bound
        )
    dom = tuple(submasks(x))
    for g in monotone_maps(x, y):
        yield Embedding(dom, tuple(a | b for a, b in zip(dom, g)))
