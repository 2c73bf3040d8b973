"""Ground sets, Boolean lattices, abstract posets and colorings.

Vertices of a Boolean lattice Q(Z) are plain ints: bit ``i`` set means the
``i``-th ground element is a member.  Every collection of vertices is kept in
canonical order, ascending by (popcount, value), which is also a linear
extension of inclusion.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import CapacityError, InvalidInput

MAX_GROUND = 32


def popcount(mask: int) -> int:
    return mask.bit_count()


def canonical_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def canonical_sort(masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=canonical_key)


def bits_of(mask: int) -> list[int]:
    """Positions of the set bits of `mask`, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def submasks(mask: int) -> list[int]:
    """All subsets of `mask` in canonical order."""
    out = []
    sub = 0
    while True:
        out.append(sub)
        if sub == mask:
            break
        sub = (sub - mask) & mask
    return canonical_sort(out)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class GroundSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) > MAX_GROUND:
            raise CapacityError(
                f"ground set has {len(labels)} elements, cap is {MAX_GROUND}",
                bound=len(labels),
            )
        if len(set(labels)) != len(labels):
            raise InvalidInput(f"duplicate ground labels in {labels!r}")

    @classmethod
    def of_size(cls, n: int) -> "GroundSet":
        """The ground set [n] with labels "1", ..., "n"."""
        return cls(tuple(str(i) for i in range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def index(self, label) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise InvalidInput(f"unknown ground element {label!r}") from None

    def mask(self, labels: Iterable) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def labels_of(self, mask: int) -> list[str]:
        if mask & ~self.full:
            raise InvalidInput(f"mask {mask:#x} has bits outside the ground set")
        return [self.labels[i] for i in bits_of(mask)]

    def last(self, k: int) -> int:
        """Mask of the last `k` ground elements."""
        if not 0 <= k <= self.size:
            raise InvalidInput(f"cannot take {k} of {self.size} ground elements")
        return self.full & ~((1 << (self.size - k)) - 1)

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.labels_of(mask)) + "}"


@dataclass(frozen=True)
class Subposet:
    """An induced subposet of Q(ground): a set of vertices ordered by inclusion."""

    ground: GroundSet
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        if len(set(vs)) != len(vs):
            raise InvalidInput("duplicate vertices in subposet")
        full = self.ground.full
        for v in vs:
            if v < 0 or v & ~full:
                raise InvalidInput(f"vertex {v:#x} is not a subset of the ground set")
        object.__setattr__(self, "vertices", tuple(canonical_sort(vs)))

    @classmethod
    def from_labels(cls, ground: GroundSet, vertex_labels: Iterable[Iterable]) -> "Subposet":
        return cls(ground, tuple(ground.mask(v) for v in vertex_labels))

    @classmethod
    def from_bits(cls, ground: GroundSet, bits: int) -> "Subposet":
        """Inverse of :meth:`bits`: bit ``v`` of `bits` selects vertex ``v``."""
        return cls(ground, tuple(bits_of(bits)))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self._index

    @cached_property
    def _index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index(self, v: int) -> int:
        return self._index[v]

    @cached_property
    def bits(self) -> int:
        """The vertex set as a bitset over all 2^N vertices of Q(ground)."""
        b = 0
        for v in self.vertices:
            b |= 1 << v
        return b

    @cached_property
    def up(self) -> tuple[int, ...]:
        """For each vertex index, the bitset of indices strictly above it."""
        vs = self.vertices
        return tuple(
            sum(1 << j for j, w in enumerate(vs) if j != i and v & ~w == 0)
            for i, v in enumerate(vs)
        )

    @cached_property
    def down(self) -> tuple[int, ...]:
        vs = self.vertices
        return tuple(
            sum(1 << j for j, w in enumerate(vs) if j != i and w & ~v == 0)
            for i, v in enumerate(vs)
        )

    def to_poset(self) -> "Poset":
        names = tuple(self.ground.format(v) for v in self.vertices)
        return Poset(len(self.vertices), self.up, names)

    def without(self, v: int) -> "Subposet":
        return Subposet(self.ground, tuple(w for w in self.vertices if w != v))

    def select(self, keep) -> "Subposet":
        return Subposet(self.ground, tuple(w for w in self.vertices if keep(w)))

    def issubset(self, other: "Subposet") -> bool:
        return self.ground == other.ground and set(self.vertices) <= set(other.vertices)

    def y_parts(self, y: int) -> set[int]:
        return {v & y for v in self.vertices}

    def minimum(self) -> int | None:
        for i, v in enumerate(self.vertices):
            if self.up[i] | (1 << i) == (1 << len(self.vertices)) - 1:
                return v
        return None

    def maximum(self) -> int | None:
        for i, v in enumerate(self.vertices):
            if self.down[i] | (1 << i) == (1 << len(self.vertices)) - 1:
                return v
        return None

    def format(self) -> str:
        return "{" + ", ".join(self.ground.format(v) for v in self.vertices) + "}"


def boolean_lattice(ground: GroundSet) -> Subposet:
    if ground.size > MAX_GROUND:
        raise CapacityError(f"ground set over cap {MAX_GROUND}", bound=ground.size)
    return Subposet(ground, tuple(range(1 << ground.size)))


def _closure(n: int, up: Sequence[int]) -> list[int]:
    """Transitive closure of a strict-above relation given as bitsets."""
    up = list(up)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in bits_of(up[i]):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    return up


@dataclass(frozen=True)
class Poset:
    """A finite poset on elements 0..n-1.

    ``up[i]`` is the bitset of elements strictly above ``i``; the relation is
    checked for antisymmetry and transitivity on construction.
    """

    n: int
    up: tuple[int, ...]
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if len(self.up) != self.n:
            raise InvalidInput("relation size does not match element count")
        names = tuple(str(x) for x in self.names) or tuple(str(i) for i in range(self.n))
        if len(names) != self.n:
            raise InvalidInput("names do not match element count")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "up", tuple(int(u) for u in self.up))
        for i, u in enumerate(self.up):
            if u >> self.n:
                raise InvalidInput(f"element {i} related to out-of-range element")
            if u >> i & 1:
                raise InvalidInput(f"relation is not irreflexive-strict at {i}")
            for j in bits_of(u):
                if self.up[j] >> i & 1:
                    raise InvalidInput(f"antisymmetry violated between {i} and {j}")
                if self.up[j] & ~u:
                    raise InvalidInput(f"transitivity violated at {i} < {j}")

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[Sequence[int]], names=()) -> "Poset":
        up = [0] * n
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise InvalidInput(f"bad cover pair ({a}, {b})")
            up[a] |= 1 << b
        up = _closure(n, up)
        for i in range(n):
            if up[i] >> i & 1:
                raise InvalidInput("cover relation contains a cycle")
        return cls(n, tuple(up), tuple(names))

    @classmethod
    def from_matrix(cls, leq: Sequence[Sequence[bool]], names=()) -> "Poset":
        n = len(leq)
        for i in range(n):
            if len(leq[i]) != n:
                raise InvalidInput("relation matrix is not square")
            if not leq[i][i]:
                raise InvalidInput(f"relation is not reflexive at {i}")
        up = tuple(sum(1 << j for j in range(n) if j != i and leq[i][j]) for i in range(n))
        return cls(n, up, tuple(names))

    @cached_property
    def down(self) -> tuple[int, ...]:
        down = [0] * self.n
        for i, u in enumerate(self.up):
            for j in bits_of(u):
                down[j] |= 1 << i
        return tuple(down)

    def leq(self, a: int, b: int) -> bool:
        return a == b or bool(self.up[a] >> b & 1)

    def lt(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(i, j) for j in range(self.n)] for i in range(self.n)]

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for a in range(self.n):
            for b in bits_of(self.up[a]):
                # b covers a iff nothing strictly between
                if not self.up[a] & self.down[b]:
                    out.append((a, b))
        return out

    def linear_extension(self) -> list[int]:
        return sorted(range(self.n), key=lambda i: (self.down[i].bit_count(), i))

    def dual(self) -> "Poset":
        return Poset(self.n, self.down, self.names)

    def induced(self, elems: Sequence[int]) -> "Poset":
        pos = {e: k for k, e in enumerate(elems)}
        up = tuple(
            sum(1 << pos[j] for j in bits_of(self.up[e]) if j in pos) for e in elems
        )
        return Poset(len(elems), up, tuple(self.names[e] for e in elems))

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Poset whose element ``perm[i]`` plays the role of element ``i`` here."""
        up = [0] * self.n
        for i in range(self.n):
            up[perm[i]] = sum(1 << perm[j] for j in bits_of(self.up[i]))
        names = [""] * self.n
        for i in range(self.n):
            names[perm[i]] = self.names[i]
        return Poset(self.n, tuple(up), tuple(names))


def height(p: Poset) -> int:
    longest = [0] * p.n
    for i in p.linear_extension():
        longest[i] = 1 + max((longest[j] for j in bits_of(p.down[i])), default=0)
    return max(longest, default=0)


def series_composition(p1: Poset, p2: Poset) -> Poset:
    """`p1` entirely below `p2`; elements of `p2` are shifted by ``p1.n``."""
    n1 = p1.n
    top = ((1 << p2.n) - 1) << n1
    up = [u | top for u in p1.up] + [u << n1 for u in p2.up]
    return Poset(n1 + p2.n, tuple(up), p1.names + p2.names)


def parallel_composition(p1: Poset, p2: Poset) -> Poset:
    n1 = p1.n
    up = list(p1.up) + [u << n1 for u in p2.up]
    return Poset(n1 + p2.n, tuple(up), p1.names + p2.names)


def chain(k: int) -> Poset:
    return Poset.from_covers(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> Poset:
    return Poset(k, (0,) * k)


def boolean_lattice_poset(n: int) -> Poset:
    """Q_n as an abstract poset; element i is the subset with bitmask i."""
    ground = GroundSet.of_size(n)
    return Poset(1 << n, _mask_indexed_up(n), tuple(ground.format(v) for v in range(1 << n)))


def _mask_indexed_up(n: int) -> tuple[int, ...]:
    size = 1 << n
    return tuple(
        sum(1 << w for w in range(size) if w != v and v & ~w == 0) for v in range(size)
    )


# Named patterns.  Element order follows the conventional letters.
V = Poset.from_covers(3, [(2, 0), (2, 1)], names=("A", "B", "C"))
LAMBDA = Poset.from_covers(3, [(0, 2), (1, 2)], names=("A", "B", "C"))
N_POSET = Poset.from_covers(4, [(0, 2), (1, 3), (1, 2)], names=("A", "B", "C", "D"))

PATTERNS = {
    "V": V,
    "Lambda": LAMBDA,
    "N": N_POSET,
}


def two_dimension(p: Poset, n_max: int) -> int | None:
    """Smallest m <= n_max such that Q_m contains an induced copy of `p`.

    Returns None when no such m exists up to `n_max`.
    """
    from .morphisms import find_induced_copy

    for m in range(n_max + 1):
        if (1 << m) < p.n:
            continue
        if find_induced_copy(p, boolean_lattice(GroundSet.of_size(m))) is not None:
            return m
    return None


@dataclass(frozen=True)
class Coloring:
    """A blue/red coloring of Q(ground); bit ``v`` of `red` set means vertex v is red."""

    ground: GroundSet
    red: int

    def __post_init__(self):
        if self.red < 0 or self.red >> (1 << self.ground.size):
            raise InvalidInput("coloring has bits beyond the lattice")

    @property
    def all_bits(self) -> int:
        return (1 << (1 << self.ground.size)) - 1

    @property
    def blue(self) -> int:
        return self.all_bits & ~self.red

    def color(self, v: int) -> str:
        return "red" if self.red >> v & 1 else "blue"

    def blue_subposet(self) -> Subposet:
        return Subposet.from_bits(self.ground, self.blue)

    def red_subposet(self) -> Subposet:
        return Subposet.from_bits(self.ground, self.red)

    @classmethod
    def from_blue(cls, ground: GroundSet, blue: int) -> "Coloring":
        return cls(ground, ((1 << (1 << ground.size)) - 1) & ~blue)


def layers(ground: GroundSet) -> list[list[int]]:
    out = [[] for _ in range(ground.size + 1)]
    for v in range(1 << ground.size):
        out[v.bit_count()].append(v)
    return out


def all_subsets_of_size(mask: int, k: int) -> list[int]:
    return [sum(1 << b for b in c) for c in combinations(bits_of(mask), k)]
