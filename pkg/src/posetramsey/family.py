"""Recursive root families over ordered subsets of Y and antichain extraction.

Starting from an N-free critical Y-blocker, every ordered sequence S of
distinct Y-elements gets a critical (Y - S)-blocker F_S, a root Z_S (its
minimum or maximum), and the split of S into the elements added below a
min-type parent (A_S) or a max-type parent (B_S).
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field

from .blockers import blocks, criticalize, is_critical
from .core import Subposet, bits_of, is_subset
from .errors import CapacityError, InvalidInput, InvariantViolation
from .sp_nfree import MAX, MIN, find_root, is_n_free

MAX_K = 5

OrderedSubset = tuple  # tuple of ground indices, all in Y


def underlying(s: OrderedSubset) -> int:
    out = 0
    for a in s:
        out |= 1 << a
    return out


def prefixes(s: OrderedSubset) -> list[OrderedSubset]:
    """All prefixes S[0], ..., S[|S|]."""
    return [s[:i] for i in range(len(s) + 1)]


@dataclass(frozen=True)
class FamilyEntry:
    s: OrderedSubset
    f_s: Subposet
    z_s: int
    a_s: int
    b_s: int
    ty: str


@dataclass
class Family:
    y: int
    entries: dict[OrderedSubset, FamilyEntry] = field(default_factory=dict)

    @property
    def k(self) -> int:
        return self.y.bit_count()

    @property
    def ground(self):
        return self.entries[()].f_s.ground

    def __getitem__(self, s: OrderedSubset) -> FamilyEntry:
        return self.entries[tuple(s)]

    def __len__(self):
        return len(self.entries)

    def top(self) -> list[OrderedSubset]:
        """The ordered subsets of size k - 1, in construction order."""
        return [s for s in self.entries if len(s) == self.k - 1]

    def to_json(self) -> dict:
        g = self.ground
        names = g.labels
        out = []
        for s, e in self.entries.items():
            out.append({
                "s": [names[a] for a in s],
                "type": e.ty,
                "root": g.labels_of(e.z_s),
                "a": g.labels_of(e.a_s),
                "b": g.labels_of(e.b_s),
                "blocker": [g.labels_of(v) for v in e.f_s.vertices],
            })
        return {"y": g.labels_of(self.y), "k": self.k, "entries": out}


def build_family(f: Subposet, y: int, prefer: str = MIN) -> Family:
    """Build the entry for every ordered subset S of Y with |S| <= k - 1."""
    k = y.bit_count()
    if k < 1 or y & ~f.ground.full:
        raise InvalidInput("Y must be a non-empty subset of the ground set")
    if k > MAX_K:
        raise CapacityError(f"|Y| = {k} exceeds the family cap of {MAX_K}", bound=k)
    if not blocks(f, y):
        raise InvalidInput("build_family needs a Y-blocker")
    if not is_critical(f, y):
        raise InvalidInput("build_family needs a critical blocker")
    if not is_n_free(f):
        raise InvalidInput("build_family needs an N-free blocker")

    z, ty = find_root(f, y, prefer, check=False)
    fam = Family(y)
    fam.entries[()] = FamilyEntry((), f, z, 0, 0, ty)
    level = [()]
    for size in range(1, k):
        nxt = []
        for parent_s in level:
            parent = fam.entries[parent_s]
            for a in bits_of(y & ~underlying(parent_s)):
                s = parent_s + (a,)
                rest = y & ~underlying(s)
                bit = 1 << a
                if parent.ty == MIN:
                    base = parent.f_s.select(lambda v: v & bit)
                    a_s, b_s = parent.a_s | bit, parent.b_s
                else:
                    base = parent.f_s.select(lambda v: not v & bit)
                    a_s, b_s = parent.a_s, parent.b_s | bit
                if not blocks(base, rest):
                    raise InvariantViolation("reduction", f"restriction at S={s} is not a (Y-S)-blocker")
                f_s = criticalize(base, rest)
                choice = parent.ty if size == k - 1 else prefer
                z_s, ty_s = find_root(f_s, rest, choice, check=False)
                if size == k - 1 and ty_s != parent.ty:
                    raise InvariantViolation(
                        "root type at depth k-1", f"S={s} lacks a {parent.ty} root matching its parent"
                    )
                fam.entries[s] = FamilyEntry(s, f_s, z_s, a_s, b_s, ty_s)
                nxt.append(s)
        level = nxt
    return fam


def check_family(fam: Family) -> dict[str, bool]:
    """Evaluate every structural property of a built family.

    ``prefix_containment`` asserts F_S inside F_S' for each prefix S'; the
    opposite reading is reported as ``prefix_containment_reversed`` for
    information only.
    """
    y = fam.y
    res = {
        "entry_invariants": True,
        "prefix_containment": True,
        "prefix_containment_reversed": True,
        "type_count": True,
        "root_y_part": True,
        "mixed_root": True,
    }
    for s, e in fam.entries.items():
        rest = y & ~underlying(s)
        if e.a_s | e.b_s != underlying(s) or e.a_s & e.b_s:
            res["entry_invariants"] = False
        if not (blocks(e.f_s, rest) and is_critical(e.f_s, rest)):
            res["entry_invariants"] = False
        lo, hi = e.f_s.minimum(), e.f_s.maximum()
        if e.z_s != (lo if e.ty == MIN else hi):
            res["entry_invariants"] = False
        if e.ty == MIN and e.z_s & y != e.a_s:
            res["root_y_part"] = False
        if e.ty == MAX and y & ~e.z_s != e.b_s:
            res["root_y_part"] = False
        strict = prefixes(s)[:-1]
        if e.a_s.bit_count() != sum(fam.entries[p].ty == MIN for p in strict):
            res["type_count"] = False
        if e.b_s.bit_count() != sum(fam.entries[p].ty == MAX for p in strict):
            res["type_count"] = False
        for p in strict:
            pe = fam.entries[p]
            under = underlying(p)
            if not e.f_s.issubset(pe.f_s) or pe.a_s != e.a_s & under or pe.b_s != e.b_s & under:
                res["prefix_containment"] = False
            if not pe.f_s.issubset(e.f_s):
                res["prefix_containment_reversed"] = False
            if len(s) == fam.k - 1:
                part = e.z_s & (y & ~under)
                if part in (0, y & ~under):
                    res["mixed_root"] = False
    return res


_REQUIRED = ("entry_invariants", "prefix_containment", "type_count", "root_y_part", "mixed_root")


def assert_family(fam: Family) -> dict[str, bool]:
    res = check_family(fam)
    for name in _REQUIRED:
        if not res[name]:
            raise InvariantViolation(name, "built family violates this property")
    return res


def type_signature(fam: Family, s: OrderedSubset) -> tuple[str, ...]:
    return tuple(fam.entries[p].ty for p in prefixes(s))


def intersection_signature(fam: Family, s: OrderedSubset) -> tuple[int, ...]:
    return tuple(fam.entries[p].z_s & fam.y for p in prefixes(s))


def classify_pair(s1: OrderedSubset, s2: OrderedSubset, fam: Family) -> dict[str, bool]:
    s1, s2 = tuple(s1), tuple(s2)
    if len(s1) != fam.k - 1 or len(s2) != fam.k - 1:
        raise InvalidInput("classify_pair needs two ordered subsets of size k - 1")
    for s in (s1, s2):
        if s not in fam.entries:
            raise InvalidInput(f"{s} is not in the family")
    return {
        "type_equivalent": type_signature(fam, s1) == type_signature(fam, s2),
        "intersection_equivalent": intersection_signature(fam, s1) == intersection_signature(fam, s2),
    }


@dataclass(frozen=True)
class Antichain:
    sequences: tuple[OrderedSubset, ...]
    vertices: tuple[int, ...]
    type_class_size: int
    type_classes: int

    def __len__(self):
        return len(self.vertices)


def extract_antichain(fam: Family) -> Antichain:
    """Roots of one type class, one representative per intersection class."""
    if () not in fam.entries:
        raise InvalidInput("family is empty")
    by_type: dict[tuple, list] = defaultdict(list)
    for s in fam.top():
        by_type[type_signature(fam, s)].append(s)
    for members in by_type.values():
        by_inter = defaultdict(list)
        for s in members:
            by_inter[intersection_signature(fam, s)].append(s)
        if any(len(c) > 2 for c in by_inter.values()):
            raise InvariantViolation("intersection class size", "an intersection class has more than 2 members")
    sig, members = min(by_type.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    chosen = {}
    for s in members:
        chosen.setdefault(intersection_signature(fam, s), s)
    seqs = tuple(chosen.values())
    verts = tuple(fam.entries[s].z_s for s in seqs)
    for i, u in enumerate(verts):
        for w in verts[i + 1:]:
            if is_subset(u, w) or is_subset(w, u):
                raise InvariantViolation("antichain", "extracted roots are comparable")
    return Antichain(seqs, verts, len(members), len(by_type))


def sperner_number(t: int) -> int:
    """Smallest m with C(m, m//2) >= t."""
    if t < 1:
        raise InvalidInput("sperner_number needs t >= 1")
    m = 0
    while math.comb(m, m // 2) < t:
        m += 1
    return m


def bound_report(fam: Family, anti: Antichain) -> dict:
    """The finite chain: antichain size -> Sperner bound -> ground size."""
    k = fam.k
    n_ground = fam.ground.size
    alpha = sperner_number(len(anti))
    return {
        "k": k,
        "antichain_size": len(anti),
        "type_class_size": anti.type_class_size,
        "floor_k_factorial_over_2^(k+1)": math.factorial(k) / 2 ** (k + 1),
        "alpha": alpha,
        "ground_size": n_ground,
        "bound_line": f"N >= alpha({len(anti)}) = {alpha}",
        "bound_holds": n_ground >= alpha,
    }
