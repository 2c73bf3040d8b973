"""Y-blockers: decision, criticalization, restriction and structural checks.

A Y-blocker in Q(Z) is a family meeting every X-good copy of Q(X), X = Z - Y.
Two decision strategies are provided: a CSP search for a Y-avoiding
homomorphism (a family is a blocker iff none exists) and brute-force
enumeration of the X-good copies, used as an oracle on small instances.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import kernels
from .core import Coloring, GroundSet, Subposet, all_subsets_of_size, bits_of, submasks
from .errors import InvalidInput, InvariantViolation
from .morphisms import (
    MAX_COPY_LOG2,
    Embedding,
    SetMap,
    count_bound_log2,
    enumerate_x_good_copies,
    find_avoiding_homomorphism,
)

HOMOMORPHISM = "homomorphism"
COPIES = "copies"
BOTH = "both"
STRATEGIES = (HOMOMORPHISM, COPIES, BOTH)


@dataclass(frozen=True)
class BlockerCertificate:
    verdict: str
    strategy: str
    y: int
    witness: SetMap | None = None
    disjoint_copy: Embedding | None = None

    @property
    def is_blocker(self) -> bool:
        return self.verdict == "blocker"

    def __bool__(self):
        return self.is_blocker

    def to_json(self, ground: GroundSet) -> dict:
        out = {
            "verdict": self.verdict,
            "strategy": self.strategy,
            "y": ground.labels_of(self.y),
        }
        if self.is_blocker:
            out["witness"] = "search-exhausted"
        else:
            out["witness"] = {"avoiding_homomorphism": self.witness.to_json(ground)}
            if self.disjoint_copy is not None:
                out["witness"]["disjoint_copy"] = self.disjoint_copy.to_json(ground)
        return out


def _validate_y(f: Subposet, y: int):
    if y == 0:
        raise InvalidInput("Y must be non-empty")
    if y & ~f.ground.full:
        raise InvalidInput("Y is not a subset of the ground set")


def _by_homomorphism(f: Subposet, y: int) -> BlockerCertificate:
    phi = find_avoiding_homomorphism(f, y)
    if phi is None:
        return BlockerCertificate("blocker", HOMOMORPHISM, y)
    return BlockerCertificate("not-blocker", HOMOMORPHISM, y, witness=phi)


def _by_copies(f: Subposet, y: int) -> BlockerCertificate:
    x = f.ground.full & ~y
    members = set(f.vertices)
    for emb in enumerate_x_good_copies(x, y):
        if emb.image_set() & members:
            continue
        # phi(F) = psi(F & X) & Y avoids Y because psi misses f
        lookup = dict(emb.as_pairs())
        phi = SetMap(f.vertices, tuple(lookup[v & x] & y for v in f.vertices), y)
        if not (phi.is_weak_homomorphism() and phi.is_avoiding()):
            raise InvariantViolation("blocker-duality", "copy-derived map is not an avoiding homomorphism")
        return BlockerCertificate("not-blocker", COPIES, y, witness=phi, disjoint_copy=emb)
    return BlockerCertificate("blocker", COPIES, y)


def copies_feasible(ground: GroundSet, y: int) -> bool:
    return count_bound_log2(ground.full & ~y, y) <= MAX_COPY_LOG2


def is_blocker(f: Subposet, y: int, strategy: str = HOMOMORPHISM) -> BlockerCertificate:
    """Decide whether `f` is a Y-blocker in Q(f.ground).

    ``strategy="both"`` runs the copy oracle as well and raises
    InvariantViolation if the two verdicts differ.
    """
    _validate_y(f, y)
    if strategy not in STRATEGIES:
        raise InvalidInput(f"unknown strategy {strategy!r}")
    if strategy == COPIES:
        return _by_copies(f, y)
    cert = _by_homomorphism(f, y)
    if strategy == BOTH:
        other = _by_copies(f, y)
        if other.verdict != cert.verdict:
            raise InvariantViolation(
                "blocker-duality",
                f"homomorphism search says {cert.verdict}, copy enumeration says {other.verdict}",
            )
        cert = replace(cert, strategy=BOTH, disjoint_copy=other.disjoint_copy)
    return cert


def blocks(f: Subposet, y: int) -> bool:
    if not f.vertices:
        return False
    return kernels.avoiding_hom(list(f.vertices), y, list(f.down)) is None


def criticalize(f: Subposet, y: int) -> Subposet:
    """Deterministic critical sub-blocker of the Y-blocker `f`.

    Vertices are tried in canonical order and dropped whenever the rest still
    blocks.  A vertex that cannot be dropped never becomes droppable later
    (blocking is monotone), so one pass gives the same result as restarting
    the scan after every deletion.
    """
    _validate_y(f, y)
    if not blocks(f, y):
        raise InvalidInput("criticalize needs a Y-blocker")
    keep = list(f.vertices)
    for v in f.vertices:
        trial = Subposet(f.ground, tuple(w for w in keep if w != v))
        if blocks(trial, y):
            keep.remove(v)
    return Subposet(f.ground, tuple(keep))


def is_critical(f: Subposet, y: int) -> bool:
    _validate_y(f, y)
    return blocks(f, y) and all(not blocks(f.without(v), y) for v in f.vertices)


CONTAINS = "contains"
EXCLUDES = "excludes"


def restrict_blocker(f: Subposet, y: int, a: int, side: str) -> Subposet:
    """The vertices of `f` containing (or excluding) ground element index `a`.

    For a Y-blocker with |Y| >= 2 and a in Y the result is a (Y - a)-blocker.
    """
    _validate_y(f, y)
    if y.bit_count() < 2:
        raise InvalidInput("restriction needs |Y| >= 2")
    bit = 1 << a
    if not y & bit:
        raise InvalidInput(f"element {a} is not in Y")
    if side not in (CONTAINS, EXCLUDES):
        raise InvalidInput(f"side must be {CONTAINS!r} or {EXCLUDES!r}")
    if not blocks(f, y):
        raise InvalidInput("restrict_blocker needs a Y-blocker")
    want = bit if side == CONTAINS else 0
    out = f.select(lambda v: v & bit == want)
    if not blocks(out, y & ~bit):
        raise InvariantViolation("reduction", f"{side}-{a} restriction is not a (Y-a)-blocker")
    return out


@dataclass
class RedCopyReport:
    has_red_copy: bool
    per_x: list[dict] = field(default_factory=list)


def coloring_has_red_qn(coloring: Coloring, n: int) -> RedCopyReport:
    """Whether the coloring contains a red copy of Q_n, with a per-X breakdown.

    Each X of size n is decided twice: by direct search for an all-red X-good
    copy and by testing whether the blue set is a (Z - X)-blocker.  The two
    must disagree (red copy exists iff blue is not a blocker).
    """
    ground = coloring.ground
    N = ground.size
    if not 0 <= n <= N:
        raise InvalidInput(f"n={n} must lie in [0, {N}]")
    blue = coloring.blue_subposet()
    report = RedCopyReport(False)
    for x in all_subsets_of_size(ground.full, n):
        y = ground.full & ~x
        g = kernels.red_good_copy(coloring.red, x, y)
        copy = None
        if g is not None:
            dom = tuple(submasks(x))
            copy = Embedding(dom, tuple(a | b for a, b in zip(dom, g)))
        if y:
            blocked = blocks(blue, y)
        else:
            # the only Q(Z)-good copy is Q(Z) itself
            blocked = bool(blue.vertices)
        if blocked == (copy is not None):
            raise InvariantViolation(
                "coloring-blocker bridge",
                f"X={ground.format(x)}: red copy {'found' if copy else 'absent'}, "
                f"blue blocker={blocked}",
            )
        report.per_x.append({"x": x, "red_copy": copy, "blue_is_blocker": blocked})
        report.has_red_copy |= copy is not None
    return report


# Structural checks.  Each returns True when the property holds.

def has_all_y_parts(f: Subposet, y: int) -> bool:
    return f.y_parts(y) == set(submasks(y))


def meets_size_bound(f: Subposet, y: int) -> bool:
    return len(f) >= 1 << y.bit_count()


def is_connected(f: Subposet) -> bool:
    if not f.vertices:
        return True
    m = len(f)
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for i in bits_of(frontier):
            nxt |= f.up[i] | f.down[i]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << m) - 1


def chain_restriction_holds(f: Subposet, y: int) -> bool:
    for part in (0, y):
        idx = [i for i, v in enumerate(f.vertices) if v & y == part]
        for i in idx:
            if (f.up[i] | f.down[i]) & sum(1 << j for j in idx):
                return False
    return True


def _series_blocks(f: Subposet, pool: list[int], bottom: bool) -> list[int]:
    """Subsets F1 of `pool` (indices) such that f is F1 in series with the rest."""
    out = []
    m = len(f)
    everything = (1 << m) - 1
    for r in range(1, len(pool) + 1):
        for combo in all_subsets_of_size(sum(1 << i for i in pool), r):
            rest = everything & ~combo
            if not rest:
                continue
            rel = f.up if bottom else f.down
            if all(rel[i] & rest == rest for i in bits_of(combo)):
                out.append(combo)
    return out


def antichain_restriction_holds(f: Subposet, y: int) -> bool:
    """No series split with >= 2 Y-empty vertices at the bottom (or Y-full at the top)."""
    for part, bottom in ((0, True), (y, False)):
        pool = [i for i, v in enumerate(f.vertices) if v & y == part]
        if len(pool) > 16:
            raise InvalidInput("antichain check limited to 16 candidate vertices")
        if any(c.bit_count() > 1 for c in _series_blocks(f, pool, bottom)):
            return False
    return True


def single_y_structure_holds(f: Subposet, y: int) -> bool:
    """For |Y| = 1: f is exactly {X1, X2 | Y} with X1 <= X2 subsets of X."""
    if y.bit_count() != 1:
        return True
    if len(f) != 2:
        return False
    lo, hi = f.vertices
    if lo & y:
        lo, hi = hi, lo
    return lo & y == 0 and hi & y == y and lo & ~hi == 0


def reduction_holds(f: Subposet, y: int) -> bool:
    if y.bit_count() < 2:
        return True
    for a in bits_of(y):
        bit = 1 << a
        for want in (bit, 0):
            part = f.select(lambda v: v & bit == want)
            if not blocks(part, y & ~bit):
                return False
    return True


def lemma_report(f: Subposet, y: int, critical: bool = True) -> dict[str, bool]:
    """Evaluate every structural property that a (critical) Y-blocker must have."""
    report = {
        "size_bound": meets_size_bound(f, y),
        "all_y_parts": has_all_y_parts(f, y),
        "reduction": reduction_holds(f, y),
    }
    if critical:
        report.update(
            connected=is_connected(f),
            chain_restriction=chain_restriction_holds(f, y),
            antichain_restriction=antichain_restriction_holds(f, y),
            single_y_structure=single_y_structure_holds(f, y),
        )
    return report
