"""Small exhaustive invariant suites behind the ``selftest`` command."""
from __future__ import annotations

import math
import random

from .blockers import COPIES, HOMOMORPHISM, blocks, criticalize, is_blocker, lemma_report
from .core import GroundSet, LAMBDA, N_POSET, V, Subposet, chain, submasks
from .errors import InvariantViolation
from .family import assert_family, build_family, extract_antichain, sperner_number
from .morphisms import construct_avoiding_embedding
from .ramsey import ramsey_number
from .sp_nfree import all_posets, is_n_free, random_poset, sp_decompose


def duality(n_ground: int) -> dict:
    ground = GroundSet.of_size(n_ground)
    cases = disagreements = embeddings = 0
    for bits in range(1 << (1 << n_ground)):
        f = Subposet.from_bits(ground, bits)
        for y in submasks(ground.full)[1:]:
            cases += 1
            hom = is_blocker(f, y, HOMOMORPHISM)
            cop = is_blocker(f, y, COPIES)
            if hom.verdict != cop.verdict:
                disagreements += 1
            if not hom.is_blocker:
                construct_avoiding_embedding(f, hom.witness, ground.full & ~y, y)
                embeddings += 1
    return {"ok": disagreements == 0, "cases": cases, "disagreements": disagreements, "embeddings": embeddings}


def critical_blockers(n_ground: int, max_y: int = 2, rng=None, samples: int = 0):
    """Distinct criticalized blockers over all (or sampled) families of Q([n_ground])."""
    ground = GroundSet.of_size(n_ground)
    total = 1 << (1 << n_ground)
    if samples:
        pool = sorted({rng.randrange(total) for _ in range(samples)})
    else:
        pool = range(total)
    seen = set()
    for y in submasks(ground.full)[1:]:
        if y.bit_count() > max_y:
            continue
        for bits in pool:
            f = Subposet.from_bits(ground, bits)
            if blocks(f, y):
                seen.add((criticalize(f, y).vertices, y))
    return [(Subposet(ground, v), y) for v, y in sorted(seen)]


def lemmas(n_ground: int) -> dict:
    found = critical_blockers(n_ground)
    bad = [(f.format(), y) for f, y in found if not all(lemma_report(f, y).values())]
    return {"ok": not bad, "critical_blockers": len(found), "violations": len(bad)}


def families(n_ground: int) -> dict:
    built = 0
    for f, y in critical_blockers(n_ground):
        if not is_n_free(f):
            continue
        fam = build_family(f, y)
        assert_family(fam)
        extract_antichain(fam)
        built += 1
    return {"ok": True, "families": built}


def valdes(max_n: int, rng: random.Random, samples: int) -> dict:
    checked = bad = 0
    for n in range(1, max_n + 1):
        for p in all_posets(n):
            checked += 1
            bad += is_n_free(p) != (sp_decompose(p) is not None)
    for _ in range(samples):
        p = random_poset(rng, rng.randint(6, 8))
        checked += 1
        bad += is_n_free(p) != (sp_decompose(p) is not None)
    return {"ok": bad == 0, "posets": checked, "disagreements": bad}


def sperner(limit: int) -> dict:
    bad = 0
    m = 0
    for t in range(1, limit + 1):
        while math.comb(m, m // 2) < t:
            m += 1
        bad += sperner_number(t) != m or m < math.log2(t)
    return {"ok": bad == 0, "checked": limit, "mismatches": bad}


def ramsey_small() -> dict:
    got = {
        "R(Q1,Q1)": ramsey_number(chain(2), 1, 3).value,
        "R(Q1,Q2)": ramsey_number(chain(2), 2, 3).value,
        "R(V,Q1)": ramsey_number(V, 1, 4).value,
        "R(L,Q1)": ramsey_number(LAMBDA, 1, 4).value,
        "R(N,Q1)": ramsey_number(N_POSET, 1, 4).value,
    }
    ok = got["R(Q1,Q1)"] == 2 and got["R(Q1,Q2)"] == 3
    return {"ok": ok, "values": got}


def run_all(rng: random.Random, quick: bool = True) -> dict:
    n = 2 if quick else 3
    out = {}
    for name, fn in (
        ("duality", lambda: duality(n)),
        ("critical_blocker_lemmas", lambda: lemmas(n)),
        ("families", lambda: families(n)),
        ("valdes", lambda: valdes(4 if quick else 5, rng, 200 if quick else 2000)),
        ("sperner", lambda: sperner(10**4 if quick else 10**5)),
        ("ramsey", ramsey_small),
    ):
        try:
            out[name] = fn()
        except InvariantViolation as exc:
            out[name] = {"ok": False, "error": str(exc)}
    return out
