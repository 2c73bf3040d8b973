"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run directly with ``python tests/test_acceptance.py`` for just the summary.
"""
import math
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles
from posetramsey.blockers import COPIES, HOMOMORPHISM, criticalize, is_blocker, lemma_report
from posetramsey.core import LAMBDA, N_POSET, V, GroundSet, Subposet, chain, submasks
from posetramsey.family import assert_family, build_family, extract_antichain, sperner_number
from posetramsey.morphisms import construct_avoiding_embedding
from posetramsey.ramsey import compute_m_P, ramsey_bracket, ramsey_number
from posetramsey.sp_nfree import all_posets, find_root, is_n_free, random_poset, sp_decompose


# collected lines are printed in the terminal summary (see conftest.py)
SUMMARY = []


def report(number, ok, detail, seconds):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({seconds:.1f}s) {detail}"
    SUMMARY.append(line)
    print(line, flush=True)
    return ok


def timed(fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t0


# 1 and 3 share one sweep over Q([3])
_sweep = {}


def duality_sweep():
    if _sweep:
        return _sweep
    ground = GroundSet.of_size(3)
    disagree, non_blockers, failures = 0, 0, 0
    for bits in range(256):
        f = Subposet.from_bits(ground, bits)
        for y in range(1, 8):
            hom = is_blocker(f, y, HOMOMORPHISM)
            cop = is_blocker(f, y, COPIES)
            disagree += hom.verdict != cop.verdict
            if hom.is_blocker:
                continue
            non_blockers += 1
            x = 7 & ~y
            emb = construct_avoiding_embedding(f, hom.witness, x, y)
            pairs = emb.as_pairs()
            ok = sorted(a for a, _ in pairs) == oracles.subsets(x)
            for a, ia in pairs:
                ok &= ia & x == a and ia not in f.vertices
                for b, ib in pairs:
                    ok &= (a & ~b == 0) == (ia & ~ib == 0)
                    ok &= (a == b) == (ia == ib)
            failures += not ok
    _sweep.update(disagree=disagree, non_blockers=non_blockers, failures=failures, cases=256 * 7)
    return _sweep


def criterion_1():
    s = duality_sweep()
    return s["disagree"] == 0, f"{s['cases']} (F, Y) pairs, {s['disagree']} disagreements"


def criterion_2():
    z = GroundSet(("1", "2", "x1", "x2"))
    y = z.mask(["1", "2"])
    shift = Subposet.from_labels(z, [["x1"], ["1", "x1"], ["2", "x1"], ["1", "2", "x1"]])
    fig = Subposet.from_labels(z, [[], ["1", "x1"], ["1", "2", "x1"], ["2", "x2"], ["1", "2", "x2"]])
    got = [is_blocker(f, y, s).is_blocker for f in (shift, fig) for s in (HOMOMORPHISM, COPIES)]
    return all(got), f"shifted square and five-vertex example certified by both strategies: {got}"


def criterion_3():
    s = duality_sweep()
    return s["failures"] == 0, f"{s['non_blockers']} non-blockers, {s['failures']} bad embeddings"


_critical = []


def critical_blockers():
    """Every minimal blocker for N <= 4, 1 <= |Y| <= 2 (oracle), checked against criticalize."""
    if _critical:
        return _critical
    rng = random.Random(0)
    stray = 0
    for n_ground in range(1, 5):
        g = GroundSet.of_size(n_ground)
        for y in submasks(g.full)[1:]:
            if y.bit_count() > 2:
                continue
            minimal = set(oracles.minimal_blockers(n_ground, y))
            _critical.extend((Subposet.from_bits(g, b), y) for b in sorted(minimal))
            copies = oracles.copy_masks(n_ground, y)
            total = 1 << (1 << n_ground)
            pool = range(total) if n_ground <= 3 else [rng.randrange(total) for _ in range(300)]
            for bits in pool:
                if bits and oracles.is_blocker(bits, copies):
                    core = criticalize(Subposet.from_bits(g, bits), y)
                    stray += sum(1 << v for v in core.vertices) not in minimal
    _critical.append(stray)
    return _critical


def independent_lemmas(f, y):
    n_ground = f.ground.size
    bits = sum(1 << v for v in f.vertices)
    k = y.bit_count()
    parts = {v & y for v in f.vertices}
    ok = len(f) >= 1 << k and parts == set(oracles.subsets(y)) and oracles.connected(f.vertices)
    for part in (0, y):
        same = [v for v in f.vertices if v & y == part]
        ok &= all(a == b or (a & ~b and b & ~a) for a in same for b in same)
    if k >= 2:
        for a in range(n_ground):
            if y >> a & 1:
                rest = oracles.copy_masks(n_ground, y & ~(1 << a))
                inside = sum(1 << v for v in f.vertices if v >> a & 1)
                outside = bits & ~inside
                ok &= oracles.is_blocker(inside, rest) and oracles.is_blocker(outside, rest)
    else:
        lo, hi = f.vertices[0], f.vertices[-1]
        ok &= len(f) == 2 and lo & y == 0 and hi & y == y and lo & ~hi == 0
    return ok


def criterion_4():
    *found, stray = critical_blockers()
    bad = sum(not (independent_lemmas(f, y) and all(lemma_report(f, y).values())) for f, y in found)
    return bad == 0 and stray == 0, (
        f"{len(found)} critical blockers, {bad} violations, {stray} criticalize outputs outside the oracle set"
    )


def criterion_5():
    bad = checked = 0
    for n in range(1, 6):
        for p in all_posets(n):
            checked += 1
            bad += is_n_free(p) != (sp_decompose(p) is not None)
    rng = random.Random(0)
    for _ in range(10_000):
        p = random_poset(rng, rng.randint(6, 8))
        checked += 1
        bad += is_n_free(p) != (sp_decompose(p) is not None)
    return bad == 0, f"{checked} posets, {bad} disagreements"


def criterion_6():
    *found, _ = critical_blockers()
    roots = families = 0
    anti_bad = 0
    for f, y in found:
        if not is_n_free(f):
            continue
        find_root(f, y)
        roots += 1
        fam = build_family(f, y)
        assert_family(fam)
        anti = extract_antichain(fam)
        families += 1
        vs = anti.vertices
        anti_bad += any(not (a & ~b and b & ~a) for i, a in enumerate(vs) for b in vs[i + 1:])
    return anti_bad == 0 and families > 0, f"{roots} roots, {families} families, {anti_bad} bad antichains"


EXPECTED_7 = {"R(Q1,Q1)": 2, "R(Q1,Q2)": 3, "R(Q1,Q3)": 4, "R(V,Q1)": 2, "R(N,Q1)": 3}


def criterion_7():
    cases = {
        "R(Q1,Q1)": (chain(2), 1), "R(Q1,Q2)": (chain(2), 2), "R(Q1,Q3)": (chain(2), 3),
        "R(V,Q1)": (V, 1), "R(N,Q1)": (N_POSET, 1),
    }
    got, bracket_ok = {}, True
    for name, (p, n) in cases.items():
        res = ramsey_number(p, n, 4)
        got[name] = res.value
        lo, hi = ramsey_bracket(p, n)
        bracket_ok &= res.value is not None and lo <= res.value <= hi
    wrong = {k: (got[k], EXPECTED_7[k]) for k in cases if got[k] != EXPECTED_7[k]}
    detail = ", ".join(f"{k}={v}" for k, v in got.items()) + f"; brackets hold: {bracket_ok}"
    if wrong:
        detail += "; mismatches (computed, expected): " + ", ".join(f"{k} {v}" for k, v in wrong.items())
    return not wrong and bracket_ok, detail


def criterion_8():
    out = []
    ok = True
    for name, p in (("V", V), ("L", LAMBDA), ("N", N_POSET)):
        r = ramsey_number(p, 1, 4).value
        m = compute_m_P(p, 1, 4).value
        ok &= r is not None and m is not None and r <= m
        out.append(f"{name}: R={r} <= m={m}")
    return ok, "; ".join(out)


def criterion_9():
    spot = sperner_number(1) == 0 and sperner_number(2) == 2 and sperner_number(7) == 5
    bad = 0
    m = 0
    central = math.comb(0, 0)
    for t in range(1, 10**6 + 1):
        while central < t:
            m += 1
            central = math.comb(m, m // 2)
        a = sperner_number(t)
        bad += a != m or a < math.log2(t)
    return spot and bad == 0, f"t <= 10^6, {bad} mismatches, spot values ok: {spot}"


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9,
}

# Criterion 7 pins R(V,Q1)=2 and R(N,Q1)=3.  Exhaustive search, a separate
# antichain-based oracle and explicit witness colorings all give 3 and 4.
KNOWN_FAILING = {7: "expected R(V,Q1)=2 and R(N,Q1)=3 contradict exhaustive search (3 and 4)"}


def _param(n):
    if n in KNOWN_FAILING:
        return pytest.param(n, marks=pytest.mark.xfail(reason=KNOWN_FAILING[n], strict=True))
    return n


@pytest.mark.parametrize("number", [_param(n) for n in CRITERIA])
def test_criterion(number):
    ok, detail, seconds = timed(CRITERIA[number])
    report(number, ok, detail, seconds)
    assert ok, detail


if __name__ == "__main__":
    results = [report(n, *timed(fn)) for n, fn in CRITERIA.items()]
    sys.exit(0 if all(results) else 1)
