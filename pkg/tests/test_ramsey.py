import pytest

import oracles
from posetramsey.core import LAMBDA, N_POSET, V, Coloring, GroundSet, chain, height
from posetramsey.errors import CapacityError, InvalidInput
from posetramsey.morphisms import find_induced_copy
from posetramsey.ramsey import (
    compute_m_P,
    layered_coloring,
    layered_lower_bound,
    ramsey_bracket,
    ramsey_decision,
    ramsey_number,
    validate_witness,
)

Q1 = chain(2)


def rel(p):
    return oracles.leq_pairs(range(p.n), p.covers())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_r_q1_qn(n):
    res = ramsey_number(Q1, n, 4)
    assert res.value == n + 1
    assert set(res.witnesses) == set(range(n, n + 1))


# frozen from the antichain oracle below
R_Q1 = {"V": 3, "L": 3, "N": 4}
PATTERNS = {"V": V, "L": LAMBDA, "N": N_POSET}


@pytest.mark.parametrize("name", sorted(R_Q1))
def test_r_pattern_q1(name):
    p = PATTERNS[name]
    res = ramsey_number(p, 1, 4)
    assert res.value == R_Q1[name]
    lo, hi = ramsey_bracket(p, 1)
    assert lo <= res.value <= hi
    for N, w in res.witnesses.items():
        assert validate_witness(p, 1, w)["avoids_both"]
        assert w.ground.size == N


@pytest.mark.parametrize("name", sorted(R_Q1))
def test_r_pattern_q1_oracle(name):
    p = PATTERNS[name]
    holds = [oracles.ramsey_q1_holds(p.n, rel(p), N) for N in range(1, 5)]
    assert holds.index(True) + 1 == R_Q1[name]


@pytest.mark.parametrize("p, n, N", [(V, 1, 2), (V, 2, 3), (Q1, 2, 2), (LAMBDA, 1, 3), (N_POSET, 1, 3), (Q1, 1, 1)])
def test_decision_matches_brute_force(p, n, N):
    d = ramsey_decision(p, n, N)
    holds, first = oracles.ramsey_brute(p.n, rel(p), n, N)
    assert d.holds == holds
    if not holds:
        assert Coloring.from_blue(GroundSet.of_size(N), first) == d.witness


def test_v_witness_at_two():
    d = ramsey_decision(V, 1, 2)
    assert not d.holds
    assert d.witness.blue_subposet().vertices == (0, 3)


@pytest.mark.parametrize("p, n", [(V, 1), (N_POSET, 1), (Q1, 2)])
def test_symmetry_and_jobs_do_not_change_verdicts(p, n):
    base = ramsey_number(p, n, 4)
    for sym, jobs in ((True, 1), (False, 3), (True, 2)):
        other = ramsey_number(p, n, 4, symmetry=sym, jobs=jobs)
        assert other.value == base.value
        assert {N: w.red for N, w in other.witnesses.items()} == {N: w.red for N, w in base.witnesses.items()}
    sym = ramsey_decision(p, n, base.value, symmetry=True)
    assert sym.stats["symmetry_skipped"] > 0


def test_monotone_in_n():
    for p in (V, N_POSET):
        verdicts = [ramsey_decision(p, 1, N).holds for N in range(1, 5)]
        assert verdicts == sorted(verdicts)


def test_capacity_and_input_errors():
    with pytest.raises(CapacityError):
        ramsey_decision(V, 1, 5)
    with pytest.raises(CapacityError):
        ramsey_number(V, 1, 5)
    with pytest.raises(InvalidInput):
        ramsey_decision(V, 3, 2)


def test_unknown_above_cap():
    res = ramsey_number(N_POSET, 1, 3)
    assert res.value is None and not res.known
    assert set(res.witnesses) == {1, 2, 3}


def test_layered_coloring_examples():
    full = layered_coloring(2, 3)
    assert full.red == 0b1111
    c = layered_coloring(1, 1)
    assert c.red == 0b01
    check = validate_witness(V, 1, c)
    assert check["red_qn"] is False and not check["blue_p"]
    c2 = layered_coloring(2, 2)
    check2 = validate_witness(V, 2, c2)
    assert not check2["red_qn"] and not check2["blue_p"]
    with pytest.raises(InvalidInput):
        layered_coloring(2, 4)


@pytest.mark.parametrize("p, n", [(V, 1), (V, 2), (N_POSET, 1), (chain(3), 2), (LAMBDA, 2)])
def test_layered_lower_bound(p, n):
    rep = layered_lower_bound(p, n)
    assert rep["dimension"] == n + height(p) - 2
    assert rep["valid"]


# frozen from the searches; R <= m checked against R_Q1
M_Q1 = {"V": 3, "L": 3, "N": 4}


@pytest.mark.parametrize("name", sorted(M_Q1))
def test_m_p(name):
    p = PATTERNS[name]
    res = compute_m_P(p, 1, 4)
    assert res.value == M_Q1[name]
    assert R_Q1[name] <= res.value
    for N, f in res.witnesses.items():
        y = f.ground.last(N - 1)
        assert find_induced_copy(p, f) is None
        assert oracles.is_blocker(sum(1 << v for v in f.vertices), oracles.copy_masks(N, y))


def m_oracle(p, n, n_max):
    """P-freeness passes to subfamilies, so test the minimal blockers only."""
    for N in range(n + 1, n_max + 1):
        y = ((1 << N) - 1) & ~((1 << n) - 1)
        mins = oracles.minimal_blockers(N, y)
        if not any(not oracles.has_induced_copy(p.n, rel(p), [v for v in range(1 << N) if b >> v & 1]) for b in mins):
            return N
    return None


@pytest.mark.parametrize("name", sorted(M_Q1))
def test_m_p_oracle(name):
    assert m_oracle(PATTERNS[name], 1, 4) == M_Q1[name]


def test_m_single_element_pattern():
    assert compute_m_P(chain(1), 1, 4).value == 2
    assert compute_m_P(Q1, 1, 4).value == 2


def test_m_errors():
    with pytest.raises(CapacityError):
        compute_m_P(V, 1, 5)
