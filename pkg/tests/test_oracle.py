import pytest

from polycomplete import GF, Poly, PolyMatrix
from polycomplete.completion import PrescribedData, check, exists_with_data
from polycomplete.oracle import (
    BudgetExceeded,
    SearchSpace,
    all_matrices,
    differential_test,
    enumerate_completions,
    exists_projection,
    near_misses,
    random_instance,
    run_campaign,
)
from polycomplete.structure import complete_structural_data

F = GF(2)
t = Poly.s(F)
o, z = Poly.one(F), Poly.zero(F)
EX = PolyMatrix([[t, z]], F)


def test_example_space():
    A = enumerate_completions(SearchSpace(F, EX, 1, 1))
    hits = [d for d in A if d.num == (t, t) and d.orders == (-1, -1)]
    assert len(hits) == 1
    assert A.members[hits[0]] == PolyMatrix([[z, t]], F)
    assert all(exists_with_data(d).feasible for d in A)


def test_z0_singleton():
    A = enumerate_completions(SearchSpace(F, EX, 0, 3))
    assert list(A) == [complete_structural_data(EX)]


def test_zero_source_two_candidates():
    P = PolyMatrix([[z]], F)
    sp = SearchSpace(F, P, 1, 0)
    assert sp.size() == 2
    A = enumerate_completions(sp)
    assert {d.rank for d in A} == {0, 1}


def test_no_polynomial_witness_for_example():
    # orders (-1, 1) are unreachable by any polynomial row: the first order forces degree 1
    A = enumerate_completions(SearchSpace(F, EX, 1, 1))
    assert not any(d.orders == (-1, 1) for d in A)
    tgt = PrescribedData("inf", 1, 1, orders=(-1, 1))
    assert not check(A.source_data, tgt, "polynomial").feasible
    assert exists_projection(A.source_data, tgt, F) is False


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_completions(SearchSpace(F, EX, 1, 3), budget=10)
    A = enumerate_completions(SearchSpace(F, EX, 1, 3), budget=10, randomized=True, seed=1)
    assert not A.exhaustive
    with pytest.raises(BudgetExceeded):
        run_campaign(budget=1)


def test_parallel_matches_serial():
    sp = SearchSpace(F, EX, 1, 2)
    a = enumerate_completions(sp)
    b = enumerate_completions(sp, jobs=2)
    assert list(a.members.items()) == list(b.members.items())


def test_random_instance_deterministic():
    assert random_instance(GF(5), 2, 3, 2, 7) == random_instance(GF(5), 2, 3, 2, 7)
    for seed in range(10):
        assert complete_structural_data(random_instance(GF(5), 2, 2, 2, seed)).invariant_sum() == 0


def test_enumeration_count():
    assert sum(1 for _ in all_matrices(F, 2, 2, 1)) == 2**8
    assert SearchSpace(F, PolyMatrix([], F, cols=2), 2, 2).size() == 2**12


def test_near_misses_are_well_formed():
    d = complete_structural_data(EX.vstack(PolyMatrix([[z, t]], F)))
    for m in near_misses(d, F):
        m.check(require_sum=False)
        assert m != d


def test_differential_small():
    r = differential_test(SearchSpace(F, EX, 1, 2))
    assert r.checked > 0 and not r.disagreements
    assert r.to_dict()["disagreements"] == []


def test_report_deterministic():
    a = run_campaign(field=GF(3), samples=2, seed=4, max_degree=1)
    b = run_campaign(field=GF(3), samples=2, seed=4, max_degree=1)
    assert a.lines() == b.lines()
    assert not a.disagreements


@pytest.mark.parametrize("mode", ["fin-inf-col", "fin-inf-row", "fin-inf", "inf", "fin", "fin-first-order"])
def test_partial_campaign_small(mode):
    r = run_campaign(mode=mode)
    assert not r.disagreements, "\n".join(r.lines())
