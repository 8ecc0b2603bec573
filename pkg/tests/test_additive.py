import itertools

import pytest
from hypothesis import given, settings, strategies as st

from orcycles.additive import (
    ResidueMultiset, ResidueSet, brute_subset_sum_exists, kneser_holds, reachable_residues,
    stabilizer, subset_sum_residue, sumset,
)
from orcycles.errors import EmptySet, ModulusMismatch, PreconditionViolation


def naive_sum(a, b):
    return {(x + y) % a.k for x in a for y in b}


def test_sumset_example():
    a, b = ResidueSet.of(5, [0, 1]), ResidueSet.of(5, [0, 3])
    assert sumset(a, b).members == (0, 1, 3, 4)


def test_sumset_errors():
    with pytest.raises(ModulusMismatch):
        sumset(ResidueSet.of(5, [1]), ResidueSet.of(6, [1]))
    with pytest.raises(EmptySet):
        sumset(ResidueSet(5, 0), ResidueSet.of(5, [1]))


def test_stabilizer_examples():
    assert stabilizer(ResidueSet.of(6, [0, 2, 4])).members == (0, 2, 4)
    assert stabilizer(ResidueSet.of(7, [0, 1])).members == (0,)
    assert stabilizer(ResidueSet.full(5)).members == (0, 1, 2, 3, 4)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 12), st.data())
def test_sumset_and_kneser(k, data):
    a = ResidueSet.of(k, data.draw(st.sets(st.integers(0, k - 1), min_size=1)))
    b = ResidueSet.of(k, data.draw(st.sets(st.integers(0, k - 1), min_size=1)))
    assert set(sumset(a, b).members) == naive_sum(a, b)
    assert sumset(a, b) == sumset(b, a)
    assert kneser_holds(a, b)


def test_kneser_exhaustive_small():
    for k in range(2, 7):
        subsets = [ResidueSet(k, m) for m in range(1, 1 << k)]
        for a, b in itertools.product(subsets, repeat=2):
            assert kneser_holds(a, b)


def test_reachable_certificate():
    sets = [ResidueSet.of(5, [1]), ResidueSet.of(5, [1])]
    out = reachable_residues(sets, 12)
    assert out.target == 2 and out.target_reachable
    assert sum(out.certificate) % 5 == 2
    miss = reachable_residues([ResidueSet.of(5, [1])], 24)
    assert not miss.target_reachable and miss.nonzero == (1,)


def test_reachable_modulus_check():
    with pytest.raises(PreconditionViolation):
        reachable_residues([ResidueSet.of(4, [1])], 6)
    with pytest.raises(PreconditionViolation):
        reachable_residues([ResidueSet.of(5, [0, 1])], 12)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([12, 24, 60, 120, 420, 840]), st.data())
def test_reachable_guarantee(ell, data):
    from orcycles.homomorphism import k_of
    k = k_of(ell)
    sets = data.draw(st.lists(st.sets(st.integers(1, k - 1), min_size=1), min_size=1, max_size=5))
    rs = [ResidueSet.of(k, s) for s in sets]
    out = reachable_residues(rs, ell)
    if out.target_reachable:
        assert sum(out.certificate) % k == ell % k
        for pick, a in zip(out.certificate, rs):
            assert pick == 0 or pick in a.members
    else:
        assert len(out.nonzero) >= min(sum(len(a) for a in rs), k - 1)


def test_subset_sum_examples():
    assert subset_sum_residue(ResidueMultiset.of(5, [1, 1, 1, 1]), 12) == (1, 1)
    assert subset_sum_residue(ResidueMultiset.of(5, [3, 3, 3, 3]), 12) == (3, 3, 3, 3)
    assert subset_sum_residue(ResidueMultiset.of(5, [1, 2, 3, 4]), 24) == (4,)


def test_subset_sum_size_check():
    with pytest.raises(PreconditionViolation):
        subset_sum_residue(ResidueMultiset.of(5, [1, 1]), 12)
    with pytest.raises(PreconditionViolation):
        ResidueMultiset.of(5, [0, 1, 1, 1])


@pytest.mark.parametrize("ell", [12, 24, 60, 120])
def test_subset_sum_exhaustive(ell):
    from orcycles.homomorphism import k_of
    k = k_of(ell)
    for ms in itertools.combinations_with_replacement(range(1, k), k - 1):
        chosen = subset_sum_residue(ResidueMultiset.of(k, ms), ell)
        assert sum(chosen) % k == ell % k
        assert brute_subset_sum_exists(ms, k, ell)
