import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from hecke_cocenter import cocenterlab as cl
from hecke_cocenter.heckeclifford import graded_algebra
from hecke_cocenter.weylcomb import ClassLabel, ConventionFlag, ParabolicSubset, SignedPerm, WeylType, distinguished_classes, group

A2, A3, A4, B2, B3, D4 = (WeylType(*p) for p in (("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("D", 4)))


@pytest.mark.parametrize("t", [A2, A3, A4, B2, B3], ids=str)
def test_degree0_dim_counts_distinguished_classes(t):
    rep = cl.verify_graded_basis(t, 0)
    assert rep.dims == [len(distinguished_classes(t))]
    assert rep.verdict == cl.VERIFIED_DIM


def test_b3_degree0_report():
    rep = cl.verify_graded_basis(B3, 0)
    assert rep.ok
    data = rep.to_json()
    assert data["dims"] == [3] and data["convention"] == "paper-4.2"
    assert data["degrees"][0]["certificate"] == cl.verify_graded_basis(B3, 0).to_json()["degrees"][0]["certificate"]
    json.dumps(data)


def test_convention_resolution_degree0():
    res = cl.resolve_convention(B2, 0)
    assert res["passing"] == [ConventionFlag.PAPER_42.value]


def test_odd_degree_class_survives_in_type_a():
    # x1 s1 is not a sum of graded commutators, so degree 1 of A_1 is one-dimensional;
    # the expected table (1,0,1,0,2) has no odd-degree classes.
    assert cl.graded_cocenter_dims(A2, 4) == [1, 1, 1, 1, 2]
    H = graded_algebra(A2)
    K = cl.graded_commutator_space(A2, 1)
    assert not K.contains(H.x(1) * H.s(1))
    assert K.contains(H.x(1) - H.x(2))


def test_b2_degree2_dependency():
    # w_C (x1^2 + x2^2) for C = ((),(2)) lies in the degree-2 commutator space
    rep = cl.verify_graded_basis(B2, 2)
    assert rep.dims == [2, 0, 1]
    assert rep.candidate_counts == [2, 0, 2]
    assert rep.degrees[2].verdict == cl.FAILED
    H = graded_algebra(B2)
    wc = H.w((2, -1))
    K = cl.graded_commutator_space(B2, 2)
    assert K.contains(wc * (H.x(1) ** 2 + H.x(2) ** 2))


def test_invariant_basis_b2():
    J = ParabolicSubset.full(B2)
    basis = cl.invariant_basis(J, 4)
    assert [f.expansion for f in basis[:2]] == [{(0, 0): 1}, {(1, 0): 1, (0, 1): 1}]
    # S((V^2)^{W_J}) is generated by y1 + y2 alone, so degree 4 is (y1 + y2)^2
    assert [f.x_degree() for f in basis] == [0, 2, 4]
    assert basis[2].expansion == {(2, 0): 1, (1, 1): 2, (0, 2): 1}


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([A3, A4, B2, B3]), st.data())
def test_invariant_basis_is_invariant(t, data):
    J = ParabolicSubset(t, frozenset(data.draw(st.sets(st.sampled_from(t.indices)))))
    G = group(t)
    for f in cl.invariant_basis(J, 4):
        for g in G.parabolic(J.indices) + G.normalizer(J.indices):
            assert f.act(g) == f


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([A3, A4, B2, B3]), st.data())
def test_clifford_reduce_matches_commutators(t, data):
    gamma = data.draw(st.sampled_from(list(cl.all_compositions(t.n))))
    I = data.draw(st.sampled_from(list(cl.even_subsets(t.n))))
    neg = None if t.family == "A" else data.draw(st.lists(st.booleans(), min_size=len(gamma), max_size=len(gamma)))
    assert cl.clifford_reduce_oracle(gamma, I, t, neg)


def test_clifford_reduce_odd_block_vanishes():
    assert cl.clifford_reduce((2, 1), (2, 3), A3) == 0
    with pytest.raises(ValueError):
        cl.clifford_reduce((3,), (1,), A3)


@pytest.mark.parametrize("t", [A3, A4, B2, B3], ids=str)
def test_class_reduce_matches_commutators(t):
    for w in group(t).elements:
        assert cl.class_reduce_oracle(SignedPerm(t, w))
        assert cl.spin_class_reduce_oracle(SignedPerm(t, w))


def test_non_distinguished_class_vanishes():
    assert cl.class_reduce(SignedPerm(A2, (2, 1))) is None
    assert cl.class_reduce(SignedPerm(A3, (2, 1, 3))) is None
    assert cl.class_reduce(SignedPerm(A3, (2, 3, 1))) == ClassLabel.of((3,))


def test_d4_decoration():
    lab = ClassLabel.of((), (3, 1))
    assert cl.needs_decoration(D4, lab)
    assert not cl.needs_decoration(D4, ClassLabel.of((3, 1)))
    assert not cl.needs_decoration(B3, ClassLabel.of((), (3,)))


def test_filtered_b3_degree0_spans():
    rep = cl.verify_filtered(B3, 0, slack=2)
    assert rep.ok and rep.degrees[0].verdict == cl.VERIFIED_SPAN


def test_filtered_a1_odd_degree_unspanned():
    rep = cl.verify_filtered(A2, 1, slack=2)
    assert rep.degrees[1].verdict == cl.FAILED
    assert rep.degrees[1].witness["kind"] == "unspanned-monomial"


def test_spin_dims_match_hc_dims():
    assert cl.graded_spin_cocenter_dims(A3, 2) == cl.graded_cocenter_dims(A3, 2)
    assert cl.graded_spin_cocenter_dims(B2, 2) == cl.graded_cocenter_dims(B2, 2)


def test_slice_bound():
    with pytest.raises(cl.DimensionBoundExceeded):
        cl.verify_graded_basis(B3, 1, bound=10)


def test_weak_compositions():
    assert sorted(cl.weak_compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(itertools.islice(cl.all_compositions(4), 100))) == 8
