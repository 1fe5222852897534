import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hecke_cocenter import cocenterlab as cl
from hecke_cocenter.exactnum import I, SQRT2
from hecke_cocenter.heckeclifford import HeckeClifford, random_hc_element
from hecke_cocenter.morita import (
    MoritaMap,
    TensorElement,
    homomorphism_fuzz,
    morita_map,
    phi,
    solve_generator_images,
    transport_identity,
    transport_independence,
    verify_iso,
)
from hecke_cocenter.spinhecke import random_spin_element
from hecke_cocenter.weylcomb import WeylType

A2, A3, B2, B3, D4 = (WeylType(*p) for p in (("A", 2), ("A", 3), ("B", 2), ("B", 3), ("D", 4)))


@pytest.mark.parametrize("t,count", [(A2, 2), (A3, 2), (B2, 4), (B3, 4), (D4, 2)], ids=str)
def test_solution_set(t, count):
    gi = solve_generator_images(t)
    assert len(gi.solutions) == count
    assert all(k == I for k in gi.kappa)
    assert all(l == -(I * SQRT2) for l in gi.lam)
    assert (gi.spin_u is not None) == (t.family == "B")
    for kappa, lam, su in gi.solutions:
        assert set(kappa) <= {I, -I}
        assert len(set(kappa)) == 1 or t.family == "B"


@pytest.mark.parametrize("t", [A2, A3, B2, B3, D4], ids=str)
def test_relations_preserved(t):
    assert morita_map(t).failing_relations() == []
    assert morita_map(t, graded=True).failing_relations() == []


def test_rejects_other_solutions():
    gi = solve_generator_images(A3)
    wrong = type(gi)(gi.type, tuple(-k for k in gi.kappa), tuple(-l for l in gi.lam), None, gi.u0, gi.v0)
    assert MoritaMap(wrong).failing_relations() == []
    worse = type(gi)(gi.type, gi.kappa, tuple(2 * l for l in gi.lam), None, gi.u0, gi.v0)
    assert MoritaMap(worse).failing_relations() != []


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([A2, A3, B2]), st.booleans(), st.integers(0, 2**32 - 1))
def test_phi_is_multiplicative(t, graded, seed):
    M = morita_map(t, graded)
    rng = np.random.default_rng(seed)
    a, b = (random_hc_element(rng, M.H, max_xdeg=1) for _ in range(2))
    assert M.phi(a * b) == M.phi(a) * M.phi(b)
    assert M.phi(a + b) == M.phi(a) + M.phi(b)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([A3, B2]), st.integers(0, 2**32 - 1))
def test_tensor_product_is_associative(t, seed):
    M = morita_map(t)
    S = M.S
    rng = np.random.default_rng(seed)

    def rand():
        cl_part = {int(rng.integers(0, 1 << t.n)): int(rng.integers(1, 3))}
        return TensorElement.pure(S, cl_part, random_spin_element(rng, S, max_bdeg=1))

    a, b, c = rand(), rand(), rand()
    assert (a * b) * c == a * (b * c)


def test_super_sign():
    M = morita_map(A3)
    S = M.S
    c1 = TensorElement.clifford(S, {1: 1})
    t1 = TensorElement.pure(S, {0: 1}, S.t(1))
    b1 = TensorElement.pure(S, {0: 1}, S.b(1))
    # odd t_1 and b_1 pass odd c_1 with a sign
    assert t1 * c1 == -(c1 * t1)
    assert b1 * c1 == -(c1 * b1)


@pytest.mark.parametrize("t", [A3, B2, D4], ids=str)
def test_iota_inverts_phi(t):
    M = morita_map(t)
    S = M.S
    for kind, i in S.generators():
        y = S.generator(kind, i)
        assert M.phi(M.iota(y)) == TensorElement.pure(S, {0: 1}, y)


@pytest.mark.parametrize("t,d", [(A2, 2), (A3, 1), (B2, 1), (B3, 0)], ids=str)
def test_iso(t, d):
    assert verify_iso(t, d).ok
    assert verify_iso(t, d, graded=True).ok


def test_fuzz_is_clean():
    assert homomorphism_fuzz(B2, pairs=30, seed=7) == []


def test_module_level_phi_checks_parameters():
    M = morita_map(A3)
    assert phi(M.H.x(1)) == M.generator_image("x", 1)
    with pytest.raises(ValueError):
        phi(HeckeClifford(A3, 2, 0).x(1))


def test_transport_identity():
    assert transport_identity(B2, 2) == []


def test_transport_b3_degree0():
    rep = transport_independence(B3, 0)
    assert rep.ok
    assert rep.degrees[0].independence == cl.INDEPENDENT


def test_transport_b2_degree2_dependent():
    rep = transport_independence(B2, 2)
    assert rep.degrees[2].independence == cl.FAILED
    assert rep.degrees[2].witness["kind"] == "dependent-images"
