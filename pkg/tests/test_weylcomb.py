import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hecke_cocenter.weylcomb import (
    ClassLabel,
    ParabolicSubset,
    SignedPerm,
    WeylError,
    WeylType,
    all_labels,
    counting_identity_check,
    distinguished_classes,
    group,
    is_elliptic_element,
    J_of_class,
    normalizer_identity_check,
)

TYPES = [WeylType("A", 3), WeylType("A", 4), WeylType("B", 2), WeylType("B", 3), WeylType("D", 4)]


def test_orders():
    assert [group(t).order() for t in TYPES] == [6, 24, 8, 48, 192]


def test_type_bounds():
    for fam, n in (("A", 0), ("B", 1), ("D", 3), ("C", 3)):
        with pytest.raises(WeylError):
            WeylType(fam, n)
    assert str(WeylType("A", 3)) == "A_2"


def test_bad_windows():
    with pytest.raises(WeylError):
        SignedPerm(WeylType("A", 2), (-1, 2))
    with pytest.raises(WeylError):
        SignedPerm(WeylType("D", 4), (-1, 2, 3, 4))
    with pytest.raises(WeylError):
        SignedPerm(WeylType("B", 2), (1, 1))


def test_coxeter_matrix():
    assert group(WeylType("B", 2)).coxeter_m(1, 2) == 4
    assert group(WeylType("A", 4)).coxeter_m(1, 3) == 2
    assert group(WeylType("D", 4)).coxeter_m(2, 4) == 3
    assert group(WeylType("D", 4)).coxeter_m(3, 4) == 2


def _elements(t):
    return st.sampled_from(group(t).elements).map(lambda w: SignedPerm(t, w))


@settings(max_examples=60)
@given(st.data())
def test_group_laws(data):
    t = data.draw(st.sampled_from(TYPES))
    a, b, c = (data.draw(_elements(t)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert (a * b).inverse() == b.inverse() * a.inverse()


@settings(max_examples=60)
@given(st.data())
def test_reduced_words(data):
    t = data.draw(st.sampled_from(TYPES))
    w = data.draw(_elements(t))
    G = group(t)
    word = w.reduced_word()
    assert len(word) == w.length()
    assert G.from_word(word) == w.window
    assert G.length(w.inverse().window) == w.length()


def test_cycle_types():
    G = group(WeylType("B", 2))
    assert G.cycle_type((2, -1)) == ClassLabel.of((), (2,))
    assert G.cycle_type((-1, -2)) == ClassLabel.of((), (1, 1))
    assert G.cycle_type((2, 1)) == ClassLabel.of((2,))


def test_class_sizes_sum_to_order():
    for t in TYPES:
        G = group(t)
        assert sum(len(G.class_elements(lab)) for lab in all_labels(t)) == G.order()


def test_distinguished_classes():
    # odd partitions in type A; (OP, EP) bipartitions in type B
    assert [str(l) for l in distinguished_classes(WeylType("A", 4))] == ["(3,1)", "(1,1,1,1)"]
    assert set(distinguished_classes(WeylType("B", 3))) == {
        ClassLabel.of((3,)),
        ClassLabel.of((1, 1, 1)),
        ClassLabel.of((1,), (2,)),
    }
    assert ClassLabel.of((), (3, 1)) in distinguished_classes(WeylType("D", 4))


def test_class_representative_is_elliptic():
    for t in TYPES[:4]:
        for lab in distinguished_classes(t):
            J, w = J_of_class(t, lab)
            assert group(t).cycle_type(w.window) == lab
            assert set(w.reduced_word()) <= J.indices
            assert is_elliptic_element(w, J)


def test_identities_small():
    t = WeylType("A", 3)
    subs = [ParabolicSubset(t, frozenset(c)) for r in range(3) for c in itertools.combinations(t.indices, r)]
    G = group(t)
    for J, Jp in itertools.product(subs, subs):
        if G.equivalent(J.indices, Jp.indices):
            assert counting_identity_check(J, Jp)
    J = ParabolicSubset.full(t)
    for w in G.parabolic(J.indices):
        sw = SignedPerm(t, w)
        if is_elliptic_element(sw, J):
            assert normalizer_identity_check(J, sw)
