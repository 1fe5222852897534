"""Even cocenters of aHC_X and saH_X: reductions, candidate bases, exact verification.

Commutator spaces are generated from brackets ``[g, m]`` with ``g`` a generator and
``m`` a PBW monomial.  This loses nothing: from ``[xy, z] = [x, yz] + [y, zx]`` every
bracket of two monomials is a combination of brackets ``[g, m']`` with ``m'`` running
over monomials of no larger filtration degree (equal degree in the graded algebra)
and the same total parity.  So in the graded algebra the degree-``d`` even part of
``[A, A]`` is spanned by the ``[g, m]`` with ``deg g + deg m = d`` and
``parity(g) = parity(m)``.

Invariant polynomials are stored in the coordinates ``y_i = x_i^2`` (or ``b_i^2``).
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from gmpy2 import mpq

from .exactnum import as_rational, scalar_to_str
from .heckeclifford import (
    HeckeClifford,
    PBWElement,
    cliff_mul,
    eps_from_indices,
    eps_indices,
    graded_algebra,
    popcount,
)
from .linalg import ColumnIndex, DimensionBoundExceeded, Echelon, independent_modulo
from .spinhecke import SpinHecke, SpinPBWElement, cocycle, graded_spin_algebra
from .weylcomb import (
    ClassLabel,
    ConventionFlag,
    ParabolicSubset,
    SignedPerm,
    WeylError,
    WeylType,
    compose_windows,
    distinguished_classes,
    group,
    invert,
    J_of_class,
    resolved_convention,
    survives,
)

DEFAULT_SLICE_BOUND = 200_000
DEFAULT_U0 = mpq(7, 3)
DEFAULT_V0 = mpq(5, 2)

VERIFIED_SPAN = "verified-span"
VERIFIED_DIM = "verified-dim-match"
CONSISTENT = "consistent-no-counterexample"
FAILED = "FAILED"
INDEPENDENT = "verified-independent"
PASSING = {VERIFIED_SPAN, VERIFIED_DIM, CONSISTENT}


def weak_compositions(d: int, n: int):
    """Exponent vectors of total degree d in n variables, lexicographically decreasing."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in weak_compositions(d - first, n - 1):
            yield (first,) + rest


def _convention(wtype: WeylType, convention) -> ConventionFlag:
    return resolved_convention(wtype) if convention is None else ConventionFlag(convention)


# ----------------------------------------------------------------------
# Clifford reduction
# ----------------------------------------------------------------------


def composition_blocks(gamma: Sequence[int]) -> list:
    blocks, start = [], 1
    for g in gamma:
        if g <= 0:
            raise ValueError(f"composition parts must be positive: {tuple(gamma)}")
        blocks.append((start, start + g - 1))
        start += g
    return blocks


def w_gamma(wtype: WeylType, gamma: Sequence[int], negative: Sequence[bool] | None = None) -> SignedPerm:
    """Product of cycles a -> a+1 -> ... -> b -> a over the blocks of gamma.

    A block marked negative closes with b -> -a (the element s_a ... s_b of type B).
    Default: positive blocks in type A, negative blocks in types B and D.
    """
    if sum(gamma) != wtype.n:
        raise ValueError(f"{tuple(gamma)} is not a composition of {wtype.n}")
    blocks = composition_blocks(gamma)
    if negative is None:
        negative = [wtype.family != "A"] * len(blocks)
    if len(negative) != len(blocks):
        raise ValueError("need one sign flag per block")
    if wtype.family == "A" and any(negative):
        raise WeylError("type A has no negative cycles")
    window = [0] * wtype.n
    for (a, b), neg in zip(blocks, negative):
        for i in range(a, b):
            window[i - 1] = i + 1
        window[b - 1] = -a if neg else a
    return SignedPerm(wtype, tuple(window))


def clifford_reduce(gamma: Sequence[int], I: Iterable[int], wtype: WeylType, negative: Sequence[bool] | None = None) -> int:
    """w_gamma c_I modulo commutators: 0, or the sign s with w_gamma c_I == s * w_gamma.

    The sign is obtained by replaying the rewriting
    ``w c_{i1} c_R = sgn c_{w(i1)} w c_R == sgn w c_R c_{w(i1)}`` (cyclic move),
    always on the least remaining index, until no Clifford factor is left.
    """
    I = sorted(set(I))
    if len(I) % 2:
        raise ValueError(f"|I| must be even, got {I}")
    if any(not 1 <= i <= wtype.n for i in I):
        raise ValueError(f"I must be a subset of 1..{wtype.n}")
    w = w_gamma(wtype, gamma, negative).window
    for a, b in composition_blocks(gamma):
        if sum(1 for i in I if a <= i <= b) % 2:
            return 0
    sign, mask = 1, eps_from_indices(I)
    for _ in range(wtype.n * wtype.n + 1):
        if not mask:
            return sign
        low = mask & -mask
        i1 = low.bit_length()
        image = w[i1 - 1]
        s, mask = cliff_mul(mask ^ low, 1 << (abs(image) - 1))
        sign *= s * (1 if image > 0 else -1)
    raise ArithmeticError("Clifford reduction did not terminate")


def w_times_cliff(H: HeckeClifford, w: SignedPerm | tuple, I: Iterable[int]) -> PBWElement:
    """The element w c_I (c_I in increasing index order)."""
    out = H.w(w)
    for i in sorted(I):
        out = out * H.c(i)
    return out


# ----------------------------------------------------------------------
# class reduction
# ----------------------------------------------------------------------


def class_reduce(w: SignedPerm, convention=None) -> ClassLabel | None:
    """None when w vanishes in the even cocenter, otherwise its class label.

    Conjugate elements agree in the cocenter, so a surviving w is congruent to the
    fixed class element w_C of ``J_of_class``.
    """
    wtype = w.type
    label = group(wtype).cycle_type(w.window)
    if not survives(wtype, label, _convention(wtype, convention)):
        return None
    return label


def conjugator_to(w: SignedPerm, target: SignedPerm) -> tuple:
    """Least g (in the group's element order) with g w g^-1 = target."""
    G = group(w.type)
    for g in G.elements:
        if compose_windows(compose_windows(g, w.window), invert(g)) == target.window:
            return g
    raise WeylError(f"{w} and {target} are not conjugate")


def spin_class_reduce(w: SignedPerm, convention=None):
    """None, or (sign, label) with t_w == sign * t_{w_C} modulo commutators.

    Odd elements t_w (odd length) lie outside the even cocenter and give None.  The
    sign comes from ``t_w == t_g t_w t_g^-1`` and the sign cocycle.
    """
    wtype = w.type
    G = group(wtype)
    if G.length(w.window) % 2:
        return None
    label = G.cycle_type(w.window)
    if not survives(wtype, label, _convention(wtype, convention)):
        return None
    _, wc = J_of_class(wtype, label)
    g = conjugator_to(w, wc)
    C = cocycle(wtype)
    ginv = invert(g)
    # t_g^-1 = sign(g, g^-1) t_{g^-1}
    s = C.sign(g, ginv) * C.sign(g, w.window) * C.sign(compose_windows(g, w.window), ginv)
    return s, label


# ----------------------------------------------------------------------
# invariant polynomials
# ----------------------------------------------------------------------


def _act_exponent(w: tuple, beta: tuple) -> tuple:
    out = [0] * len(beta)
    for i, e in enumerate(beta):
        if e:
            out[abs(w[i]) - 1] = e
    return tuple(out)


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for a, c in p.items():
        for b, d in q.items():
            k = tuple(x + y for x, y in zip(a, b))
            out[k] = out.get(k, 0) + c * d
    return {k: c for k, c in out.items() if c}


class InvariantPoly:
    """Polynomial in y_i = x_i^2 (rational coefficients), tagged with (type, J)."""

    __slots__ = ("wtype", "J", "expansion", "letter")

    def __init__(self, wtype: WeylType, J: ParabolicSubset | None, expansion: dict, letter: str = "x"):
        self.wtype = wtype
        self.J = J
        self.expansion = {tuple(k): mpq(c) for k, c in expansion.items() if c}
        self.letter = letter

    def y_degree(self) -> int:
        if not self.expansion:
            raise ValueError("zero polynomial has no degree")
        return max(sum(k) for k in self.expansion)

    def x_degree(self) -> int:
        return 2 * self.y_degree()

    def act(self, w) -> "InvariantPoly":
        """w acting by x_i^2 -> x_{|w(i)|}^2."""
        window = w.window if isinstance(w, SignedPerm) else tuple(w)
        return InvariantPoly(self.wtype, self.J, {_act_exponent(window, k): c for k, c in self.expansion.items()}, self.letter)

    def __eq__(self, other) -> bool:
        return isinstance(other, InvariantPoly) and self.expansion == other.expansion

    def __hash__(self):
        return hash(frozenset(self.expansion.items()))

    def sorted_terms(self) -> list:
        return sorted(self.expansion.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def to_pbw(self, H: HeckeClifford) -> PBWElement:
        ident = H.G.identity
        return H.element({(tuple(2 * e for e in k), 0, ident): c for k, c in self.expansion.items()})

    def to_spin(self, S: SpinHecke) -> SpinPBWElement:
        ident = S.G.identity
        return S.element({(tuple(2 * e for e in k), ident): c for k, c in self.expansion.items()})

    def text(self, letter: str | None = None) -> str:
        letter = letter or self.letter
        if not self.expansion:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            mono = "*".join(f"{letter}{i}^{2 * e}" for i, e in enumerate(k, start=1) if e) or "1"
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"InvariantPoly({self.text()})"


def orbit_sums(wtype: WeylType, J: ParabolicSubset) -> list:
    """Orbit sums of the y_i under W_J: a basis of (V^2)^{W_J}."""
    G = group(wtype)
    elems = G.parabolic(J.indices)
    seen, sums = set(), []
    for i in range(1, wtype.n + 1):
        if i in seen:
            continue
        orbit = sorted({abs(w[i - 1]) for w in elems})
        seen.update(orbit)
        vec = {}
        for j in orbit:
            e = [0] * wtype.n
            e[j - 1] = 1
            vec[tuple(e)] = 1
        sums.append(vec)
    return sums


def _primitive(row: list) -> list:
    """Scale a rational row to coprime integers with positive leading entry."""
    fr = [Fraction(int(c.numerator), int(c.denominator)) for c in row]
    den = 1
    for c in fr:
        if c:
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints] if g else ints
    lead = next((c for c in ints if c), 1)
    if lead < 0:
        ints = [-c for c in ints]
    return [mpq(c) for c in ints]


def _rref(rows: list) -> list:
    rows = [list(r) for r in rows]
    out, col = [], 0
    ncols = len(rows[0]) if rows else 0
    while rows and col < ncols:
        piv = next((r for r in rows if r[col]), None)
        if piv is None:
            col += 1
            continue
        rows.remove(piv)
        inv = 1 / piv[col]
        piv = [c * inv for c in piv]
        rows = [[a - r[col] * b for a, b in zip(r, piv)] for r in rows]
        rows = [r for r in rows if any(r)]
        out = [[a - r[col] * b for a, b in zip(r, piv)] for r in out]
        out.append(piv)
        col += 1
    return out


def _basis_from_spanning(wtype: WeylType, J, e: int, polys: list, letter: str) -> list:
    cols = list(weak_compositions(e, wtype.n))
    rows = [[p.get(k, mpq(0)) for k in cols] for p in polys]
    rows = [r for r in rows if any(r)]
    basis = []
    for r in _rref(rows):
        r = _primitive(r)
        basis.append(InvariantPoly(wtype, J, {k: c for k, c in zip(cols, r) if c}, letter))
    return basis


def _reynolds(polys: list, group_elems: list, act) -> list:
    out = []
    for p in polys:
        acc: dict = {}
        for g in group_elems:
            for k, c in act(g, p).items():
                acc[k] = acc.get(k, 0) + c
        out.append({k: mpq(c) / len(group_elems) for k, c in acc.items() if c})
    return out


def _orbit_monomials(wtype: WeylType, J: ParabolicSubset, e: int) -> list:
    sums = orbit_sums(wtype, J)
    one = {(0,) * wtype.n: mpq(1)}
    polys = []
    for expo in weak_compositions(e, len(sums)):
        p = one
        for s, k in zip(sums, expo):
            for _ in range(k):
                p = _poly_mul(p, s)
        polys.append(p)
    return polys


def invariant_basis(J: ParabolicSubset, max_xdeg: int) -> list:
    """Basis of S((V^2)^{W_J})^{N_W(W_J)} up to x-degree max_xdeg, graded-lex ordered.

    Orbit-sum monomials are averaged over N_W(W_J); each degree is reduced to row
    echelon form and scaled to primitive integer coefficients.
    """
    if max_xdeg < 0 or max_xdeg % 2:
        raise ValueError("max_xdeg must be a nonnegative even integer")
    wtype = J.type
    N = group(wtype).normalizer(J.indices)
    act = lambda g, p: {_act_exponent(g, k): c for k, c in p.items()}
    out = []
    for e in range(max_xdeg // 2 + 1):
        avg = _reynolds(_orbit_monomials(wtype, J, e), N, act)
        out.extend(_basis_from_spanning(wtype, J, e, avg, "x"))
    return out


def spin_tw_inverse(S: SpinHecke, g: tuple) -> SpinPBWElement:
    """t_g^-1 = sign(g, g^-1) t_{g^-1}."""
    ginv = invert(g)
    return S.tw(ginv) * S.cocycle.sign(g, ginv)


def spin_conjugate_b2(S: SpinHecke, g: tuple, p: dict) -> dict:
    """t_g f t_g^-1 for f a polynomial in the b_i^2, computed in the spin algebra."""
    ident = S.G.identity
    f = S.element({(tuple(2 * e for e in k), ident): c for k, c in p.items()})
    img = S.tw(g) * f * spin_tw_inverse(S, g)
    out = {}
    for (alpha, w), c in img.terms.items():
        if w != ident or any(a % 2 for a in alpha):
            raise ArithmeticError("conjugate of a b^2-polynomial left the b^2-subalgebra")
        out[tuple(a // 2 for a in alpha)] = c
    return out


def spin_invariant_basis(J: ParabolicSubset, max_bdeg: int) -> list:
    """b-side mirror of ``invariant_basis`` with the N_W(W_J) action computed natively
    as conjugation by t_g in the graded spin algebra."""
    if max_bdeg < 0 or max_bdeg % 2:
        raise ValueError("max_bdeg must be a nonnegative even integer")
    wtype = J.type
    S = graded_spin_algebra(wtype)
    N = group(wtype).normalizer(J.indices)
    act = lambda g, p: spin_conjugate_b2(S, g, p)
    out = []
    for e in range(max_bdeg // 2 + 1):
        avg = _reynolds(_orbit_monomials(wtype, J, e), N, act)
        out.extend(_basis_from_spanning(wtype, J, e, avg, "b"))
    return out


# ----------------------------------------------------------------------
# candidate bases
# ----------------------------------------------------------------------


@dataclass
class Candidate:
    label: ClassLabel
    J: ParabolicSubset
    w: SignedPerm
    f: InvariantPoly
    element: PBWElement
    cliff: int = 0

    @property
    def degree(self) -> int:
        return self.f.x_degree()

    def describe(self, prefix: str = "") -> str:
        c = ""
        if self.cliff:
            c = "c{" + ",".join(map(str, eps_indices(self.cliff))) + "} * "
        return f"{prefix}{c}[{','.join(map(str, self.w.window))}] * ({self.f.text()})"


def needs_decoration(wtype: WeylType, label: ClassLabel) -> bool:
    """Type D, n even, labels (empty, SOP): the bare w_C can vanish in the HC cocenter."""
    return wtype.family == "D" and wtype.n % 2 == 0 and not label.lam and bool(label.mu)


@lru_cache(maxsize=None)
def clifford_decoration(wtype: WeylType, label: ClassLabel) -> int:
    """Clifford bitmask I with c_I w_C nonzero in the degree-0 graded HC cocenter.

    0 unless ``needs_decoration``; otherwise the first even I (by size, then bitmask)
    with ``c_I w_C`` outside the degree-0 commutator space.
    """
    if not needs_decoration(wtype, label):
        return 0
    _, wc = J_of_class(wtype, label)
    H = graded_algebra(wtype)
    K = graded_commutator_space(wtype, 0)
    masks = sorted((m for m in range(1 << wtype.n) if popcount(m) % 2 == 0), key=lambda m: (popcount(m), m))
    for m in masks:
        if not K.contains(H.monomial((0,) * wtype.n, m, wc)):
            return m
    raise WeylError(f"no Clifford decoration keeps {label} alive")


def candidate_data(wtype: WeylType, max_xdeg: int, convention=None, algebra: HeckeClifford | None = None) -> list:
    H = algebra or graded_algebra(wtype)
    out = []
    for label in distinguished_classes(wtype, _convention(wtype, convention)):
        J, wc = J_of_class(wtype, label)
        cw = H.monomial((0,) * wtype.n, clifford_decoration(wtype, label), wc)
        for f in invariant_basis(J, max_xdeg):
            out.append(Candidate(label, J, wc, f, cw * f.to_pbw(H), clifford_decoration(wtype, label)))
    return out


def candidate_basis(wtype: WeylType, max_xdeg: int, convention=None, algebra: HeckeClifford | None = None) -> list:
    """The elements w_C f_{J_C;i} for the distinguished classes C, in PBW form."""
    return [c.element for c in candidate_data(wtype, max_xdeg, convention, algebra)]


def spin_candidate_data(wtype: WeylType, max_bdeg: int, convention=None, algebra: SpinHecke | None = None) -> list:
    S = algebra or graded_spin_algebra(wtype)
    out = []
    for label in distinguished_classes(wtype, _convention(wtype, convention)):
        J, wc = J_of_class(wtype, label)
        for f in spin_invariant_basis(J, max_bdeg):
            out.append(Candidate(label, J, wc, f, S.tw(wc) * f.to_spin(S)))
    return out


def spin_candidate_basis(wtype: WeylType, max_bdeg: int, convention=None, algebra: SpinHecke | None = None) -> list:
    """The elements t_{w_C} f^-_{J_C;i}, in spin PBW form."""
    return [c.element for c in spin_candidate_data(wtype, max_bdeg, convention, algebra)]


# ----------------------------------------------------------------------
# slices and commutator spaces
# ----------------------------------------------------------------------


class _HCSide:
    name = "aHC"
    letter = "x"

    def __init__(self, A: HeckeClifford):
        self.A = A
        self.G = A.G
        self.n = A.n

    def monomials(self, d: int, parity: int) -> list:
        out = []
        n = self.n
        eps_list = [e for e in range(1 << n) if popcount(e) & 1 == parity]
        for alpha in weak_compositions(d, n):
            for e in eps_list:
                for w in self.G.elements:
                    out.append((alpha, e, w))
        return out

    def generators(self) -> list:
        A = self.A
        gens = [(A.x(i).terms, 1, 0) for i in range(1, self.n + 1)]
        gens += [(A.c(i).terms, 0, 1) for i in range(1, self.n + 1)]
        gens += [(A.s(i).terms, 0, 0) for i in A.type.indices]
        return gens

    def slice_size(self, d: int) -> int:
        return len(list(weak_compositions(d, self.n))) * (1 << (self.n - 1)) * len(self.G.elements)


class _SpinSide:
    name = "saH"
    letter = "b"

    def __init__(self, S: SpinHecke):
        self.A = S
        self.G = S.G
        self.n = S.n

    def monomials(self, d: int, parity: int) -> list:
        out = []
        for alpha in weak_compositions(d, self.n):
            for w in self.G.elements:
                if (d + self.G.length(w)) & 1 == parity:
                    out.append((alpha, w))
        return out

    def generators(self) -> list:
        S = self.A
        gens = [(S.b(i).terms, 1, 1) for i in range(1, self.n + 1)]
        gens += [(S.t(i).terms, 0, 1) for i in S.type.indices]
        return gens

    def slice_size(self, d: int) -> int:
        return len(self.monomials(d, 0))


def _side(A):
    return _SpinSide(A) if isinstance(A, SpinHecke) else _HCSide(A)


def _bracket(A, g: dict, m: tuple) -> dict:
    one = {m: A.coerce_scalar(1)}
    left = A.multiply_terms(g, one)
    for k, c in A.multiply_terms(one, g).items():
        cur = left.get(k)
        if cur is None:
            left[k] = -c
        else:
            s = cur - c
            if s:
                left[k] = s
            else:
                del left[k]
    return left


def _commutator_rows(side, d_total_max: int, exact: bool):
    """Brackets [g, m] of equal parity with deg g + deg m = d (exact) or <= d."""
    for g, gdeg, gpar in side.generators():
        degs = [d_total_max - gdeg] if exact else range(0, d_total_max - gdeg + 1)
        for dm in degs:
            if dm < 0:
                continue
            for m in side.monomials(dm, gpar):
                yield _bracket(side.A, g, m)


@dataclass
class CommutatorSpace:
    echelon: Echelon
    columns: ColumnIndex
    degree: int

    @property
    def rank(self) -> int:
        return self.echelon.rank

    def contains(self, element) -> bool:
        return self.echelon.contains(self.columns.vector(element.terms))

    def vector(self, element) -> dict:
        return self.columns.vector(element.terms)


def commutator_space(A, xdeg: int, bound: int = DEFAULT_SLICE_BOUND) -> CommutatorSpace:
    """Degree-xdeg even part of [A, A] for a graded algebra A (aHC or saH)."""
    if not A.is_graded:
        raise ValueError("commutator_space needs the graded algebra (all parameters 0)")
    side = _side(A)
    size = side.slice_size(xdeg)
    if size > bound:
        raise DimensionBoundExceeded(f"degree-{xdeg} even slice has dimension {size} > {bound}")
    cols = ColumnIndex(side.monomials(xdeg, 0))
    E = Echelon()
    for row in _commutator_rows(side, xdeg, exact=True):
        if row:
            E.add(cols.vector(row))
    return CommutatorSpace(E, cols, xdeg)


@lru_cache(maxsize=64)
def graded_commutator_space(wtype: WeylType, xdeg: int, bound: int = DEFAULT_SLICE_BOUND) -> CommutatorSpace:
    """Exact row-reduced basis of the degree-xdeg even part of [GRaHC, GRaHC]."""
    return commutator_space(graded_algebra(wtype), xdeg, bound)


@lru_cache(maxsize=64)
def graded_spin_commutator_space(wtype: WeylType, bdeg: int, bound: int = DEFAULT_SLICE_BOUND) -> CommutatorSpace:
    return commutator_space(graded_spin_algebra(wtype), bdeg, bound)


def graded_cocenter_dims(wtype: WeylType, max_xdeg: int, bound: int = DEFAULT_SLICE_BOUND) -> list:
    out = []
    for d in range(max_xdeg + 1):
        K = graded_commutator_space(wtype, d, bound)
        out.append(len(K.columns) - K.rank)
    return out


def graded_spin_cocenter_dims(wtype: WeylType, max_bdeg: int, bound: int = DEFAULT_SLICE_BOUND) -> list:
    out = []
    for d in range(max_bdeg + 1):
        K = graded_spin_commutator_space(wtype, d, bound)
        out.append(len(K.columns) - K.rank)
    return out


# ----------------------------------------------------------------------
# reports
# ----------------------------------------------------------------------


def certificate(payload) -> str:
    text = json.dumps(payload, sort_keys=True, default=str)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class DegreeResult:
    degree: int
    slice_dim: int
    commutator_rank: int
    cocenter_dim: int | None
    candidates: int
    verdict: str
    independence: str | None = None
    witness: dict | None = None
    certificate: str = ""

    def to_json(self) -> dict:
        out = {
            "degree": self.degree,
            "slice_dim": self.slice_dim,
            "commutator_rank": self.commutator_rank,
            "cocenter_dim": self.cocenter_dim,
            "candidates": self.candidates,
            "verdict": self.verdict,
            "certificate": self.certificate,
        }
        if self.independence is not None:
            out["independence"] = self.independence
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class CocenterReport:
    algebra: str = ""
    family: str = ""
    n: int = 0
    mode: str = ""
    max_deg: int = 0
    convention: str | None = None
    slack: int | None = None
    parameters: dict = field(default_factory=dict)
    labels: list = field(default_factory=list)
    degrees: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def dims(self) -> list:
        return [d.cocenter_dim for d in self.degrees]

    @property
    def candidate_counts(self) -> list:
        return [d.candidates for d in self.degrees]

    @property
    def verdict(self) -> str:
        if not self.degrees:
            return "empty"
        if any(d.verdict == FAILED or d.independence == FAILED for d in self.degrees):
            return FAILED
        kinds = {d.verdict for d in self.degrees}
        return kinds.pop() if len(kinds) == 1 else ",".join(sorted(kinds))

    @property
    def ok(self) -> bool:
        return bool(self.degrees) and all(
            d.verdict in PASSING and d.independence in (None, CONSISTENT, VERIFIED_DIM, INDEPENDENT) for d in self.degrees
        )

    def to_json(self) -> dict:
        out = {
            "report": "cocenter",
            "algebra": self.algebra,
            "type": self.family,
            "n": self.n,
            "mode": self.mode,
            "max_deg": self.max_deg,
            "convention": self.convention,
            "slack": self.slack,
            "parameters": self.parameters,
            "distinguished_labels": self.labels,
            "degrees": [d.to_json() for d in self.degrees],
            "dims": self.dims,
            "candidate_counts": self.candidate_counts,
            "verdict": self.verdict,
        }
        if self.notes:
            out["notes"] = self.notes
        if self.extra:
            out.update(self.extra)
        return out


def _kernel_witness(cands: list, combo: dict, pretty_prefix: str) -> dict:
    return {cands[i].describe(pretty_prefix): scalar_to_str(c) for i, c in combo.items()}


def _verify_graded(A, wtype: WeylType, cands: list, max_deg: int, spaces, convention: ConventionFlag, prefix: str) -> CocenterReport:
    side = _side(A)
    rep = CocenterReport(
        algebra=side.name,
        family=wtype.family,
        n=wtype.n,
        mode="graded",
        max_deg=max_deg,
        convention=convention.value,
        parameters={"u": "0", "v": "0"} if side.name == "aHC" else {"u": "0"},
        labels=[str(l) for l in distinguished_classes(wtype, convention)],
    )
    for d in range(max_deg + 1):
        K = spaces(d)
        dim = len(K.columns) - K.rank
        here = [c for c in cands if c.degree == d]
        vecs = [K.vector(c.element) for c in here]
        indep, combo = independent_modulo(K.echelon, vecs, len(K.columns))
        witness = None
        if not indep:
            verdict = FAILED
            witness = {"kind": "dependent-candidates", "degree": d, "kernel": _kernel_witness(here, combo, prefix)}
        elif dim != len(here):
            verdict = FAILED
            E = K.echelon.copy()
            for v in vecs:
                E.add(v)
            missing = next((m for i, m in enumerate(K.columns.keys) if not E.contains({i: 1})), None)
            witness = {
                "kind": "dimension-mismatch",
                "degree": d,
                "cocenter_dim": dim,
                "candidates": len(here),
                "uncovered_monomial": str(missing),
            }
        else:
            verdict = VERIFIED_DIM
        cert = certificate({"d": d, "pivots": K.echelon.pivots(), "cands": [c.describe() for c in here]})
        rep.degrees.append(DegreeResult(d, len(K.columns), K.rank, dim, len(here), verdict, None, witness, cert))
    return rep


def verify_graded_basis(wtype: WeylType, max_xdeg: int, convention=None, bound: int = DEFAULT_SLICE_BOUND) -> CocenterReport:
    """Exact check that the candidates form a basis of the graded even cocenter per degree."""
    conv = _convention(wtype, convention)
    cands = candidate_data(wtype, max_xdeg - max_xdeg % 2, conv)
    return _verify_graded(
        graded_algebra(wtype), wtype, cands, max_xdeg, lambda d: graded_commutator_space(wtype, d, bound), conv, ""
    )


def verify_spin_graded_basis(wtype: WeylType, max_bdeg: int, convention=None, bound: int = DEFAULT_SLICE_BOUND) -> CocenterReport:
    conv = _convention(wtype, convention)
    cands = spin_candidate_data(wtype, max_bdeg - max_bdeg % 2, conv)
    return _verify_graded(
        graded_spin_algebra(wtype), wtype, cands, max_bdeg, lambda d: graded_spin_commutator_space(wtype, d, bound), conv, "t"
    )


def resolve_convention(wtype: WeylType, max_xdeg: int = 2) -> dict:
    """Run the graded check under both conventions; report which ones pass."""
    verdicts = {}
    for conv in ConventionFlag:
        rep = verify_graded_basis(wtype, max_xdeg, conv)
        verdicts[conv.value] = {"verdict": rep.verdict, "dims": rep.dims, "candidates": rep.candidate_counts}
    passing = [k for k, v in verdicts.items() if v["verdict"] == VERIFIED_DIM]
    return {"type": str(wtype), "max_deg": max_xdeg, "results": verdicts, "passing": passing}


def verify_filtered(
    wtype: WeylType,
    max_xdeg: int,
    slack: int = 2,
    u0=DEFAULT_U0,
    v0=DEFAULT_V0,
    convention=None,
    bound: int = DEFAULT_SLICE_BOUND,
) -> CocenterReport:
    """Spanning certificate for the candidates in aHC_X at u = u0 (v = v0).

    Uses the brackets [g, m] of filtration degree <= max_xdeg + slack and keeps the
    part of their span inside F^max_xdeg.  That is a subspace of the true commutator
    space, so full coverage proves spanning; independence modulo it is only
    evidence and is reported as consistent-no-counterexample.
    """
    conv = _convention(wtype, convention)
    u0, v0 = as_rational(u0), as_rational(v0)
    A = HeckeClifford(wtype, u0, v0)
    side = _HCSide(A)
    top = max_xdeg + slack
    size = sum(side.slice_size(d) for d in range(top + 1))
    if size > bound:
        raise DimensionBoundExceeded(f"filtered slice has dimension {size} > {bound}")
    # high degrees first, so the F^max part is a tail of the column order
    order = [m for d in range(top, -1, -1) for m in side.monomials(d, 0)]
    cols = ColumnIndex(order)
    threshold = sum(side.slice_size(d) for d in range(max_xdeg + 1, top + 1))
    E = Echelon()
    for row in _commutator_rows(side, top, exact=False):
        if row:
            E.add(cols.vector(row))
    low = Echelon()
    low.rows = {p: r for p, r in E.rows.items() if p >= threshold}
    cands = candidate_data(wtype, max_xdeg - max_xdeg % 2, conv, A)
    vecs = [cols.vector(c.element.terms) for c in cands]
    indep, combo = independent_modulo(low, vecs, len(cols))
    span = low.copy()
    for v in vecs:
        span.add(v)
    rep = CocenterReport(
        algebra="aHC",
        family=wtype.family,
        n=wtype.n,
        mode="filtered",
        max_deg=max_xdeg,
        convention=conv.value,
        slack=slack,
        parameters={"u": str(u0), "v": str(v0) if wtype.family == "B" else "0"},
        labels=[str(l) for l in distinguished_classes(wtype, conv)],
        notes=["independence is checked against an under-approximation of the commutator space"],
    )
    for d in range(max_xdeg + 1):
        idx = [cols.index[m] for m in side.monomials(d, 0)]
        missing = [i for i in idx if not span.contains({i: 1})]
        here = [c for c in cands if c.degree == d]
        witness = None
        if missing:
            verdict = FAILED
            witness = {"kind": "unspanned-monomial", "degree": d, "monomial": str(cols.keys[missing[0]]), "count": len(missing)}
        else:
            verdict = VERIFIED_SPAN
        independence = CONSISTENT
        if not indep:
            independence = FAILED
            witness = {"kind": "dependent-candidates", "kernel": _kernel_witness(cands, combo, "")}
        cert = certificate({"d": d, "top": top, "rank": len(low), "cands": [c.describe() for c in here]})
        rep.degrees.append(DegreeResult(d, len(idx), len(low), None, len(here), verdict, independence, witness, cert))
    return rep


# ----------------------------------------------------------------------
# brute-force membership oracles
# ----------------------------------------------------------------------


def degree0_congruent(wtype: WeylType, a: PBWElement, b: PBWElement) -> bool:
    """Whether a == b modulo the degree-0 even commutator space of the graded algebra."""
    K = graded_commutator_space(wtype, 0)
    return K.contains(a - b)


def clifford_reduce_oracle(gamma, I, wtype: WeylType, negative=None) -> bool:
    s = clifford_reduce(gamma, I, wtype, negative)
    H = graded_algebra(wtype)
    w = w_gamma(wtype, gamma, negative)
    lhs = w_times_cliff(H, w, I)
    return degree0_congruent(wtype, lhs, H.w(w) * s)


def class_reduce_oracle(w: SignedPerm, convention=None) -> bool:
    H = graded_algebra(w.type)
    K = graded_commutator_space(w.type, 0)
    label = class_reduce(w, convention)
    if label is None:
        return K.contains(H.w(w))
    _, wc = J_of_class(w.type, label)
    return not K.contains(H.w(w)) and K.contains(H.w(w) - H.w(wc))


def spin_class_reduce_oracle(w: SignedPerm, convention=None) -> bool:
    S = graded_spin_algebra(w.type)
    G = group(w.type)
    if G.length(w.window) % 2:
        return spin_class_reduce(w, convention) is None
    K = graded_spin_commutator_space(w.type, 0)
    res = spin_class_reduce(w, convention)
    if res is None:
        return K.contains(S.tw(w))
    s, label = res
    _, wc = J_of_class(w.type, label)
    return not K.contains(S.tw(w)) and K.contains(S.tw(w) - S.tw(wc) * s)


def all_compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in all_compositions(n - first):
            yield (first,) + rest


def even_subsets(n: int):
    for k in range(0, n + 1, 2):
        yield from itertools.combinations(range(1, n + 1), k)
