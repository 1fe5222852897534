"""Degenerate affine Hecke-Clifford algebras aHC_X as a PBW normal-form engine.

Basis monomials are ``x^alpha c^eps w``, stored as ``(alpha, eps, w)`` with ``alpha``
a tuple of exponents, ``eps`` a bitmask (bit ``i-1`` for ``c_i``) and ``w`` a window.

Multiplication pushes the Weyl part of the left factor through the polynomial part
of the right factor one simple reflection at a time (along the lexicographically
least reduced word).  A single reflection meets a single ``x_k`` through the swap
table built in ``_swap_rules``; every entry there is a rearrangement of one defining
relation:

    s_i x_i     =  x_{i+1} s_i - u (1 + c_i c_{i+1})
    s_i x_{i+1} =  x_i s_i     + u (1 - c_i c_{i+1})
    s_n x_n     = -x_n s_n - sqrt2 v                       (B)
    s_n x_n     = -x_{n-1} s_n - u (1 + c_{n-1} c_n)       (D)
    s_n x_{n-1} = -x_n s_n     - u (1 - c_{n-1} c_n)       (D)

and ``s_j x_k = +- x_k' s_j`` otherwise.  Each recursion step lowers either the
number of x's still to be passed or the length of the Weyl word, so the rewriting
terminates; a fuel counter guards against regressions in that argument.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Mapping

from gmpy2 import mpq

from .exactnum import SQRT2, U, V, Cyc8, ParamPoly, as_rational, scalar_to_str
from .weylcomb import (
    SignedPerm,
    WeylError,
    WeylType,
    compose_windows,
    group,
    invert,
)

DEFAULT_FUEL = 10**7

SYMBOLIC = "symbolic"


class FuelExhausted(RuntimeError):
    pass


# ----------------------------------------------------------------------
# Clifford monomial helpers (bitmasks)
# ----------------------------------------------------------------------


def popcount(x: int) -> int:
    return bin(x).count("1")


@lru_cache(maxsize=None)
def cliff_mul(a: int, b: int) -> tuple:
    """c^a c^b = sign * c^(a xor b)."""
    swaps = 0
    bb = b
    while bb:
        low = bb & -bb
        j = low.bit_length() - 1
        swaps += popcount(a >> (j + 1))
        bb ^= low
    return (-1 if swaps & 1 else 1), a ^ b


@lru_cache(maxsize=None)
def cliff_act(w: tuple, eps: int) -> tuple:
    """w c^eps w^-1 = sign * c^eps' using w c_i w^-1 = sgn(w(i)) c_|w(i)|."""
    sign, out = 1, 0
    i = 0
    e = eps
    while e:
        if e & 1:
            wi = w[i]
            if wi < 0:
                sign = -sign
            s, out = cliff_mul(out, 1 << (abs(wi) - 1))
            sign *= s
        e >>= 1
        i += 1
    return sign, out


def cliff_x_sign(eps: int, alpha: tuple) -> int:
    """c^eps x^alpha = sign * x^alpha c^eps (x_i anticommutes with c_i only)."""
    total = 0
    for i, a in enumerate(alpha):
        if a and (eps >> i) & 1:
            total += a
    return -1 if total & 1 else 1


def eps_from_indices(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m ^= 1 << (i - 1)
    return m


def eps_indices(eps: int) -> list:
    return [i + 1 for i in range(eps.bit_length()) if (eps >> i) & 1]


def _add_into(acc: dict, key, coeff) -> None:
    cur = acc.get(key)
    if cur is None:
        acc[key] = coeff
    else:
        s = cur + coeff
        if s:
            acc[key] = s
        else:
            del acc[key]


def _prune(acc: dict) -> dict:
    return {k: c for k, c in acc.items() if c}


# ----------------------------------------------------------------------
# the algebra
# ----------------------------------------------------------------------


class HeckeClifford:
    """aHC_X for X of type A_{n-1}, B_n or D_n.

    ``u`` and ``v`` are either ``SYMBOLIC`` (coefficients are ``ParamPoly``) or
    exact numbers.  With numbers the coefficients are ``mpq`` when every structure
    constant is rational and ``Cyc8`` otherwise (``force_cyc8`` overrides).
    """

    def __init__(self, wtype: WeylType, u=SYMBOLIC, v=SYMBOLIC, *, force_cyc8: bool = False, fuel: int = DEFAULT_FUEL):
        self.type = wtype
        self.n = wtype.n
        self.G = group(wtype)
        self.fuel = fuel
        self.symbolic = u == SYMBOLIC or v == SYMBOLIC
        if self.symbolic:
            if not (u == SYMBOLIC and v == SYMBOLIC):
                raise ValueError("u and v must both be symbolic or both specialized")
            self.kind = "poly"
            self.u = U
            self.sqrt2v = SQRT2 * V if wtype.family == "B" else ParamPoly()
            self.params = (SYMBOLIC, SYMBOLIC)
        else:
            u0 = u if isinstance(u, Cyc8) else as_rational(u)
            v0 = v if isinstance(v, Cyc8) else as_rational(v)
            if wtype.family != "B":
                v0 = mpq(0)
            s2v = SQRT2 * v0
            rational = (
                not force_cyc8
                and s2v.rational() is not None
                and (not isinstance(u0, Cyc8) or u0.rational() is not None)
            )
            if rational:
                self.kind = "rational"
                self.u = u0.rational() if isinstance(u0, Cyc8) else u0
                self.sqrt2v = s2v.rational()
            else:
                self.kind = "cyc8"
                self.u = Cyc8.coerce(u0)
                self.sqrt2v = s2v
            self.params = (str(u0), str(v0))
        self.key = (wtype, self.params)
        self._swap = self._swap_rules()
        self._sx: dict = {}
        self._wx: dict = {}
        self._steps = 0

    # --- descriptors -----------------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeClifford) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"HeckeClifford({self.type}, u={self.params[0]}, v={self.params[1]})"

    @property
    def is_graded(self) -> bool:
        return not self.symbolic and not self.u and not self.sqrt2v

    def coerce_scalar(self, c):
        if self.kind == "poly":
            return ParamPoly.coerce(c)
        if self.kind == "cyc8":
            return Cyc8.coerce(c)
        if isinstance(c, Cyc8):
            r = c.rational()
            if r is None:
                raise ValueError(f"{c} is not rational; use a Cyc8-valued algebra")
            return r
        if isinstance(c, ParamPoly):
            raise TypeError("cannot use a ParamPoly coefficient in a specialized algebra")
        return as_rational(c)

    # --- swap table --------------------------------------------------------
    def _swap_rules(self) -> dict:
        """(j, k) -> (sign, k', {eps: coeff}) with s_j x_k = sign x_k' s_j + sum coeff c^eps."""
        n, fam, u = self.n, self.type.family, self.u
        rules = {}
        for j in self.type.indices:
            sj = self.G.simple[j]
            for k in range(1, n + 1):
                image = sj[k - 1]
                sign, k2 = (1 if image > 0 else -1), abs(image)
                extra: dict = {}
                pair = None
                if j < n:
                    pair = eps_from_indices((j, j + 1))
                    if k == j:
                        extra = {0: -u, pair: -u}
                    elif k == j + 1:
                        extra = {0: u, pair: -u}
                elif fam == "B":
                    if k == n:
                        extra = {0: -self.sqrt2v}
                else:
                    pair = eps_from_indices((n - 1, n))
                    if k == n:
                        extra = {0: -u, pair: -u}
                    elif k == n - 1:
                        extra = {0: -u, pair: u}
                rules[(j, k)] = (sign, k2, _prune(extra))
        return rules

    def swap_rule(self, j: int, k: int) -> tuple:
        return self._swap[(j, k)]

    # --- core tables ---------------------------------------------------------
    def _tick(self, amount: int = 1) -> None:
        self._steps += amount
        if self._steps > self.fuel:
            self._steps = 0
            raise FuelExhausted(f"rewriting exceeded {self.fuel} steps")

    def _s_times_x(self, j: int, alpha: tuple) -> tuple:
        """s_j x^alpha as ((delta, theta, has_s, coeff), ...)."""
        key = (j, alpha)
        hit = self._sx.get(key)
        if hit is not None:
            return hit
        k = next((i for i, a in enumerate(alpha) if a), None)
        if k is None:
            result = ((alpha, 0, True, 1),)
        else:
            rest = alpha[:k] + (alpha[k] - 1,) + alpha[k + 1:]
            sign, k2, extra = self._swap[(j, k + 1)]
            acc: dict = {}
            for delta, theta, has_s, c in self._s_times_x(j, rest):
                d2 = list(delta)
                d2[k2 - 1] += 1
                _add_into(acc, (tuple(d2), theta, has_s), c * sign)
            for e, r in extra.items():
                _add_into(acc, (rest, e, False), r * cliff_x_sign(e, rest))
            self._tick(len(acc))
            result = tuple((d, t, h, c) for (d, t, h), c in acc.items())
        self._sx[key] = result
        return result

    def _w_times_x(self, w: tuple, alpha: tuple) -> tuple:
        """w x^alpha as ((gamma, eta, w_out, coeff), ...), one reflection at a time."""
        key = (w, alpha)
        hit = self._wx.get(key)
        if hit is not None:
            return hit
        if w == self.G.identity or not any(alpha):
            result = ((alpha, 0, w, 1),)
        else:
            i = self.G.reduced_word(w)[0]
            si = self.G.simple[i]
            rest = compose_windows(si, w)
            acc: dict = {}
            for gamma, eta, w2, c in self._w_times_x(rest, alpha):
                for delta, theta, has_s, c2 in self._s_times_x(i, gamma):
                    if has_s:
                        s1, eta2 = cliff_act(si, eta)
                        wout = compose_windows(si, w2)
                    else:
                        s1, eta2, wout = 1, eta, w2
                    s2, e = cliff_mul(theta, eta2)
                    _add_into(acc, (delta, e, wout), c * c2 * (s1 * s2))
            self._tick(len(acc))
            result = tuple((g, e, ww, c) for (g, e, ww), c in acc.items())
        self._wx[key] = result
        return result

    def mono_mul(self, m1: tuple, m2: tuple) -> dict:
        """Normal form of the product of two PBW monomials, as {monomial: coeff}."""
        alpha, eps, w = m1
        beta, delta, v = m2
        acc: dict = {}
        for gamma, eta, w2, c in self._w_times_x(w, beta):
            s1, d2 = cliff_act(w2, delta)
            s2, eta2 = cliff_mul(eta, d2)
            s3 = cliff_x_sign(eps, gamma)
            s4, e = cliff_mul(eps, eta2)
            key = (tuple(a + g for a, g in zip(alpha, gamma)), e, compose_windows(w2, v))
            _add_into(acc, key, c * (s1 * s2 * s3 * s4))
        return acc

    def multiply_terms(self, t1: Mapping, t2: Mapping) -> dict:
        self._steps = 0
        acc: dict = {}
        for m1, c1 in t1.items():
            for m2, c2 in t2.items():
                c12 = c1 * c2
                for m, c in self.mono_mul(m1, m2).items():
                    _add_into(acc, m, c12 * c)
                self._tick()
        return acc

    # --- element constructors -------------------------------------------------
    def element(self, terms: Mapping) -> "PBWElement":
        clean = {}
        for (alpha, eps, w), c in terms.items():
            c = self.coerce_scalar(c)
            if c:
                key = (tuple(alpha), int(eps), tuple(w))
                _add_into(clean, key, c)
        return PBWElement(self, clean)

    def zero(self) -> "PBWElement":
        return PBWElement(self, {})

    def one(self) -> "PBWElement":
        return self.monomial((0,) * self.n, 0, self.G.identity)

    def scalar(self, c) -> "PBWElement":
        return self.one() * c

    def monomial(self, alpha, eps=0, w=None, coeff=1) -> "PBWElement":
        if w is None:
            w = self.G.identity
        if isinstance(w, SignedPerm):
            w = w.window
        if not isinstance(eps, int):
            eps = eps_from_indices(eps)
        return self.element({(tuple(alpha), eps, tuple(w)): coeff})

    def x(self, i: int) -> "PBWElement":
        if not 1 <= i <= self.n:
            raise WeylError(f"x_{i} out of range for n={self.n}")
        alpha = [0] * self.n
        alpha[i - 1] = 1
        return self.monomial(alpha)

    def c(self, i: int) -> "PBWElement":
        if not 1 <= i <= self.n:
            raise WeylError(f"c_{i} out of range for n={self.n}")
        return self.monomial((0,) * self.n, 1 << (i - 1))

    def s(self, i: int) -> "PBWElement":
        if i not in self.type.indices:
            raise WeylError(f"s_{i} out of range for {self.type}")
        return self.monomial((0,) * self.n, 0, self.G.simple[i])

    def w(self, w) -> "PBWElement":
        return self.monomial((0,) * self.n, 0, w)

    def generators(self) -> list:
        gens = [("x", i) for i in range(1, self.n + 1)]
        gens += [("c", i) for i in range(1, self.n + 1)]
        gens += [("s", i) for i in self.type.indices]
        return gens

    def generator(self, kind: str, i: int) -> "PBWElement":
        return {"x": self.x, "c": self.c, "s": self.s}[kind](i)

    def graded(self) -> "HeckeClifford":
        return graded_algebra(self.type)


@lru_cache(maxsize=None)
def graded_algebra(wtype: WeylType, force_cyc8: bool = False) -> HeckeClifford:
    return HeckeClifford(wtype, 0, 0, force_cyc8=force_cyc8)


@lru_cache(maxsize=None)
def symbolic_algebra(wtype: WeylType) -> HeckeClifford:
    return HeckeClifford(wtype)


# ----------------------------------------------------------------------
# elements
# ----------------------------------------------------------------------


def mono_sort_key(m: tuple):
    alpha, eps, w = m
    return (sum(alpha), alpha, eps, w)


def format_monomial(alpha: tuple, eps: int, w: tuple, letter: str = "x") -> str:
    parts = []
    xs = []
    for i, a in enumerate(alpha, start=1):
        if a == 1:
            xs.append(f"{letter}{i}")
        elif a:
            xs.append(f"{letter}{i}^{a}")
    if xs:
        parts.append("*".join(xs))
    if eps:
        parts.append("c{" + ",".join(map(str, eps_indices(eps))) + "}")
    parts.append("[" + ",".join(map(str, w)) + "]")
    return " * ".join(parts)


def format_terms(items, fmt, pretty: bool = False) -> str:
    if not items:
        return "0"
    out = []
    for key, c in items:
        cs = scalar_to_str(c, pretty)
        if " " in cs:
            cs = f"({cs})"
        out.append(f"{cs} * {fmt(key)}")
    return " + ".join(out)


class PBWElement:
    """Finite linear combination of PBW monomials; treat as immutable."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HeckeClifford, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _check(self, other: "PBWElement") -> None:
        if self.algebra != other.algebra:
            raise ValueError(f"elements of different algebras: {self.algebra} vs {other.algebra}")

    def __add__(self, other):
        if not isinstance(other, PBWElement):
            other = self.algebra.scalar(other)
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(acc, k, c)
        return PBWElement(self.algebra, acc)

    __radd__ = __add__

    def __neg__(self):
        return PBWElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, PBWElement):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return multiply(self, other)
        c = self.algebra.coerce_scalar(other)
        if not c:
            return PBWElement(self.algebra, {})
        return PBWElement(self.algebra, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        c = self.algebra.coerce_scalar(other)
        if not c:
            return PBWElement(self.algebra, {})
        return PBWElement(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __pow__(self, k: int):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, PBWElement):
            return self.algebra == other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        raise TypeError("PBWElement is unhashable")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: mono_sort_key(kv[0]))

    def coefficient(self, alpha, eps=0, w=None):
        if w is None:
            w = self.algebra.G.identity
        if isinstance(w, SignedPerm):
            w = w.window
        if not isinstance(eps, int):
            eps = eps_from_indices(eps)
        return self.terms.get((tuple(alpha), eps, tuple(w)), 0)

    def to_text(self, pretty: bool = False) -> str:
        return format_terms(self.sorted_terms(), lambda m: format_monomial(*m), pretty)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"<PBWElement {self.to_text()}>"

    def to_json(self) -> dict:
        A = self.algebra
        return {
            "algebra": "aHC",
            "type": A.type.family,
            "n": A.n,
            "u": A.params[0],
            "v": A.params[1],
            "terms": [
                {"coeff": scalar_to_str(c), "alpha": list(a), "eps": eps_indices(e), "w": list(w)}
                for (a, e, w), c in self.sorted_terms()
            ],
        }


# ----------------------------------------------------------------------
# operations
# ----------------------------------------------------------------------


def generator(algebra: HeckeClifford, kind: str, i: int) -> PBWElement:
    if kind not in ("x", "c", "s"):
        raise ValueError(f"unknown generator kind {kind!r}")
    return algebra.generator(kind, i)


def multiply(a: PBWElement, b: PBWElement) -> PBWElement:
    a._check(b)
    return PBWElement(a.algebra, a.algebra.multiply_terms(a.terms, b.terms))


def commutator(a: PBWElement, b: PBWElement) -> PBWElement:
    """Ordinary commutator ab - ba."""
    return multiply(a, b) - multiply(b, a)


def mono_parity(m: tuple) -> int:
    return popcount(m[1]) & 1


def parity(a: PBWElement) -> str:
    ps = {mono_parity(m) for m in a.terms}
    if ps <= {0}:
        return "even"
    if ps == {1}:
        return "odd"
    return "mixed"


def x_degree(a: PBWElement) -> int:
    if not a.terms:
        raise ValueError("the zero element has no degree")
    return max(sum(m[0]) for m in a.terms)


def graded_specialize(a: PBWElement) -> PBWElement:
    """Set u = v = 0: the image in the associated graded algebra."""
    A = a.algebra
    if A.is_graded:
        return a
    if not A.symbolic:
        raise ValueError("graded_specialize needs a symbolic-parameter element")
    consts = {m: c.constant() for m, c in a.terms.items()}
    consts = {m: c for m, c in consts.items() if c}
    rational = all(c.rational() is not None for c in consts.values())
    target = graded_algebra(A.type, force_cyc8=not rational)
    return target.element({m: (c.rational() if rational else c) for m, c in consts.items()})


def elementary_symmetric_squares(algebra: HeckeClifford, k: int) -> PBWElement:
    """e_k(x_1^2, ..., x_n^2) as a PBW element."""
    n = algebra.n
    terms = {}
    for combo in itertools.combinations(range(n), k):
        alpha = [0] * n
        for i in combo:
            alpha[i] = 2
        terms[(tuple(alpha), 0, algebra.G.identity)] = 1
    return algebra.element(terms)


def center_witness_check(algebra: HeckeClifford, k: int) -> bool:
    """Whether e_k(x^2) commutes with every generator."""
    z = elementary_symmetric_squares(algebra, k)
    return all(commutator(z, algebra.generator(kind, i)).is_zero() for kind, i in algebra.generators())


def word_element(algebra: HeckeClifford, word: Iterable[tuple]) -> PBWElement:
    """Product of generators given as (kind, index) pairs, left to right."""
    out = algebra.one()
    for kind, i in word:
        out = out * algebra.generator(kind, i)
    return out


# ----------------------------------------------------------------------
# defining relations as data
# ----------------------------------------------------------------------
# A relation is (name, terms) meaning sum(coeff * word) = 0, where coeff is
# (factor, symbol) with symbol None, "u", "sqrt2v" or "one" (spin constant).


def _coxeter_relations(wtype: WeylType, letter: str) -> list:
    G = group(wtype)
    idx = wtype.indices
    out = []
    for a, i in enumerate(idx):
        out.append((f"{letter}{i}^2 = 1", [((1, None), ((letter, i),) * 2), ((-1, None), ())]))
        for j in idx[a + 1:]:
            m = G.coxeter_m(i, j)
            word = ((letter, i), (letter, j)) * m
            out.append((f"({letter}{i}{letter}{j})^{m} = 1", [((1, None), word), ((-1, None), ())]))
    return out


def defining_relations(wtype: WeylType) -> list:
    """Every defining relation of aHC_X as (name, [((factor, symbol), word), ...])."""
    n, fam = wtype.n, wtype.family
    G = group(wtype)
    rels = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append((f"x{i}x{j} = x{j}x{i}", [((1, None), (("x", i), ("x", j))), ((-1, None), (("x", j), ("x", i)))]))
            rels.append((f"c{i}c{j} = -c{j}c{i}", [((1, None), (("c", i), ("c", j))), ((1, None), (("c", j), ("c", i)))]))
        rels.append((f"c{i}^2 = 1", [((1, None), (("c", i), ("c", i))), ((-1, None), ())]))
    rels += _coxeter_relations(wtype, "s")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            sign = -1 if i == j else 1
            rels.append((f"x{i}c{j} = {'-' if sign < 0 else ''}c{j}x{i}", [((1, None), (("x", i), ("c", j))), ((-sign, None), (("c", j), ("x", i)))]))
    for k in wtype.indices:
        sk = G.simple[k]
        for i in range(1, n + 1):
            img = sk[i - 1]
            rels.append((f"s{k}c{i} = {'-' if img < 0 else ''}c{abs(img)}s{k}", [
                ((1, None), (("s", k), ("c", i))),
                ((-1 if img > 0 else 1, None), (("c", abs(img)), ("s", k))),
            ]))
    for i in range(1, n):
        rels.append((f"x{i + 1}s{i} - s{i}x{i} = u(1 - c{i + 1}c{i})", [
            ((1, None), (("x", i + 1), ("s", i))),
            ((-1, None), (("s", i), ("x", i))),
            ((-1, "u"), ()),
            ((1, "u"), (("c", i + 1), ("c", i))),
        ]))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append((f"x{j}s{i} = s{i}x{j}", [((1, None), (("x", j), ("s", i))), ((-1, None), (("s", i), ("x", j)))]))
    if fam == "B":
        rels.append((f"s{n}x{n} + x{n}s{n} = -sqrt2 v", [
            ((1, None), (("s", n), ("x", n))),
            ((1, None), (("x", n), ("s", n))),
            ((1, "sqrt2v"), ()),
        ]))
        others = [i for i in range(1, n)]
    elif fam == "D":
        rels.append((f"s{n}x{n} + x{n - 1}s{n} = -u(1 + c{n - 1}c{n})", [
            ((1, None), (("s", n), ("x", n))),
            ((1, None), (("x", n - 1), ("s", n))),
            ((1, "u"), ()),
            ((1, "u"), (("c", n - 1), ("c", n))),
        ]))
        others = [i for i in range(1, n - 1)]
    else:
        others = []
    for i in others:
        rels.append((f"s{n}x{i} = x{i}s{n}", [((1, None), (("s", n), ("x", i))), ((-1, None), (("x", i), ("s", n)))]))
    return rels


def relation_scalar(algebra, coeff):
    factor, sym = coeff
    if sym is None:
        return algebra.coerce_scalar(factor)
    base = {"u": lambda: algebra.u, "sqrt2v": lambda: algebra.sqrt2v, "one": lambda: algebra.one_c}[sym]()
    return algebra.coerce_scalar(base) * factor


def relation_value(algebra, terms) -> PBWElement:
    """sum(coeff * word) evaluated in ``algebra``; zero iff the relation holds."""
    out = algebra.zero()
    for coeff, word in terms:
        out = out + word_element(algebra, word) * relation_scalar(algebra, coeff)
    return out


def check_relations(algebra: HeckeClifford) -> list:
    """Names of defining relations that fail (empty list when all hold)."""
    return [name for name, terms in defining_relations(algebra.type) if not relation_value(algebra, terms).is_zero()]


def random_hc_element(rng, H: HeckeClifford, max_xdeg: int = 2, nterms: int = 2) -> PBWElement:
    """Random small element; ``rng`` is a numpy Generator."""
    n = H.n
    elems = H.G.elements
    terms = {}
    for _ in range(nterms):
        alpha = [0] * n
        for _ in range(int(rng.integers(0, max_xdeg + 1))):
            alpha[int(rng.integers(0, n))] += 1
        eps = int(rng.integers(0, 1 << n))
        w = elems[int(rng.integers(0, len(elems)))]
        terms[(tuple(alpha), eps, w)] = int(rng.integers(-3, 4)) or 1
    return H.element(terms)


def random_word(rng, algebra, length: int) -> list:
    gens = algebra.generators()
    return [gens[int(rng.integers(0, len(gens)))] for _ in range(length)]


def bracketed_product(rng, algebra, word: list):
    """Product of the generators in ``word`` under a random bracketing."""
    if not word:
        return algebra.one()
    if len(word) == 1:
        return algebra.generator(*word[0])
    cut = int(rng.integers(1, len(word)))
    return bracketed_product(rng, algebra, word[:cut]) * bracketed_product(rng, algebra, word[cut:])
