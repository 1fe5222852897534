"""Spin Weyl group algebra CW^- and the degenerate spin affine Hecke algebra saH_X.

Basis monomials are ``b^alpha t_w`` stored as ``(alpha, w)``; ``t_w`` is the product of
the ``t_i`` along the lexicographically least reduced word of ``w``.  Since that word
is built greedily, ``t_w = t_i t_{s_i w}`` exactly when ``i`` is its first letter.

The sign cocycle ``t_a t_b = sign * t_ab`` is read off from the embedding
``t_i -> i * beta_i * s_i`` into the degree-0 part of the Hecke-Clifford algebra.
``braid_word_sign`` recomputes it directly from the Coxeter presentation and is
kept as an oracle.

Pushing ``t_j`` past ``b_k`` always has the shape ``t_j b_k = -b_k' t_j + const`` with
``k' = |s_j(k)|``; the constant is 1 for the listed type A/D pairs, ``u`` for the type
B node, and 0 otherwise.  In the graded algebra every constant is 0.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Mapping

from .exactnum import I, SQRT2, U, Cyc8, ParamPoly, as_rational, scalar_to_str
from .heckeclifford import (
    DEFAULT_FUEL,
    SYMBOLIC,
    FuelExhausted,
    HeckeClifford,
    PBWElement,
    _add_into,
    _coxeter_relations,
    _prune,
    format_terms,
    graded_algebra,
    relation_scalar,
)
from .weylcomb import SignedPerm, WeylError, WeylType, compose_windows, group

# ----------------------------------------------------------------------
# Clifford embedding and the sign cocycle
# ----------------------------------------------------------------------


def beta(H: HeckeClifford, i: int) -> PBWElement:
    """beta_i in C_V: (c_i - c_{i+1})/sqrt2, with c_n (B) or (c_{n-1} + c_n)/sqrt2 (D) at i = n."""
    n, fam = H.n, H.type.family
    inv = Cyc8.coerce(1) / SQRT2
    if i < n:
        return (H.c(i) - H.c(i + 1)) * inv
    if fam == "B":
        return H.c(n)
    if fam == "D":
        return (H.c(n - 1) + H.c(n)) * inv
    raise WeylError(f"no beta_{i} in {H.type}")


@lru_cache(maxsize=None)
def embedding_algebra(wtype: WeylType) -> HeckeClifford:
    return graded_algebra(wtype, force_cyc8=True)


@lru_cache(maxsize=None)
def embed_t(wtype: WeylType, i: int) -> PBWElement:
    H = embedding_algebra(wtype)
    return beta(H, i) * H.s(i) * I


class SpinCocycle:
    """t_w images and the sign cocycle for one Weyl type."""

    def __init__(self, wtype: WeylType):
        self.type = wtype
        self.G = group(wtype)
        self.H = embedding_algebra(wtype)
        self._img: dict = {}
        self._sign: dict = {}

    def image(self, w: tuple) -> PBWElement:
        hit = self._img.get(w)
        if hit is None:
            word = self.G.reduced_word(w)
            if not word:
                hit = self.H.one()
            else:
                i = word[0]
                hit = embed_t(self.type, i) * self.image(compose_windows(self.G.simple[i], w))
            self._img[w] = hit
        return hit

    def sign(self, a: tuple, b: tuple) -> int:
        key = (a, b)
        hit = self._sign.get(key)
        if hit is not None:
            return hit
        prod = self.image(a) * self.image(b)
        target = self.image(compose_windows(a, b))
        if prod == target:
            s = 1
        elif prod == -target:
            s = -1
        else:
            raise ArithmeticError(f"embedding is not a projective representation at {a}, {b}")
        self._sign[key] = s
        return s


@lru_cache(maxsize=None)
def cocycle(wtype: WeylType) -> SpinCocycle:
    return SpinCocycle(wtype)


def spin_weyl_mul(a: SignedPerm, b: SignedPerm) -> tuple:
    """t_a t_b = sign * t_ab; returns (sign, ab)."""
    if a.type != b.type:
        raise WeylError("spin_weyl_mul needs elements of the same type")
    s = cocycle(a.type).sign(a.window, b.window)
    return s, a * b


# ----------------------------------------------------------------------
# braid-word oracle
# ----------------------------------------------------------------------


def _braid_moves(G, word: tuple):
    """Words reachable by one signed braid move: P = (-1)^(m+1) Q on alternating blocks."""
    L = len(word)
    for p in range(L - 1):
        i, j = word[p], word[p + 1]
        if i == j:
            continue
        m = G.coxeter_m(i, j)
        if p + m > L:
            continue
        block = word[p:p + m]
        if all(block[k] == (i if k % 2 == 0 else j) for k in range(m)):
            other = tuple(j if k % 2 == 0 else i for k in range(m))
            yield word[:p] + other + word[p + m:], (1 if m % 2 else -1)


def braid_word_sign(wtype: WeylType, word: Iterable[int], limit: int = 200000) -> tuple:
    """Reduce a word in the t_i to sign * t_w by braid moves and t_i^2 = 1.

    Slow breadth-first search; intended only as an independent oracle.
    """
    G = group(wtype)
    word = tuple(word)
    sign = 1
    while True:
        w = G.from_word(word)
        target = G.reduced_word(w)
        seen = {word: 1}
        queue = deque([word])
        found = None
        while queue:
            cur = queue.popleft()
            sc = seen[cur]
            if cur == target:
                found = ("done", cur, sc)
                break
            dup = next((p for p in range(len(cur) - 1) if cur[p] == cur[p + 1]), None)
            if dup is not None:
                found = ("cancel", cur[:dup] + cur[dup + 2:], sc)
                break
            for nxt, s in _braid_moves(G, cur):
                if nxt not in seen:
                    seen[nxt] = sc * s
                    queue.append(nxt)
                    if len(seen) > limit:
                        raise FuelExhausted("braid-word search exceeded its limit")
        if found is None:
            raise ArithmeticError(f"could not reduce word {word}")
        kind, new, s = found
        sign *= s
        if kind == "done":
            return sign, w
        word = new


# ----------------------------------------------------------------------
# the spin algebra
# ----------------------------------------------------------------------


class SpinHecke:
    """saH_X with parameter u (type B node); ``graded=True`` zeroes every relation constant."""

    def __init__(self, wtype: WeylType, u=SYMBOLIC, *, graded: bool = False, force_cyc8: bool = False, fuel: int = DEFAULT_FUEL):
        self.type = wtype
        self.n = wtype.n
        self.G = group(wtype)
        self.cocycle = cocycle(wtype)
        self.fuel = fuel
        self.graded = graded
        self.symbolic = u == SYMBOLIC and not graded
        if self.symbolic:
            self.kind = "poly"
            self.one_c = ParamPoly.coerce(1)
            self.u = U if wtype.family == "B" else ParamPoly()
            self.params = (SYMBOLIC,)
        else:
            u0 = 0 if graded or u == SYMBOLIC else u
            if isinstance(u0, Cyc8) and u0.rational() is None:
                force_cyc8 = True
            self.kind = "cyc8" if force_cyc8 else "rational"
            conv = Cyc8.coerce if force_cyc8 else (lambda z: z.rational() if isinstance(z, Cyc8) else as_rational(z))
            self.one_c = conv(0 if graded else 1)
            self.u = conv(u0) if wtype.family == "B" else conv(0)
            self.params = ("graded",) if graded else (str(u0),)
        self.key = (wtype, self.params)
        self._swap = self._swap_rules()
        self._tb: dict = {}
        self._wb: dict = {}
        self._steps = 0

    def __eq__(self, other) -> bool:
        return isinstance(other, SpinHecke) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"SpinHecke({self.type}, {self.params[0]})"

    @property
    def is_graded(self) -> bool:
        return self.graded

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

    # --- rules ---------------------------------------------------------------
    def _swap_rules(self) -> dict:
        """(j, k) -> (k', const) with t_j b_k = -b_k' t_j + const."""
        n, fam = self.n, self.type.family
        rules = {}
        for j in self.type.indices:
            sj = self.G.simple[j]
            for k in range(1, n + 1):
                k2 = abs(sj[k - 1])
                const = 0
                if j < n:
                    if k in (j, j + 1):
                        const = self.one_c
                elif fam == "B":
                    if k == n:
                        const = self.u
                elif fam == "D":
                    if k in (n - 1, n):
                        const = self.one_c
                rules[(j, k)] = (k2, const)
        return rules

    def swap_rule(self, j: int, k: int) -> tuple:
        return self._swap[(j, k)]

    def _tick(self, amount: int = 1) -> None:
        self._steps += amount
        if self._steps > self.fuel:
            self._steps = 0
            raise FuelExhausted(f"rewriting exceeded {self.fuel} steps")

    @staticmethod
    def b_left_sign(k: int, alpha: tuple) -> int:
        """b_k b^alpha = sign * b^(alpha + e_k)."""
        return -1 if sum(alpha[: k - 1]) & 1 else 1

    @staticmethod
    def b_mul_sign(alpha: tuple, gamma: tuple) -> int:
        """b^alpha b^gamma = sign * b^(alpha + gamma)."""
        swaps, above = 0, 0
        for j in range(len(alpha) - 1, -1, -1):
            swaps += gamma[j] * above
            above += alpha[j]
        return -1 if swaps & 1 else 1

    def _t_times_b(self, j: int, alpha: tuple) -> tuple:
        """t_j b^alpha as ((delta, has_t, coeff), ...)."""
        key = (j, alpha)
        hit = self._tb.get(key)
        if hit is not None:
            return hit
        k = next((i for i, a in enumerate(alpha) if a), None)
        if k is None:
            result = ((alpha, True, 1),)
        else:
            rest = alpha[:k] + (alpha[k] - 1,) + alpha[k + 1:]
            k2, const = self._swap[(j, k + 1)]
            acc: dict = {}
            for delta, has_t, c in self._t_times_b(j, rest):
                d2 = list(delta)
                d2[k2 - 1] += 1
                _add_into(acc, (tuple(d2), has_t), c * -self.b_left_sign(k2, delta))
            if const:
                _add_into(acc, (rest, False), const)
            self._tick(len(acc))
            result = tuple((d, h, c) for (d, h), c in acc.items())
        self._tb[key] = result
        return result

    def _w_times_b(self, w: tuple, alpha: tuple) -> tuple:
        """t_w b^alpha as ((gamma, w_out, coeff), ...)."""
        key = (w, alpha)
        hit = self._wb.get(key)
        if hit is not None:
            return hit
        if w == self.G.identity or not any(alpha):
            result = ((alpha, w, 1),)
        else:
            i = self.G.reduced_word(w)[0]
            si = self.G.simple[i]
            rest = compose_windows(si, w)
            acc: dict = {}
            for gamma, w2, c in self._w_times_b(rest, alpha):
                for delta, has_t, c2 in self._t_times_b(i, gamma):
                    if has_t:
                        s = self.cocycle.sign(si, w2)
                        wout = compose_windows(si, w2)
                    else:
                        s, wout = 1, w2
                    _add_into(acc, (delta, wout), c * c2 * s)
            self._tick(len(acc))
            result = tuple((g, ww, c) for (g, ww), c in acc.items())
        self._wb[key] = result
        return result

    def mono_mul(self, m1: tuple, m2: tuple) -> dict:
        alpha, w = m1
        beta_, v = m2
        acc: dict = {}
        for gamma, w2, c in self._w_times_b(w, beta_):
            s = self.b_mul_sign(alpha, gamma) * self.cocycle.sign(w2, v)
            key = (tuple(a + g for a, g in zip(alpha, gamma)), compose_windows(w2, v))
            _add_into(acc, key, c * s)
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

    # --- constructors ----------------------------------------------------------
    def element(self, terms: Mapping) -> "SpinPBWElement":
        clean: dict = {}
        for (alpha, w), c in terms.items():
            c = self.coerce_scalar(c)
            if c:
                _add_into(clean, (tuple(alpha), tuple(w)), c)
        return SpinPBWElement(self, clean)

    def zero(self) -> "SpinPBWElement":
        return SpinPBWElement(self, {})

    def one(self) -> "SpinPBWElement":
        return self.monomial((0,) * self.n)

    def scalar(self, c) -> "SpinPBWElement":
        return self.one() * c

    def monomial(self, alpha, w=None, coeff=1) -> "SpinPBWElement":
        if w is None:
            w = self.G.identity
        if isinstance(w, SignedPerm):
            w = w.window
        return self.element({(tuple(alpha), tuple(w)): coeff})

    def b(self, i: int) -> "SpinPBWElement":
        if not 1 <= i <= self.n:
            raise WeylError(f"b_{i} out of range for n={self.n}")
        alpha = [0] * self.n
        alpha[i - 1] = 1
        return self.monomial(alpha)

    def t(self, i: int) -> "SpinPBWElement":
        if i not in self.type.indices:
            raise WeylError(f"t_{i} out of range for {self.type}")
        return self.monomial((0,) * self.n, self.G.simple[i])

    def tw(self, w) -> "SpinPBWElement":
        return self.monomial((0,) * self.n, w)

    def generators(self) -> list:
        return [("b", i) for i in range(1, self.n + 1)] + [("t", i) for i in self.type.indices]

    def generator(self, kind: str, i: int) -> "SpinPBWElement":
        return {"b": self.b, "t": self.t}[kind](i)


@lru_cache(maxsize=None)
def graded_spin_algebra(wtype: WeylType, force_cyc8: bool = False) -> SpinHecke:
    return SpinHecke(wtype, graded=True, force_cyc8=force_cyc8)


@lru_cache(maxsize=None)
def symbolic_spin_algebra(wtype: WeylType) -> SpinHecke:
    return SpinHecke(wtype)


def spin_mono_sort_key(m: tuple):
    alpha, w = m
    return (sum(alpha), alpha, w)


def format_spin_monomial(alpha: tuple, w: tuple) -> str:
    bs = []
    for i, a in enumerate(alpha, start=1):
        if a == 1:
            bs.append(f"b{i}")
        elif a:
            bs.append(f"b{i}^{a}")
    parts = ["*".join(bs)] if bs else []
    parts.append("t[" + ",".join(map(str, w)) + "]")
    return " * ".join(parts)


class SpinPBWElement(PBWElement):
    """Finite linear combination of monomials b^alpha t_w."""

    __slots__ = ()

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: spin_mono_sort_key(kv[0]))

    def coefficient(self, alpha, w=None):
        if w is None:
            w = self.algebra.G.identity
        if isinstance(w, SignedPerm):
            w = w.window
        return self.terms.get((tuple(alpha), tuple(w)), 0)

    def to_text(self, pretty: bool = False) -> str:
        return format_terms(self.sorted_terms(), lambda m: format_spin_monomial(*m), pretty)

    def __repr__(self) -> str:
        return f"<SpinPBWElement {self.to_text()}>"

    def to_json(self) -> dict:
        A = self.algebra
        return {
            "algebra": "saH",
            "type": A.type.family,
            "n": A.n,
            "u": A.params[0],
            "terms": [
                {"coeff": scalar_to_str(c), "alpha": list(a), "w": list(w)}
                for (a, w), c in self.sorted_terms()
            ],
        }


# PBWElement arithmetic builds results through the class of ``self`` only for
# multiplication; keep the other operators returning the spin class too.
def _rewrap(name):
    base = getattr(PBWElement, name)

    def op(self, *args):
        out = base(self, *args)
        if isinstance(out, PBWElement) and not isinstance(out, SpinPBWElement):
            return SpinPBWElement(out.algebra, out.terms)
        return out

    op.__name__ = name
    return op


for _name in ("__add__", "__radd__", "__neg__", "__sub__", "__rsub__", "__mul__", "__rmul__", "__pow__"):
    setattr(SpinPBWElement, _name, _rewrap(_name))


# ----------------------------------------------------------------------
# operations
# ----------------------------------------------------------------------


def spin_generator(algebra: SpinHecke, kind: str, i: int) -> SpinPBWElement:
    if kind not in ("b", "t"):
        raise ValueError(f"unknown generator kind {kind!r}")
    return algebra.generator(kind, i)


def spin_multiply(a: SpinPBWElement, b: SpinPBWElement) -> SpinPBWElement:
    a._check(b)
    return SpinPBWElement(a.algebra, a.algebra.multiply_terms(a.terms, b.terms))


def spin_commutator(a: SpinPBWElement, b: SpinPBWElement) -> SpinPBWElement:
    return spin_multiply(a, b) - spin_multiply(b, a)


def spin_mono_parity(algebra: SpinHecke, m: tuple) -> int:
    return (sum(m[0]) + algebra.G.length(m[1])) & 1


def spin_parity(a: SpinPBWElement) -> str:
    ps = {spin_mono_parity(a.algebra, m) for m in a.terms}
    if ps <= {0}:
        return "even"
    if ps == {1}:
        return "odd"
    return "mixed"


def spin_b_degree(a: SpinPBWElement) -> int:
    if not a.terms:
        raise ValueError("the zero element has no degree")
    return max(sum(m[0]) for m in a.terms)


def spin_word_element(algebra: SpinHecke, word: Iterable[tuple]) -> SpinPBWElement:
    out = algebra.one()
    for kind, i in word:
        out = out * algebra.generator(kind, i)
    return out


def spin_defining_relations(wtype: WeylType) -> list:
    """Defining relations of saH_X in the format of ``defining_relations``."""
    n, fam = wtype.n, wtype.family
    G = group(wtype)
    rels = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append((f"b{i}b{j} = -b{j}b{i}", [((1, None), (("b", i), ("b", j))), ((1, None), (("b", j), ("b", i)))]))
    for name, terms in _coxeter_relations(wtype, "t"):
        word = terms[0][1]
        if len(word) == 2 and word[0] == word[1]:
            rels.append((name, terms))
            continue
        i, j = word[0][1], word[1][1]
        m = len(word) // 2
        if m == 3:
            rels.append((f"t{i}t{j}t{i} = t{j}t{i}t{j}", [((1, None), word[:3]), ((-1, None), word[1:4])]))
        else:
            rels.append((f"(t{i}t{j})^{m} = -1", [((1, None), word), ((1, None), ())]))
    for i in range(1, n):
        rels.append((f"t{i}b{i} + b{i + 1}t{i} = 1", [
            ((1, None), (("t", i), ("b", i))),
            ((1, None), (("b", i + 1), ("t", i))),
            ((-1, "one"), ()),
        ]))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append((f"t{i}b{j} = -b{j}t{i}", [((1, None), (("t", i), ("b", j))), ((1, None), (("b", j), ("t", i)))]))
    if fam == "B":
        rels.append((f"t{n}b{n} + b{n}t{n} = u", [
            ((1, None), (("t", n), ("b", n))),
            ((1, None), (("b", n), ("t", n))),
            ((-1, "u"), ()),
        ]))
        others = range(1, n)
    elif fam == "D":
        rels.append((f"t{n}b{n} + b{n - 1}t{n} = 1", [
            ((1, None), (("t", n), ("b", n))),
            ((1, None), (("b", n - 1), ("t", n))),
            ((-1, "one"), ()),
        ]))
        others = range(1, n - 1)
    else:
        others = ()
    for i in others:
        rels.append((f"t{n}b{i} = -b{i}t{n}", [((1, None), (("t", n), ("b", i))), ((1, None), (("b", i), ("t", n)))]))
    return rels


def spin_relation_value(algebra: SpinHecke, terms) -> SpinPBWElement:
    out = algebra.zero()
    for coeff, word in terms:
        out = out + spin_word_element(algebra, word) * relation_scalar(algebra, coeff)
    return out


def check_spin_relations(algebra: SpinHecke) -> list:
    return [name for name, terms in spin_defining_relations(algebra.type) if not spin_relation_value(algebra, terms).is_zero()]


def random_spin_element(rng, S: SpinHecke, max_bdeg: int = 2, nterms: int = 2) -> SpinPBWElement:
    n = S.n
    elems = S.G.elements
    terms = {}
    for _ in range(nterms):
        alpha = [0] * n
        for _ in range(int(rng.integers(0, max_bdeg + 1))):
            alpha[int(rng.integers(0, n))] += 1
        w = elems[int(rng.integers(0, len(elems)))]
        terms[(tuple(alpha), w)] = int(rng.integers(-3, 4)) or 1
    return S.element(terms)
