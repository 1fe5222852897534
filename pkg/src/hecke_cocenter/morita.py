"""The superalgebra isomorphism Phi: aHC_X -> C_n (x) saH_X and cocenter transport.

The explicit map is not copied from anywhere; it is solved for within the ansatz

    Phi(s_i) = kappa_i * beta_i (x) t_i,   Phi(x_i) = lambda_i * c_i (x) b_i,   Phi(c_i) = c_i (x) 1

and accepted only after every defining relation of aHC_X is checked to map to zero.
Both tensor factors are superalgebras (c_i, beta_i, b_i, t_i odd), and products follow
the super rule (a (x) b)(a' (x) b') = (-1)^(|b||a'|) aa' (x) bb'.

The map is solved at u = u0, v = v0 (defaults 1, 1).  For type B the spin parameter is
solved along with the scalars.  Setting all parameters to 0 gives the associated
graded map with the same kappa, lambda, which is what the graded transport uses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

import numpy as np

from .cocenterlab import (
    FAILED,
    INDEPENDENT,
    VERIFIED_DIM,
    CocenterReport,
    DegreeResult,
    _convention,
    candidate_data,
    certificate,
    graded_commutator_space,
    spin_candidate_data,
)
from .exactnum import I, SQRT2, Cyc8, ParamPoly, scalar_to_str
from .heckeclifford import (
    HeckeClifford,
    PBWElement,
    _add_into,
    cliff_mul,
    defining_relations,
    random_hc_element,
    eps_indices,
    popcount,
    relation_scalar,
)
from .linalg import Echelon, independent_modulo, rank
from .spinhecke import SpinHecke, SpinPBWElement, beta, spin_mono_parity
from .weylcomb import ParabolicSubset, WeylError, WeylType, group

DEFAULT_SEED = 0xC0CE17E5


class MoritaAnsatzError(ArithmeticError):
    """No scalars in Q(zeta_8) make the ansatz respect every relation."""


# ----------------------------------------------------------------------
# super tensor product C_n (x) saH_X
# ----------------------------------------------------------------------


class TensorElement:
    """Sum of coeff * c^eps (x) b^alpha t_w, keyed by (eps, (alpha, w))."""

    __slots__ = ("spin", "terms")

    def __init__(self, spin: SpinHecke, terms: Mapping):
        self.spin = spin
        self.terms = {k: c for k, c in terms.items() if c}

    @classmethod
    def one(cls, spin: SpinHecke) -> "TensorElement":
        return cls(spin, {(0, ((0,) * spin.n, spin.G.identity)): spin.coerce_scalar(1)})

    @classmethod
    def clifford(cls, spin: SpinHecke, cterms: Mapping) -> "TensorElement":
        """sum coeff c^eps (x) 1."""
        m = ((0,) * spin.n, spin.G.identity)
        return cls(spin, {(e, m): spin.coerce_scalar(c) for e, c in cterms.items()})

    @classmethod
    def pure(cls, spin: SpinHecke, cterms: Mapping, y: SpinPBWElement) -> "TensorElement":
        """(sum coeff c^eps) (x) y."""
        out: dict = {}
        for e, c in cterms.items():
            for m, d in y.terms.items():
                _add_into(out, (e, m), spin.coerce_scalar(c) * d)
        return cls(spin, out)

    def _check(self, other) -> None:
        if not isinstance(other, TensorElement) or other.spin != self.spin:
            raise TypeError("tensor elements over different spin algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return TensorElement(self.spin, out)

    def __neg__(self):
        return TensorElement(self.spin, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            c = self.spin.coerce_scalar(other)
            return TensorElement(self.spin, {k: v * c for k, v in self.terms.items()})
        self._check(other)
        S = self.spin
        out: dict = {}
        for (e1, m1), c1 in self.terms.items():
            p1 = spin_mono_parity(S, m1)
            for (e2, m2), c2 in other.terms.items():
                sign = -1 if p1 and popcount(e2) & 1 else 1
                s, e = cliff_mul(e1, e2)
                c12 = c1 * c2 * (sign * s)
                for m, c in S.mono_mul(m1, m2).items():
                    _add_into(out, (e, m), c12 * c)
        return TensorElement(S, out)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.spin == other.spin and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self) -> str:
        ps = {(popcount(e) + spin_mono_parity(self.spin, m)) % 2 for e, m in self.terms}
        if not ps:
            return "even"
        if len(ps) > 1:
            return "mixed"
        return "odd" if ps.pop() else "even"

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0][1][0]), kv[0][1], popcount(kv[0][0]), kv[0][0]))

    def to_text(self, pretty: bool = False) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (e, (alpha, w)), c in self.sorted_terms():
            cl = "c{" + ",".join(map(str, eps_indices(e))) + "}" if e else "1"
            bs = "*".join(f"b{i}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(alpha, start=1) if a)
            sp = (bs + " * " if bs else "") + "t[" + ",".join(map(str, w)) + "]"
            parts.append(f"({scalar_to_str(c, pretty)}) * {cl} (x) {sp}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"<TensorElement {self.to_text()}>"


def _beta_terms(wtype: WeylType, i: int) -> dict:
    """beta_i as {eps: Cyc8}."""
    n = wtype.n
    r = Cyc8.coerce(1) / SQRT2
    if i < n:
        return {1 << (i - 1): r, 1 << i: -r}
    if wtype.family == "B":
        return {1 << (n - 1): Cyc8.coerce(1)}
    return {1 << (n - 2): r, 1 << (n - 1): r}


# ----------------------------------------------------------------------
# solving the ansatz
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorImages:
    type: WeylType
    kappa: tuple  # indexed like wtype.indices
    lam: tuple  # lambda_1..lambda_n
    spin_u: Cyc8 | None  # type B only
    u0: Cyc8
    v0: Cyc8
    solutions: tuple = ()  # every (kappa, lam, spin_u) found

    def kappa_of(self, i: int) -> Cyc8:
        return self.kappa[self.type.indices.index(i)]

    def to_json(self) -> dict:
        def sol(k, l, su):
            out = {
                "kappa": {str(i): scalar_to_str(c, True) for i, c in zip(self.type.indices, k)},
                "lambda": {str(i): scalar_to_str(c, True) for i, c in enumerate(l, start=1)},
            }
            if su is not None:
                out["spin_u"] = scalar_to_str(su, True)
            return out

        first = sol(self.kappa, self.lam, self.spin_u)
        return {
            "type": self.type.family,
            "n": self.type.n,
            "ansatz": "s_i -> kappa_i beta_i (x) t_i, x_i -> lambda_i c_i (x) b_i, c_i -> c_i (x) 1",
            "u0": scalar_to_str(self.u0, True),
            "v0": scalar_to_str(self.v0, True),
            "chosen": first,
            "solution_count": len(self.solutions),
            "solutions": [sol(*s) for s in self.solutions],
        }


def _solve_affine(rows: list, nvars: int):
    """Gauss-Jordan on rows [a_1..a_nvars, b] meaning sum a_i z_i + b = 0.

    Returns the unique solution, None if inconsistent, or raises if underdetermined.
    """
    E = Echelon()
    for r in rows:
        E.add({i: c for i, c in enumerate(r) if c})
    if nvars in E.rows:
        return None
    piv = sorted(E.rows)
    if piv != list(range(nvars)):
        raise MoritaAnsatzError("the relations leave some lambda_i undetermined")
    sol = [None] * nvars
    for p in reversed(piv):
        row = E.rows[p]
        val = -row.get(nvars, Cyc8.coerce(0))
        for k, c in row.items():
            if k != p and k < nvars:
                val = val - c * sol[k]
        sol[p] = Cyc8.coerce(val)
    return tuple(sol)


def _word_split(word):
    xs = tuple(sorted(i for k, i in word if k == "x"))
    ss = tuple(i for k, i in word if k == "s")
    return xs, ss


@lru_cache(maxsize=None)
def solve_generator_images(wtype: WeylType, u0=1, v0=1) -> GeneratorImages:
    """Every (kappa, lambda, spin u) in the ansatz that respects all relations of aHC_X."""
    if wtype.family == "B" and wtype.n < 2:
        raise WeylError("type B needs n >= 2 here")
    H = HeckeClifford(wtype, u0, v0, force_cyc8=True)
    S = SpinHecke(wtype)  # symbolic spin parameter while solving
    n = wtype.n
    base = {("c", i): TensorElement.clifford(S, {1 << (i - 1): 1}) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        base[("x", i)] = TensorElement.pure(S, {1 << (i - 1): 1}, S.b(i))
    for i in wtype.indices:
        base[("s", i)] = TensorElement.pure(S, _beta_terms(wtype, i), S.t(i))

    # each relation term: (scalar, lambda monomial, s letters, base product)
    prepared = []
    for name, terms in defining_relations(wtype):
        items = []
        for coeff, word in terms:
            prod = TensorElement.one(S)
            for g in word:
                prod = prod * base[g]
            xs, ss = _word_split(word)
            items.append((Cyc8.coerce(relation_scalar(H, coeff)), xs, ss, prod))
        prepared.append((name, items))

    solutions = []
    for kap in itertools.product((I, -I), repeat=len(wtype.indices)):
        kmap = dict(zip(wtype.indices, kap))
        # group each relation image by lambda monomial
        grouped = []
        for name, items in prepared:
            acc: dict = {}
            for scal, xs, ss, prod in items:
                k = scal
                for i in ss:
                    k = k * kmap[i]
                cur = acc.get(xs)
                acc[xs] = prod * k if cur is None else cur + prod * k
            grouped.append((name, {m: t for m, t in acc.items() if not t.is_zero()}))
        # stage 1: affine equations in lambda with constant spin coefficients
        rows = []
        for name, acc in grouped:
            if any(len(m) > 1 for m in acc):
                continue
            coeffs = [c for t in acc.values() for c in t.terms.values()]
            if any(_has_u(c) for c in coeffs):
                continue
            keys = {k for t in acc.values() for k in t.terms}
            for key in keys:
                r = [Cyc8.coerce(0)] * (n + 1)
                for m, t in acc.items():
                    c = t.terms.get(key)
                    if c is None:
                        continue
                    c = ParamPoly.coerce(c).constant()
                    r[m[0] - 1 if m else n] = r[m[0] - 1 if m else n] + c
                rows.append(r)
        lam = _solve_affine(rows, n)
        if lam is None or any(not l for l in lam):
            continue
        # stage 2: the remaining equations are polynomials in the spin parameter
        spin_u = None
        ok = True
        for name, acc in grouped:
            total: dict = {}
            for m, t in acc.items():
                lm = Cyc8.coerce(1)
                for i in m:
                    lm = lm * lam[i - 1]
                for key, c in t.terms.items():
                    _add_into(total, key, ParamPoly.coerce(c) * lm)
            for key, p in total.items():
                lin = {d: c for (d, _), c in p.terms.items()}
                if any(d > 1 for d in lin):
                    raise MoritaAnsatzError(f"relation {name} is nonlinear in the spin parameter")
                c0, c1 = lin.get(0, Cyc8.coerce(0)), lin.get(1, Cyc8.coerce(0))
                if not c1:
                    ok = ok and not c0
                    continue
                val = -c0 / c1
                if spin_u is None:
                    spin_u = val
                elif spin_u != val:
                    ok = False
        if not ok:
            continue
        if wtype.family == "B" and spin_u is None:
            raise MoritaAnsatzError("the spin parameter is undetermined")
        solutions.append((tuple(kap), lam, spin_u if wtype.family == "B" else None))

    if not solutions:
        raise MoritaAnsatzError(f"no solution of the ansatz for {wtype}")
    kap, lam, su = solutions[0]
    gi = GeneratorImages(wtype, kap, lam, su, Cyc8.coerce(u0), Cyc8.coerce(v0), tuple(solutions))
    bad = MoritaMap(gi).failing_relations()
    if bad:
        raise MoritaAnsatzError(f"solved images violate {bad[0]}")
    return gi


def _has_u(c) -> bool:
    return isinstance(c, ParamPoly) and any(du for du, _ in c.terms)


# ----------------------------------------------------------------------
# the map itself
# ----------------------------------------------------------------------


class MoritaMap:
    """Phi for fixed generator images, ungraded (default) or associated graded."""

    def __init__(self, images: GeneratorImages, graded: bool = False):
        t = images.type
        self.images = images
        self.type = t
        self.graded = graded
        if graded:
            self.H = HeckeClifford(t, 0, 0, force_cyc8=True)
            self.S = SpinHecke(t, graded=True, force_cyc8=True)
        else:
            self.H = HeckeClifford(t, images.u0, images.v0, force_cyc8=True)
            self.S = SpinHecke(t, images.spin_u if images.spin_u is not None else 0, force_cyc8=True)
        self.G = group(t)
        S = self.S
        self._gen = {}
        for i in range(1, t.n + 1):
            self._gen[("c", i)] = TensorElement.clifford(S, {1 << (i - 1): 1})
            self._gen[("x", i)] = TensorElement.pure(S, {1 << (i - 1): images.lam[i - 1]}, S.b(i))
        for i in t.indices:
            cterms = {e: c * images.kappa_of(i) for e, c in _beta_terms(t, i).items()}
            self._gen[("s", i)] = TensorElement.pure(S, cterms, S.t(i))
        self._w: dict = {}
        self._xc: dict = {}
        self._iota_t: dict = {}

    def generator_image(self, kind: str, i: int) -> TensorElement:
        return self._gen[(kind, i)]

    def _phi_w(self, w: tuple) -> TensorElement:
        hit = self._w.get(w)
        if hit is None:
            hit = TensorElement.one(self.S)
            for i in self.G.reduced_word(w):
                hit = hit * self._gen[("s", i)]
            self._w[w] = hit
        return hit

    def _phi_xc(self, alpha: tuple, eps: int) -> TensorElement:
        key = (alpha, eps)
        hit = self._xc.get(key)
        if hit is None:
            hit = TensorElement.one(self.S)
            for i, a in enumerate(alpha, start=1):
                for _ in range(a):
                    hit = hit * self._gen[("x", i)]
            for i in eps_indices(eps):
                hit = hit * self._gen[("c", i)]
            self._xc[key] = hit
        return hit

    def phi_monomial(self, m: tuple) -> TensorElement:
        alpha, eps, w = m
        return self._phi_xc(alpha, eps) * self._phi_w(w)

    def phi(self, a: PBWElement) -> TensorElement:
        if a.algebra != self.H:
            raise TypeError(f"phi expects an element of {self.H!r}")
        out = TensorElement(self.S, {})
        for m, c in a.terms.items():
            out = out + self.phi_monomial(m) * c
        return out

    def phi_word(self, word) -> TensorElement:
        out = TensorElement.one(self.S)
        for g in word:
            out = out * self._gen[g]
        return out

    def failing_relations(self) -> list:
        bad = []
        for name, terms in defining_relations(self.type):
            total = TensorElement(self.S, {})
            for coeff, word in terms:
                total = total + self.phi_word(word) * Cyc8.coerce(relation_scalar(self.H, coeff))
            if not total.is_zero():
                bad.append(name)
        return bad

    # --- the embedding y -> Phi^-1(1 (x) y) --------------------------------
    def iota_b(self, i: int) -> PBWElement:
        H = self.H
        return H.c(i) * H.x(i) * (Cyc8.coerce(1) / self.images.lam[i - 1])

    def iota_t(self, i: int) -> PBWElement:
        H = self.H
        return beta(H, i) * H.s(i) * (Cyc8.coerce(1) / self.images.kappa_of(i))

    def _iota_tw(self, w: tuple) -> PBWElement:
        hit = self._iota_t.get(w)
        if hit is None:
            hit = self.H.one()
            for i in self.G.reduced_word(w):
                hit = hit * self.iota_t(i)
            self._iota_t[w] = hit
        return hit

    def iota(self, y: SpinPBWElement) -> PBWElement:
        """Phi^-1(1 (x) y), computed from the generator formulas."""
        H = self.H
        out = H.zero()
        for (alpha, w), c in y.terms.items():
            term = H.one()
            for i, a in enumerate(alpha, start=1):
                for _ in range(a):
                    term = term * self.iota_b(i)
            out = out + term * self._iota_tw(w) * c
        return out

    def lift(self, y: SpinPBWElement) -> SpinPBWElement:
        """Move an element of another specialization of saH_X into self.S."""
        return self.S.element(y.terms)


@lru_cache(maxsize=None)
def morita_map(wtype: WeylType, graded: bool = False) -> MoritaMap:
    return MoritaMap(solve_generator_images(wtype), graded)


def phi(a: PBWElement) -> TensorElement:
    """Phi on an element of aHC_X at the solving parameters (or u = v = 0)."""
    A = a.algebra
    M = morita_map(A.type, A.is_graded)
    if A.symbolic or Cyc8.coerce(A.u) != M.H.u or Cyc8.coerce(A.sqrt2v) != M.H.sqrt2v:
        raise ValueError(f"Phi is solved at u={M.images.u0}, v={M.images.v0} (or graded), not {A!r}")
    return M.phi(M.H.element(a.terms))


# ----------------------------------------------------------------------
# checks
# ----------------------------------------------------------------------


def _alphas(n: int, d: int):
    if n == 0:
        if d == 0:
            yield ()
        return
    for a in range(d, -1, -1):
        for rest in _alphas(n - 1, d - a):
            yield (a,) + rest


@dataclass
class IsoReport:
    type: WeylType
    max_xdeg: int
    ok: bool
    dims: list = field(default_factory=list)  # per degree: (source dim, image rank)
    failure: str | None = None

    def to_json(self) -> dict:
        return {
            "type": self.type.family,
            "n": self.type.n,
            "max_deg": self.max_xdeg,
            "ok": self.ok,
            "per_degree": [{"degree": d, "source_dim": a, "image_rank": b} for d, (a, b) in enumerate(self.dims)],
            "failure": self.failure,
        }


def verify_iso(wtype: WeylType, max_xdeg: int, graded: bool = False) -> IsoReport:
    """Phi maps the PBW basis of degree <= max_xdeg injectively, block by block.

    Phi(x^alpha c^eps w) = (Clifford part) (x) b^alpha t_w exactly, so it suffices
    that each 2^n x 2^n block (fixed alpha, w) has full rank.  Both sides then have
    dimension 2^n |W| binom(n + d - 1, d) in degree d.
    """
    M = morita_map(wtype, graded)
    n = wtype.n
    rep = IsoReport(wtype, max_xdeg, True)
    for d in range(max_xdeg + 1):
        src = img = 0
        for alpha in _alphas(n, d):
            for w in M.G.elements:
                vecs = []
                for eps in range(1 << n):
                    t = M.phi_monomial((alpha, eps, w))
                    if any(m != (alpha, w) for _, m in t.terms):
                        rep.ok = False
                        rep.failure = f"Phi(x^{alpha} c^{eps} {w}) leaves its block"
                        rep.dims.append((src, img))
                        return rep
                    vecs.append({e: c for (e, _), c in t.terms.items()})
                r = rank(vecs)
                src += 1 << n
                img += r
                if r != 1 << n:
                    rep.ok = False
                    rep.failure = rep.failure or f"block alpha={alpha} w={w} has rank {r}"
        rep.dims.append((src, img))
    return rep


def homomorphism_fuzz(wtype: WeylType, pairs: int = 200, seed: int = DEFAULT_SEED, graded: bool = False) -> list:
    """Phi(ab) == Phi(a)Phi(b) on random pairs; returns the failing pairs."""
    M = morita_map(wtype, graded)
    rng = np.random.Generator(np.random.Philox(seed))
    bad = []
    for _ in range(pairs):
        a = random_hc_element(rng, M.H)
        b = random_hc_element(rng, M.H)
        if M.phi(a * b) != M.phi(a) * M.phi(b):
            bad.append((a, b))
    return bad


def transport_identity(wtype: WeylType, max_xdeg: int, convention=None, graded: bool = False) -> list:
    """Candidates w_C f whose image is not (Clifford) (x) t_{w_C} f(-lambda^2 b^2).

    Returns the failures; empty means the identity holds for every candidate.
    """
    M = morita_map(wtype, graded)
    H, S = M.H, M.S
    lam = M.images.lam
    bad = []
    for c in candidate_data(wtype, max_xdeg, convention, H):
        lhs = M.phi(c.element)
        cl = M._phi_xc((0,) * wtype.n, c.cliff) * M._phi_w(c.w.window)
        ft = S.zero()
        for k, coef in c.f.expansion.items():
            scal = Cyc8.coerce(coef)
            for i, e in enumerate(k):
                scal = scal * (-(lam[i] * lam[i])) ** e
            ft = ft + S.monomial(tuple(2 * e for e in k)) * scal
        rhs = cl * TensorElement.pure(S, {0: 1}, ft)
        if lhs != rhs:
            bad.append(c.describe())
    return bad


def _express(base: Echelon, basis: list, v: dict, tag_start: int):
    """Coefficients a_i with v = sum a_i basis_i modulo base, or None."""
    E = base.copy()
    for i, b in enumerate(basis):
        tagged = dict(b)
        tagged[tag_start + i] = 1
        E.add(tagged)
    r = E.reduce(v)
    if not r or min(r) >= tag_start:
        # v - sum(-r_i) b_i reduces to zero
        return [-r.get(tag_start + i, 0) if r.get(tag_start + i) else 0 for i in range(len(basis))]
    return None


def transport_independence(wtype: WeylType, max_deg: int, convention=None) -> CocenterReport:
    """Independence of the spin candidates, certified on the Hecke-Clifford side.

    y -> Phi^-1(1 (x) y) is an algebra map saH_X -> aHC_X preserving parity and
    degree, so it sends commutators to commutators.  If the images of the spin
    candidates stay independent modulo [aHC, aHC] then so do the candidates
    modulo [saH, saH].  When the Hecke-Clifford candidates of that degree form a
    basis, the report also carries the transition matrix to them.
    """
    conv = _convention(wtype, convention)
    M = morita_map(wtype, graded=True)
    scands = spin_candidate_data(wtype, max_deg - max_deg % 2, conv)
    hcands = candidate_data(wtype, max_deg - max_deg % 2, conv, M.H)
    rep = CocenterReport(
        algebra="saH->aHC",
        family=wtype.family,
        n=wtype.n,
        mode="transport",
        max_deg=max_deg,
        convention=conv.value,
        parameters={"u": "0", "v": "0"},
        labels=[str(c.label) for c in scands if c.degree == 0],
        extra={"generator_images": M.images.to_json()},
    )
    matrices = {}
    for d in range(max_deg + 1):
        K = graded_commutator_space(wtype, d)
        dim = len(K.columns) - K.rank
        here = [c for c in scands if c.degree == d]
        imgs = [M.iota(M.lift(c.element)) for c in here]
        witness = None
        try:
            vecs = [K.vector(x) for x in imgs]
        except KeyError as exc:
            rep.degrees.append(DegreeResult(d, len(K.columns), K.rank, dim, len(here), FAILED, None,
                                            {"kind": "image-outside-slice", "detail": str(exc)}))
            continue
        tag = len(K.columns)
        indep, combo = independent_modulo(K.echelon, vecs, tag)
        independence = INDEPENDENT if indep else FAILED
        verdict = VERIFIED_DIM
        if not indep:
            verdict = FAILED
            witness = {"kind": "dependent-images", "kernel": {here[i].describe("t"): scalar_to_str(c, True) for i, c in combo.items()}}
        elif len(here) != dim:
            verdict = FAILED
            witness = {"kind": "dimension-mismatch", "cocenter_dim": dim, "candidates": len(here)}
        hh = [c for c in hcands if c.degree == d]
        hvecs = [K.vector(c.element) for c in hh]
        hc_basis, _ = independent_modulo(K.echelon, hvecs, tag)
        if indep and hc_basis and len(hh) == dim:
            rows = [_express(K.echelon, hvecs, v, tag) for v in vecs]
            invertible = all(r is not None for r in rows) and len(rows) == len(hh) and rank(
                [{j: x for j, x in enumerate(r) if x} for r in rows]
            ) == len(hh)
            if invertible:
                matrices[str(d)] = {
                    "rows": [c.describe("t") for c in here],
                    "columns": [c.describe() for c in hh],
                    "matrix": [[scalar_to_str(x, True) for x in r] for r in rows],
                }
            else:
                verdict = FAILED
                witness = {"kind": "singular-transition"}
        cert = certificate({"d": d, "images": [x.to_text() for x in imgs]})
        rep.degrees.append(DegreeResult(d, len(K.columns), K.rank, dim, len(here), verdict, independence, witness, cert))
    rep.extra["transition_matrices"] = matrices
    return rep
