"""The eleven acceptance checks, shared by the CLI and the test-suite.

Each check returns a ``CriterionResult``; nothing here is weakened to pass.  The
printed line is ``criterion N: PASS|FAIL - detail``.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from . import cocenterlab as cl
from .heckeclifford import (
    bracketed_product,
    center_witness_check,
    check_relations,
    random_hc_element,
    random_word,
    symbolic_algebra,
)
from .morita import DEFAULT_SEED, homomorphism_fuzz, solve_generator_images, transport_independence, verify_iso
from .spinhecke import (
    check_spin_relations,
    graded_spin_algebra,
    random_spin_element,
    symbolic_spin_algebra,
)
from .weylcomb import (
    ClassLabel,
    ParabolicSubset,
    SignedPerm,
    WeylType,
    counting_identity_check,
    distinguished_classes,
    group,
    is_elliptic_element,
    normalizer_identity_check,
)


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"criterion {self.number}: {'PASS' if self.ok else 'FAIL'} - {self.title}: {self.detail}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "pass": self.ok, "detail": self.detail, "seconds": round(self.seconds, 2)}


def _types(*specs):
    return [WeylType(f, n) for f, n in specs]


def criterion_1() -> tuple:
    """Defining relations of aHC_X and saH_X, symbolic parameters, n <= 4."""
    bad = []
    for t in _types(("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("D", 4)):
        bad += [f"{t} {r}" for r in check_relations(symbolic_algebra(t))]
        bad += [f"{t} spin {r}" for r in check_spin_relations(symbolic_spin_algebra(t))]
        bad += [f"{t} spin graded {r}" for r in check_spin_relations(graded_spin_algebra(t))]
    return not bad, "all relations hold for A_1-A_3, B_2-B_4, D_4" if not bad else f"failing: {bad[:3]}"


def criterion_2(seed: int = DEFAULT_SEED, triples: int = 200) -> tuple:
    """Associativity on random triples and bracketing invariance, n <= 3."""
    rng = np.random.Generator(np.random.Philox(seed))
    bad = []
    for t in _types(("A", 2), ("A", 3), ("B", 2), ("B", 3)):
        H, S = symbolic_algebra(t), symbolic_spin_algebra(t)
        for _ in range(triples):
            a, b, c = (random_hc_element(rng, H) for _ in range(3))
            if (a * b) * c != a * (b * c):
                bad.append(f"{t} aHC")
            a, b, c = (random_spin_element(rng, S) for _ in range(3))
            if (a * b) * c != a * (b * c):
                bad.append(f"{t} saH")
        for A in (H, S):
            for _ in range(20):
                word = random_word(rng, A, int(rng.integers(3, 7)))
                if bracketed_product(rng, A, word) != bracketed_product(rng, A, word):
                    bad.append(f"{t} bracketing")
    detail = f"{triples} triples per algebra for A_1, A_2, B_2, B_3 (seed {seed:#x})"
    return not bad, detail if not bad else f"failures: {bad[:3]}"


def criterion_3() -> tuple:
    """e_k(x_1^2, ..., x_n^2) central.  Type D needs n >= 4, so D_4 stands in."""
    bad = []
    for t in _types(("A", 2), ("A", 3), ("B", 2), ("B", 3), ("D", 4)):
        H = symbolic_algebra(t)
        bad += [f"{t} e{k}" for k in range(1, t.n + 1) if not center_witness_check(H, k)]
    return not bad, "e_k(x^2) central in A_1, A_2, B_2, B_3, D_4" if not bad else f"not central: {bad}"


def criterion_4() -> tuple:
    rep = cl.verify_graded_basis(WeylType("A", 2), 4)
    ok = rep.dims == [1, 0, 1, 0, 2] and rep.dims == rep.candidate_counts and rep.verdict == cl.VERIFIED_DIM
    return ok, f"dims {rep.dims}, candidates {rep.candidate_counts}, verdict {rep.verdict}"


def criterion_5() -> tuple:
    parts, ok = [], True
    for t, d in ((WeylType("A", 3), 2), (WeylType("B", 3), 0)):
        rep = cl.verify_graded_basis(t, d)
        ok &= rep.verdict == cl.VERIFIED_DIM
        parts.append(f"{t} <= {d}: {rep.verdict} dims {rep.dims} cands {rep.candidate_counts}")
    res = cl.resolve_convention(WeylType("B", 2), 2)
    ok &= len(res["passing"]) == 1
    per = "; ".join(f"{k}: {v['verdict']} cands {v['candidates']}" for k, v in res["results"].items())
    parts.append(f"B_2 <= 2 dims {cl.graded_cocenter_dims(WeylType('B', 2), 2)}, passing conventions {res['passing']} ({per})")
    return ok, " | ".join(parts)


def criterion_6() -> tuple:
    bad, count = [], 0
    for t in _types(("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3)):
        n = t.n
        for gamma in cl.all_compositions(n):
            flags = [None] if t.family == "A" else list(itertools.product((False, True), repeat=len(gamma)))
            for neg in flags:
                for I in cl.even_subsets(n):
                    count += 1
                    if not cl.clifford_reduce_oracle(gamma, I, t, neg):
                        bad.append(f"{t} clifford {gamma} {neg} {I}")
        for w in group(t).elements:
            count += 1
            if not cl.class_reduce_oracle(SignedPerm(t, w)):
                bad.append(f"{t} class {w}")
    return not bad, f"{count} reductions agree with commutator-space membership" if not bad else f"disagree: {bad[:3]}"


def criterion_7() -> tuple:
    parts, ok = [], True
    for t in _types(("A", 2), ("A", 3), ("B", 2)):
        rep = cl.verify_filtered(t, 2, slack=2)
        good = all(d.verdict == cl.VERIFIED_SPAN for d in rep.degrees)
        ok &= good
        inds = sorted({d.independence for d in rep.degrees})
        msg = f"{t}: {'verified-span' if good else 'unspanned'}"
        if not good:
            w = next(d.witness for d in rep.degrees if d.verdict != cl.VERIFIED_SPAN)
            msg += f" (degree {w['degree']}: {w['monomial']})"
        parts.append(msg + f", independence {'/'.join(inds)}")
    return ok, " | ".join(parts)


def criterion_8() -> tuple:
    parts, ok = [], True
    for t, d in ((WeylType("A", 2), 4), (WeylType("A", 3), 2), (WeylType("B", 2), 2)):
        rep = cl.verify_spin_graded_basis(t, d)
        hc = cl.graded_cocenter_dims(t, d)
        same = rep.dims == hc
        ok &= rep.verdict == cl.VERIFIED_DIM and same
        parts.append(f"{t}: {rep.verdict} spin dims {rep.dims} (aHC {hc}, {'equal' if same else 'differ'}) cands {rep.candidate_counts}")
    return ok, " | ".join(parts)


def criterion_9(seed: int = DEFAULT_SEED) -> tuple:
    parts, ok = [], True
    for t in _types(("A", 2), ("A", 3), ("B", 2), ("B", 3), ("D", 4)):
        gi = solve_generator_images(t)
        fz = homomorphism_fuzz(t, 200, seed)
        iso = verify_iso(t, 2)
        ok &= not fz and iso.ok
        parts.append(f"{t}: {len(gi.solutions)} solutions, fuzz {'ok' if not fz else 'FAIL'}, iso {'ok' if iso.ok else 'FAIL'}")
    for t, d in ((WeylType("A", 2), 2), (WeylType("A", 3), 2), (WeylType("B", 2), 2), (WeylType("B", 3), 0)):
        rep = transport_independence(t, d)
        indep = all(x.independence == cl.INDEPENDENT for x in rep.degrees)
        ok &= rep.verdict == cl.VERIFIED_DIM
        parts.append(f"{t} transport: {rep.verdict}, images independent {indep}, degrees with transition matrix {sorted(rep.extra['transition_matrices'])}")
    return ok, " | ".join(parts)


def criterion_10() -> tuple:
    bad, pairs, ell = [], 0, 0
    for t in _types(("A", 4), ("B", 3)):
        G = group(t)
        subs = [ParabolicSubset(t, frozenset(c)) for r in range(t.rank + 1) for c in itertools.combinations(t.indices, r)]
        for J, Jp in itertools.product(subs, subs):
            if G.equivalent(J.indices, Jp.indices):
                pairs += 1
                if not counting_identity_check(J, Jp):
                    bad.append(f"{t} count {J} {Jp}")
        for J in subs:
            for w in G.parabolic(J.indices):
                sw = SignedPerm(t, w)
                if is_elliptic_element(sw, J):
                    ell += 1
                    if not normalizer_identity_check(J, sw):
                        bad.append(f"{t} normalizer {J} {w}")
    return not bad, f"{pairs} equivalent pairs and {ell} elliptic (J, w) in A_3, B_3" if not bad else f"failing: {bad[:3]}"


def criterion_11() -> tuple:
    t = WeylType("D", 4)
    labels = distinguished_classes(t)
    target = ClassLabel.of((), (3, 1))
    has = target in labels
    rep = cl.verify_graded_basis(t, 0)
    ok = has and rep.dims == rep.candidate_counts and rep.verdict == cl.VERIFIED_DIM
    return ok, f"{target} distinguished: {has}; dim {rep.dims[0]}, candidates {rep.candidate_counts[0]}, verdict {rep.verdict}"


CRITERIA = {
    1: ("relation suites", criterion_1),
    2: ("associativity fuzz", criterion_2),
    3: ("center check", criterion_3),
    4: ("graded A_1 dims (1,0,1,0,2)", criterion_4),
    5: ("graded A_2, B_2 (one convention), B_3", criterion_5),
    6: ("reductions vs oracle", criterion_6),
    7: ("filtered spanning", criterion_7),
    8: ("spin mirror", criterion_8),
    9: ("Morita transport", criterion_9),
    10: ("combinatorial trace layer", criterion_10),
    11: ("D_4 degree 0", criterion_11),
}

LARGE = {11}


def run_criterion(k: int, seed: int = DEFAULT_SEED) -> CriterionResult:
    title, fn = CRITERIA[k]
    t0 = time.perf_counter()
    ok, detail = fn(seed) if k in (2, 9) else fn()
    return CriterionResult(k, title, bool(ok), detail, time.perf_counter() - t0)
