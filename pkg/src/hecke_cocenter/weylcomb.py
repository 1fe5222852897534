"""Classical Weyl groups as signed permutations, and their class/parabolic combinatorics.

A group element is stored as its *window* ``(w(1), ..., w(n))`` where a negative
entry records a sign flip: ``w(e_i) = sign * e_|w(i)|``.  Simple reflections follow
the usual diagram labelling; ``s_n`` is ``e_n -> -e_n`` in type B and
``e_{n-1} -> -e_n, e_n -> -e_{n-1}`` in type D.

Everything here is brute force over the group and intended for small rank.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from importlib import resources
from typing import Iterable, Iterator, Sequence

Window = tuple

DEFAULT_ENUMERATION_BOUND = 10**6


class WeylError(ValueError):
    """Invalid group data (bad type, label, index or precondition)."""


class EnumerationBoundExceeded(WeylError):
    pass


class AmbiguousMinimalSubset(WeylError):
    """Minimal parabolic subsets meeting a class are not all W-equivalent."""


class ConventionFlag(str, enum.Enum):
    PAPER_42 = "paper-4.2"
    LENGTH_FILTER = "length-filter"


# ----------------------------------------------------------------------
# types and elements
# ----------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class WeylType:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in ("A", "B", "D"):
            raise WeylError(f"unknown family {self.family!r}")
        minimum = {"A": 1, "B": 2, "D": 4}[self.family]
        if not isinstance(self.n, int) or self.n < minimum:
            raise WeylError(f"type {self.family} needs n >= {minimum}, got {self.n}")

    @property
    def rank(self) -> int:
        return self.n - 1 if self.family == "A" else self.n

    @property
    def indices(self) -> tuple:
        return tuple(range(1, self.rank + 1))

    def __str__(self) -> str:
        return f"{self.family}_{self.rank}"


@dataclass(frozen=True)
class SignedPerm:
    type: WeylType
    window: Window

    def __post_init__(self):
        n = self.type.n
        w = tuple(int(a) for a in self.window)
        object.__setattr__(self, "window", w)
        if len(w) != n or sorted(abs(a) for a in w) != list(range(1, n + 1)):
            raise WeylError(f"{w} is not a signed permutation of 1..{n}")
        negatives = sum(1 for a in w if a < 0)
        if self.type.family == "A" and negatives:
            raise WeylError("type A elements have no sign changes")
        if self.type.family == "D" and negatives % 2:
            raise WeylError("type D elements have an even number of sign changes")

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        return compose(self, other)

    def inverse(self) -> "SignedPerm":
        return SignedPerm(self.type, invert(self.window))

    def __call__(self, i: int) -> int:
        a = self.window[abs(i) - 1]
        return a if i > 0 else -a

    def length(self) -> int:
        return group(self.type).length(self.window)

    def reduced_word(self) -> tuple:
        return group(self.type).reduced_word(self.window)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.type.n + 1))

    def to_json(self) -> dict:
        return {"type": self.type.family, "n": self.type.n, "window": list(self.window)}

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.window) + "]"


def compose_windows(a: Window, b: Window) -> Window:
    """(a o b)(i) = a(b(i))."""
    out = []
    for bi in b:
        ai = a[abs(bi) - 1]
        out.append(ai if bi > 0 else -ai)
    return tuple(out)


def invert(w: Window) -> Window:
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[abs(wi) - 1] = i if wi > 0 else -i
    return tuple(out)


def compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    if a.type != b.type:
        raise WeylError(f"cannot compose elements of {a.type} and {b.type}")
    return SignedPerm(a.type, compose_windows(a.window, b.window))


# ----------------------------------------------------------------------
# partitions and class labels
# ----------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise WeylError(f"{p} is not a partition")
        object.__setattr__(self, "parts", p)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def is_OP(self) -> bool:
        return all(p % 2 for p in self.parts)

    def is_EP(self) -> bool:
        return all(p % 2 == 0 for p in self.parts)

    def is_SOP(self) -> bool:
        return self.is_OP() and len(set(self.parts)) == len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""

    def rec(m, cap):
        if m == 0:
            yield ()
            return
        for first in range(min(m, cap), 0, -1):
            for rest in rec(m - first, first):
                yield (first,) + rest

    for p in rec(n, n if largest is None else largest):
        yield Partition(p)


@dataclass(frozen=True, order=True)
class ClassLabel:
    lam: Partition
    mu: Partition = Partition()

    @classmethod
    def of(cls, lam: Iterable[int], mu: Iterable[int] = ()) -> "ClassLabel":
        return cls(Partition.of(lam), Partition.of(mu))

    @property
    def size(self) -> int:
        return self.lam.size + self.mu.size

    def to_json(self) -> dict:
        return {"lambda": list(self.lam.parts), "mu": list(self.mu.parts)}

    def __str__(self) -> str:
        if not self.mu.parts:
            return str(self.lam)
        return f"({self.lam},{self.mu})"


def check_label(wtype: WeylType, label: ClassLabel) -> None:
    if label.size != wtype.n:
        raise WeylError(f"label {label} does not have size {wtype.n}")
    if wtype.family == "A" and label.mu.parts:
        raise WeylError("type A labels have empty mu")
    if wtype.family == "D" and len(label.mu) % 2:
        raise WeylError(f"label {label} has an odd number of negative cycles; not in {wtype}")


def all_labels(wtype: WeylType) -> list:
    n = wtype.n
    if wtype.family == "A":
        return [ClassLabel(p) for p in partitions(n)]
    out = []
    for k in range(n, -1, -1):
        for lam in partitions(k):
            for mu in partitions(n - k):
                label = ClassLabel(lam, mu)
                if wtype.family == "D" and len(mu) % 2:
                    continue
                out.append(label)
    return out


# ----------------------------------------------------------------------
# the group
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ParabolicSubset:
    type: WeylType
    indices: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        idx = frozenset(int(i) for i in self.indices)
        if not idx <= set(self.type.indices):
            raise WeylError(f"{sorted(idx)} not a subset of simple indices {self.type.indices}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def full(cls, wtype: WeylType) -> "ParabolicSubset":
        return cls(wtype, frozenset(wtype.indices))

    def sorted(self) -> tuple:
        return tuple(sorted(self.indices))

    def __len__(self) -> int:
        return len(self.indices)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.sorted())) + "}"


class WeylGroup:
    """Brute-force model of W_X over windows, with caches."""

    def __init__(self, wtype: WeylType, bound: int = DEFAULT_ENUMERATION_BOUND):
        self.type = wtype
        self.n = wtype.n
        self.bound = bound
        self.identity = tuple(range(1, self.n + 1))
        self.simple = {i: self._simple_window(i) for i in wtype.indices}
        self.simple_roots = {i: self._simple_root(i) for i in wtype.indices}
        self.positive_roots = self._positive_roots()
        self._length: dict = {}
        self._word: dict = {}

    # --- root data -----------------------------------------------------
    def _simple_window(self, i: int) -> Window:
        n = self.n
        w = list(range(1, n + 1))
        if i < n:
            w[i - 1], w[i] = i + 1, i
        elif self.type.family == "B":
            w[n - 1] = -n
        else:
            w[n - 2], w[n - 1] = -n, -(n - 1)
        return tuple(w)

    def _simple_root(self, i: int) -> tuple:
        n = self.n
        v = [0] * n
        if i < n:
            v[i - 1], v[i] = 1, -1
        elif self.type.family == "B":
            v[n - 1] = 1
        else:
            v[n - 2], v[n - 1] = 1, 1
        return tuple(v)

    def _positive_roots(self) -> list:
        n = self.n
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                v = [0] * n
                v[i], v[j] = 1, -1
                roots.append(tuple(v))
                if self.type.family != "A":
                    v = [0] * n
                    v[i], v[j] = 1, 1
                    roots.append(tuple(v))
            if self.type.family == "B":
                v = [0] * n
                v[i] = 1
                roots.append(tuple(v))
        return roots

    def coxeter_m(self, i: int, j: int) -> int:
        if i == j:
            return 1
        fam, n = self.type.family, self.n
        a, b = sorted((i, j))
        if fam == "D" and b == n:
            return 3 if a == n - 2 else 2
        if fam == "B" and b == n:
            return 4 if a == n - 1 else 2
        return 3 if b - a == 1 else 2

    @staticmethod
    def act_vector(w: Window, vec: Sequence[int]) -> tuple:
        out = [0] * len(w)
        for i, c in enumerate(vec):
            if c:
                wi = w[i]
                out[abs(wi) - 1] += c if wi > 0 else -c
        return tuple(out)

    @staticmethod
    def is_negative(vec: Sequence[int]) -> bool:
        for c in vec:
            if c:
                return c < 0
        return False

    # --- length and words -----------------------------------------------
    def length(self, w: Window) -> int:
        ell = self._length.get(w)
        if ell is None:
            ell = sum(1 for r in self.positive_roots if self.is_negative(self.act_vector(w, r)))
            self._length[w] = ell
        return ell

    def left_descents(self, w: Window) -> list:
        winv = invert(w)
        return [i for i in self.type.indices if self.is_negative(self.act_vector(winv, self.simple_roots[i]))]

    def reduced_word(self, w: Window) -> tuple:
        """Lexicographically least reduced word, by greedy left descents."""
        word = self._word.get(w)
        if word is not None:
            return word
        letters = []
        cur = w
        while cur != self.identity:
            i = self.left_descents(cur)[0]
            letters.append(i)
            cur = compose_windows(self.simple[i], cur)
        word = tuple(letters)
        self._word[w] = word
        return word

    def from_word(self, word: Iterable[int]) -> Window:
        w = self.identity
        for i in word:
            w = compose_windows(w, self.simple[i])
        return w

    # --- enumeration ----------------------------------------------------
    def generated(self, gens: Iterable[int], bound: int | None = None) -> list:
        bound = self.bound if bound is None else bound
        gens = [self.simple[i] for i in sorted(gens)]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    x = compose_windows(w, g)
                    if x not in seen:
                        seen.add(x)
                        if len(seen) > bound:
                            raise EnumerationBoundExceeded(f"subgroup larger than bound {bound}")
                        nxt.append(x)
            frontier = nxt
        return sorted(seen, key=self.sort_key)

    def sort_key(self, w: Window):
        return (self.length(w), w)

    @cached_property
    def elements(self) -> list:
        return self.generated(self.type.indices)

    @lru_cache(maxsize=None)
    def parabolic(self, J: frozenset) -> list:
        return self.generated(J)

    @lru_cache(maxsize=None)
    def parabolic_set(self, J: frozenset) -> frozenset:
        return frozenset(self.parabolic(J))

    def order(self) -> int:
        return len(self.elements)

    # --- classes ----------------------------------------------------------
    @staticmethod
    def cycle_type(w: Window) -> ClassLabel:
        n = len(w)
        seen = [False] * n
        lam, mu = [], []
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            flips = 0
            j = start
            while not seen[j]:
                seen[j] = True
                length += 1
                if w[j] < 0:
                    flips += 1
                j = abs(w[j]) - 1
            (mu if flips % 2 else lam).append(length)
        return ClassLabel.of(lam, mu)

    @lru_cache(maxsize=None)
    def class_elements(self, label: ClassLabel) -> list:
        return [w for w in self.elements if self.cycle_type(w) == label]

    def meets(self, label: ClassLabel, J: frozenset) -> bool:
        return any(self.cycle_type(w) == label for w in self.parabolic(J))

    # --- cosets -----------------------------------------------------------
    @lru_cache(maxsize=None)
    def double_coset_reps(self, J: frozenset, Jp: frozenset) -> list:
        left = self.parabolic(J)
        right = self.parabolic(Jp)
        covered = set()
        reps = []
        for x in self.elements:
            if x in covered:
                continue
            reps.append(x)
            for a in left:
                ax = compose_windows(a, x)
                for b in right:
                    covered.add(compose_windows(ax, b))
        return reps

    def maps_simple_into(self, x: Window, J: Iterable[int], Jp: Iterable[int]) -> bool:
        """True iff x(alpha_j) is a simple root alpha_k with k in Jp, for every j in J."""
        targets = {self.simple_roots[k] for k in Jp}
        return all(self.act_vector(x, self.simple_roots[j]) in targets for j in J)

    def image_of_subset(self, x: Window, J: Iterable[int]):
        """x(J) as a set of simple indices, or None if some image is not simple."""
        lookup = {r: k for k, r in self.simple_roots.items()}
        out = set()
        for j in J:
            k = lookup.get(self.act_vector(x, self.simple_roots[j]))
            if k is None:
                return None
            out.add(k)
        return frozenset(out)

    @lru_cache(maxsize=None)
    def normalizer(self, J: frozenset) -> list:
        WJ = self.parabolic_set(J)
        out = []
        for g in self.elements:
            ginv = invert(g)
            if all(compose_windows(compose_windows(g, self.simple[j]), ginv) in WJ for j in J):
                out.append(g)
        return out

    def centralizer(self, w: Window) -> list:
        return [g for g in self.elements if compose_windows(g, w) == compose_windows(w, g)]

    @lru_cache(maxsize=None)
    def equivalent(self, J1: frozenset, J2: frozenset) -> bool:
        if len(J1) != len(J2):
            return False
        return any(self.image_of_subset(x, J1) == J2 for x in self.elements)


@lru_cache(maxsize=None)
def group(wtype: WeylType) -> WeylGroup:
    return WeylGroup(wtype)


# ----------------------------------------------------------------------
# operations on the public types
# ----------------------------------------------------------------------


def identity(wtype: WeylType) -> SignedPerm:
    return SignedPerm(wtype, tuple(range(1, wtype.n + 1)))


def simple_reflection(wtype: WeylType, i: int) -> SignedPerm:
    if i not in wtype.indices:
        raise WeylError(f"s_{i} is not a simple reflection of {wtype}")
    return SignedPerm(wtype, group(wtype).simple[i])


def from_word(wtype: WeylType, word: Iterable[int]) -> SignedPerm:
    return SignedPerm(wtype, group(wtype).from_word(word))


def elements(wtype: WeylType) -> list:
    return [SignedPerm(wtype, w) for w in group(wtype).elements]


def cycle_type(w: SignedPerm) -> ClassLabel:
    label = WeylGroup.cycle_type(w.window)
    if w.type.family == "A":
        return ClassLabel(label.lam)
    return label


def class_representative(wtype: WeylType, label: ClassLabel) -> SignedPerm:
    """Block representative: lambda-cycles (positive) on the lowest letters, then mu-cycles.

    A negative block on letters a..b is a -> a+1 -> ... -> b -> -a.
    """
    check_label(wtype, label)
    window = []
    start = 1
    for blocks, negative in ((label.lam.parts, False), (label.mu.parts, True)):
        for size in blocks:
            letters = list(range(start, start + size))
            for k, a in enumerate(letters):
                if k + 1 < size:
                    window.append(a + 1)
                else:
                    window.append(-start if negative else start)
            start += size
    return SignedPerm(wtype, tuple(window))


def _subset(J) -> frozenset:
    if isinstance(J, ParabolicSubset):
        return J.indices
    return frozenset(J)


def enumerate_parabolic(J: ParabolicSubset, bound: int = DEFAULT_ENUMERATION_BOUND) -> list:
    G = group(J.type)
    return [SignedPerm(J.type, w) for w in G.generated(J.indices, bound=bound)]


def min_double_coset_reps(J: ParabolicSubset, Jp: ParabolicSubset) -> list:
    if J.type != Jp.type:
        raise WeylError("subsets of different groups")
    G = group(J.type)
    return [SignedPerm(J.type, x) for x in G.double_coset_reps(J.indices, Jp.indices)]


def normalizer(J: ParabolicSubset) -> list:
    return [SignedPerm(J.type, g) for g in group(J.type).normalizer(J.indices)]


def centralizer(w: SignedPerm) -> list:
    return [SignedPerm(w.type, g) for g in group(w.type).centralizer(w.window)]


def subsets_equivalent(J1: ParabolicSubset, J2: ParabolicSubset) -> bool:
    return group(J1.type).equivalent(J1.indices, J2.indices)


def is_elliptic(wtype: WeylType, label: ClassLabel, J: ParabolicSubset) -> bool:
    """Whether the class of ``label`` meets W_J but no proper standard parabolic of W_J."""
    check_label(wtype, label)
    G = group(wtype)
    if not G.meets(label, J.indices):
        raise WeylError(f"class {label} does not meet W_{J}")
    return not any(G.meets(label, J.indices - {j}) for j in J.indices)


def is_elliptic_element(w: SignedPerm, J: ParabolicSubset) -> bool:
    """Whether w lies in W_J and its W_J-class avoids every proper standard parabolic."""
    G = group(w.type)
    WJ = G.parabolic(J.indices)
    if w.window not in G.parabolic_set(J.indices):
        return False
    conj = {compose_windows(compose_windows(g, w.window), invert(g)) for g in WJ}
    for j in J.indices:
        if conj & G.parabolic_set(J.indices - {j}):
            return False
    return True


@lru_cache(maxsize=None)
def J_of_class(wtype: WeylType, label: ClassLabel) -> tuple:
    """Minimal-cardinality J meeting the class, plus a fixed elliptic representative.

    Ties: lexicographically least J, then least window.  All minimal subsets that
    meet the class must be W-equivalent; otherwise ``AmbiguousMinimalSubset``.
    """
    check_label(wtype, label)
    G = group(wtype)
    for k in range(wtype.rank + 1):
        hits = [frozenset(c) for c in itertools.combinations(wtype.indices, k) if G.meets(label, frozenset(c))]
        if not hits:
            continue
        first = hits[0]
        for other in hits[1:]:
            if not G.equivalent(first, other):
                raise AmbiguousMinimalSubset(
                    f"class {label}: minimal subsets {sorted(first)} and {sorted(other)} are not W-equivalent"
                )
        w = min(x for x in G.parabolic(first) if G.cycle_type(x) == label)
        return ParabolicSubset(wtype, first), SignedPerm(wtype, w)
    raise WeylError(f"class {label} is empty in {wtype}")


@lru_cache(maxsize=None)
def _load_conventions() -> dict:
    text = resources.files("hecke_cocenter").joinpath("data/conventions.json").read_text()
    return json.loads(text)


def resolved_convention(wtype: WeylType) -> ConventionFlag:
    """Convention recorded in the fixture for this family (decided by the rank oracle)."""
    data = _load_conventions()
    return ConventionFlag(data["families"][wtype.family]["convention"])


def survives(wtype: WeylType, label: ClassLabel, convention: ConventionFlag | str | None = None) -> bool:
    """Whether the class label is distinguished (not forced to vanish in the cocenter)."""
    check_label(wtype, label)
    convention = resolved_convention(wtype) if convention is None else ConventionFlag(convention)
    lam, mu = label.lam, label.mu
    if wtype.family == "A":
        return lam.is_OP()
    in_op_ep = lam.is_OP() and mu.is_EP()
    if convention is ConventionFlag.LENGTH_FILTER:
        in_op_ep = in_op_ep and len(mu) % 2 == 0
    if wtype.family == "B":
        return in_op_ep
    if wtype.n % 2 == 0 and not lam.parts and mu.size == wtype.n and mu.is_SOP():
        return True
    return in_op_ep


def distinguished_classes(wtype: WeylType, convention: ConventionFlag | str | None = None) -> list:
    return [label for label in all_labels(wtype) if survives(wtype, label, convention)]


def r_bar(Jp: ParabolicSubset, J: ParabolicSubset, w: SignedPerm, f) -> list:
    """Formal sum over x in ^J W ^J' with x^-1(J) in J' of (x^-1 w x, f^(x^-1)).

    ``f`` must provide ``act(window)`` returning the transformed polynomial.
    """
    wtype = w.type
    G = group(wtype)
    if not is_elliptic_element(w, J):
        raise WeylError(f"{w} is not elliptic in W_{J}")
    for g in G.normalizer(J.indices):
        if f.act(g) != f:
            raise WeylError("f is not fixed by the normalizer of W_J")
    out = []
    for x in G.double_coset_reps(J.indices, Jp.indices):
        xinv = invert(x)
        if not G.maps_simple_into(xinv, J.indices, Jp.indices):
            continue
        conj = compose_windows(compose_windows(xinv, w.window), x)
        out.append((SignedPerm(wtype, conj), f.act(xinv)))
    return out


def counting_identity_check(J: ParabolicSubset, Jp: ParabolicSubset) -> bool:
    """|{z in ^J W ^J' : z^-1(J) = J'}| == |N_W(W_J)| / |W_J|."""
    G = group(J.type)
    if not G.equivalent(J.indices, Jp.indices):
        raise WeylError(f"{J} and {Jp} are not W-equivalent")
    count = sum(
        1
        for z in G.double_coset_reps(J.indices, Jp.indices)
        if G.image_of_subset(invert(z), J.indices) == Jp.indices
    )
    return count * len(G.parabolic(J.indices)) == len(G.normalizer(J.indices))


def normalizer_identity_check(J: ParabolicSubset, w: SignedPerm) -> bool:
    """W_J C_W(w) = N_W(W_J) = W_J Z W_J for w elliptic in W_J."""
    G = group(J.type)
    if not is_elliptic_element(w, J):
        raise WeylError(f"{w} is not elliptic in W_{J}")
    WJ = G.parabolic(J.indices)
    N = set(G.normalizer(J.indices))
    WJC = {compose_windows(a, c) for a in WJ for c in G.centralizer(w.window)}
    Z = [z for z in G.double_coset_reps(J.indices, J.indices) if G.image_of_subset(z, J.indices) == J.indices]
    WJZWJ = {compose_windows(compose_windows(a, z), b) for a in WJ for z in Z for b in WJ}
    return WJC == N == WJZWJ
