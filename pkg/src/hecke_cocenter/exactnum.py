"""Exact scalars: rationals, the cyclotomic field Q(zeta_8), and polynomials in u, v.

``Rational`` is ``gmpy2.mpq``.  ``Cyc8`` stores a0 + a1*z + a2*z^2 + a3*z^3 with
z^4 = -1, so SQRT2 = z - z^3 and I = z^2.  ``ParamPoly`` is a sparse polynomial
in the deformation parameters with ``Cyc8`` coefficients.

All values are immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from gmpy2 import mpq

Rational = mpq

__all__ = [
    "Rational",
    "Cyc8",
    "ParamPoly",
    "ZERO",
    "ONE",
    "ZETA",
    "SQRT2",
    "I",
    "U",
    "V",
    "as_rational",
    "parse_rational",
    "parse_cyc8",
    "cyc8_mul",
    "cyc8_inv",
    "poly_eval",
    "scalar_to_str",
]


def as_rational(x) -> mpq:
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


_MPQ = type(mpq(0))


def _foreign(x) -> bool:
    """True for operands the scalar classes should leave to the other side (e.g. algebra elements)."""
    return not isinstance(x, (int, Fraction, str, _MPQ, Cyc8, ParamPoly))


def parse_rational(text: str) -> mpq:
    text = text.strip()
    if "/" in text:
        p, q = text.split("/", 1)
        return mpq(int(p), int(q))
    return mpq(int(text))


class Cyc8:
    """Element of Q(zeta_8) in the power basis 1, z, z^2, z^3."""

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs: Iterable = (0, 0, 0, 0)):
        c = tuple(as_rational(a) for a in coeffs)
        if len(c) != 4:
            raise ValueError("Cyc8 needs exactly four coefficients")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, c: tuple) -> "Cyc8":
        obj = object.__new__(cls)
        object.__setattr__(obj, "c", c)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Cyc8 is immutable")

    @classmethod
    def from_rational(cls, q) -> "Cyc8":
        z = mpq(0)
        return cls._raw((as_rational(q), z, z, z))

    @staticmethod
    def coerce(x) -> "Cyc8":
        if isinstance(x, Cyc8):
            return x
        if isinstance(x, ParamPoly):
            raise TypeError("cannot coerce ParamPoly to Cyc8")
        return Cyc8.from_rational(x)

    # --- queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self) -> bool:
        return any(self.c)

    def rational(self):
        """Return the value as an mpq if it lies in Q, else None."""
        a0, a1, a2, a3 = self.c
        if a1 == 0 and a2 == 0 and a3 == 0:
            return a0
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyc8):
            return self.c == other.c
        if isinstance(other, (int, Fraction)) or type(other) is type(mpq(0)):
            return self.c == (as_rational(other), 0, 0, 0)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            r = self.rational()
            h = hash(r) if r is not None else hash(self.c)
            object.__setattr__(self, "_hash", h)
        return self._hash

    # --- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, ParamPoly) or _foreign(other):
            return NotImplemented
        o = other.c if isinstance(other, Cyc8) else (as_rational(other), 0, 0, 0)
        a = self.c
        return Cyc8._raw((a[0] + o[0], a[1] + o[1], a[2] + o[2], a[3] + o[3]))

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return Cyc8._raw((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other):
        if isinstance(other, ParamPoly) or _foreign(other):
            return NotImplemented
        return self + (-Cyc8.coerce(other))

    def __rsub__(self, other):
        return Cyc8.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Cyc8):
            return cyc8_mul(self, other)
        if isinstance(other, ParamPoly) or _foreign(other):
            return NotImplemented
        q = as_rational(other)
        a = self.c
        return Cyc8._raw((a[0] * q, a[1] * q, a[2] * q, a[3] * q))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyc8):
            return self * cyc8_inv(other)
        q = as_rational(other)
        if q == 0:
            raise ZeroDivisionError("Cyc8 division by zero")
        return self * (1 / q)

    def __rtruediv__(self, other):
        return Cyc8.coerce(other) * cyc8_inv(self)

    def __pow__(self, k: int):
        if k < 0:
            return cyc8_inv(self) ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> "Cyc8":
        """Image under z -> z^k for k odd."""
        out = [mpq(0)] * 4
        for j, a in enumerate(self.c):
            if not a:
                continue
            e = (k * j) % 8
            if e >= 4:
                out[e - 4] -= a
            else:
                out[e] += a
        return Cyc8._raw(tuple(out))

    def norm(self) -> mpq:
        prod = self * self.galois(3) * self.galois(5) * self.galois(7)
        r = prod.rational()
        assert r is not None
        return r

    # --- presentation --------------------------------------------------
    def __str__(self) -> str:
        parts = []
        for j, a in enumerate(self.c):
            if not a:
                continue
            mon = ("", "z", "z^2", "z^3")[j]
            if not mon:
                parts.append(str(a))
            else:
                parts.append(f"{a}*{mon}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Cyc8({str(self)!r})"

    def pretty(self) -> str:
        """Render in the basis 1, i, sqrt2, i*sqrt2."""
        a0, a1, a2, a3 = self.c
        coords = (a0, a2, (a1 - a3) / 2, (a1 + a3) / 2)
        names = ("", "i", "√2", "i√2")
        parts = []
        for q, name in zip(coords, names):
            if not q:
                continue
            if not name:
                parts.append(str(q))
            elif q == 1:
                parts.append(name)
            elif q == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{q}{name}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


def cyc8_mul(a: Cyc8, b: Cyc8) -> Cyc8:
    a0, a1, a2, a3 = a.c
    b0, b1, b2, b3 = b.c
    return Cyc8._raw((
        a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
        a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
        a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
        a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
    ))


def cyc8_inv(a: Cyc8) -> Cyc8:
    """Inverse via the product of the three nontrivial Galois conjugates."""
    if a.is_zero():
        raise ZeroDivisionError("Cyc8 inverse of zero")
    r = a.rational()
    if r is not None:
        return Cyc8.from_rational(1 / r)
    conj = a.galois(3) * a.galois(5) * a.galois(7)
    n = (a * conj).rational()
    return conj * (1 / n)


ZERO = Cyc8((0, 0, 0, 0))
ONE = Cyc8((1, 0, 0, 0))
ZETA = Cyc8((0, 1, 0, 0))
I = Cyc8((0, 0, 1, 0))
SQRT2 = Cyc8((0, 1, 0, -1))

_CYC_TERM = re.compile(r"^([+-]?[0-9/]*)\*?(z(?:\^([0-3]))?)?$")


def parse_cyc8(text: str) -> Cyc8:
    """Parse the ``a0 + a1*z + a2*z^2 + a3*z^3`` serialization (any order)."""
    s = text.replace(" ", "").replace("-", "+-")
    coeffs = [mpq(0)] * 4
    for tok in filter(None, s.split("+")):
        m = _CYC_TERM.match(tok)
        if not m:
            raise ValueError(f"bad Cyc8 term {tok!r}")
        num, zpart, exp = m.groups()
        if zpart is None:
            j = 0
        else:
            j = int(exp) if exp else 1
        if num in ("", "+"):
            q = mpq(1)
        elif num == "-":
            q = mpq(-1)
        else:
            q = parse_rational(num)
        coeffs[j] += q
    return Cyc8._raw(tuple(coeffs))


class ParamPoly:
    """Polynomial in u, v with Cyc8 coefficients; keys are (deg_u, deg_v)."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = Cyc8.coerce(c)
                if c:
                    clean[(int(k[0]), int(k[1]))] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms: dict) -> "ParamPoly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ParamPoly is immutable")

    @staticmethod
    def coerce(x) -> "ParamPoly":
        if isinstance(x, ParamPoly):
            return x
        c = Cyc8.coerce(x)
        return ParamPoly._raw({(0, 0): c} if c else {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> Cyc8:
        return self.terms.get((0, 0), ZERO)

    def v_degree(self) -> int:
        return max((k[1] for k in self.terms), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamPoly):
            try:
                other = ParamPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        if _foreign(other):
            return NotImplemented
        o = ParamPoly.coerce(other)
        out = dict(self.terms)
        for k, c in o.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return ParamPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if _foreign(other):
            return NotImplemented
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other):
        return ParamPoly.coerce(other) - self

    def __mul__(self, other):
        if _foreign(other):
            return NotImplemented
        if not isinstance(other, ParamPoly):
            if isinstance(other, Cyc8):
                if not other:
                    return ParamPoly._raw({})
                return ParamPoly._raw({k: c * other for k, c in self.terms.items()})
            q = as_rational(other)
            if not q:
                return ParamPoly._raw({})
            return ParamPoly._raw({k: c * q for k, c in self.terms.items()})
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = (k1[0] + k2[0], k1[1] + k2[1])
                s = out.get(k)
                p = c1 * c2
                out[k] = p if s is None else s + p
        return ParamPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = ParamPoly.coerce(1)
        for _ in range(k):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (du, dv), c in sorted(self.terms.items()):
            mono = []
            if du:
                mono.append("u" if du == 1 else f"u^{du}")
            if dv:
                mono.append("v" if dv == 1 else f"v^{dv}")
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == ONE:
                parts.append("*".join(mono))
            else:
                parts.append(f"({cs})*" + "*".join(mono))
        return " + ".join(parts)

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (du, dv), c in sorted(self.terms.items()):
            mono = []
            if du:
                mono.append("u" if du == 1 else f"u^{du}")
            if dv:
                mono.append("v" if dv == 1 else f"v^{dv}")
            cs = c.pretty()
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append("·".join(mono))
            elif cs == "-1":
                parts.append("-" + "·".join(mono))
            elif " " in cs:
                parts.append(f"({cs})·" + "·".join(mono))
            else:
                parts.append(cs + "·" + "·".join(mono))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"ParamPoly({str(self)!r})"


U = ParamPoly({(1, 0): ONE})
V = ParamPoly({(0, 1): ONE})


def poly_eval(p: ParamPoly, u0, v0) -> Cyc8:
    """Substitute u = u0, v = v0."""
    u0 = Cyc8.coerce(u0)
    v0 = Cyc8.coerce(v0)
    total = ZERO
    for (du, dv), c in p.terms.items():
        total = total + c * (u0 ** du) * (v0 ** dv)
    return total


def scalar_to_str(x, pretty: bool = False) -> str:
    """Serialize any scalar used as a coefficient."""
    if isinstance(x, (Cyc8, ParamPoly)):
        return x.pretty() if pretty else str(x)
    return str(as_rational(x))
