"""Exact Laurent polynomials in ``t`` with exponents in (1/2)Z.

Exponents are stored in half-units: the key ``h`` stands for ``t^(h/2)``.
Coefficients are Python integers, so there is no overflow to worry about.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import HalfExponentPresent, NotDivisible

__all__ = [
    "HalfLaurent",
    "ZERO",
    "ONE",
    "T",
    "G",
    "eps",
    "tpow",
    "mul",
    "invert_variable",
    "coeff_vector",
    "is_ac",
    "exact_div",
]


def eps(x: int) -> int:
    """Sign helper (-1)^x."""
    return -1 if x % 2 else 1


def _to_halves(exp) -> int:
    e2 = Fraction(exp) * 2
    if e2.denominator != 1:
        raise ValueError(f"exponent {exp} is not a multiple of 1/2")
    return int(e2)


def _from_halves(h: int):
    return h // 2 if h % 2 == 0 else Fraction(h, 2)


class HalfLaurent:
    """Immutable Laurent polynomial in t with half-integer exponents."""

    __slots__ = ("_terms", "_key")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        acc: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for h, c in items:
                if c:
                    acc[int(h)] = acc.get(int(h), 0) + int(c)
        self._terms = {h: c for h, c in sorted(acc.items()) if c}
        self._key = tuple(self._terms.items())

    # constructors

    @classmethod
    def monomial(cls, exp=0, coeff: int = 1) -> "HalfLaurent":
        return cls({_to_halves(exp): coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], start: int = 0) -> "HalfLaurent":
        """Dense integer coefficients, lowest degree ``start`` first."""
        return cls({2 * (start + i): c for i, c in enumerate(coeffs)})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "HalfLaurent":
        return cls([(int(h), int(c)) for h, c in pairs])

    # basic accessors

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def min_half(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    @property
    def max_half(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    @property
    def min_degree(self):
        return _from_halves(self.min_half)

    @property
    def max_degree(self):
        return _from_halves(self.max_half)

    def coeff(self, exp) -> int:
        """Coefficient of t^exp."""
        return self._terms.get(_to_halves(exp), 0)

    def leading_coeff(self) -> int:
        return self._terms[self.max_half] if self._terms else 0

    def has_half_exponents(self) -> bool:
        return any(h % 2 for h in self._terms)

    # arithmetic

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = HalfLaurent.monomial(0, other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def _coerce(self, other) -> "HalfLaurent":
        if isinstance(other, HalfLaurent):
            return other
        if isinstance(other, int):
            return HalfLaurent({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for h, c in other._terms.items():
            acc[h] = acc.get(h, 0) + c
        return HalfLaurent(acc)

    __radd__ = __add__

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent({h: -c for h, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfLaurent({h: c * other for h, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for h1, c1 in self._terms.items():
            for h2, c2 in other._terms.items():
                acc[h1 + h2] = acc.get(h1 + h2, 0) + c1 * c2
        return HalfLaurent(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HalfLaurent":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers only for monomials")
            (h, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("negative powers only for unit monomials")
            return HalfLaurent({-h * -n: c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exp) -> "HalfLaurent":
        """Multiply by t^exp."""
        d = _to_halves(exp)
        return HalfLaurent({h + d: c for h, c in self._terms.items()})

    def shift_halves(self, d: int) -> "HalfLaurent":
        return HalfLaurent({h + d: c for h, c in self._terms.items()})

    def invert_variable(self) -> "HalfLaurent":
        return HalfLaurent({-h: c for h, c in self._terms.items()})

    def restrict(self, lo=None, hi=None) -> "HalfLaurent":
        """Terms whose exponent lies in [lo, hi] (either bound optional)."""
        lo_h = None if lo is None else _to_halves(lo)
        hi_h = None if hi is None else _to_halves(hi)
        return HalfLaurent({
            h: c for h, c in self._terms.items()
            if (lo_h is None or h >= lo_h) and (hi_h is None or h <= hi_h)
        })

    # rendering

    def serialize(self) -> list[list[int]]:
        return [[h, c] for h, c in self._terms.items()]

    def to_json(self) -> str:
        return json.dumps(self.serialize(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "HalfLaurent":
        return cls.from_pairs(json.loads(text))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (h, c) in enumerate(self._terms.items()):
            if h == 0:
                mono = ""
            elif h == 2:
                mono = "t"
            elif h % 2 == 0:
                mono = f"t^{h // 2}"
            else:
                mono = f"t^({h}/2)"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"HalfLaurent({self})"

    @classmethod
    def parse(cls, text: str) -> "HalfLaurent":
        """Inverse of ``str``; accepts the rendering grammar only."""
        s = text.replace(" ", "")
        if s == "0":
            return ZERO
        if not s:
            raise ValueError("empty polynomial text")
        pos = 0
        acc: dict[int, int] = {}
        first = True
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m or m.end() == pos or (not first and not m.group("sign")):
                raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
            first = False
            sign = -1 if m.group("sign") == "-" else 1
            coeff = int(m.group("coeff")) if m.group("coeff") else 1
            if m.group("t"):
                if m.group("num") is not None:
                    h = int(m.group("num"))
                elif m.group("int") is not None:
                    h = 2 * int(m.group("int"))
                else:
                    h = 2
            else:
                if not m.group("coeff"):
                    raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
                h = 0
            acc[h] = acc.get(h, 0) + sign * coeff
            pos = m.end()
        return cls(acc)


_TERM_RE = re.compile(
    r"(?P<sign>[+-])?(?:(?P<coeff>\d+)\*?)?"
    r"(?P<t>t(?:\^(?:\((?P<num>-?\d+)/2\)|(?P<int>-?\d+)))?)?"
)

ZERO = HalfLaurent()
ONE = HalfLaurent({0: 1})
T = HalfLaurent({2: 1})
G = HalfLaurent({0: 1, 2: 1, 4: 1})


def tpow(exp, coeff: int = 1) -> HalfLaurent:
    """The monomial coeff * t^exp (exp may be a half-integer)."""
    return HalfLaurent.monomial(exp, coeff)


def mul(p: HalfLaurent, q: HalfLaurent) -> HalfLaurent:
    return p * q


def invert_variable(p: HalfLaurent) -> HalfLaurent:
    return p.invert_variable()


def _require_integral(p: HalfLaurent) -> None:
    if p.has_half_exponents():
        raise HalfExponentPresent(f"{p} has non-integral exponents")


def coeff_vector(p: HalfLaurent) -> tuple[int | None, list[int]]:
    """Dense coefficient list from min to max degree; (None, []) for zero."""
    _require_integral(p)
    if p.is_zero():
        return None, []
    lo, hi = p.min_half // 2, p.max_half // 2
    terms = p.terms
    return lo, [terms.get(2 * j, 0) for j in range(lo, hi + 1)]


def is_ac(p: HalfLaurent) -> bool:
    """True iff p is nonzero with strictly alternating coefficient signs."""
    _require_integral(p)
    if p.is_zero():
        return False
    _, vec = coeff_vector(p)
    return all(a * b < 0 for a, b in zip(vec, vec[1:]))


def exact_div(p: HalfLaurent, d: HalfLaurent) -> HalfLaurent:
    """Quotient q with p == q * d, raising NotDivisible otherwise."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    d_lo, d_hi = d.min_half, d.max_half
    q_lo, q_hi = p.min_half - d_lo, p.max_half - d_hi
    if q_hi < q_lo:
        raise NotDivisible(f"{p} is not divisible by {d}")
    lead = d.terms[d_hi]
    dterms = list(d.terms.items())
    rem = p.terms
    quot: dict[int, int] = {}
    for k in range(q_hi, q_lo - 1, -1):
        c = rem.get(k + d_hi, 0)
        if c == 0:
            continue
        if c % lead:
            raise NotDivisible(f"{p} is not divisible by {d}")
        qc = c // lead
        quot[k] = qc
        for h, dc in dterms:
            rem[k + h] = rem.get(k + h, 0) - qc * dc
    if any(rem.values()):
        raise NotDivisible(f"{p} is not divisible by {d}")
    return HalfLaurent(quot)
