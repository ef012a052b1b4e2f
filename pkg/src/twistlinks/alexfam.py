"""The alternating polynomials A_w = (t^w + (-1)^(w-1)) / (t + 1) and their algebra."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import HypothesisViolated, PreconditionViolated
from .polyhalf import ZERO, HalfLaurent, coeff_vector, eps, is_ac

__all__ = [
    "A",
    "L_sum",
    "R_sum",
    "ProdDecomposition",
    "product_partition",
    "product_as_sum",
    "prod_decompose",
    "lambda_extend",
    "partition_shift",
]


@lru_cache(maxsize=None)
def A(w: int) -> HalfLaurent:
    if w == 0:
        return ZERO
    if w > 0:
        return HalfLaurent({2 * (w - 1 - j): eps(j) for j in range(w)})
    return A(-w).shift(w) * eps(w - 1)


def L_sum(b: int) -> HalfLaurent:
    """L(b) = sum_{j=0}^{b} (-1)^j (1+b-j) t^(b-j); zero for b < 0."""
    return HalfLaurent({2 * (b - j): eps(j) * (1 + b - j) for j in range(b + 1)})


def R_sum(b: int) -> HalfLaurent:
    """R(b) = sum_{j=0}^{b} (-1)^j (j+1) t^(b-j); zero for b < 0."""
    return HalfLaurent({2 * (b - j): eps(j) * (j + 1) for j in range(b + 1)})


def product_partition(x: int, y: int) -> tuple[HalfLaurent, HalfLaurent, HalfLaurent]:
    """Split A_x A_y into its rising, plateau and falling coefficient runs."""
    if y < 0 or x < y:
        raise PreconditionViolated(f"need x >= y >= 0, got ({x}, {y})")
    left = L_sum(y - 2) * eps(x)
    mid = A(x - y + 1).shift(y - 1) * (-y * eps(y))
    right = R_sum(y - 2).shift(x)
    return left, mid, right


def product_as_sum(x: int, y: int) -> HalfLaurent:
    """A_x A_y written out coefficient by coefficient (x >= y >= 0)."""
    if y < 0 or x < y:
        raise PreconditionViolated(f"need x >= y >= 0, got ({x}, {y})")
    n = x + y - 2
    acc: dict[int, int] = {}
    for j in range(0, y - 1):
        acc[2 * (n - j)] = eps(j) * (j + 1)
    for j in range(y - 1, x):
        acc[2 * (n - j)] = acc.get(2 * (n - j), 0) + y * eps(j)
    for j in range(x, n + 1):
        acc[2 * (n - j)] = acc.get(2 * (n - j), 0) + eps(j) * (x + y - 1 - j)
    return HalfLaurent(acc)


@dataclass(frozen=True)
class ProdDecomposition:
    f: HalfLaurent
    lam: int
    shift: int
    middle_index: int
    g: HalfLaurent
    g_shift: int

    def reconstruct(self) -> HalfLaurent:
        return self.f + A(self.middle_index).shift(self.shift) * self.lam + self.g.shift(self.g_shift)

    # the internal degree d of the (f, lambda, r, g) form
    @property
    def d(self) -> int:
        return self.shift - 1


def _abs_coeffs(p: HalfLaurent) -> list[int]:
    return [abs(c) for c in coeff_vector(p)[1]]


def _check_hypotheses(f, lam, d, r, g) -> list[str]:
    failures = []
    if r <= 0:
        failures.append("r>0")
    if f.is_zero() and g.is_zero():
        return failures
    for name, p in (("f", f), ("g", g)):
        if p.is_zero() or not is_ac(p):
            failures.append(f"{name} AC")
            continue
        if p.min_half != 0 or p.max_half != 2 * d:
            failures.append(f"{name} degree {d}")
    if failures:
        return failures
    fa, ga = _abs_coeffs(f), _abs_coeffs(g)
    if not all(u < v for u, v in zip(fa, fa[1:])) or fa[-1] >= abs(lam):
        failures.append("f increasing below |lambda|")
    if not all(u > v for u, v in zip(ga, ga[1:])) or ga[0] >= abs(lam):
        failures.append("g decreasing below |lambda|")
    whole = f + A(r).shift(d + 1) * lam + g.shift(d + r + 1)
    if not is_ac(whole):
        failures.append("Lambda AC")
    return failures


def lambda_extend(f: HalfLaurent, lam: int, d: int, r: int, g: HalfLaurent, y: int) -> ProdDecomposition:
    """Multiply f + lam t^(d+1) A_r + t^(d+r+1) g by A_y, keeping the three-part form.

    f = g = 0 with d = -1 is accepted as the seed form A_r itself.
    """
    failures = _check_hypotheses(f, lam, d, r, g)
    if not 1 <= y <= r:
        failures.append("1<=y<=r")
    if failures:
        raise HypothesisViolated(failures)
    f_y = f * A(y) + L_sum(y - 2).shift(d + 1) * (lam * eps(r))
    g_y = R_sum(y - 2) * lam + g * A(y)
    lam_y = -eps(y) * y * lam
    return ProdDecomposition(f_y, lam_y, d + y, r - y + 1, g_y, d + r + 1)


def prod_decompose(x0: int, xs: Sequence[int]) -> ProdDecomposition:
    """Three-part form of A_{x0} * prod A_{x_j}, built by repeated lambda_extend."""
    m = len(xs)
    s = sum(xs)
    if m < 1 or x0 < 1 or any(x < 1 for x in xs) or x0 + m - 1 < s:
        raise PreconditionViolated(f"need m >= 1, positive entries and x0+m-1 >= sum (x0={x0}, xs={list(xs)})")
    dec = ProdDecomposition(ZERO, 1, 0, x0, ZERO, x0)
    for y in xs:
        dec = lambda_extend(dec.f, dec.lam, dec.d, dec.middle_index, dec.g, y)
    return dec


def partition_shift(k: int, s: int, g1: int, b2: int) -> tuple[int, int, int, int, int]:
    """Split t^k A_s at the window starts g1 <= b2; returns (lam1, z1, lam2, z2, z3)."""
    if k < 0 or s <= 0 or g1 <= 0 or b2 <= 0 or not k <= g1 <= b2:
        raise PreconditionViolated(f"bad partition parameters {(k, s, g1, b2)}")
    top = k + s
    if g1 <= top:
        z1, lam1 = g1 - k, eps(g1 + k + s)
    else:
        z1, lam1 = s, 1
    if b2 <= top:
        z2, lam2 = b2 - g1, eps(b2 + k + s)
    elif g1 <= top:
        z2, lam2 = top - g1, 1
    else:
        z2, lam2 = 0, 1
    z3 = top - b2 if top >= b2 else 0
    return lam1, z1, lam2, z2, z3


def partition_shift_terms(k: int, s: int, g1: int, b2: int) -> tuple[HalfLaurent, HalfLaurent, HalfLaurent]:
    lam1, z1, lam2, z2, z3 = partition_shift(k, s, g1, b2)
    return A(z1).shift(k) * lam1, A(z2).shift(g1) * lam2, A(z3).shift(b2)
