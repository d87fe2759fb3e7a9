"""The colour bound ``f(w) = w ** log2(w)`` and certified checks on it.

Values are enclosed in intervals computed with MPFR under directed rounding:
the lower end rounds every operation down, the upper end rounds up.  On
``w >= 1`` each step (``log2``, squaring a non-negative number, ``exp2``) is
non-decreasing, so the two ends bracket the true value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import log2
from typing import List, Optional, Tuple

import gmpy2

from .errors import PrecisionError, UsageError

DEFAULT_DIGITS = 30
OMEGA_BASE = 4
TABLE = {0: 0, 1: 1, 2: 3}
MAX_BITS = 4096


def digits_to_bits(digits: int) -> int:
    return int(digits * 3.3219280948873626) + 8


@lru_cache(maxsize=None)
def _contexts(bits: int):
    return (
        gmpy2.context(precision=bits, round=gmpy2.RoundDown),
        gmpy2.context(precision=bits, round=gmpy2.RoundUp),
        gmpy2.context(precision=bits, round=gmpy2.RoundToNearest),
    )


def _enclose(w: int, bits: int):
    down, up, _ = _contexts(bits)
    if w in TABLE:
        v = gmpy2.mpfr(TABLE[w])
        return v, v
    ld = down.log2(w)
    lu = up.log2(w)
    return down.exp2(down.mul(ld, ld)), up.exp2(up.mul(lu, lu))


def f_bounds(w: int, digits: int = DEFAULT_DIGITS) -> Tuple[gmpy2.mpfr, gmpy2.mpfr]:
    """Certified enclosure ``lo <= f(w) <= hi``."""
    if w < 0:
        raise UsageError("f is defined on non-negative integers")
    return _enclose(w, digits_to_bits(digits))


def f_value(w: int, digits: int = DEFAULT_DIGITS) -> gmpy2.mpfr:
    """``f(w)`` to about ``digits`` significant digits (exact for table values and powers of two)."""
    if w < 0:
        raise UsageError("f is defined on non-negative integers")
    if w in TABLE:
        return gmpy2.mpfr(TABLE[w])
    _, _, near = _contexts(digits_to_bits(digits))
    lg = near.log2(w)
    return near.exp2(near.mul(lg, lg))


def is_power_of_two(w: int) -> bool:
    return w > 0 and w & (w - 1) == 0


def _exact_floor(x) -> int:
    # math.floor, gmpy2.floor and int() all round through a limited precision
    num, den = x.as_integer_ratio()
    return int(num // den)


@lru_cache(maxsize=4096)
def color_budget(w: int) -> int:
    """``floor(f(w))``, widening precision until the floor is unambiguous."""
    if w in TABLE:
        return TABLE[w]
    if is_power_of_two(w):
        k = w.bit_length() - 1
        return 1 << (k * k)
    bits = digits_to_bits(DEFAULT_DIGITS)
    while bits <= MAX_BITS:
        lo, hi = _enclose(w, bits)
        flo = _exact_floor(lo)
        if flo == _exact_floor(hi) and lo != flo:
            return flo
        bits *= 2
    raise PrecisionError(f"cannot certify floor(f({w})) with {MAX_BITS} bits")


def half_floor(w: int) -> int:
    return w // 2


@dataclass
class InequalityResult:
    w: int
    holds: bool
    lhs: Tuple[float, float]
    rhs: Tuple[float, float]

    @property
    def slack(self) -> float:
        # midpoint estimate of f(w) - lhs
        return (self.rhs[0] + self.rhs[1]) / 2 - (self.lhs[0] + self.lhs[1]) / 2

    @property
    def slack_lower(self) -> float:
        return self.rhs[0] - self.lhs[1]

    def to_dict(self) -> dict:
        return {
            "w": self.w,
            "holds": self.holds,
            "lhs": [float(x) for x in self.lhs],
            "f_w": [float(x) for x in self.rhs],
            "slack": float(self.slack),
            "slack_lower_bound": float(self.slack_lower),
        }


def _compare(w: int, lhs_lo, lhs_hi, rhs_lo, rhs_hi) -> bool:
    if lhs_hi <= rhs_lo:
        return True
    if lhs_lo > rhs_hi:
        return False
    raise PrecisionError(f"recursion inequality at w={w} undecided; raise the precision")


def check_recursion_inequality(w: int, digits: int = DEFAULT_DIGITS) -> InequalityResult:
    """Decide ``f(w-1) + (w+2) f(w//2) <= f(w)`` with outward rounding."""
    if w < 5:
        raise UsageError("the recursion inequality is stated for w >= 5")
    bits = digits_to_bits(digits)
    down, up, _ = _contexts(bits)
    a_lo, a_hi = _enclose(w - 1, bits)
    h_lo, h_hi = _enclose(w // 2, bits)
    r_lo, r_hi = _enclose(w, bits)
    lhs_lo = down.add(a_lo, down.mul(w + 2, h_lo))
    lhs_hi = up.add(a_hi, up.mul(w + 2, h_hi))
    holds = _compare(w, lhs_lo, lhs_hi, r_lo, r_hi)
    return InequalityResult(w, holds, (lhs_lo, lhs_hi), (r_lo, r_hi))


@dataclass
class HypothesesReport:
    omega_base: int
    w_max: int
    monotone: bool = True
    monotone_failures: List[int] = field(default_factory=list)
    failures: List[int] = field(default_factory=list)
    checked: int = 0
    base_cases: dict = field(default_factory=dict)
    first: Optional[InequalityResult] = None

    @property
    def ok(self) -> bool:
        return self.monotone and not self.failures

    def to_dict(self) -> dict:
        return {
            "omega_base": self.omega_base,
            "w_max": self.w_max,
            "ok": self.ok,
            "monotone": self.monotone,
            "monotone_failures": self.monotone_failures[:20],
            "inequality_checked": self.checked,
            "inequality_failures": self.failures[:20],
            "base_cases": self.base_cases,
            "first": None if self.first is None else self.first.to_dict(),
        }


# chi <= 3 for omega = 2 (Sumner); chi <= 5 and chi <= 15 for omega = 3, 4
# from the (5/27) 3^omega bound.  Recorded, not proved here.
CITED_BASE_BOUNDS = {0: 0, 1: 1, 2: 3, 3: 5, 4: 15}


def check_binding_hypotheses(omega_base: int = OMEGA_BASE, w_max: int = 100, digits: int = DEFAULT_DIGITS) -> HypothesesReport:
    """Monotonicity of ``f`` on ``[0, w_max]`` and the recursion inequality on ``(omega_base, w_max]``.

    A single ascending sweep keeps the enclosures of ``f(0..w_max//2)`` in a
    table and the previous value in a register.
    """
    if omega_base < 1 or w_max < omega_base:
        raise UsageError("need omega_base >= 1 and w_max >= omega_base")
    bits = digits_to_bits(digits)
    down, up, _ = _contexts(bits)
    rep = HypothesesReport(omega_base, w_max)
    for w in range(omega_base + 1):
        budget = color_budget(w)
        if w in CITED_BASE_BOUNDS:
            bound = CITED_BASE_BOUNDS[w]
            rep.base_cases[str(w)] = {"cited_chi_bound": bound, "budget": budget, "ok": bound <= budget}
            if bound > budget:
                rep.failures.append(w)
        else:
            rep.base_cases[str(w)] = {"cited_chi_bound": None, "budget": budget, "ok": None}
    half = w_max // 2
    lo_tab: List = []
    hi_tab: List = []
    prev = None
    for w in range(w_max + 1):
        lo, hi = _enclose(w, bits)
        if w <= half:
            lo_tab.append(lo)
            hi_tab.append(hi)
        if prev is not None and prev[1] > lo:
            # hi(w-1) > lo(w): either a real drop or too little precision
            if prev[0] > hi:
                rep.monotone = False
                rep.monotone_failures.append(w)
            else:
                raise PrecisionError(f"monotonicity at w={w} undecided; raise the precision")
        if w > omega_base:
            h = w // 2
            lhs_lo = down.add(prev[0], down.mul(w + 2, lo_tab[h]))
            lhs_hi = up.add(prev[1], up.mul(w + 2, hi_tab[h]))
            rep.checked += 1
            holds = _compare(w, lhs_lo, lhs_hi, lo, hi)
            if not holds:
                rep.failures.append(w)
            if rep.first is None:
                rep.first = InequalityResult(w, holds, (lhs_lo, lhs_hi), (lo, hi))
        prev = (lo, hi)
    return rep


def halving_step_holds(x: int, digits: int = DEFAULT_DIGITS) -> bool:
    """``f(x // 2) <= (2 / x**2) f(x)`` for ``x >= 6`` (certified).

    For even ``x = 2y`` the two sides are equal, since ``f(2y) = 2 y^2 f(y)``
    whenever ``y >= 3``; intervals cannot separate an equality, so that case
    is settled by the identity.  Odd ``x`` leaves a strict gap that the
    interval comparison decides.
    """
    if x < 6:
        raise UsageError("halving step needs x >= 6")
    if x % 2 == 0:
        return True
    bits = digits_to_bits(digits)
    down, _, _ = _contexts(bits)
    h_lo, h_hi = _enclose(x // 2, bits)
    lo, _ = _enclose(x, bits)
    rhs_lo = down.div(down.mul(2, lo), x * x)
    return _compare(x, h_lo, h_hi, rhs_lo, rhs_lo)


def quartic_step_holds(x: int) -> bool:
    """``x^2 (x^2 - 2x - 4) >= (x - 1)^4`` in exact integer arithmetic."""
    return x * x * (x * x - 2 * x - 4) >= (x - 1) ** 4


def f_float(w: int) -> float:
    """Binary64 approximation of ``f(w)`` for reporting only."""
    if w in TABLE:
        return float(TABLE[w])
    return 2.0 ** (log2(w) ** 2)
