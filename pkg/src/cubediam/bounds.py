"""Closed-form diameter estimates for symmetric graphs.

Everything up to the final logarithm is exact (``int`` / ``Fraction``);
only the transcendental step uses floats, and float results within
``SNAP`` of an integer are snapped to it before rounding up or down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

SNAP = 1e-9

Number = Union[int, Fraction]


class BoundsError(ValueError):
    pass


@dataclass(frozen=True)
class BoundsInput:
    n: int
    k: int
    g: int
    eta: int

    def __post_init__(self):
        _check_kg(self.k, self.g)
        if self.eta < 1:
            raise BoundsError("eta must be >= 1")
        if self.n < 2:
            raise BoundsError("order must be >= 2")


@dataclass(frozen=True)
class BoundsReport:
    n: int
    k: int
    g: int
    eta: int
    r_max: Fraction
    n0: int
    d_min: int
    d_probab: float  # math.inf when r_max == 1
    bv_lower: int
    bv_upper: int
    branch: str  # "geometric" (r_max != 1) or "linear" (r_max == 1)


def _check_kg(k: int, g: int) -> None:
    if k < 3:
        raise BoundsError(f"degree k={k} must be >= 3")
    if g < 4 or g % 2:
        raise BoundsError(f"girth g={g} must be even and >= 4")


def _snap(x: float) -> float:
    r = round(x)
    return float(r) if abs(x - r) < SNAP else x


def _ceil(x: float) -> int:
    return math.ceil(_snap(x))


def _floor(x: float) -> int:
    return math.floor(_snap(x))


def _ln(x: Number) -> float:
    """Natural log of a positive int or Fraction of any size."""
    if isinstance(x, Fraction):
        return math.log(x.numerator) - math.log(x.denominator)
    return math.log(x)


def _ilog_floor(n: int, base: int) -> int:
    """Largest e with base**e <= n, in integer arithmetic."""
    e, p = 0, base
    while p <= n:
        e += 1
        p *= base
    return e


def shell_base(k: int, g: int) -> int:
    """Size of the last shell that grows at the full rate k-1: k(k-1)^(g/2-2)."""
    return k * (k - 1) ** (g // 2 - 2)


def r_max(k: int, g: int, eta: int) -> Fraction:
    """Upper bound on the branching ratio from distance g/2 onward."""
    _check_kg(k, g)
    num = k * (k - 1) ** (g // 2 - 1) - eta
    if num <= 0:
        raise BoundsError(f"eta={eta} exceeds shell size {k * (k - 1) ** (g // 2 - 1)}")
    return Fraction(num, shell_base(k, g))


def n0(k: int, g: int) -> int:
    """1 + k + k(k-1) + ... + k(k-1)^(g/2-2), the vertices within distance g/2-1."""
    _check_kg(k, g)
    q, rem = divmod(k * (k - 1) ** (g // 2 - 1) - 2, k - 2)
    assert rem == 0
    return q


def n_max(k: int, g: int, eta: int, d: int) -> int:
    """Largest order compatible with diameter ``d`` under growth at ``r_max``."""
    h = g // 2
    if d < h - 1:
        raise BoundsError(f"d={d} < g/2 - 1")
    r = r_max(k, g, eta)
    total = Fraction(n0(k, g))
    term = Fraction(shell_base(k, g))
    for _ in range(d - h + 1):
        term *= r
        total += term
    return math.floor(total)


def d_min(n: int, k: int, g: int, eta: int) -> int:
    """Strict lower bound on the diameter from order, degree, girth and eta."""
    return _d_min(n, k, g, eta)[0]


def _d_min(n: int, k: int, g: int, eta: int) -> tuple[int, str]:
    r = r_max(k, g, eta)
    base0 = n0(k, g)
    if n <= base0:
        raise BoundsError(f"order n={n} lies within the Moore shell n0={base0}")
    h = g // 2
    base = shell_base(k, g)
    if r == 1:
        return math.ceil(Fraction(h - 1) + Fraction(n - base0, base)), "linear"
    arg = Fraction(n - base0) * (r - 1) / base + r
    if arg <= 0:
        raise BoundsError(f"order n={n} is unreachable with r_max={r}")
    return _ceil(h - 2 + _ln(arg) / _ln(r)), "geometric"


def d_probab(n: int, k: int, g: int, eta: int) -> float:
    """Probabilistic estimate log_r(n) + ln(n)/r; infinite when r_max == 1."""
    if n < 2:
        raise BoundsError("order must be >= 2")
    r = r_max(k, g, eta)
    if r == 1:
        return math.inf
    ln_n = _ln(n)
    return ln_n / _ln(r) + ln_n / float(r)


def bv_lower(n: int, k: int) -> int:
    """Bollobas-de la Vega lower bound for random k-regular graphs (may be <= 0)."""
    if n < 3 or k < 3:
        raise BoundsError("need n >= 3 and k >= 3")
    lb = math.log(k - 1)
    second = (math.log(_ln(n)) - math.log(6 * k / (k - 2))) / lb
    return _ilog_floor(n, k - 1) + _floor(second) + 1


def bv_upper(n: int, k: int, epsilon: float = 0.0) -> int:
    """Bollobas-de la Vega upper bound for random k-regular graphs."""
    if n < 3 or k < 3:
        raise BoundsError("need n >= 3 and k >= 3")
    if epsilon < 0:
        raise BoundsError("epsilon must be >= 0")
    x = math.log(2 + epsilon) + math.log(k) + _ln(n) + math.log(_ln(n))
    return _ceil(x / math.log(k - 1)) + 1


def bounds_report(inp: BoundsInput, epsilon: float = 0.0) -> BoundsReport:
    n, k, g, eta = inp.n, inp.k, inp.g, inp.eta
    dmin, branch = _d_min(n, k, g, eta)
    return BoundsReport(
        n=n, k=k, g=g, eta=eta,
        r_max=r_max(k, g, eta),
        n0=n0(k, g),
        d_min=dmin,
        d_probab=d_probab(n, k, g, eta),
        bv_lower=bv_lower(n, k),
        bv_upper=bv_upper(n, k, epsilon),
        branch=branch,
    )
