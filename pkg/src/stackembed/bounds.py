"""Counting bounds for the planted families and the universal-set ratio."""

from __future__ import annotations

import csv
import json
import math
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Optional

from scipy.optimize import bisect

from .family import family_parameters, family_size

TARGET = 2 / 11 * math.log(7 / 2)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    F1: int
    F2: int
    family_size: int
    class_lower: Fraction
    simple_lower: float
    partition_classes: int
    exact_upper: int
    theorem_upper: float
    theorem_upper_exact: Optional[int]
    exact_le_theorem: bool
    note: str = "classes of size at most 2 when k1, k2, k3 are not all equal (constant 1/6 could become 1/2)"

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("family_size", "exact_upper", "theorem_upper_exact"):
            if d[key] is not None:
                d[key] = str(d[key])
        d["class_lower"] = str(self.class_lower)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _pow_float(base: float, exp: float) -> float:
    try:
        return base**exp
    except OverflowError:
        return math.inf


def exact_upper_le_theorem(n: int) -> bool:
    """``6(77 F1 + 15 F2 + 4) 2^(F1+F2) <= (21n + 552) 4^((n+37)/11)``, exactly.

    Both sides are raised to the 11th power so the fractional exponent
    becomes an integer one.
    """
    spec = family_parameters(n)
    lhs = partition_classes(spec.F1, spec.F2) * 2 ** (spec.F1 + spec.F2)
    # 4^((n+37)/11) = 2^((2n+74)/11)
    return lhs**11 <= (21 * n + 552) ** 11 * 2 ** (2 * n + 74)


def partition_classes(F1: int, F2: int) -> int:
    return 6 * (11 * 7 * F1 + 5 * 3 * F2 + 1 * 1 * 4)


def bounds_report(n: int) -> BoundsReport:
    spec = family_parameters(n)
    size = family_size(spec)
    classes = partition_classes(spec.F1, spec.F2)
    exp4, rem = divmod(n + 37, 11)
    return BoundsReport(
        n=n,
        F1=spec.F1,
        F2=spec.F2,
        family_size=size,
        class_lower=Fraction(size, 6),
        simple_lower=_pow_float(7.0, (2 * n - 8) / 11) / 6,
        partition_classes=classes,
        exact_upper=classes * 2 ** (spec.F1 + spec.F2),
        theorem_upper=(21 * n + 552) * _pow_float(4.0, (n + 37) / 11),
        theorem_upper_exact=(21 * n + 552) * 4**exp4 if rem == 0 else None,
        exact_le_theorem=exact_upper_le_theorem(n),
    )


def family_size_ge_simple(n: int) -> bool:
    """``|G_n| >= 7^((2n-8)/11)`` decided exactly (11th powers)."""
    return family_size(family_parameters(n)) ** 11 >= 7 ** (2 * n - 8)


def write_bounds_csv(ns: Iterable[int], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    cols = ["n", "F1", "F2", "family_size", "partition_classes", "exact_upper", "theorem_upper", "exact_le_theorem"]
    w.writerow(cols)
    for n in ns:
        r = bounds_report(n)
        w.writerow([r.n, r.F1, r.F2, r.family_size, r.partition_classes, r.exact_upper, repr(r.theorem_upper), r.exact_le_theorem])


# universal point sets ------------------------------------------------------------


def ratio_equation(c: float) -> float:
    """``log c + (c - 1) log(c / (c - 1)) - (2/11) log(7/2)``; continuous at 1."""
    if c <= 1.0:
        return -TARGET
    return math.log(c) + (c - 1) * math.log(c / (c - 1)) - TARGET


def corollary_ratio(tolerance: float = 1e-12) -> float:
    """Root of :func:`ratio_equation` on ``(1, 2]``: the limiting ratio
    ``m / n`` below which an ``m``-point set cannot host every member."""
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    return bisect(ratio_equation, 1.0, 2.0, xtol=tolerance, rtol=4 * sys.float_info.epsilon)


def log_binomial(m: int, n: int) -> float:
    return math.log(math.comb(m, n))


def double_count_check(n: int, m: int) -> bool:
    """Whether ``C(m, n) (21n + 552) 4^((n+37)/11) >= 7^((2n-8)/11) / 6``.

    ``False`` means no ``m``-point set can host all of the family.
    """
    if not m >= n >= 1:
        raise ValueError("need m >= n >= 1")
    lhs = log_binomial(m, n) + math.log(21 * n + 552) + (n + 37) / 11 * math.log(4)
    rhs = (2 * n - 8) / 11 * math.log(7) - math.log(6)
    return lhs >= rhs


def threshold_m(n: int) -> int:
    """Smallest ``m >= n`` passing :func:`double_count_check`."""
    lo, hi = n, n
    while not double_count_check(n, hi):
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if double_count_check(n, mid):
            hi = mid
        else:
            lo = mid + 1
    return lo
