"""Indicator-function coefficients, strength, aberration and the GWLP.

The indicator of a fraction F inside the full factorial D is the polynomial
that is 1 on F and 0 elsewhere.  Writing it over the monomial basis X^alpha
with levels coded as roots of unity, the coefficient is

    b_alpha = (1/#D) * sum_{x in F} w_{[-alpha.x]},

so s^m * b_alpha is an exact cyclotomic integer determined by the level
counts n_{alpha,h} = #{x in F : alpha.x = h (mod s)}.  Everything here is
computed from those counts; floating point appears only in aberrations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .cyclotomic import CycInt
from .design import DEFAULT_ENUMERATION_BOUND, Design


def level_counts(design: Design, alpha) -> tuple[int, ...]:
    """How often X^alpha takes each value w_h over the design."""
    s = design.s
    alpha = tuple(a % s for a in alpha)
    if len(alpha) != design.m:
        raise ValueError(f"exponent tuple {alpha} has {len(alpha)} entries, expected {design.m}")
    counts = [0] * s
    nonzero = [(j, a) for j, a in enumerate(alpha) if a]
    for row in design.rows:
        counts[sum(a * row[j] for j, a in nonzero) % s] += 1
    return tuple(counts)


def numerator_from_counts(counts, s: int) -> CycInt:
    """N_alpha = sum_h n_{alpha,[s-h]} w_h, i.e. s^m * b_alpha."""
    return CycInt(s, tuple(counts[(s - h) % s] for h in range(s)))


def coefficient_numerator(design: Design, alpha) -> CycInt:
    return numerator_from_counts(level_counts(design, alpha), design.s)


def _exponents_of_order(s: int, m: int, order: int):
    for positions in itertools.combinations(range(m), order):
        for values in itertools.product(range(1, s), repeat=order):
            alpha = [0] * m
            for j, v in zip(positions, values):
                alpha[j] = v
            yield tuple(alpha)


def strength_from_coefficients(design: Design) -> int:
    """Largest t with every coefficient of order 1..t equal to zero."""
    for t in range(1, design.m + 1):
        for alpha in _exponents_of_order(design.s, design.m, t):
            if not coefficient_numerator(design, alpha).is_zero():
                return t - 1
    return design.m


def aberration(design: Design, alpha, counts=None) -> float:
    """Squared modulus of b_alpha over b_0^2, from level counts alone."""
    if not any(a % design.s for a in alpha):
        raise ValueError("aberration is not defined for the null exponent")
    s, n = design.s, design.n
    if counts is None:
        counts = level_counts(design, alpha)
    total = 0.0
    for k in range(s):
        inner = sum(counts[i] * counts[(i - k) % s] for i in range(s))
        total += math.cos(2 * math.pi * k / s) * inner
    return total / (n * n)


def gwlp(design: Design, bound: int = DEFAULT_ENUMERATION_BOUND) -> tuple[float, ...]:
    """(A_1, ..., A_m): aberrations summed by interaction order."""
    s, m = design.s, design.m
    if s**m > bound:
        raise ValueError(f"GWLP enumeration size {s}^{m} exceeds bound {bound}")
    out = [0.0] * m
    for order in range(1, m + 1):
        acc = 0.0
        for alpha in _exponents_of_order(s, m, order):
            acc += aberration(design, alpha)
        out[order - 1] = acc
    return tuple(out)


@dataclass(frozen=True)
class IndicatorTable:
    """All coefficient numerators of a fraction, with their level counts."""

    s: int
    m: int
    n: int
    entries: dict[tuple[int, ...], CycInt] = field(repr=False)
    counts: dict[tuple[int, ...], tuple[int, ...]] = field(repr=False)

    @property
    def denominator(self) -> int:
        return self.s**self.m

    @classmethod
    def compute(cls, design: Design, bound: int = DEFAULT_ENUMERATION_BOUND) -> "IndicatorTable":
        s, m = design.s, design.m
        if s**m > bound:
            raise ValueError(f"table size {s}^{m} exceeds bound {bound}")
        entries = {}
        counts = {}
        for alpha in itertools.product(range(s), repeat=m):
            c = level_counts(design, alpha)
            counts[alpha] = c
            entries[alpha] = numerator_from_counts(c, s)
        return cls(s=s, m=m, n=design.n, entries=entries, counts=counts)

    def nonzero_entries(self, max_order: int | None = None):
        for alpha, num in sorted(self.entries.items()):
            if max_order is not None and sum(1 for a in alpha if a) > max_order:
                continue
            if not num.is_zero():
                yield alpha, num

    def to_json(self, max_order: int | None = None) -> list[dict]:
        return [
            {"alpha": list(alpha), "numerator": list(num.coeffs), "denominator": self.denominator}
            for alpha, num in self.nonzero_entries(max_order)
        ]


def nonzero_coefficients_up_to(design: Design, max_order: int):
    """(alpha, numerator) for nonzero coefficients of order <= max_order.

    Streams over the bounded-order exponents only, so it works on designs
    whose full table would exceed the enumeration bound.
    """
    yield (0,) * design.m, CycInt.integer(design.n, design.s)
    for order in range(1, min(max_order, design.m) + 1):
        for alpha in _exponents_of_order(design.s, design.m, order):
            num = coefficient_numerator(design, alpha)
            if not num.is_zero():
                yield alpha, num


def evaluate_indicator(table: IndicatorTable, point) -> complex:
    """F(point): within 1e-9 of 1 on the fraction and of 0 off it."""
    point = tuple(point)
    if len(point) != table.m:
        raise ValueError(f"point {point} has {len(point)} entries, expected {table.m}")
    s = table.s
    acc = [0] * s
    for alpha, num in table.entries.items():
        t = sum(a * x for a, x in zip(alpha, point)) % s
        # accumulate num * w_t without building intermediate CycInt objects
        coeffs = num.coeffs
        for h in range(s):
            acc[(h + t) % s] += coeffs[h]
    return CycInt(s, acc).to_complex() / table.denominator
