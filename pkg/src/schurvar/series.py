"""Truncated complex power-series arithmetic.

A series is a finite coefficient vector (c_0, ..., c_N) standing for
c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).  Every binary operation
truncates its result to the smaller order of the two operands, so a
computation carried out at a fixed working order stays at that order.
Operations never mutate their inputs.

These are the exact building blocks behind the Blaschke-tower Taylor
expansion and the extremal-coefficient pipeline; everything here is
plain O(N^2)/O(N^3) coefficient arithmetic, which is the right tool for
the orders involved (default 16).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "ComplexSeries",
    "series_mul",
    "series_reciprocal",
    "series_compose",
    "series_exp",
    "series_antiderivative",
]

DEFAULT_ORDER = 16


@dataclass(frozen=True)
class ComplexSeries:
    """Coefficients of a truncated power series, indexed by power.

    ``coeffs[p]`` is the coefficient of z^p; the order of the series is
    ``len(coeffs) - 1``.  At least one coefficient is required.
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, p: int) -> complex:
        return self.coeffs[p]

    def __iter__(self):
        return iter(self.coeffs)

    def truncated(self, order: int) -> "ComplexSeries":
        """Copy truncated (or zero-padded) to exactly the given order."""
        if order < 0:
            raise ValueError("order must be >= 0")
        c = self.coeffs[: order + 1]
        if len(c) < order + 1:
            c = c + (0j,) * (order + 1 - len(c))
        return ComplexSeries(c)

    def __add__(self, other: "ComplexSeries") -> "ComplexSeries":
        n = min(self.order, other.order)
        return ComplexSeries(
            tuple(self.coeffs[p] + other.coeffs[p] for p in range(n + 1))
        )

    def __sub__(self, other: "ComplexSeries") -> "ComplexSeries":
        n = min(self.order, other.order)
        return ComplexSeries(
            tuple(self.coeffs[p] - other.coeffs[p] for p in range(n + 1))
        )

    def __mul__(self, other: "ComplexSeries") -> "ComplexSeries":
        return series_mul(self, other)

    @staticmethod
    def constant(value: complex, order: int = DEFAULT_ORDER) -> "ComplexSeries":
        return ComplexSeries((complex(value),) + (0j,) * order)

    @staticmethod
    def identity(order: int = DEFAULT_ORDER) -> "ComplexSeries":
        """The series of z itself, materialized at the given order."""
        if order < 1:
            raise ValueError("identity needs order >= 1")
        return ComplexSeries((0j, 1 + 0j) + (0j,) * (order - 1))

    @staticmethod
    def from_coeffs(coeffs: Iterable[complex]) -> "ComplexSeries":
        return ComplexSeries(tuple(coeffs))


def _coerce(s: ComplexSeries | Sequence[complex]) -> ComplexSeries:
    if isinstance(s, ComplexSeries):
        return s
    return ComplexSeries(tuple(s))


def series_mul(a: ComplexSeries, b: ComplexSeries) -> ComplexSeries:
    """Cauchy product truncated to the smaller order of the operands."""
    a = _coerce(a)
    b = _coerce(b)
    n = min(a.order, b.order)
    out = []
    for p in range(n + 1):
        acc = 0j
        for l in range(p + 1):
            acc += a.coeffs[l] * b.coeffs[p - l]
        out.append(acc)
    return ComplexSeries(tuple(out))


def series_reciprocal(a: ComplexSeries) -> ComplexSeries:
    """Multiplicative inverse 1/a as a truncated series.

    Solved by the triangular recurrence b_0 = 1/a_0,
    b_p = -(1/a_0) * sum_{l=1..p} a_l b_{p-l}.

    Raises
    ------
    ValueError
        If the constant coefficient vanishes ("non-invertible series").
    """
    a = _coerce(a)
    if a.coeffs[0] == 0:
        raise ValueError("non-invertible series")
    inv0 = 1.0 / a.coeffs[0]
    out = [inv0]
    for p in range(1, a.order + 1):
        acc = 0j
        for l in range(1, p + 1):
            acc += a.coeffs[l] * out[p - l]
        out.append(-inv0 * acc)
    return ComplexSeries(tuple(out))


def series_compose(outer: ComplexSeries, inner: ComplexSeries) -> ComplexSeries:
    """outer(inner(z)) truncated to the smaller order of the operands.

    Evaluated Horner-style in the series ring.  The truncation is only
    valid when inner has no constant term (then the discarded outer
    coefficients contribute O(z^{order+1})), so that is a hard
    precondition.

    Raises
    ------
    ValueError
        If ``inner[0] != 0`` ("composition requires inner(0)=0").
    """
    outer = _coerce(outer)
    inner = _coerce(inner)
    if inner.coeffs[0] != 0:
        raise ValueError("composition requires inner(0)=0")
    n = min(outer.order, inner.order)
    outer_t = outer.truncated(n)
    inner_t = inner.truncated(n)
    acc = ComplexSeries.constant(outer_t.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        acc = series_mul(acc, inner_t)
        acc = ComplexSeries(
            (acc.coeffs[0] + outer_t.coeffs[k],) + acc.coeffs[1:]
        )
    return acc


def series_exp(a: ComplexSeries) -> ComplexSeries:
    """exp(a) via the termwise ODE recurrence E' = a' E.

    p E_p = sum_{l=1..p} l a_l E_{p-l}, seeded with E_0 = exp(a_0).
    """
    import cmath

    a = _coerce(a)
    out = [cmath.exp(a.coeffs[0])]
    for p in range(1, a.order + 1):
        acc = 0j
        for l in range(1, p + 1):
            acc += l * a.coeffs[l] * out[p - l]
        out.append(acc / p)
    return ComplexSeries(tuple(out))


def series_antiderivative(a: ComplexSeries) -> ComplexSeries:
    """Termwise antiderivative with zero constant; order grows by one."""
    a = _coerce(a)
    return ComplexSeries((0j,) + tuple(a.coeffs[p] / (p + 1) for p in range(len(a))))
