"""Conformal target-domain maps P with P(0) = 1.

Each map sends the open unit disk onto a convex region containing 1 and
is normalized so the region data enters only through the first two
Taylor coefficients alpha1, alpha2 of P at 0.  The catalog:

``halfplane``  (1 + (1-2a) z) / (1 - z), the half-plane Re w > a, a < 1.
``sector``     ((1+z)/(1-z))^b, a sector of half-angle b*pi/2, 0 < b <= 1.
``janowski``   (1 + A z) / (1 + B z), a disk or half-plane, |B| <= 1, A != B.
``kucv``       the conic-section map of parameter k in [0, 1]:
               for k < 1, cosh(A_k log((1+sqrt z)/(1-sqrt z)))/(1-k^2)
               - k^2/(1-k^2) with A_k = (2/pi) arccos k; for k = 1,
               1 + (2/pi^2) log((1+sqrt z)/(1-sqrt z))^2.  The k > 1
               elliptic branch is not implemented.

Taylor coefficients are closed-form (geometric/binomial series) except
for the conic map, whose coefficients are extracted numerically from
samples on the circle |z| = 1/2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .series import ComplexSeries

__all__ = [
    "DomainSpec",
    "DomainMap",
    "HalfPlane",
    "Sector",
    "Janowski",
    "ConicSection",
    "make_domain",
    "domain_eval",
    "domain_taylor",
]


@dataclass(frozen=True)
class DomainSpec:
    """Parsed domain request: a kind plus named parameters."""

    kind: str
    params: Mapping[str, complex]


class DomainMap:
    """Base for the catalog maps.  Immutable after construction."""

    base: complex = 1 + 0j
    convex: bool = True

    def __init__(self) -> None:
        self._taylor_memo: dict[int, ComplexSeries] = {}

    @property
    def alpha1(self) -> complex:
        raise NotImplementedError

    @property
    def alpha2(self) -> complex:
        raise NotImplementedError

    def eval(self, z: complex) -> complex:
        z = complex(z)
        if abs(z) >= 1:
            raise ValueError("domain map argument must satisfy |z| < 1")
        return self._eval(z)

    def _eval(self, z: complex) -> complex:
        raise NotImplementedError

    def taylor(self, order: int) -> ComplexSeries:
        if order < 0:
            raise ValueError("order must be >= 0")
        memo = self._taylor_memo.get(order)
        if memo is None:
            memo = self._taylor(order)
            self._taylor_memo[order] = memo
        return memo

    def _taylor(self, order: int) -> ComplexSeries:
        raise NotImplementedError

    def spec_string(self) -> str:
        raise NotImplementedError


class HalfPlane(DomainMap):
    """Map onto the half-plane Re w > alpha, alpha < 1."""

    def __init__(self, alpha: float = 0.0):
        super().__init__()
        alpha = float(alpha)
        if not alpha < 1:
            raise ValueError("half-plane order must satisfy alpha < 1")
        self.alpha = alpha

    @property
    def alpha1(self) -> complex:
        return complex(2 * (1 - self.alpha))

    @property
    def alpha2(self) -> complex:
        return complex(2 * (1 - self.alpha))

    def _eval(self, z: complex) -> complex:
        return (1 + (1 - 2 * self.alpha) * z) / (1 - z)

    def _taylor(self, order: int) -> ComplexSeries:
        c = 2 * (1 - self.alpha)
        return ComplexSeries((1 + 0j,) + (complex(c),) * order)

    def spec_string(self) -> str:
        return f"halfplane:alpha={self.alpha:g}"


class Sector(DomainMap):
    """Map onto the sector |arg w| < beta*pi/2, 0 < beta <= 1."""

    def __init__(self, beta: float):
        super().__init__()
        beta = float(beta)
        if not 0 < beta <= 1:
            raise ValueError("sector aperture must satisfy 0 < beta <= 1")
        self.beta = beta

    @property
    def alpha1(self) -> complex:
        return complex(2 * self.beta)

    @property
    def alpha2(self) -> complex:
        return complex(2 * self.beta * self.beta)

    def _eval(self, z: complex) -> complex:
        w = (1 + z) / (1 - z)
        return cmath.exp(self.beta * cmath.log(w))

    def _taylor(self, order: int) -> ComplexSeries:
        # (1+z)^b * (1-z)^{-b}: convolution of two binomial series.
        b = self.beta
        up = [1 + 0j]
        down = [1 + 0j]
        for i in range(1, order + 1):
            up.append(up[-1] * (b - i + 1) / i)
            down.append(down[-1] * (b + i - 1) / i)
        out = []
        for p in range(order + 1):
            acc = 0j
            for i in range(p + 1):
                acc += up[i] * down[p - i]
            out.append(acc)
        return ComplexSeries(tuple(out))

    def spec_string(self) -> str:
        return f"sector:beta={self.beta:g}"


class Janowski(DomainMap):
    """Moebius map (1 + A z)/(1 + B z); |B| <= 1 and A != B."""

    def __init__(self, a: complex, b: complex):
        super().__init__()
        a = complex(a)
        b = complex(b)
        if abs(b) > 1:
            raise ValueError("denominator parameter must satisfy |B| <= 1")
        if a == b:
            raise ValueError("parameters must satisfy A != B")
        self.A = a
        self.B = b

    @property
    def alpha1(self) -> complex:
        return self.A - self.B

    @property
    def alpha2(self) -> complex:
        return -self.B * (self.A - self.B)

    def _eval(self, z: complex) -> complex:
        return (1 + self.A * z) / (1 + self.B * z)

    def _taylor(self, order: int) -> ComplexSeries:
        out = [1 + 0j]
        coeff = self.A - self.B
        for p in range(1, order + 1):
            out.append(coeff)
            coeff = coeff * (-self.B)
        return ComplexSeries(tuple(out))

    def spec_string(self) -> str:
        return f"janowski:A={_fmt_param(self.A)},B={_fmt_param(self.B)}"


class ConicSection(DomainMap):
    """Conic-section map of parameter k in [0, 1].

    k = 0 is the right half-plane, 0 < k < 1 a hyperbolic region,
    k = 1 the parabolic region Re w > |w - 1|.  The elliptic branch
    k > 1 is out of scope.
    """

    def __init__(self, k: float):
        super().__init__()
        k = float(k)
        if k < 0:
            raise ValueError("conic parameter must satisfy k >= 0")
        if k > 1:
            raise ValueError("elliptic branch unsupported")
        self.k = k
        self._alpha2: complex | None = None

    @property
    def alpha1(self) -> complex:
        if self.k == 1:
            return complex(8 / math.pi**2)
        a = 2 / math.pi * math.acos(self.k)
        return complex(2 * a * a / (1 - self.k * self.k))

    @property
    def alpha2(self) -> complex:
        # Not available in closed form here; extracted from the series.
        if self._alpha2 is None:
            self._alpha2 = self.taylor(2).coeffs[2]
        return self._alpha2

    def _eval(self, z: complex) -> complex:
        r = cmath.sqrt(z)
        ell = cmath.log((1 + r) / (1 - r))
        if self.k == 1:
            return 1 + (2 / math.pi**2) * ell * ell
        k2 = self.k * self.k
        a = 2 / math.pi * math.acos(self.k)
        return (cmath.cosh(a * ell) - k2) / (1 - k2)

    def _taylor(self, order: int) -> ComplexSeries:
        # Discrete Cauchy coefficients from samples on |z| = 1/2,
        # doubling the sample count until the requested coefficients
        # move by no more than 1e-12.
        r = 0.5
        prev = None
        m = max(6, (order + 1).bit_length() + 2)
        while m <= 16:
            count = 2**m
            zs = r * np.exp(2j * np.pi * np.arange(count) / count)
            vals = np.array([self._eval(z) for z in zs])
            co = np.fft.fft(vals)[: order + 1] / count
            co /= r ** np.arange(order + 1)
            if prev is not None and np.max(np.abs(co - prev)) <= 1e-12:
                return ComplexSeries(tuple(co))
            prev = co
            m += 1
        raise ValueError(
            "coefficient extraction did not converge at 2^16 samples"
        )

    def spec_string(self) -> str:
        return f"kucv:k={self.k:g}"


def _fmt_param(v: complex) -> str:
    if v.imag == 0:
        return f"{v.real:g}"
    return f"{v.real:g}{v.imag:+g}i"


def make_domain(spec: DomainSpec) -> DomainMap:
    """Build a catalog map from a parsed spec.

    Unknown kinds, missing parameters, and out-of-range values raise
    ValueError with a descriptive message.
    """
    kind = spec.kind
    params = dict(spec.params)

    def take(name: str, default=None):
        if name in params:
            return params.pop(name)
        if default is not None:
            return default
        raise ValueError(f"domain kind '{kind}' requires parameter '{name}'")

    if kind == "halfplane":
        dom: DomainMap = HalfPlane(alpha=_as_real(take("alpha", 0.0), "alpha"))
    elif kind == "sector":
        dom = Sector(beta=_as_real(take("beta"), "beta"))
    elif kind == "janowski":
        dom = Janowski(a=complex(take("A")), b=complex(take("B")))
    elif kind == "kucv":
        dom = ConicSection(k=_as_real(take("k"), "k"))
    else:
        raise ValueError(f"unknown domain kind '{kind}'")
    if params:
        extra = ", ".join(sorted(params))
        raise ValueError(f"unexpected parameter(s) for '{kind}': {extra}")
    return dom


def _as_real(v, name: str) -> float:
    v = complex(v)
    if v.imag != 0:
        raise ValueError(f"parameter '{name}' must be real")
    return v.real


def domain_eval(domain: DomainMap, z: complex) -> complex:
    """Evaluate the map at a point of the open unit disk."""
    return domain.eval(z)


def domain_taylor(domain: DomainMap, order: int) -> ComplexSeries:
    """Taylor coefficients of the map at 0, up to the given order."""
    return domain.taylor(order)
