"""Adaptive contour quadrature along straight segments from the origin.

Integrals here are always of the form  int_0^{z_end} f(zeta) d(zeta)
taken along the straight segment, parametrized as zeta(t) = t*z_end for
t in [0, 1].  Each panel is a Gauss-Kronrod (G7, K15) pair; the panel
error estimate is |K15 - G7| and panels failing their share of the
budget are bisected.  All nodes are interior, so integrands with a
removable singularity at the origin (the 1/zeta weight against a
vanishing numerator) are evaluated safely without special-casing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

__all__ = ["QuadratureConfig", "QuadratureError", "integrate_segment"]

# 15-point Kronrod abscissae (positive half, descending; last entry is 0)
# and weights, with the embedded 7-point Gauss weights.  Standard values.
_XGK = (
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.20778495500789847,
    0.0,
)
_WGK = (
    0.022935322010529224,
    0.06309209262997855,
    0.10479001032225018,
    0.14065325971552592,
    0.1690047266392679,
    0.19035057806478541,
    0.2044329400752989,
    0.20948214108472783,
)
# Gauss weights for the odd-indexed abscissae above (x_1, x_3, x_5) and 0.
_WG = (
    0.1294849661688697,
    0.2797053914892767,
    0.3818300505051189,
    0.41795918367346936,
)


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and recursion limit for the adaptive scheme."""

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_depth: int = 30

    def __post_init__(self) -> None:
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


DEFAULT_CONFIG = QuadratureConfig()


class QuadratureError(RuntimeError):
    """Raised when bisection hits max_depth without meeting its budget.

    Carries the best available estimate and its error bound so callers
    can decide whether the partial answer is still usable.
    """

    def __init__(self, message: str, estimate: complex, error_bound: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


def _panel(
    f: Callable[[float], complex], a: float, b: float
) -> tuple[complex, float]:
    """One G7/K15 panel on [a, b]: returns (K15 value, |K15 - G7|)."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    k15 = _WGK[7] * fc
    g7 = _WG[3] * fc
    for i in (0, 2, 4, 6):  # Kronrod-only points
        s = f(c - h * _XGK[i]) + f(c + h * _XGK[i])
        k15 += _WGK[i] * s
    for j, i in enumerate((1, 3, 5)):  # shared Gauss points
        s = f(c - h * _XGK[i]) + f(c + h * _XGK[i])
        k15 += _WGK[i] * s
        g7 += _WG[j] * s
    k15 *= h
    g7 *= h
    return k15, abs(k15 - g7)


def integrate_segment(
    integrand: Callable[[complex], complex],
    z_end: complex,
    cfg: QuadratureConfig | None = None,
) -> complex:
    """Integrate along the segment from 0 to z_end.

    The estimated error of the result is at most
    max(abs_tol, rel_tol * |result|); the relative scale is taken from
    a first whole-segment panel.  The integrand must be analytic on a
    neighborhood of the segment (a removable singularity at 0 is fine:
    no node touches an endpoint).

    Parameters
    ----------
    integrand : callable
        Map from complex to complex.
    z_end : complex
        Endpoint; 0 gives the empty contour and an exact 0 result.
    cfg : QuadratureConfig, optional

    Raises
    ------
    QuadratureError
        If some panel still fails its budget at max_depth.  The
        exception carries the best global estimate and error bound.
    """
    if cfg is None:
        cfg = DEFAULT_CONFIG
    z_end = complex(z_end)
    if z_end == 0:
        return 0j

    def ft(t: float) -> complex:
        return integrand(t * z_end)

    first, err0 = _panel(ft, 0.0, 1.0)
    scale = abs(z_end)
    # Error budget in t-space, distributed proportionally to panel length.
    tol_t = max(cfg.abs_tol, cfg.rel_tol * abs(first) * scale) / scale
    if err0 <= tol_t:
        return z_end * first

    total = 0j
    bound = 0.0
    exhausted = False
    stack = [(0.0, 1.0, 0)]
    while stack:
        a, b, depth = stack.pop()
        val, err = _panel(ft, a, b)
        if err <= tol_t * (b - a):
            total += val
            bound += err
        elif depth >= cfg.max_depth:
            total += val
            bound += err
            exhausted = True
        else:
            m = 0.5 * (a + b)
            stack.append((m, b, depth + 1))
            stack.append((a, m, depth + 1))
    if exhausted:
        raise QuadratureError(
            "max depth exceeded without convergence",
            z_end * total,
            scale * bound,
        )
    return z_end * total
