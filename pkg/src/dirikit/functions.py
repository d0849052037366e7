"""Truncated Taylor series on the unit disc.

An analytic function is carried around as a finite coefficient vector
a_0..a_N.  Exact polynomials are flagged ``exact=True``; everything else is
understood to be the truncation of a longer series and keeps ``exact=False``
through arithmetic.  All operations are pure and return new objects, so
instances can be shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isfinite

import numpy as np

#: Degree at which products are truncated unless the caller says otherwise.
DEFAULT_TRUNCATION_DEGREE = 64

#: Radii 1 - 2^-k used for radial extrapolation of boundary values.
_BOUNDARY_RADII_EXPONENTS = range(3, 13)

#: |f(r*lam)| beyond this is treated as radial divergence.
_DIVERGENCE_THRESHOLD = 1e8


class BoundaryStatus(str, Enum):
    """How a boundary value was obtained."""

    EXACT = "exact"
    EXTRAPOLATED = "extrapolated"
    DIVERGENT = "divergent"


class InexactDivisionError(ArithmeticError):
    """Raised when dividing an exact polynomial by a non-root factor."""


@dataclass(frozen=True)
class AnalyticFunction:
    """Finite Taylor expansion sum_k a_k z^k with an exactness flag.

    ``coeffs`` always has length ``degree + 1``.  ``exact`` means the
    function *is* this polynomial; otherwise the vector is the truncation
    of something longer and downstream consumers must not assume the tail
    vanishes.
    """

    coeffs: tuple[complex, ...]
    exact: bool = True

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("need at least the constant coefficient")
        cleaned = tuple(complex(c) for c in self.coeffs)
        if not all(isfinite(c.real) and isfinite(c.imag) for c in cleaned):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", cleaned)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coefficients(cls, coeffs, exact: bool = True) -> AnalyticFunction:
        return cls(tuple(complex(c) for c in coeffs), exact)

    @classmethod
    def constant(cls, value: complex) -> AnalyticFunction:
        return cls((complex(value),), True)

    @classmethod
    def monomial(cls, k: int, scale: complex = 1.0) -> AnalyticFunction:
        if k < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls((0.0,) * k + (complex(scale),), True)

    def coefficient_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)

    def __add__(self, other: AnalyticFunction) -> AnalyticFunction:
        return add(self, other)

    def __mul__(self, other) -> AnalyticFunction:
        if isinstance(other, AnalyticFunction):
            return multiply(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "coeffs": [[c.real, c.imag] for c in self.coeffs],
            "exact": self.exact,
        }

    @classmethod
    def from_json(cls, payload: dict) -> AnalyticFunction:
        coeffs = [complex(re, im) for re, im in payload["coeffs"]]
        return cls(tuple(coeffs), bool(payload.get("exact", True)))


def evaluate(f: AnalyticFunction, z):
    """Evaluate f at a point (or ndarray of points) of the closed disc.

    Horner recurrence; ``z`` may be a complex scalar or any numpy array of
    points with ``|z| <= 1``.
    """
    zs = np.asarray(z, dtype=complex)
    if np.any(np.abs(zs) > 1.0 + 1e-12):
        raise ValueError("evaluation point outside the closed unit disc")
    acc = np.zeros_like(zs)
    for c in reversed(f.coeffs):
        acc = acc * zs + c
    if np.isscalar(z) or zs.ndim == 0:
        return complex(acc)
    return acc


def derivative(f: AnalyticFunction, order: int = 1) -> AnalyticFunction:
    """Formal ``order``-th derivative; degrees below ``order`` drop out."""
    if order < 0:
        raise ValueError("derivative order must be non-negative")
    coeffs = f.coefficient_array()
    for _ in range(order):
        if len(coeffs) == 1:
            coeffs = np.zeros(1, dtype=complex)
            break
        coeffs = coeffs[1:] * np.arange(1, len(coeffs))
    return AnalyticFunction(tuple(coeffs), f.exact)


def dilate(f: AnalyticFunction, r: float) -> AnalyticFunction:
    """Radial dilation z -> r z, i.e. a_k -> r^k a_k, for 0 <= r < 1."""
    if not 0.0 <= r < 1.0:
        raise ValueError("dilation radius must lie in [0, 1)")
    powers = r ** np.arange(len(f.coeffs))
    return AnalyticFunction(tuple(f.coefficient_array() * powers), f.exact)


def add(f: AnalyticFunction, g: AnalyticFunction) -> AnalyticFunction:
    n = max(len(f.coeffs), len(g.coeffs))
    acc = np.zeros(n, dtype=complex)
    acc[: len(f.coeffs)] += f.coefficient_array()
    acc[: len(g.coeffs)] += g.coefficient_array()
    return AnalyticFunction(tuple(acc), f.exact and g.exact)


def scale(f: AnalyticFunction, c: complex) -> AnalyticFunction:
    return AnalyticFunction(tuple(f.coefficient_array() * complex(c)), f.exact)


def multiply(
    f: AnalyticFunction,
    g: AnalyticFunction,
    max_degree: int | None = None,
) -> AnalyticFunction:
    """Cauchy product, truncated at ``max_degree`` (default global cap).

    A product whose true degree exceeds the cap is truncated and loses the
    ``exact`` flag.
    """
    cap = DEFAULT_TRUNCATION_DEGREE if max_degree is None else max_degree
    full = np.convolve(f.coefficient_array(), g.coefficient_array())
    if len(full) - 1 > cap:
        return AnalyticFunction(tuple(full[: cap + 1]), False)
    return AnalyticFunction(tuple(full), f.exact and g.exact)


def divide_by_root(
    f: AnalyticFunction,
    lam: complex,
    alpha: complex,
    return_residue: bool = False,
):
    """Solve (z - lam) * g = f - alpha for the truncated series g.

    The coefficients are produced from the constant term upward, so each
    g_k depends only on a_0..a_k and alpha; any mismatch is pushed into the
    unsatisfied top equation.  For a unimodular lam that residue equals
    |f(lam) - alpha| exactly, and it vanishes when alpha is the value of an
    exact polynomial at lam.  Exact inputs with a non-zero residue raise
    :class:`InexactDivisionError`; truncations keep the division and report
    the residue when asked.
    """
    lam = complex(lam)
    if abs(abs(lam) - 1.0) > 1e-9:
        raise ValueError("division point must lie on the unit circle")
    a = f.coefficient_array()
    n = len(a) - 1
    if n == 0:
        g = AnalyticFunction((0.0,), f.exact)
        residue = abs(a[0] - alpha)
    else:
        out = np.empty(n, dtype=complex)
        out[0] = (alpha - a[0]) / lam
        for k in range(1, n):
            out[k] = (out[k - 1] - a[k]) / lam
        residue = abs(out[n - 1] - a[n])
        g = AnalyticFunction(tuple(out), f.exact)
    if f.exact and residue > 1e-9 * max(1.0, float(np.max(np.abs(a)))):
        raise InexactDivisionError(
            f"inexact division: remainder {residue:.3e} at lam={lam}"
        )
    if return_residue:
        return g, residue
    return g


def boundary_value(
    f: AnalyticFunction, lam: complex
) -> tuple[complex, BoundaryStatus]:
    """Radial boundary value of f at a unimodular point.

    Exact polynomials are just evaluated.  Truncations are sampled along
    r_k = 1 - 2^-k and extrapolated to r = 1 (Neville in h = 1 - r); if any
    sample exceeds the divergence threshold, the status is ``DIVERGENT``
    and the value is meaningless.
    """
    lam = complex(lam)
    if abs(abs(lam) - 1.0) > 1e-9:
        raise ValueError("boundary point must lie on the unit circle")
    if f.exact:
        return evaluate(f, lam), BoundaryStatus.EXACT
    hs = np.array([2.0**-k for k in _BOUNDARY_RADII_EXPONENTS])
    samples = np.array([evaluate(f, (1.0 - h) * lam) for h in hs])
    if np.any(np.abs(samples) > _DIVERGENCE_THRESHOLD):
        return complex("nan+nanj"), BoundaryStatus.DIVERGENT
    table = samples.copy()
    for m in range(1, len(table)):
        for i in range(len(table) - m):
            table[i] = table[i + 1] + (table[i + 1] - table[i]) * hs[i + m] / (
                hs[i] - hs[i + m]
            )
    return complex(table[0]), BoundaryStatus.EXTRAPOLATED
