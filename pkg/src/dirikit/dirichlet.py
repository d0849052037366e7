"""Weighted Dirichlet-type integrals of analytic functions on the disc.

The order-n integral of f against a circle measure weights |f^(n)|^2 by
the measure's Poisson integral times (1 - |z|^2)^(n-1), normalized by
1/(n! (n-1)!).  Two independent routes compute it:

* series / decomposition: against arc length the integral is the
  coefficient sum of binom(k, n) |a_k|^2; against an atom it equals the
  order-(n-1) arc-length integral of the quotient (f - f*(lam))/(z - lam),
  so exact polynomials reduce to pure coefficient combinatorics;
* quadrature: sample f^(n) on a disc grid and integrate against the
  weight numerically.

Keeping both routes honest and comparing them is the package's whole
point; nothing here ever feeds one route's result into the other.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .functions import (
    AnalyticFunction,
    BoundaryStatus,
    boundary_value,
    derivative,
    divide_by_root,
    evaluate,
    multiply,
)
from .measures import CircleMeasure
from .measures import szego_potential as _szego_potential
from .quadrature import QuadratureSpec, poisson_weighted_energy


class BoundaryDivergenceError(ArithmeticError):
    """A required boundary value does not exist for this function."""


@dataclass(frozen=True)
class DirichletResult:
    """Value of a weighted Dirichlet-type integral with provenance."""

    value: float
    method: str  # "series" | "decomposition" | "quadrature"
    error_estimate: float
    order: int

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "error": self.error_estimate,
            "order": self.order,
        }


@dataclass(frozen=True)
class DouglasCertificate:
    """Decomposition f = alpha + (z - lam) g with both integral routes.

    ``lhs`` is the quadrature value of the local integral of f, ``rhs``
    the coefficient-series value for the quotient g one order down; the
    residual is their gap.
    """

    alpha: complex
    quotient: AnalyticFunction
    lhs: float
    rhs: float
    residual: float
    order: int
    lhs_error: float

    def to_json(self) -> dict:
        return {
            "value": self.rhs,
            "method": "decomposition",
            "error": self.lhs_error,
            "order": self.order,
            "alpha": [self.alpha.real, self.alpha.imag],
            "g": self.quotient.to_json(),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
        }


@dataclass(frozen=True)
class AtomicDecomposition:
    """f = interpolant + quotient * prod(z - atom_j) with its residual."""

    interpolant: AnalyticFunction
    quotient: AnalyticFunction
    residual: float


def dirichlet_sigma(f: AnalyticFunction, order: int) -> DirichletResult:
    """Arc-length Dirichlet-type integral via the coefficient series.

    Order 0 is the squared Hardy norm; order n sums binom(k, n) |a_k|^2.
    Exact for the stored coefficients, so the error estimate is zero.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    total = 0.0
    for k, c in enumerate(f.coeffs):
        if k >= order:
            total += math.comb(k, order) * abs(c) ** 2
    return DirichletResult(total, "series", 0.0, order)


def dirichlet_sigma_inner(
    f: AnalyticFunction, g: AnalyticFunction, order: int
) -> complex:
    """Polarized arc-length seminorm pairing sum binom(k, n) a_k conj(b_k)."""
    total = 0.0 + 0.0j
    for k in range(order, min(len(f.coeffs), len(g.coeffs))):
        total += math.comb(k, order) * f.coeffs[k] * g.coeffs[k].conjugate()
    return total


def _atom_decomposition_value(
    f: AnalyticFunction, point: complex, order: int
) -> float:
    alpha = evaluate(f, point)
    quotient = divide_by_root(f, point, alpha)
    return dirichlet_sigma(quotient, order - 1).value


def _quadrature_atom_value(
    f: AnalyticFunction, angle: float, order: int, spec: QuadratureSpec
) -> tuple[float, float]:
    df = derivative(f, order)
    return poisson_weighted_energy(
        lambda z: evaluate(df, z), order, spec, atom_angle=angle
    )


def _quadrature_sigma_value(
    f: AnalyticFunction, order: int, spec: QuadratureSpec
) -> tuple[float, float]:
    df = derivative(f, order)
    return poisson_weighted_energy(lambda z: evaluate(df, z), order, spec)


def dirichlet_weighted(
    f: AnalyticFunction,
    measure: CircleMeasure,
    order: int,
    spec: QuadratureSpec | None = None,
    force_quadrature: bool = False,
) -> DirichletResult:
    """Weighted Dirichlet-type integral of positive order.

    The measure splits into its arc-length multiple and its atoms and the
    parts add up.  Exact polynomials take the decomposition route per atom
    and the coefficient series for the arc-length part; truncations, and
    any call with ``force_quadrature``, integrate numerically instead.
    """
    if order < 1:
        raise ValueError(
            "order must be positive; use dirichlet_atomic_order_zero for order 0"
        )
    spec = spec or QuadratureSpec.default()
    quadrature = force_quadrature or not f.exact
    total = 0.0
    error = 0.0
    methods: set[str] = set()
    if measure.lebesgue > 0:
        if force_quadrature:
            value, est = _quadrature_sigma_value(f, order, spec)
            total += measure.lebesgue * value
            error += measure.lebesgue * est
            methods.add("quadrature")
        else:
            total += measure.lebesgue * dirichlet_sigma(f, order).value
            methods.add("series")
    for atom in measure.atoms:
        if quadrature:
            value, est = _quadrature_atom_value(f, atom.angle, order, spec)
            total += atom.mass * value
            error += atom.mass * est
            methods.add("quadrature")
        else:
            total += atom.mass * _atom_decomposition_value(f, atom.point, order)
            methods.add("decomposition")
    if "quadrature" in methods:
        method = "quadrature"
    elif "decomposition" in methods:
        method = "decomposition"
    else:
        method = "series"
    return DirichletResult(total, method, error, order)


def dirichlet_atomic_order_zero(
    f: AnalyticFunction, measure: CircleMeasure
) -> DirichletResult:
    """Order-zero integral for a purely atomic measure.

    Equals the mass-weighted sum of squared boundary values over the
    atoms; a divergent boundary value at any atom makes it undefined.
    """
    if not measure.is_atomic:
        raise ValueError("order-zero path requires a purely atomic measure")
    total = 0.0
    for atom in measure.atoms:
        value, status = boundary_value(f, atom.point)
        if status is BoundaryStatus.DIVERGENT:
            raise BoundaryDivergenceError(
                "order-zero integral undefined: divergent boundary value "
                f"at angle {atom.angle:.6f}"
            )
        total += atom.mass * abs(value) ** 2
    return DirichletResult(total, "decomposition", 0.0, 0)


def douglas_decompose(
    f: AnalyticFunction,
    boundary_point: complex,
    order: int,
    spec: QuadratureSpec | None = None,
) -> DouglasCertificate:
    """Local decomposition f = alpha + (z - lam) g with a two-route check.

    alpha is the boundary value at lam, g the synthetic quotient; the
    certificate carries the quadrature value of the local integral of f
    (lhs) next to the coefficient series of g one order down (rhs).
    """
    if order < 1:
        raise ValueError("order must be a positive integer")
    spec = spec or QuadratureSpec.default()
    lam = complex(boundary_point)
    alpha, status = boundary_value(f, lam)
    if status is BoundaryStatus.DIVERGENT:
        raise BoundaryDivergenceError(
            "no decomposition: divergent boundary value at this point"
        )
    quotient = divide_by_root(f, lam, alpha)
    lhs, lhs_error = _quadrature_atom_value(f, cmath.phase(lam), order, spec)
    rhs = dirichlet_sigma(quotient, order - 1).value
    return DouglasCertificate(
        alpha=alpha,
        quotient=quotient,
        lhs=lhs,
        rhs=rhs,
        residual=abs(lhs - rhs),
        order=order,
        lhs_error=lhs_error,
    )


def bergman_lift(
    f: AnalyticFunction, boundary_point: complex, order: int
) -> AnalyticFunction:
    """Order-th derivative of (z - lam) f.

    This is the unitary carrying the order-(n-1) arc-length seminorm onto
    the weighted Bergman space of the local weight at lam.
    """
    lam = complex(boundary_point)
    shifted = multiply(
        f,
        AnalyticFunction((-lam, 1.0)),
        max_degree=f.degree + 1,
    )
    return derivative(shifted, order)


def dirichlet_kernel_value(
    z: complex, w: complex, order: int, terms: int
) -> tuple[complex, float]:
    """Partial sum of the order-j arc-length reproducing kernel.

    Sums binom(k, j)^-1 (z conj(w))^k for k = j .. j + terms - 1 and
    reports a geometric tail bound (the binomial weights are >= 1).
    """
    if terms < 1:
        raise ValueError("need at least one term")
    z, w = complex(z), complex(w)
    if abs(z) >= 1 or abs(w) >= 1:
        raise ValueError("kernel arguments must lie in the open disc")
    x = z * w.conjugate()
    total = 0.0 + 0.0j
    power = x**order
    for k in range(order, order + terms):
        total += power / math.comb(k, order)
        power *= x
    tail = abs(x) ** (order + terms) / (1.0 - abs(x))
    return total, tail


def dirichlet_kernel_section(
    w: complex, order: int, degree: int
) -> AnalyticFunction:
    """Coefficient vector of the kernel section K(., w) up to ``degree``."""
    w = complex(w)
    coeffs = [0.0 + 0.0j] * (degree + 1)
    for k in range(order, degree + 1):
        coeffs[k] = w.conjugate() ** k / math.comb(k, order)
    return AnalyticFunction(tuple(coeffs), False)


def local_bergman_kernel(
    z: complex, w: complex, boundary_point: complex, order: int
) -> complex:
    """Closed-form reproducing kernel of the local Bergman space.

    (n+1)! (n-1)! (z - lam)(conj(w) - conj(lam)) / (1 - z conj(w))^(n+2).
    """
    z, w, lam = complex(z), complex(w), complex(boundary_point)
    numerator = (z - lam) * (w.conjugate() - lam.conjugate())
    scale = math.factorial(order + 1) * math.factorial(order - 1)
    return scale * numerator / (1.0 - z * w.conjugate()) ** (order + 2)


def local_bergman_kernel_series(
    z: complex, w: complex, boundary_point: complex, order: int, terms: int
) -> complex:
    """Basis expansion of the same kernel, truncated after ``terms``.

    n! (n-1)! (n+1) (z - lam)(conj(w) - conj(lam))
    sum_k binom(n+k+1, k) (z conj(w))^k.
    """
    z, w, lam = complex(z), complex(w), complex(boundary_point)
    x = z * w.conjugate()
    series = sum(
        math.comb(order + k + 1, k) * x**k for k in range(terms)
    )
    scale = math.factorial(order) * math.factorial(order - 1) * (order + 1)
    return scale * (z - lam) * (w.conjugate() - lam.conjugate()) * series


def szego_kernel_truncation(w: complex, degree: int) -> AnalyticFunction:
    """Degree-``degree`` truncation of 1 / (1 - z conj(w))."""
    w = complex(w)
    return AnalyticFunction(
        tuple(w.conjugate() ** k for k in range(degree + 1)), False
    )


def szego_kernel_energy(
    w: complex, measure: CircleMeasure, order: int
) -> float:
    """Closed-form weighted integral of the Szego kernel at w.

    |w|^(2n) / (1 - |w|^2)^n times the Szego potential of the measure.
    """
    if order < 1:
        raise ValueError("order must be a positive integer")
    w = complex(w)
    factor = abs(w) ** (2 * order) / (1.0 - abs(w) ** 2) ** order
    return factor * _szego_potential(measure, w)


def dilation_factor(r: float, order: int) -> float:
    """Contraction factor 4^(n-1) (2 - r) r^(2n) / (1 + r)^(2n-2)."""
    if not 0.0 <= r < 1.0:
        raise ValueError("dilation radius must lie in [0, 1)")
    if order < 1:
        raise ValueError("order must be a positive integer")
    return (
        4.0 ** (order - 1) * (2.0 - r) * r ** (2 * order)
        / (1.0 + r) ** (2 * order - 2)
    )


def _lagrange_interpolant(
    points: list[complex], values: list[complex]
) -> AnalyticFunction:
    k = len(points)
    coeffs = np.zeros(max(k, 1), dtype=complex)
    if k == 0:
        return AnalyticFunction((0.0,))
    for j, (pj, vj) in enumerate(zip(points, values)):
        basis = np.array([1.0 + 0.0j])
        denom = 1.0 + 0.0j
        for i, pi in enumerate(points):
            if i == j:
                continue
            basis = np.convolve(basis, np.array([-pi, 1.0 + 0.0j]))
            denom *= pj - pi
        coeffs[: len(basis)] += vj * basis / denom
    return AnalyticFunction(tuple(coeffs))


def atomic_decompose(
    f: AnalyticFunction, atom_angles: list[float], order: int
) -> AtomicDecomposition:
    """Split f into an interpolant plus a multiple of prod(z - atom_j).

    The interpolant matches the boundary values of f at the atoms, so the
    difference divides by every root factor; the quotient comes out of
    iterated synthetic division.  The residual is the largest
    coefficientwise gap of the rebuilt function against f.
    """
    if len(atom_angles) == 0:
        raise ValueError("need at least one atom")
    points = [cmath.exp(1j * a) for a in atom_angles]
    if len(set(atom_angles)) != len(atom_angles):
        raise ValueError("atom angles must be distinct")
    values = []
    for point, angle in zip(points, atom_angles):
        value, status = boundary_value(f, point)
        if status is BoundaryStatus.DIVERGENT:
            raise BoundaryDivergenceError(
                "no decomposition: divergent boundary value at angle "
                f"{angle:.6f}"
            )
        values.append(value)
    interpolant = _lagrange_interpolant(points, values)
    remainder = f + (-1.0) * interpolant
    quotient = remainder
    for point in points:
        # the remaining value at the root is interpolation roundoff; fold
        # it into the division rather than tripping the exactness check
        quotient = divide_by_root(
            quotient, point, evaluate(quotient, point)
        )
    rebuilt = quotient
    for point in points:
        rebuilt = multiply(
            rebuilt,
            AnalyticFunction((-point, 1.0)),
            max_degree=rebuilt.degree + 1,
        )
    rebuilt = rebuilt + interpolant
    width = max(len(f.coeffs), len(rebuilt.coeffs))
    fc = np.zeros(width, dtype=complex)
    rc = np.zeros(width, dtype=complex)
    fc[: len(f.coeffs)] = f.coefficient_array()
    rc[: len(rebuilt.coeffs)] = rebuilt.coefficient_array()
    residual = float(np.max(np.abs(fc - rc)))
    return AtomicDecomposition(interpolant, quotient, residual)


def _binom_ratio(top: int, bottom: int, order: int) -> float:
    """binom(top, order) / binom(bottom, order) as an exact-ratio float."""
    return math.comb(top, order) / math.comb(bottom, order)


def _multiplication_section(
    phi: AnalyticFunction, order: int, section_degree: int
) -> np.ndarray:
    """Matrix of multiplication by phi from the monomial section.

    Columns are the orthonormal monomials binom(k, j)^-1/2 z^k for
    k = j .. N, rows the same basis up to N + deg(phi); entries are
    phi_{l-k} sqrt(binom(l, j) / binom(k, j)).
    """
    if not phi.exact:
        raise ValueError("multiplier estimates need an exact polynomial")
    d = phi.degree
    if section_degree < d + order:
        raise ValueError("section degree must reach deg(phi) + order")
    n_cols = section_degree + 1 - order
    n_rows = section_degree + d + 1 - order
    matrix = np.zeros((n_rows, n_cols), dtype=complex)
    for ci, k in enumerate(range(order, section_degree + 1)):
        for p, c in enumerate(phi.coeffs):
            row = k + p - order
            matrix[row, ci] = c * math.sqrt(_binom_ratio(k + p, k, order))
    return matrix


def multiplier_seminorm_estimate(
    phi: AnalyticFunction, order: int, section_degree: int
) -> float:
    """Finite-section lower bound for the multiplier seminorm of phi.

    Largest singular value of the multiplication matrix restricted to the
    monomial section; nondecreasing in the section degree and always a
    lower bound of the seminorm on the full order-j space.
    """
    matrix = _multiplication_section(phi, order, section_degree)
    return float(np.linalg.norm(matrix, ord=2))


def multiplier_seminorm_upper(
    phi: AnalyticFunction, order: int, section_degree: int
) -> float:
    """Certified upper bound for the multiplier seminorm of phi.

    Split any vector into its section part and the tail above the section
    degree.  The section part is controlled by the section singular value;
    on the tail each diagonal of the banded multiplication matrix is a
    weighted shift whose weight ratios binom(k+p, j)/binom(k, j) decrease
    in k, so the triangle inequality over diagonals bounds the tail block
    at the first excluded column.  Cauchy-Schwarz combines the two blocks.
    """
    section = multiplier_seminorm_estimate(phi, order, section_degree)
    start = section_degree + 1
    tail = sum(
        abs(c) * math.sqrt(_binom_ratio(start + p, start, order))
        for p, c in enumerate(phi.coeffs)
    )
    return math.sqrt(section**2 + tail**2)
