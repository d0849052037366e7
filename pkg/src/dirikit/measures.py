"""Finite non-negative measures on the unit circle.

Supported measures are a finite sum of point masses plus a multiple of
normalized arc length.  That class is closed under everything the package
computes and admits closed-form Poisson integrals and Szego potentials,
which is what keeps an exact oracle available for every test.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

#: Atom angles closer than this (radians) count as the same point.
ATOM_ANGLE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Atom:
    """Point mass on the circle, located at exp(i*angle)."""

    angle: float
    mass: float

    @property
    def point(self) -> complex:
        return cmath.exp(1j * self.angle)


@dataclass(frozen=True)
class CircleMeasure:
    """Finitely many atoms plus ``lebesgue`` times normalized arc length."""

    atoms: tuple[Atom, ...] = ()
    lebesgue: float = 0.0

    def __post_init__(self):
        if self.lebesgue < 0:
            raise ValueError("arc-length component must be non-negative")
        normalized = []
        for atom in self.atoms:
            if atom.mass <= 0:
                raise ValueError("atom masses must be positive")
            normalized.append(Atom(atom.angle % (2 * math.pi), atom.mass))
        normalized.sort(key=lambda a: a.angle)
        for left, right in zip(normalized, normalized[1:]):
            if right.angle - left.angle < ATOM_ANGLE_TOLERANCE:
                raise ValueError("atom points must be pairwise distinct")
        # wrap-around pair: 0 and 2*pi are the same point
        if len(normalized) >= 2:
            gap = 2 * math.pi - normalized[-1].angle + normalized[0].angle
            if gap < ATOM_ANGLE_TOLERANCE:
                raise ValueError("atom points must be pairwise distinct")
        object.__setattr__(self, "atoms", tuple(normalized))

    @classmethod
    def point_mass(cls, angle: float, mass: float = 1.0) -> CircleMeasure:
        return cls((Atom(angle, mass),), 0.0)

    @classmethod
    def arc_length(cls, mass: float = 1.0) -> CircleMeasure:
        return cls((), mass)

    @classmethod
    def zero(cls) -> CircleMeasure:
        return cls((), 0.0)

    @property
    def total_mass(self) -> float:
        return self.lebesgue + sum(a.mass for a in self.atoms)

    @property
    def is_atomic(self) -> bool:
        return self.lebesgue == 0.0

    def to_json(self) -> dict:
        return {
            "atoms": [{"angle": a.angle, "mass": a.mass} for a in self.atoms],
            "lebesgue": self.lebesgue,
        }

    @classmethod
    def from_json(cls, payload: dict) -> CircleMeasure:
        atoms = tuple(
            Atom(float(a["angle"]), float(a["mass"]))
            for a in payload.get("atoms", [])
        )
        return cls(atoms, float(payload.get("lebesgue", 0.0)))


@dataclass(frozen=True)
class MeasureTuple:
    """Ordered tuple (mu_1, ..., mu_m) weighting the order-j seminorms."""

    entries: tuple[CircleMeasure, ...]

    def __post_init__(self):
        if len(self.entries) == 0:
            raise ValueError("measure tuple needs at least one entry")
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {"entries": [m.to_json() for m in self.entries]}

    @classmethod
    def from_json(cls, payload: dict) -> MeasureTuple:
        return cls(tuple(CircleMeasure.from_json(m) for m in payload["entries"]))


def _require_interior(z: complex) -> complex:
    z = complex(z)
    if abs(z) >= 1.0:
        raise ValueError("point must lie in the open unit disc")
    return z


def poisson_integral(measure: CircleMeasure, z: complex) -> float:
    """Harmonic extension of the measure at an interior point.

    The arc-length part contributes its mass exactly (mean value property);
    each atom contributes (1 - |z|^2) / |z - point|^2 times its mass.
    """
    z = _require_interior(z)
    one_minus = 1.0 - abs(z) ** 2
    total = measure.lebesgue
    for atom in measure.atoms:
        total += atom.mass * one_minus / abs(z - atom.point) ** 2
    return total


def szego_potential(measure: CircleMeasure, w: complex) -> float:
    """Integral of |1 - point * conj(w)|^-2 against the measure.

    This is the squared Szego kernel integrated in its boundary variable;
    the arc-length part has the closed form mass / (1 - |w|^2).
    """
    w = _require_interior(w)
    total = measure.lebesgue / (1.0 - abs(w) ** 2)
    for atom in measure.atoms:
        total += atom.mass / abs(1.0 - atom.point * w.conjugate()) ** 2
    return total
