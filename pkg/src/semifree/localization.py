"""Exact fixed-point localization for equivariant powers of c_1.

Every fixed component of a semifree circle action on a 6-manifold
contributes one term to the integral of c_1^{S^1}(TM)^p, and for the
powers p in {0, 1, 3} used here each term is a single rational multiple
of lambda^(p-3).  The expansions live in the nilpotent ring Q[q]/(q^2)
for surface components and in the degree-truncated cohomology of a
4-manifold for extremal 4-dimensional components; no general Laurent
series is ever needed.

Sign conventions (frozen as constructor contracts): the negative normal
line bundle of an interior surface has equivariant first Chern class
-lambda + b_neg q and the positive one lambda + b_pos q; a minimal
surface has both factors (lambda + d_i q), a maximal one both
(-lambda + d_i q); a minimal 4-manifold has equivariant normal Euler
class lambda + e and a maximal one -lambda - e, with e the Euler class
of the adjacent circle bundle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import CohClass, SurfaceLattice, pairing

MIN = "min"
MAX = "max"

_POWERS = (0, 1, 3)


@dataclass(frozen=True)
class LocalTerm:
    """A single fixed-component contribution: coeff * lambda^power."""

    coeff: Fraction
    lambda_power: int


@dataclass(frozen=True)
class Point:
    """Isolated fixed point with tangent weights, each +-1."""

    weights: tuple[int, int, int]

    def __post_init__(self):
        if any(w not in (-1, 1) for w in self.weights):
            raise ValueError("semifree isolated fixed points have weights +-1")


@dataclass(frozen=True)
class Surface:
    """Interior fixed surface: one negative and one positive normal weight.

    b_neg, b_pos are the Chern numbers of the two normal line bundles and
    c1_deg the anticanonical degree (= symplectic area) of the surface.
    """

    b_neg: int
    b_pos: int
    c1_deg: int


@dataclass(frozen=True)
class ExtremalSurface:
    """Extremal 2-sphere; b is the Chern number of its normal bundle."""

    sign: str
    b: int
    c1_deg: int

    def __post_init__(self):
        if self.sign not in (MIN, MAX):
            raise ValueError("sign must be 'min' or 'max'")
        if self.c1_deg != self.b + 2:
            raise ValueError("extremal sphere has anticanonical degree b + 2")


@dataclass(frozen=True)
class FourManifold:
    """Extremal 4-dimensional fixed component.

    euler is the Euler class of the circle bundle over it at the adjacent
    regular level, as a class of its own H^2 lattice.
    """

    sign: str
    lattice: SurfaceLattice
    euler: CohClass

    def __post_init__(self):
        if self.sign not in (MIN, MAX):
            raise ValueError("sign must be 'min' or 'max'")
        if self.euler.lattice != self.lattice:
            raise ValueError("euler class must live on the component's lattice")


FixedComponentLocal = Point | Surface | ExtremalSurface | FourManifold


def _check_power(p: int):
    if p not in _POWERS:
        raise ValueError(f"power must be one of {_POWERS}")


def point_contribution(weights: tuple[int, int, int], p: int) -> LocalTerm:
    """((sum w)^p / prod w) * lambda^(p-3)."""
    _check_power(p)
    pt = Point(tuple(weights))
    s = sum(pt.weights)
    prod = pt.weights[0] * pt.weights[1] * pt.weights[2]
    return LocalTerm(Fraction(s**p, prod), p - 3)


def interior_surface_contribution(s: Surface, p: int) -> LocalTerm:
    """Expand in Q[q]/(q^2) and take the q-coefficient.

    1/((lambda + b_pos q)(-lambda + b_neg q)) =
        -(1/lambda^2)(1 + (b_neg - b_pos) q / lambda),
    multiplied by (c1_deg q)^p.
    """
    _check_power(p)
    if p == 0:
        return LocalTerm(Fraction(s.b_pos - s.b_neg), -3)
    if p == 1:
        return LocalTerm(Fraction(-s.c1_deg), -2)
    return LocalTerm(Fraction(0), 0)


def extremal_surface_contribution(s: ExtremalSurface, p: int) -> LocalTerm:
    """Both normal factors share the sign of the extremum.

    min: ((b+2)q + 2 lambda)^p / (lambda^2 + b lambda q)
    max: ((b+2)q - 2 lambda)^p / (lambda^2 - b lambda q)
    """
    _check_power(p)
    b = s.b
    if p == 0:
        c = -b if s.sign == MIN else b
        return LocalTerm(Fraction(c), -3)
    if p == 1:
        return LocalTerm(Fraction(2 - b), -2)
    return LocalTerm(Fraction(24 + 4 * b), 0)


def fourmanifold_invariants(f: FourManifold) -> tuple[int, int, int]:
    c1 = f.lattice.c1
    return (pairing(c1, c1), pairing(c1, f.euler), pairing(f.euler, f.euler))


def fourmanifold_contribution_from_numbers(
    sign: str, c1_sq: int, c1_e: int, e_sq: int, p: int
) -> LocalTerm:
    """Contribution of an extremal 4-manifold from its three pairing numbers.

    Geometric-series expansion of 1/(+-lambda - ... ) truncated after the
    e^2 term (higher powers vanish on a 4-manifold):

        min, p=3: <3 c1^2 + 3 c1 e + e^2>     max, p=3: <3 c1^2 - 3 c1 e + e^2>
        min, p=1: -<c1 e>                     max, p=1: +<c1 e>
        min, p=0: +<e^2>                      max, p=0: -<e^2>
    """
    _check_power(p)
    sgn = 1 if sign == MIN else -1
    if p == 0:
        return LocalTerm(Fraction(sgn * e_sq), -3)
    if p == 1:
        return LocalTerm(Fraction(-sgn * c1_e), -2)
    return LocalTerm(Fraction(3 * c1_sq + sgn * 3 * c1_e + e_sq), 0)


def extremal_fourmanifold_contribution(f: FourManifold, p: int) -> LocalTerm:
    c1_sq, c1_e, e_sq = fourmanifold_invariants(f)
    return fourmanifold_contribution_from_numbers(f.sign, c1_sq, c1_e, e_sq, p)


def contribution(comp: FixedComponentLocal, p: int) -> LocalTerm:
    if isinstance(comp, Point):
        return point_contribution(comp.weights, p)
    if isinstance(comp, Surface):
        return interior_surface_contribution(comp, p)
    if isinstance(comp, ExtremalSurface):
        return extremal_surface_contribution(comp, p)
    if isinstance(comp, FourManifold):
        return extremal_fourmanifold_contribution(comp, p)
    raise TypeError(f"not a fixed component record: {comp!r}")


def integrate(components: list[FixedComponentLocal], p: int) -> Fraction:
    """Sum of all fixed-component residues for the p-th power.

    All terms share the lambda-power p-3 (asserted); the rational
    coefficient is returned.  For p < 3 a nonzero value is a pruning
    signal for an invalid candidate, not an exception.
    """
    _check_power(p)
    total = Fraction(0)
    for comp in components:
        term = contribution(comp, p)
        assert term.lambda_power == p - 3 or term.coeff == 0, "inhomogeneous localization term"
        total += term.coeff
    return total


# Closed forms for the first Chern number, implemented independently of the
# residue sum and cross-checked against it in the property suite.


def chern_cubed_closed_min2(b_min: int, m: int, lat0: SurfaceLattice, e_plus: CohClass) -> int:
    """24 + 4 b_min - m + <3 c1^2 - 3 c1 e + e^2> for a 2-dim minimum and
    4-dim maximum, with e the Euler class just above the interior surfaces."""
    c1 = lat0.c1
    return (
        24
        + 4 * b_min
        - m
        + 3 * pairing(c1, c1)
        - 3 * pairing(c1, e_plus)
        + pairing(e_plus, e_plus)
    )


def chern_cubed_closed_min4(lat0: SurfaceLattice, e: CohClass, z0: CohClass) -> int:
    """<2 e^2 + 6 c1^2 - 3 c1 [Z0] + 2 e [Z0] + [Z0]^2> when both extrema
    are 4-dimensional, with e the Euler class just above the minimum."""
    c1 = lat0.c1
    return (
        2 * pairing(e, e)
        + 6 * pairing(c1, c1)
        - 3 * pairing(c1, z0)
        + 2 * pairing(e, z0)
        + pairing(z0, z0)
    )
