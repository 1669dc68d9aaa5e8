"""Evolution of the reduced symplectic class across critical levels.

On each interval of regular values the reduced class moves linearly with
slope minus the Euler class of the level circle bundle; at a critical
level the Euler class jumps by the Poincare duals of the fixed components
there, new exceptional classes appear at index-2 points, and co-index-2
collapses contract exceptional classes whose area reaches zero exactly at
the wall.  Everything is exact: levels are integers, evaluation times are
rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import (
    CohClass,
    Embedding,
    LatticeError,
    SurfaceLattice,
    orthogonal_complement,
    pairing,
    standardize,
)


@dataclass(frozen=True)
class WallSegment:
    """[omega_t] = omega_at_lo - (t - t_lo) * euler on [t_lo, t_hi]."""

    t_lo: Fraction
    t_hi: Fraction
    lattice: SurfaceLattice
    omega_at_lo: CohClass
    euler: CohClass

    def __post_init__(self):
        if self.omega_at_lo.lattice != self.lattice or self.euler.lattice != self.lattice:
            raise LatticeError("segment classes must live on the segment lattice")
        if not self.t_lo < self.t_hi:
            raise ValueError("empty wall segment")

    def omega_at_hi(self) -> CohClass:
        span = self.t_hi - self.t_lo
        if span.denominator != 1:
            raise ValueError("integer wall spacing expected")
        return self.omega_at_lo - int(span) * self.euler

    def area(self, c: CohClass, t: Fraction) -> Fraction:
        """Symplectic area of the class at time t (affine in t)."""
        if not self.t_lo <= t <= self.t_hi:
            raise ValueError("t outside the segment")
        return Fraction(pairing(self.omega_at_lo, c)) - (t - self.t_lo) * pairing(self.euler, c)

    def dh(self, t: Fraction) -> Fraction:
        """Duistermaat-Heckman value <[omega_t]^2> at time t."""
        if not self.t_lo <= t <= self.t_hi:
            raise ValueError("t outside the segment")
        s = t - self.t_lo
        a = self.omega_at_lo
        return (
            Fraction(pairing(a, a))
            - 2 * s * pairing(a, self.euler)
            + s * s * pairing(self.euler, self.euler)
        )

    def dh_positive_interior(self) -> bool:
        """Certify <[omega_t]^2> > 0 on the open interval.

        The value is a quadratic in t; positivity on the open interval is
        certified from the endpoint values and, when the quadratic opens
        upward is false (negative leading term), the interior vertex.
        """
        lo, hi = self.dh(self.t_lo), self.dh(self.t_hi)
        if lo < 0 or hi < 0:
            return False
        if lo == 0 and hi == 0 and self.t_hi - self.t_lo > 0:
            # quadratic vanishing at both ends is nonpositive somewhere inside
            mid = (self.t_lo + self.t_hi) / 2
            return self.dh(mid) > 0
        a = pairing(self.euler, self.euler)
        b = -pairing(self.omega_at_lo, self.euler)
        if a < 0:
            return True  # concave: min at endpoints, both checked >= 0 above
        if a > 0:
            vertex = Fraction(-b, a)
            if 0 < vertex < self.t_hi - self.t_lo:
                return self.dh(self.t_lo + vertex) > 0
            return lo > 0 or hi > 0
        return lo > 0 or hi > 0


def class_at(seg: WallSegment, t: Fraction) -> tuple[Fraction, ...]:
    """Rational coefficient vector of [omega_t] in the segment basis."""
    if not seg.t_lo <= t <= seg.t_hi:
        raise ValueError("t outside the segment")
    s = t - seg.t_lo
    return tuple(Fraction(a) - s * e for a, e in zip(seg.omega_at_lo.coeffs, seg.euler.coeffs))


@dataclass(frozen=True)
class Crossing:
    """Fixed-point data at one critical level.

    new_exceptional: number of index-2 points (blow-ups; the new classes
    are appended at the end of the basis).
    surface_classes: Poincare duals of 2-dimensional fixed components.
    blowdown_classes: pairwise-orthogonal exceptional classes collapsing
    exactly at this level (co-index-2 points).
    """

    level: int
    new_exceptional: int = 0
    surface_classes: tuple[CohClass, ...] = ()
    blowdown_classes: tuple[CohClass, ...] = ()


def extend_lattice(lat: SurfaceLattice, n_new: int) -> SurfaceLattice:
    return SurfaceLattice(lat.kind, lat.k + n_new)


def include(c: CohClass, big: SurfaceLattice) -> CohClass:
    """Inclusion along a blow-up: pad with zeros on the new classes."""
    if big.kind != c.lattice.kind or big.k < c.lattice.k:
        raise LatticeError("not a blow-up extension")
    return CohClass(big, c.coeffs + (0,) * (big.k - c.lattice.k))


def cross(euler_minus: CohClass, crossing: Crossing) -> tuple[CohClass, Embedding | None]:
    """Euler class just above the wall from the one just below.

    Blow-ups enlarge the lattice (returns the class on the extended
    lattice); surfaces add their duals; blow-downs contract onto the
    orthogonal complement of the collapsing classes and return the
    embedding of the recognized standard lattice so that callers can push
    classes back and forth.  Only one kind of jump happens per wall here,
    matching the simple-level structure of the classification.
    """
    kinds = sum(
        1
        for flag in (
            crossing.new_exceptional > 0,
            bool(crossing.surface_classes),
            bool(crossing.blowdown_classes),
        )
        if flag
    )
    if kinds > 1:
        raise ValueError("a simple critical level has one kind of fixed component")
    if crossing.new_exceptional:
        big = extend_lattice(euler_minus.lattice, crossing.new_exceptional)
        e = include(euler_minus, big)
        for i in range(crossing.new_exceptional):
            e = e + big.basis_class(big.rank - crossing.new_exceptional + i)
        return e, None
    if crossing.surface_classes:
        e = euler_minus
        for z in crossing.surface_classes:
            e = e + z
        return e, None
    if crossing.blowdown_classes:
        lat = euler_minus.lattice
        cls = list(crossing.blowdown_classes)
        comp = orthogonal_complement(lat, cls)
        up = euler_minus
        for c in cls:
            up = up + c
        c1_sub = lat.c1
        for c in cls:
            c1_sub = c1_sub + c
        emb = standardize(lat, comp, c1_sub)
        return emb.pull(up), emb
    return euler_minus, None


def vanishing_area_time(seg: WallSegment, c: CohClass) -> Fraction | None:
    """Smallest t >= t_lo at which the area of c hits zero, if the area
    is affine-decreasing to zero inside the closed segment."""
    a0 = seg.area(c, seg.t_lo)
    slope = -pairing(seg.euler, c)
    if slope >= 0:
        return None if a0 != 0 else seg.t_lo
    t = seg.t_lo + Fraction(a0, -slope)
    return t if t <= seg.t_hi else None


@dataclass
class SegmentChain:
    """Consecutive wall segments with the lattice bookkeeping at each wall."""

    segments: list[WallSegment] = field(default_factory=list)
    crossings: list[Crossing] = field(default_factory=list)
    embeddings: list[Embedding | None] = field(default_factory=list)


def volume_polynomial(chain: SegmentChain) -> list[tuple[Fraction, WallSegment]]:
    """Per-segment DH data plus the continuity check at every wall.

    Returns [(dh at t_lo, segment), ...]; raises ValueError on a
    discontinuity, which rejects the candidate.  Blow-ups add classes of
    zero area at the wall, blow-downs remove classes of zero area, so in
    both cases the comparison happens after the appropriate pull-back.
    """
    out = []
    segs = chain.segments
    for i, seg in enumerate(segs):
        out.append((seg.dh(seg.t_lo), seg))
        if i + 1 < len(segs):
            nxt = segs[i + 1]
            left = seg.dh(seg.t_hi)
            right = nxt.dh(nxt.t_lo)
            if left != right:
                raise ValueError(
                    f"DH discontinuity at level {seg.t_hi}: {left} vs {right}"
                )
    return out
