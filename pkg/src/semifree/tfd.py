"""Topological fixed point data records and their derived invariants.

A record stores, per critical level, the reduced space, the classes of the
fixed components and the Euler classes of the adjacent circle bundles, in
the canonical presentation anchored at the minimum:

  * isolated minimum at level -3: the reduced space just above is the
    plane with Euler class -u;
  * 2-sphere minimum at level -2: the reduced space just above is a
    sphere bundle with Euler class k x - y (normal Chern number 2k or
    2k+1 by parity of the bundle);
  * 4-dimensional minimum at level -1: the Euler class just above is a
    free class of the reduced space's lattice.

Index-2 points at level -1 append exceptional classes at the end of the
basis; the classes of the level-0 surfaces and the exceptional classes
collapsing at level +1 are stored over the middle lattice.  Everything
derived here (wall segments, Betti numbers, localization residues, the
first Chern number) is recomputed exactly from these fields.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from . import localization as loc
from .lattice import (
    CohClass,
    Embedding,
    LatticeError,
    SurfaceLattice,
    HIRZEBRUCH,
    PROJ_PLANE,
    SPHERE_PRODUCT,
    adjunction_genus,
    exceptional_classes,
    orthogonal_complement,
    pairing,
    standardize,
)
from .wallcross import Crossing, SegmentChain, WallSegment, volume_polynomial

MIN_LEVEL = {0: -3, 2: -2, 4: -1}
MAX_LEVEL = {0: 3, 2: 2, 4: 1}


class InvalidTFD(ValueError):
    """A candidate record violating one of the structural constraints."""


@dataclass(frozen=True)
class TFD:
    """Canonical fixed point data for one manifold.

    lat0 is the lattice of the reduced spaces on the widest interior
    range of levels; e_seed the Euler class just above the minimum
    (for a 4-dimensional minimum, at its adjacent regular level),
    expressed over lat0 with zero coefficients on the classes born at
    level -1.
    """

    dim_min: int
    dim_max: int
    lat0: SurfaceLattice
    e_seed: CohClass
    m_minus: int
    parts: tuple[CohClass, ...]
    blowdowns: tuple[CohClass, ...]

    # --- structural anatomy -------------------------------------------------

    @property
    def min_level(self) -> int:
        return MIN_LEVEL[self.dim_min]

    @property
    def max_level(self) -> int:
        return MAX_LEVEL[self.dim_max]

    @property
    def m_plus(self) -> int:
        return len(self.blowdowns)

    @property
    def crit(self) -> tuple[int, ...]:
        levels = {self.min_level, self.max_level}
        if self.m_minus:
            levels.add(-1)
        if self.parts:
            levels.add(0)
        if self.blowdowns:
            levels.add(1)
        return tuple(sorted(levels))

    @property
    def case(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.dim_min, self.dim_max, self.crit)

    @property
    def k_seed(self) -> int:
        """The integer k in the anchored minimum Euler class k x - y."""
        assert self.dim_min == 2
        return self.e_seed.coeffs[0]

    @property
    def b_min(self) -> int | None:
        if self.dim_min != 2:
            return None
        k = self.k_seed
        return 2 * k if self.lat0.kind == SPHERE_PRODUCT else 2 * k + 1

    def total_surface_class(self) -> CohClass:
        t = self.lat0.zero()
        for p in self.parts:
            t = t + p
        return t

    def e0_minus(self) -> CohClass:
        """Euler class on the segment just below level 0."""
        e = self.e_seed
        if self.dim_min in (0, 2):
            n = self.lat0.rank
            for i in range(n - self.m_minus, n):
                e = e + self.lat0.basis_class(i)
        return e

    def e0_plus(self) -> CohClass:
        return self.e0_minus() + self.total_surface_class()

    def omega(self, t: int) -> CohClass:
        """[omega_t] over lat0 for t in the middle range of levels."""
        if t <= 0:
            return self.lat0.c1 - t * self.e0_minus()
        return self.lat0.c1 - t * self.e0_plus()

    def born_classes(self) -> list[CohClass]:
        n = self.lat0.rank
        return [self.lat0.basis_class(i) for i in range(n - self.m_minus, n)]

    # --- validation of the anchored shape ----------------------------------

    def validate_structure(self):
        if self.dim_min not in (0, 2, 4) or self.dim_max not in (0, 2, 4):
            raise InvalidTFD("extremal dimensions must be 0, 2 or 4")
        if self.dim_min > self.dim_max:
            raise InvalidTFD("canonical orientation has dim_min <= dim_max")
        if self.e_seed.lattice != self.lat0:
            raise InvalidTFD("seed Euler class on the wrong lattice")
        if self.dim_min == 4 and self.m_minus:
            raise InvalidTFD("a 4-dimensional minimum admits no points at level -1")
        if self.dim_max == 4 and self.blowdowns:
            raise InvalidTFD("a 4-dimensional maximum admits no collapses at level +1")
        if self.dim_min == 0:
            if self.lat0.kind != PROJ_PLANE or self.lat0.k != self.m_minus:
                raise InvalidTFD("plane blow-up lattice expected over an isolated minimum")
            want = (-1,) + (0,) * self.lat0.k
            if self.e_seed.coeffs != want:
                raise InvalidTFD("the Euler class above an isolated minimum is -u")
        elif self.dim_min == 2:
            if self.lat0.kind not in (SPHERE_PRODUCT, HIRZEBRUCH) or self.lat0.k != self.m_minus:
                raise InvalidTFD("sphere-bundle blow-up lattice expected over a 2-sphere minimum")
            k = self.e_seed.coeffs[0]
            want = (k, -1) + (0,) * self.lat0.k
            if self.e_seed.coeffs != want:
                raise InvalidTFD("the Euler class above a 2-sphere minimum is kx - y")
        for p in self.parts:
            if p.lattice != self.lat0:
                raise InvalidTFD("surface class on the wrong lattice")
            if adjunction_genus(p) is None:
                raise InvalidTFD("surface class fails the adjunction formula")
        for c in self.blowdowns:
            if c.lattice != self.lat0:
                raise InvalidTFD("collapse class on the wrong lattice")


# ---------------------------------------------------------------------------
# derived geometry (cached per record)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TopData:
    """Reduced-space data on the segment above the last interior level."""

    lattice: SurfaceLattice
    embedding: Embedding | None  # into lat0, present after a collapse
    euler: CohClass
    omega_at_start: CohClass
    start: int


@lru_cache(maxsize=None)
def top_data(t: TFD) -> TopData:
    start = 1 if t.blowdowns else 0
    e1 = t.e0_plus()
    omega_start = t.omega(start)
    if not t.blowdowns:
        return TopData(t.lat0, None, e1, omega_start, start)
    comp = orthogonal_complement(t.lat0, list(t.blowdowns))
    c1_sub = t.lat0.c1
    up = e1
    for c in t.blowdowns:
        c1_sub = c1_sub + c
        up = up + c
    emb = standardize(t.lat0, comp, c1_sub)
    return TopData(emb.sub, emb, emb.pull(up), emb.pull(omega_start), start)


@lru_cache(maxsize=None)
def min_side(t: TFD) -> tuple[SurfaceLattice, CohClass, CohClass] | None:
    """(lattice, euler, omega at level -1) below the blow-up wall, if any."""
    if t.dim_min == 4 or t.m_minus == 0:
        return None
    lat_min = SurfaceLattice(t.lat0.kind, 0)
    base = lat_min.base_rank
    if any(c != 0 for c in t.e_seed.coeffs[base:]):
        raise InvalidTFD("seed Euler class touches classes born at level -1")
    e_min = CohClass(lat_min, t.e_seed.coeffs[:base])
    om = t.omega(-1)
    if any(c != 0 for c in om.coeffs[base:]):
        raise InvalidTFD("a class born at level -1 has nonzero area at its wall")
    om_min = CohClass(lat_min, om.coeffs[:base])
    return lat_min, e_min, om_min


@lru_cache(maxsize=None)
def b_max_of(t: TFD) -> int | None:
    if t.dim_max != 2:
        return None
    top = top_data(t)
    return -pairing(top.euler, top.euler)


@lru_cache(maxsize=None)
def fiber_at_max(t: TFD) -> CohClass | None:
    """The collapsing fiber class at a 2-sphere maximum, if it exists."""
    if t.dim_max != 2:
        return None
    top = top_data(t)
    lat, c1 = top.lattice, top.lattice.c1
    for a in range(-6, 7):
        for b in range(-6, 7):
            f = a * lat.basis_class(0) + b * lat.basis_class(1)
            if f.square == 0 and pairing(c1, f) == 2 and pairing(top.euler, f) == 1:
                return f
    return None


@lru_cache(maxsize=None)
def segment_chain(t: TFD) -> SegmentChain:
    chain = SegmentChain()
    crit = t.crit

    def F(x):
        return Fraction(x)

    # interior walls of the middle lattice
    mid_lo = -1 if (t.m_minus and t.dim_min != 4) else t.min_level
    mid_hi = 1 if t.blowdowns else t.max_level
    below = min_side(t)
    if below is not None:
        lat_min, e_min, om_min = below
        om_lo = om_min - (t.min_level - (-1)) * e_min  # omega at min_level
        chain.segments.append(WallSegment(F(t.min_level), F(-1), lat_min, om_lo, e_min))
        chain.crossings.append(Crossing(-1, new_exceptional=t.m_minus))
        chain.embeddings.append(None)
    if t.parts:
        om_lo = t.omega(mid_lo)
        chain.segments.append(
            WallSegment(F(mid_lo), F(0), t.lat0, om_lo, t.e0_minus())
        )
        chain.crossings.append(Crossing(0, surface_classes=t.parts))
        chain.embeddings.append(None)
        chain.segments.append(WallSegment(F(0), F(mid_hi), t.lat0, t.lat0.c1, t.e0_plus()))
    else:
        om_lo = t.omega(mid_lo)
        if mid_hi > mid_lo:
            chain.segments.append(
                WallSegment(F(mid_lo), F(mid_hi), t.lat0, om_lo, t.e0_minus())
            )
    if t.blowdowns:
        top = top_data(t)
        chain.crossings.append(Crossing(1, blowdown_classes=t.blowdowns))
        chain.embeddings.append(top.embedding)
        chain.segments.append(
            WallSegment(F(1), F(t.max_level), top.lattice, top.omega_at_start, top.euler)
        )
    return chain


# ---------------------------------------------------------------------------
# fixed components, localization, Betti numbers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    level: int
    dim: int
    genus: int | None
    cls: CohClass | None
    volume: Fraction
    count: int = 1
    normal: tuple[int, ...] = ()


@lru_cache(maxsize=None)
def components(t: TFD) -> tuple[Component, ...]:
    out = []
    e_minus = t.e0_minus()
    e_plus = t.e0_plus()
    # minimum
    if t.dim_min == 0:
        out.append(Component(-3, 0, None, None, Fraction(0)))
    elif t.dim_min == 2:
        b = t.b_min
        out.append(Component(-2, 2, 0, None, Fraction(2 + b), normal=(b,)))
    else:
        vol = segment_chain(t).segments[0].dh(Fraction(-1))
        out.append(Component(-1, 4, None, None, vol, normal=tuple(t.e_seed.coeffs)))
    if t.m_minus:
        out.append(Component(-1, 0, None, None, Fraction(0), count=t.m_minus))
    for p in t.parts:
        b_neg = -pairing(e_minus, p)
        b_pos = pairing(e_plus, p)
        out.append(
            Component(
                0,
                2,
                adjunction_genus(p),
                p,
                Fraction(pairing(t.lat0.c1, p)),
                normal=(b_neg, b_pos),
            )
        )
    if t.blowdowns:
        out.append(Component(1, 0, None, None, Fraction(0), count=t.m_plus))
    if t.dim_max == 0:
        out.append(Component(3, 0, None, None, Fraction(0)))
    elif t.dim_max == 2:
        b = b_max_of(t)
        out.append(Component(2, 2, 0, None, Fraction(2 + b), normal=(b,)))
    else:
        seg = segment_chain(t).segments[-1]
        vol = seg.dh(Fraction(1))
        out.append(Component(1, 4, None, None, vol, normal=tuple(e_plus.coeffs)))
    return tuple(out)


@lru_cache(maxsize=None)
def local_records(t: TFD) -> tuple[loc.FixedComponentLocal, ...]:
    recs: list[loc.FixedComponentLocal] = []
    if t.dim_min == 0:
        recs.append(loc.Point((1, 1, 1)))
    elif t.dim_min == 2:
        recs.append(loc.ExtremalSurface(loc.MIN, t.b_min, t.b_min + 2))
    else:
        recs.append(loc.FourManifold(loc.MIN, t.lat0, t.e_seed))
    recs.extend([loc.Point((-1, 1, 1))] * t.m_minus)
    e_minus, e_plus = t.e0_minus(), t.e0_plus()
    for p in t.parts:
        recs.append(
            loc.Surface(-pairing(e_minus, p), pairing(e_plus, p), pairing(t.lat0.c1, p))
        )
    recs.extend([loc.Point((-1, -1, 1))] * t.m_plus)
    if t.dim_max == 0:
        recs.append(loc.Point((-1, -1, -1)))
    elif t.dim_max == 2:
        b = b_max_of(t)
        recs.append(loc.ExtremalSurface(loc.MAX, b, b + 2))
    else:
        recs.append(loc.FourManifold(loc.MAX, t.lat0, e_plus))
    return tuple(recs)


@lru_cache(maxsize=None)
def poincare_polynomial(t: TFD) -> tuple[int, ...]:
    """Coefficients of the Morse-theoretic Poincare polynomial, degree 0..6."""
    coeffs = [0] * 7

    def add(shift, poly):
        for d, c in poly:
            coeffs[shift + d] += c

    surface = lambda g: ((0, 1), (1, 2 * g), (2, 1))
    fourfold_min = ((0, 1), (2, t.lat0.rank), (4, 1))
    if t.dim_min == 0:
        add(0, ((0, 1),))
    elif t.dim_min == 2:
        add(0, surface(0))
    else:
        add(0, fourfold_min)
    add(2, ((0, t.m_minus),))
    for p in t.parts:
        add(2, surface(adjunction_genus(p)))
    add(4, ((0, t.m_plus),))
    if t.dim_max == 0:
        add(6, ((0, 1),))
    elif t.dim_max == 2:
        add(4, surface(0))
    else:
        top_rank = top_data(t).lattice.rank
        add(2, ((0, 1), (2, top_rank), (4, 1)))
    return tuple(coeffs)


def betti_two(t: TFD) -> int:
    return poincare_polynomial(t)[2]


def betti_odd(t: TFD) -> int:
    p = poincare_polynomial(t)
    return p[1] + p[3] + p[5]


@lru_cache(maxsize=None)
def chern_cubed(t: TFD) -> int:
    val = loc.integrate(list(local_records(t)), 3)
    assert val.denominator == 1
    return int(val)


# ---------------------------------------------------------------------------
# the filter battery
# ---------------------------------------------------------------------------


def _segment_exceptionals(lat: SurfaceLattice) -> list[CohClass]:
    try:
        return exceptional_classes(lat)
    except LatticeError:
        return []


def check(t: TFD) -> bool:
    """Run every constraint; True iff the record is a valid fixed point data."""
    try:
        check_or_raise(t)
        return True
    except InvalidTFD:
        return False


def check_or_raise(t: TFD):
    t.validate_structure()
    if t.dim_min == 2 and t.b_min < -1:
        raise InvalidTFD("minimum sphere has non-positive area")
    for p in t.parts:
        if pairing(t.lat0.c1, p) < 1:
            raise InvalidTFD("interior surface with non-positive area")
    for a, b in itertools.combinations(range(len(t.parts)), 2):
        if pairing(t.parts[a], t.parts[b]) != 0:
            raise InvalidTFD("interior surfaces are not disjoint")
    try:
        chain = segment_chain(t)
        top = top_data(t)
    except (LatticeError, InvalidTFD) as err:
        raise InvalidTFD(str(err))

    volume_polynomial_ok(chain)
    _check_dh(t, chain)
    _check_areas(t, chain)
    _check_extremes(t, top)
    _check_betti(t)
    recs = list(local_records(t))
    if loc.integrate(recs, 0) != 0:
        raise InvalidTFD("localization of 1 does not vanish")
    if loc.integrate(recs, 1) != 0:
        raise InvalidTFD("localization of c1 does not vanish")


def volume_polynomial_ok(chain: SegmentChain):
    try:
        volume_polynomial(chain)
    except ValueError as err:
        raise InvalidTFD(str(err))


def _check_dh(t: TFD, chain: SegmentChain):
    for seg in chain.segments:
        if not seg.dh_positive_interior():
            raise InvalidTFD(f"DH not positive on ({seg.t_lo},{seg.t_hi})")
    first, last = chain.segments[0], chain.segments[-1]
    lo, hi = first.dh(first.t_lo), last.dh(last.t_hi)
    if t.dim_min in (0, 2) and lo != 0:
        raise InvalidTFD("reduced volume does not collapse at the minimum")
    if t.dim_min == 4 and lo < 1:
        raise InvalidTFD("4-dimensional minimum has non-positive volume")
    if t.dim_max in (0, 2) and hi != 0:
        raise InvalidTFD("reduced volume does not collapse at the maximum")
    if t.dim_max == 4 and hi < 1:
        raise InvalidTFD("4-dimensional maximum has non-positive volume")


def _check_areas(t: TFD, chain: SegmentChain):
    """Exceptional-class positivity, with collapses exactly as scheduled."""
    blowdown_set = {c.coeffs for c in t.blowdowns}
    born_set = {c.coeffs for c in t.born_classes()}
    for seg in chain.segments:
        for c in _segment_exceptionals(seg.lattice):
            lo, hi = seg.area(c, seg.t_lo), seg.area(c, seg.t_hi)
            if lo < 0 or hi < 0:
                raise InvalidTFD(f"exceptional class {c} with negative area")
            if lo == 0:
                from_born = seg.lattice == t.lat0 and c.coeffs in born_set and seg.t_lo == -1
                from_min = seg.t_lo == t.min_level
                if not (from_born or from_min):
                    raise InvalidTFD(f"class {c} collapses at an unscheduled wall")
            if hi == 0:
                is_blowdown = (
                    seg.lattice == t.lat0 and seg.t_hi == 1 and c.coeffs in blowdown_set
                )
                at_max_collapse = seg.t_hi == t.max_level and t.dim_max in (0, 2)
                if not (is_blowdown or at_max_collapse):
                    raise InvalidTFD(f"class {c} collapses at an unscheduled wall")
                if seg.t_hi == 1 and t.dim_max == 4:
                    raise InvalidTFD(f"class {c} collapses at the 4-dimensional maximum")
        if seg.lattice == t.lat0 and seg.t_hi == 1 and t.blowdowns:
            vanishing = {
                c.coeffs for c in _segment_exceptionals(seg.lattice) if seg.area(c, seg.t_hi) == 0
            }
            if vanishing != blowdown_set:
                raise InvalidTFD("collapsing classes differ from the scheduled ones")
            for a, b in itertools.combinations(t.blowdowns, 2):
                if pairing(a, b) != 0:
                    raise InvalidTFD("simultaneous collapses must be disjoint")


def _check_extremes(t: TFD, top: TopData):
    if t.dim_max == 0:
        if top.lattice.rank != 1:
            raise InvalidTFD("reduced space at an isolated maximum must have rank 1")
        if top.euler.coeffs != (1,):
            raise InvalidTFD("the Euler class below an isolated maximum is +u")
        om1 = top.omega_at_start - (1 - top.start) * top.euler
        if om1.coeffs != (2,):
            raise InvalidTFD("reduced class below an isolated maximum is off")
    elif t.dim_max == 2:
        if top.lattice.rank != 2:
            raise InvalidTFD("reduced space at a 2-sphere maximum must have rank 2")
        b = b_max_of(t)
        if b < -1:
            raise InvalidTFD("maximum sphere has non-positive area")
        if (b % 2 == 0) != top.lattice.is_even:
            raise InvalidTFD("normal Chern number parity disagrees with the bundle")
        if fiber_at_max(t) is None:
            raise InvalidTFD("no fiber class collapsing at the maximum")
    if t.dim_min == 2:
        lat_head = t.lat0 if t.m_minus == 0 else min_side(t)[0]
        # the fiber x collapses at the minimum by the anchored seed; assert
        x = lat_head.basis_class(0)
        if pairing(lat_head.c1, x) != 2:
            raise InvalidTFD("fiber class of the minimum bundle is off")


def _check_betti(t: TFD):
    p = poincare_polynomial(t)
    if any(p[i] != p[6 - i] for i in range(7)):
        raise InvalidTFD("Betti numbers are not palindromic")


# ---------------------------------------------------------------------------
# canonical presentation, orientation flip, dedup keys
# ---------------------------------------------------------------------------


def _apply_matrix(t: TFD, rows: list[tuple[int, ...]], lat: SurfaceLattice, cls: CohClass) -> CohClass:
    out = [0] * lat.rank
    for coeff, row in zip(cls.coeffs, rows):
        for j, rj in enumerate(row):
            out[j] += coeff * rj
    return CohClass(lat, tuple(out))


def _permute_class(c: CohClass, perm: tuple[int, ...]) -> CohClass:
    base = c.lattice.base_rank
    head = list(c.coeffs[:base])
    tail = [c.coeffs[base + p] for p in perm]
    return CohClass(c.lattice, tuple(head + tail))


def _swap_xy(c: CohClass) -> CohClass:
    assert c.lattice.kind == SPHERE_PRODUCT
    coeffs = (c.coeffs[1], c.coeffs[0]) + c.coeffs[2:]
    return CohClass(c.lattice, coeffs)


def _presentations(t: TFD):
    """All presentations equivalent under the anchored symmetries."""
    k = t.lat0.k
    base = t.lat0.base_rank
    swaps = [False]
    if t.dim_min == 4 and t.lat0.kind == SPHERE_PRODUCT:
        swaps = [False, True]
    cols = {
        tuple(c.coeffs[base + i] for c in (t.e_seed, *t.parts, *t.blowdowns))
        for i in range(k)
    }
    if len(cols) <= 1:
        perms = [tuple(range(k))]  # fully symmetric in the born classes
    else:
        perms = itertools.permutations(range(k))
    for perm in perms:
        for sw in swaps:
            def conv(c, perm=perm, sw=sw):
                c = _permute_class(c, perm)
                return _swap_xy(c) if sw else c

            yield replace(
                t,
                e_seed=conv(t.e_seed),
                parts=tuple(conv(p) for p in t.parts),
                blowdowns=tuple(conv(c) for c in t.blowdowns),
            )


def _presentation_key(t: TFD):
    return (
        tuple(sorted(c.coeffs for c in t.blowdowns)),
        tuple(sorted(p.coeffs for p in t.parts)),
        t.e_seed.coeffs,
    )


def canonical_presentation(t: TFD) -> TFD:
    best = min(_presentations(t), key=_presentation_key)
    return replace(
        best,
        parts=tuple(sorted(best.parts, key=lambda p: tuple(-x for x in p.coeffs))),
        blowdowns=tuple(sorted(best.blowdowns, key=lambda c: c.coeffs)),
    )


def flip(t: TFD) -> TFD:
    """The same manifold with the circle action reversed, re-anchored.

    Only meaningful (and only used) when dim_min == dim_max, where the
    reversed record belongs to the same case.
    """
    if t.dim_min != t.dim_max:
        raise InvalidTFD("flip leaves the canonical case when the extremes differ")
    if t.dim_min == 4:
        return replace(t, e_seed=-t.e0_plus())
    top = top_data(t)
    new_k = t.m_plus
    push = top.embedding.push if top.embedding else (lambda c: c)
    if t.dim_min == 0:
        new_lat = SurfaceLattice(PROJ_PLANE, new_k)
        e_seed = CohClass(new_lat, (-1,) + (0,) * new_k)
        new_basis = [push(top.lattice.basis_class(0))] + list(t.blowdowns)
    else:
        b_new = b_max_of(t)
        ehat = -top.euler  # Euler class above the new minimum, on the top lattice
        f = fiber_at_max(t)
        # anchored form k'x' - y' = ehat with x' the new fiber; the new
        # bottom normal Chern number equals the old top one
        k_new = b_new // 2 if top.lattice.is_even else (b_new - 1) // 2
        x_new, y_new = f, k_new * f - ehat
        kind = SPHERE_PRODUCT if top.lattice.is_even else HIRZEBRUCH
        new_lat = SurfaceLattice(kind, new_k)
        e_seed = CohClass(new_lat, (k_new, -1) + (0,) * new_k)
        new_basis = [push(x_new), push(y_new)] + list(t.blowdowns)
    # coordinates of an old lat0 class in the new basis
    gram = [[pairing(a, b) for b in new_basis] for a in new_basis]
    from .lattice import _solve_integer

    def reexpress(c: CohClass) -> CohClass:
        rhs = [pairing(a, c) for a in new_basis]
        sol = _solve_integer(gram, rhs)
        if sol is None:
            raise InvalidTFD("orientation flip failed to re-anchor")
        got = new_lat.zero()
        for s, i in zip(sol, range(new_lat.rank)):
            got = got + s * new_lat.basis_class(i)
        back = t.lat0.zero()
        for s, v in zip(sol, new_basis):
            back = back + s * v
        if back != c:
            raise InvalidTFD("orientation flip failed to re-anchor")
        return got

    for i in range(new_lat.rank):
        for j in range(new_lat.rank):
            if gram[i][j] != new_lat.gram[i][j]:
                raise InvalidTFD("flipped basis is not of the anchored shape")
    return TFD(
        dim_min=t.dim_min,
        dim_max=t.dim_max,
        lat0=new_lat,
        e_seed=e_seed,
        m_minus=t.m_plus,
        parts=tuple(reexpress(p) for p in t.parts),
        blowdowns=tuple(reexpress(e) for e in t.born_classes()),
    )


def reorient(t: TFD) -> TFD:
    """Canonical representative of {t, flip(t)}.

    For a 2-sphere pair the record with the smaller extremal normal Chern
    number at the bottom wins; for a 4-dimensional pair the larger reduced
    volume sits at the bottom; ties fall back to the presentation key.
    """
    if t.dim_min != t.dim_max:
        return canonical_presentation(t)
    f = flip(t)
    a, b = canonical_presentation(t), canonical_presentation(f)
    if t.dim_min == 2:
        key = lambda u: (u.b_min,)
    elif t.dim_min == 4:
        key = lambda u: (-segment_chain(u).segments[0].dh(Fraction(-1)),)
    else:
        key = lambda u: ()
    ka, kb = key(a), key(b)
    if ka != kb:
        return a if ka < kb else b
    return min(a, b, key=_presentation_key)


def content_key(t: TFD) -> str:
    c = canonical_presentation(t)
    payload = {
        "dim_min": c.dim_min,
        "dim_max": c.dim_max,
        "crit": list(c.crit),
        "lattice": c.lat0.key(),
        "e_seed": list(c.e_seed.coeffs),
        "m_minus": c.m_minus,
        "parts": [list(p.coeffs) for p in c.parts],
        "blowdowns": [list(b.coeffs) for b in c.blowdowns],
    }
    return json.dumps(payload, separators=(",", ":"), sort_keys=True)


def from_content_key(key: str) -> TFD:
    obj = json.loads(key)
    kind, _, k = obj["lattice"].partition("/")
    lat = SurfaceLattice(kind, int(k))
    return TFD(
        dim_min=obj["dim_min"],
        dim_max=obj["dim_max"],
        lat0=lat,
        e_seed=CohClass(lat, tuple(obj["e_seed"])),
        m_minus=obj["m_minus"],
        parts=tuple(CohClass(lat, tuple(p)) for p in obj["parts"]),
        blowdowns=tuple(CohClass(lat, tuple(b)) for b in obj["blowdowns"]),
    )
