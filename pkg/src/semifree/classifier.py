"""Per-case enumeration of all topological fixed point data.

A case fixes the dimensions of the extremal fixed components and the set
of critical levels; the enumerator then builds every candidate record
from the anchored seeds, one free coefficient vector at a time, and keeps
exactly those candidates surviving the full constraint battery:

  (a) the anchored wall structure,
  (b) positivity and continuity of the reduced volume,
  (c) positivity of exceptional classes away from scheduled collapses,
      with as many simultaneous collapses as index-4 points,
  (d) vanishing of the degree-0 and degree-2 localization residues,
  (e) realizability of every level-0 surface class as a disjoint union
      of embedded components,
  (f) positive area of the extremal components,
  (g) canonical orientation and presentation.

The searches run over explicit coefficient boxes; the boxes are asserted
to be non-binding on every emitted record.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .lattice import (
    CohClass,
    HIRZEBRUCH,
    PROJ_PLANE,
    SPHERE_PRODUCT,
    SurfaceLattice,
    adjunction_genus,
    exceptional_classes,
    pairing,
)
from .splitter import Splitting, component_pool, enumerate_splittings
from .tfd import (
    TFD,
    InvalidTFD,
    check,
    canonical_presentation,
    chern_cubed,
    content_key,
    reorient,
)

BOX = 6  # coefficient box for all free class coefficients
MAX_TOTAL_AREA = 12  # largest level-0 area compatible with the volume filters


@dataclass(frozen=True)
class CaseSpec:
    dim_min: int
    dim_max: int
    crit: frozenset[int]

    def interior(self) -> frozenset[int]:
        from .tfd import MAX_LEVEL, MIN_LEVEL

        return self.crit - {MIN_LEVEL[self.dim_min], MAX_LEVEL[self.dim_max]}


def validate_case_spec(spec: CaseSpec):
    from .tfd import MAX_LEVEL, MIN_LEVEL

    if spec.dim_min not in (0, 2, 4) or spec.dim_max not in (0, 2, 4):
        raise ValueError("extremal dimensions must be 0, 2 or 4")
    if spec.dim_min > spec.dim_max:
        raise ValueError("canonical cases have dim_min <= dim_max")
    lo, hi = MIN_LEVEL[spec.dim_min], MAX_LEVEL[spec.dim_max]
    if lo not in spec.crit or hi not in spec.crit:
        raise ValueError("critical set must contain the extremal levels")
    allowed = {lo, hi} | {v for v in (-1, 0, 1) if lo < v < hi}
    if not spec.crit <= allowed:
        raise ValueError(f"critical set {sorted(spec.crit)} not admissible for the case")


def case_specs_6dim() -> list[CaseSpec]:
    """Every admissible case, grouped in table order."""
    specs = []
    for interiors in ([], [0], [-1, 1], [-1, 0, 1]):
        specs.append(CaseSpec(0, 0, frozenset({-3, 3} | set(interiors))))
    for interiors in ([-1], [-1, 1], [-1, 0], [-1, 0, 1]):
        specs.append(CaseSpec(0, 2, frozenset({-3, 2} | set(interiors))))
    for interiors in ([], [-1], [0], [-1, 0]):
        specs.append(CaseSpec(0, 4, frozenset({-3, 1} | set(interiors))))
    for interiors in ([], [0], [-1, 1], [-1, 0, 1]):
        specs.append(CaseSpec(2, 2, frozenset({-2, 2} | set(interiors))))
    for interiors in ([], [-1], [0], [-1, 0]):
        specs.append(CaseSpec(2, 4, frozenset({-2, 1} | set(interiors))))
    for interiors in ([], [0]):
        specs.append(CaseSpec(4, 4, frozenset({-1, 1} | set(interiors))))
    return specs


# ---------------------------------------------------------------------------
# component pools: classes usable as a single level-0 component
# ---------------------------------------------------------------------------


def _part_multisets(
    lat: SurfaceLattice, areas: list[int], max_head: int | None = None
) -> list[tuple[CohClass, ...]]:
    """Pairwise-orthogonal multisets from the pool with total area in `areas`.

    max_head bounds the total leading coefficient, for the cases where
    the wall areas above level 0 force a small one.
    """
    max_area = max(areas)
    head_cap = 10**6 if max_head is None else max_head
    pool = component_pool(lat, max_area, head_cap)
    c1 = lat.c1
    pool_areas = [pairing(c1, c) for c in pool]
    targets = set(areas)
    out = []

    def rec(start, chosen, area, head):
        if area in targets and chosen:
            out.append(tuple(chosen))
        for i in range(start, len(pool)):
            a = pool_areas[i]
            if area + a > max_area:
                continue
            c = pool[i]
            if head + c.coeffs[0] > head_cap:
                continue
            if any(pairing(c, prev) != 0 for prev in chosen):
                continue
            rec(i, chosen + [c], area + a, head + c.coeffs[0])

    rec(0, [], 0, 0)
    return out


# ---------------------------------------------------------------------------
# candidate generation per family
# ---------------------------------------------------------------------------


_EXC_SORTED_CACHE: dict = {}


def _exceptional_by_support(lat: SurfaceLattice) -> list[CohClass]:
    """Exceptional classes, cheapest killers (small support) first."""
    out = _EXC_SORTED_CACHE.get(lat)
    if out is None:
        out = sorted(
            exceptional_classes(lat), key=lambda c: sum(1 for x in c.coeffs if x)
        )
        _EXC_SORTED_CACHE[lat] = out
    return out


def _finish_candidates(spec: CaseSpec, lat0, e_seed, m_minus, parts_options):
    """Attach the collapse data forced by the areas at level +1.

    The areas at the first wall above the surfaces decide everything: a
    negative one kills the candidate, the zero ones are the scheduled
    collapses.  The classes of small support are tested first so hopeless
    candidates die after a handful of pairings.
    """
    has_bd = 1 in spec.crit and spec.dim_max != 4
    exc = _exceptional_by_support(lat0)
    n = lat0.rank
    e_born = e_seed
    for i in range(n - m_minus, n):
        e_born = e_born + lat0.basis_class(i)
    for parts in parts_options:
        e0_plus = e_born
        for p in parts:
            e0_plus = e0_plus + p
        omega1 = lat0.c1 - e0_plus
        vanishing = []
        dead = False
        for c in exc:
            a = pairing(omega1, c)
            if a < 0 or (a == 0 and not has_bd):
                dead = True
                break
            if a == 0:
                vanishing.append(c)
        if dead:
            continue
        if has_bd and not vanishing:
            continue
        if any(pairing(a, b) != 0 for a, b in itertools.combinations(vanishing, 2)):
            continue
        vanishing.sort(key=lambda c: c.coeffs)
        yield TFD(
            dim_min=spec.dim_min,
            dim_max=spec.dim_max,
            lat0=lat0,
            e_seed=e_seed,
            m_minus=m_minus,
            parts=parts,
            blowdowns=tuple(vanishing) if has_bd else (),
        )


def _areas_for_spec(spec: CaseSpec, m_minus: int, b_min: int | None) -> list[int]:
    """Admissible total level-0 areas, from the degree-2 localization
    identity where it pins the value and from the global cap otherwise."""
    if 0 not in spec.crit:
        return [0]
    if spec.dim_min == 0 and spec.dim_max == 0:
        v = 6 - 2 * m_minus
        return [v] if v >= 1 else []
    if spec.dim_min == 0 and spec.dim_max == 2:
        hi = 7 - 2 * m_minus  # total + b_max = 6 - 2 m, b_max >= -1
        return list(range(1, hi + 1))
    if spec.dim_min == 2 and spec.dim_max == 2:
        hi = 6 - b_min - 2 * m_minus + 1  # b_max >= -1
        return list(range(1, hi + 1))
    return list(range(1, MAX_TOTAL_AREA + 1))


def _max_head(spec: CaseSpec, m: int, kind: str = PROJ_PLANE) -> int:
    """Rigorous cap on the leading coefficient of the level-0 total class.

    Derived from the areas of the exceptional classes at the wall above
    the surfaces: over an isolated minimum with a 4-dimensional maximum
    the degree-1 classes through two points force the cap 1 as soon as
    two classes were born and the reduced volume at level one forces 3
    for a single one; over a 2-sphere minimum with points at level -1
    the ruling classes minus an exceptional class force small caps.  The
    remaining lattices have small rank, where the loose cap 6 is cheap.
    """
    if spec.dim_min == 0 and spec.dim_max == 4:
        if m >= 2:
            return 1
        if m == 1:
            return 3
        return 4
    if spec.dim_min == 2 and m >= 1:
        if spec.dim_max == 4:
            return 0 if kind == SPHERE_PRODUCT else 2
        return 2 if kind == SPHERE_PRODUCT else 3
    return 6


def _gen_min0(spec: CaseSpec):
    m_values = range(1, 9) if -1 in spec.crit else [0]
    for m in m_values:
        lat0 = SurfaceLattice(PROJ_PLANE, m)
        e_seed = CohClass(lat0, (-1,) + (0,) * m)
        areas = _areas_for_spec(spec, m, None)
        if not areas:
            continue
        if 0 in spec.crit:
            options = _part_multisets(lat0, areas, _max_head(spec, m))
        else:
            options = [()]
        yield from _finish_candidates(spec, lat0, e_seed, m, options)


def _gen_min2(spec: CaseSpec):
    m_values = range(1, 8) if -1 in spec.crit else [0]
    for kind in (SPHERE_PRODUCT, HIRZEBRUCH):
        k_lo = 0 if kind == SPHERE_PRODUCT else -1
        for k in range(k_lo, 7):
            b_min = 2 * k if kind == SPHERE_PRODUCT else 2 * k + 1
            for m in m_values:
                if m >= 1 and k > _k_cap_blown(spec, kind):
                    continue
                lat0 = SurfaceLattice(kind, m)
                e_seed = CohClass(lat0, (k, -1) + (0,) * m)
                areas = _areas_for_spec(spec, m, b_min)
                if not areas:
                    continue
                if 0 in spec.crit:
                    options = _part_multisets(lat0, areas, _max_head(spec, m, kind))
                else:
                    options = [()]
                yield from _finish_candidates(spec, lat0, e_seed, m, options)


def _k_cap_blown(spec: CaseSpec, kind: str) -> int:
    """Upper bound on the seed slope over a 2-sphere minimum with points
    at level -1, from the areas at the wall above the surfaces of the
    ruling class minus a born class (strictly positive when the maximum
    is 4-dimensional, non-negative before a collapse)."""
    strict = spec.dim_max == 4
    if kind == SPHERE_PRODUCT:
        return 0 if strict else 2
    return 1 if strict else 3


def _gen_min4(spec: CaseSpec):
    with_surface = 0 in spec.crit
    for lat0 in _middle_lattices():
        if lat0.kind == PROJ_PLANE:
            yield from _gen_min4_plane(spec, lat0, with_surface)
        else:
            yield from _gen_min4_even(spec, lat0, with_surface)


def _middle_lattices():
    yield SurfaceLattice(SPHERE_PRODUCT, 0)
    for k in range(0, 9):
        yield SurfaceLattice(PROJ_PLANE, k)


def _gen_min4_even(spec: CaseSpec, lat0: SurfaceLattice, with_surface: bool):
    rng = range(-BOX, BOX + 1)
    for ea, eb in itertools.product(rng, repeat=2):
        e = lat0.cls(ea, eb)
        if with_surface:
            for pa in range(0, MAX_TOTAL_AREA + 1):
                for pb in range(-1, MAX_TOTAL_AREA + 1):
                    total = lat0.cls(pa, pb)
                    area = pairing(lat0.c1, total)
                    if not 1 <= area <= MAX_TOTAL_AREA:
                        continue
                    for spl in enumerate_splittings(total, lat0.c1):
                        yield TFD(4, 4, lat0, e, 0, spl.classes(), ())
        else:
            yield TFD(4, 4, lat0, e, 0, (), ())


def _gen_min4_plane(spec: CaseSpec, lat0: SurfaceLattice, with_surface: bool):
    """Free Euler class plus an optional surface class over a plane blow-up.

    Written as a recursion over paired exceptional coefficients of the
    Euler class and of the surface total; the single-class area bounds at
    the two extremal levels cut each pair domain down before the pairwise
    constraints are checked at the leaves.
    """
    k = lat0.k
    c1 = lat0.c1
    for a0 in range(-BOX, BOX + 1):
        x_range = range(0, MAX_TOTAL_AREA + 1) if with_surface else [0]
        for x0 in x_range:
            if not (3 + a0 >= 1 and 3 - a0 - x0 >= 1):
                continue  # the u-coefficient of the reduced class stays positive
            pair_domain = []
            for beta in range(-2, 1):
                # area of E_i at -1: 1 - beta >= 1
                if with_surface:
                    ys = [y for y in range(-beta, BOX + 1)]
                else:
                    ys = [0]
                for y in ys:
                    if 1 + beta + y < 1:
                        continue  # area of E_i at +1
                    pair_domain.append((beta, y))
            pair_domain.sort()

            def rec(i, start, pairs):
                if i == k:
                    yield from _assemble_min4_plane(lat0, c1, a0, x0, pairs, with_surface)
                    return
                for j in range(start, len(pair_domain)):
                    beta, y = pair_domain[j]
                    ok = True
                    for pb, py in pairs:
                        if a0 + beta + pb < 0:
                            ok = False  # area of u - Ei - Ej at -1
                            break
                        if a0 + x0 + beta + y + pb + py > 0:
                            ok = False  # area of u - Ei - Ej at +1
                            break
                    if ok:
                        yield from rec(i + 1, j, pairs + [(beta, y)])

            if k >= 2:
                yield from rec(0, 0, [])
            else:
                for combo in itertools.product(pair_domain, repeat=k):
                    yield from _assemble_min4_plane(lat0, c1, a0, x0, list(combo), with_surface)


def _assemble_min4_plane(lat0, c1, a0, x0, pairs, with_surface):
    e = CohClass(lat0, (a0,) + tuple(b for b, _ in pairs))
    total = CohClass(lat0, (x0,) + tuple(y for _, y in pairs))
    if with_surface:
        area = pairing(c1, total)
        if not 1 <= area <= MAX_TOTAL_AREA:
            return
        for spl in enumerate_splittings(total, c1):
            yield TFD(4, 4, lat0, e, 0, spl.classes(), ())
    else:
        yield TFD(4, 4, lat0, e, 0, (), ())


_GENERATORS = {0: _gen_min0, 2: _gen_min2, 4: _gen_min4}


def enumerate_case(spec: CaseSpec, z_minus1: int | None = None) -> list[TFD]:
    """The complete duplicate-free list of canonical records for one case."""
    validate_case_spec(spec)
    seen: dict[str, TFD] = {}
    for cand in _GENERATORS[spec.dim_min](spec):
        if cand.crit != tuple(sorted(spec.crit)):
            continue
        if not check(cand):
            continue
        canon = reorient(cand)
        if z_minus1 is not None and canon.m_minus != z_minus1:
            continue
        key = content_key(canon)
        if key not in seen:
            _assert_box_not_binding(canon)
            seen[key] = canon
    return [seen[k] for k in sorted(seen)]


def _assert_box_not_binding(t: TFD):
    tops = [abs(c) for c in t.e_seed.coeffs]
    for p in t.parts:
        tops.extend(abs(c) for c in p.coeffs)
    assert max(tops, default=0) < BOX, "coefficient box was binding on an emitted record"


def enumerate_case_bruteforce(spec: CaseSpec, max_rank: int = 4) -> list[TFD]:
    """Slow oracle: raw coefficient boxes, no derived bounds, no pruning
    order.  Middle lattices above max_rank are skipped (the raw product
    is infeasible there); the staged pipeline is compared against this on
    every case with the same rank cap.
    """
    validate_case_spec(spec)
    seen: dict[str, TFD] = {}

    def consider(cand: TFD):
        if cand.crit != tuple(sorted(spec.crit)):
            return
        if not check(cand):
            return
        canon = reorient(cand)
        seen.setdefault(content_key(canon), canon)

    def all_totals(lat):
        if 0 not in spec.crit:
            yield ()
            return
        rng = range(-BOX, BOX + 1)
        for coeffs in itertools.product(rng, repeat=lat.rank):
            total = CohClass(lat, coeffs)
            if not 1 <= pairing(lat.c1, total) <= MAX_TOTAL_AREA:
                continue
            for spl in enumerate_splittings(total, lat.c1):
                yield spl.classes()

    if spec.dim_min == 0:
        m_values = range(1, 9) if -1 in spec.crit else [0]
        for m in m_values:
            lat0 = SurfaceLattice(PROJ_PLANE, m)
            if lat0.rank > max_rank:
                continue
            e_seed = CohClass(lat0, (-1,) + (0,) * m)
            for parts in all_totals(lat0):
                for cand in _finish_candidates(spec, lat0, e_seed, m, [parts]):
                    consider(cand)
    elif spec.dim_min == 2:
        m_values = range(1, 8) if -1 in spec.crit else [0]
        for kind in (SPHERE_PRODUCT, HIRZEBRUCH):
            k_lo = 0 if kind == SPHERE_PRODUCT else -1
            for k in range(k_lo, 7):
                for m in m_values:
                    lat0 = SurfaceLattice(kind, m)
                    if lat0.rank > max_rank:
                        continue
                    e_seed = CohClass(lat0, (k, -1) + (0,) * m)
                    for parts in all_totals(lat0):
                        for cand in _finish_candidates(spec, lat0, e_seed, m, [parts]):
                            consider(cand)
    else:
        for lat0 in _middle_lattices():
            if lat0.rank > max_rank:
                continue
            rng = range(-BOX, BOX + 1)
            for e_coeffs in itertools.product(rng, repeat=lat0.rank):
                e = CohClass(lat0, e_coeffs)
                for parts in all_totals(lat0):
                    consider(TFD(4, 4, lat0, e, 0, parts, ()))
    return [seen[k] for k in sorted(seen)]
