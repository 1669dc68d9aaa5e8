"""Decompositions of a fixed-surface class into connected components.

Given the total Poincare dual of the fixed surface at the middle level
and the area form (the anticanonical class, by monotonicity), enumerate
every multiset of component classes consistent with disjointness,
positivity of area, the adjunction formula, the finite list of
exceptional classes, and non-negative intersection with exceptional
classes for components of non-negative square.

The component candidates are generated once per lattice: the exceptional
constraints force non-positive coefficients on the blown-up classes and
non-negative leading coefficients, which keeps the candidate pool small
even at rank nine.  An empty result is how non-existence arguments
terminate, so no exception is raised for it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .lattice import (
    CohClass,
    LatticeError,
    PROJ_PLANE,
    SurfaceLattice,
    adjunction_genus,
    exceptional_classes,
    pairing,
)


@dataclass(frozen=True)
class Splitting:
    """A multiset of (class, genus) pairs summing to the total class."""

    parts: tuple[tuple[CohClass, int], ...]

    def classes(self) -> tuple[CohClass, ...]:
        return tuple(c for c, _ in self.parts)


_POOL_CACHE: dict = {}


def component_pool(lat: SurfaceLattice, max_area: int, max_head: int = 10**6) -> list[CohClass]:
    """Classes that can occur as one connected embedded component.

    Exceptional classes of positive area, plus classes of non-negative
    square with well-defined genus pairing non-negatively with every
    exceptional class; the latter forces non-positive coefficients on
    every blown-up class and a non-negative leading coefficient.
    max_head caps the leading coefficient.
    """
    key = (lat, max_area, max_head)
    cached = _POOL_CACHE.get(key)
    if cached is not None:
        return cached
    c1 = lat.c1
    try:
        exc = exceptional_classes(lat)
    except LatticeError:
        exc = []
    pool = [c for c in exc if 1 <= pairing(c1, c) <= max_area and c.coeffs[0] <= max_head]
    base = lat.base_rank
    head_hi = min(max_area, max_head)
    if base == 1:
        heads = [(a,) for a in range(0, head_hi + 1)]
    else:
        heads = [(p, q) for p in range(0, head_hi + 1) for q in range(-1, max_area + 1)]
    for head in heads:
        for tail in _tails(lat, head, max_area):
            c = CohClass(lat, head + tail)
            if c.square < 0:
                continue
            area = pairing(c1, c)
            if not 1 <= area <= max_area:
                continue
            if adjunction_genus(c) is None:
                continue
            if any(pairing(c, e) < 0 for e in exc):
                continue
            pool.append(c)
    uniq = {c.coeffs: c for c in pool}
    out = [uniq[k] for k in sorted(uniq)]
    _POOL_CACHE[key] = out
    return out


def _tails(lat: SurfaceLattice, head, max_area):
    """Non-positive tail coefficients for a non-exceptional component.

    The square sum is bounded by head^2 + 1, the total area stays at
    least 1, and two tail entries never sum below minus the leading
    degree (intersection with the degree-1 class through two points);
    produced in non-decreasing magnitude so the last two entries witness
    the binding pairwise constraint, then expanded over positions.
    """
    k = lat.k
    if k == 0:
        return [()]
    head_cls = CohClass(lat, tuple(head) + (0,) * k)
    cap = head_cls.square + 1
    if cap < 0:
        return []
    area_head = pairing(lat.c1, head_cls)
    pair_lo = -head[0]
    coord_lo = None if lat.kind == PROJ_PLANE else -max(head[1], 0)
    sorted_tails = []

    def rec(i, prefix, sq, s):
        if i == k:
            sorted_tails.append(tuple(prefix))
            return
        start = 0 if not prefix else -prefix[-1]
        for mb in itertools.count(start):
            if mb * mb + sq > cap:
                break
            if coord_lo is not None and -mb < coord_lo:
                break
            if prefix and prefix[-1] - mb < pair_lo:
                break
            if area_head + s - mb < 1:
                break
            rec(i + 1, prefix + [-mb], sq + mb * mb, s - mb)

    rec(0, [], 0, 0)
    out = set()
    for tail in sorted_tails:
        out.update(_multiset_permutations(tail))
    return sorted(out)


def _multiset_permutations(values):
    """Distinct permutations of a tuple with repeated entries."""
    values = sorted(values)
    n = len(values)
    out = []

    def rec(prefix, remaining):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        last = object()
        for i, v in enumerate(remaining):
            if v == last:
                continue
            last = v
            rec(prefix + [v], remaining[:i] + remaining[i + 1 :])

    rec([], values)
    return out


def enumerate_splittings(total: CohClass, area_form: CohClass) -> list[Splitting]:
    """All decompositions of `total` into pairwise-disjoint components."""
    lat = total.lattice
    total_area = pairing(area_form, total)
    if total_area < 1:
        return []
    head_cap = total.coeffs[0]
    if head_cap < 0:
        return []  # components have non-negative leading coefficients
    pool = component_pool(lat, total_area, head_cap)
    areas = [pairing(area_form, c) for c in pool]
    results: list[tuple[tuple[int, ...], ...]] = []

    def rec(start, chosen, area, head):
        if area == total_area:
            s = total.lattice.zero()
            for c in chosen:
                s = s + c
            if s == total:
                results.append(tuple(c.coeffs for c in chosen))
            return
        for i in range(start, len(pool)):
            a = areas[i]
            if area + a > total_area:
                continue
            c = pool[i]
            if head + c.coeffs[0] > head_cap:
                continue
            if any(pairing(c, prev) != 0 for prev in chosen):
                continue
            rec(i, chosen + [c], area + a, head + c.coeffs[0])

    rec(0, [], 0, 0)
    out = []
    for combo in sorted(set(results)):
        parts = tuple(
            sorted(
                ((CohClass(lat, c), adjunction_genus(CohClass(lat, c))) for c in combo),
                key=lambda p: (-pairing(area_form, p[0]),) + tuple(-x for x in p[0].coeffs),
            )
        )
        out.append(Splitting(parts))
    out.sort(key=lambda s: tuple(p[0].coeffs for p in s.parts))
    return out


def splitting_is_consistent(s: Splitting, area_form: CohClass, total: CohClass) -> bool:
    """Re-derive the adjunction bookkeeping: sum of squares plus sum of
    (2 - 2g) equals the total anticanonical degree."""
    sq = sum(c.square for c, _ in s.parts)
    euler = sum(2 - 2 * g for _, g in s.parts)
    total_sum = total.lattice.zero()
    for c, _ in s.parts:
        total_sum = total_sum + c
    return sq + euler == pairing(area_form, total) and total_sum == total
