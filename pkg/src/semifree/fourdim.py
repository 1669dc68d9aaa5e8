"""Classification of 4-dimensional monotone semifree circle actions.

All reduced spaces are 2-spheres, so the degree-2 lattice is a single
integer: the reduced class at level t is a(t) u and the Euler class of a
level bundle is an integer multiple of u.  Critical levels lie in
{-2,-1,0,1,2}; interior fixed points sit at level 0 and each adds u to
the Euler class on crossing.  The enumeration below reproduces the full
table, including the Euler class just above the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass

CASES_4DIM = (
    frozenset({-2, 2}),
    frozenset({-2, 1}),
    frozenset({-1, 1}),
)


@dataclass(frozen=True)
class TFD4:
    """Fixed point data of a 4-dimensional semifree circle action.

    e_seed is the coefficient of the Euler class just above the minimum;
    interior_points counts the isolated fixed points at level 0.
    """

    min_level: int
    max_level: int
    e_seed: int
    interior_points: int

    @property
    def dim_min(self) -> int:
        return 0 if self.min_level == -2 else 2

    @property
    def dim_max(self) -> int:
        return 0 if self.max_level == 2 else 2

    @property
    def crit(self) -> tuple[int, ...]:
        levels = {self.min_level, self.max_level}
        if self.interior_points:
            levels.add(0)
        return tuple(sorted(levels))

    def e_top(self) -> int:
        """Euler coefficient just below the maximum."""
        return self.e_seed + self.interior_points

    def omega(self, t: int) -> int:
        """Coefficient of the reduced class at level t."""
        if t <= 0:
            return 2 - t * self.e_seed
        return 2 - t * self.e_top()

    def vol_min(self) -> int | None:
        return self.omega(self.min_level) if self.dim_min == 2 else None

    def vol_max(self) -> int | None:
        return self.omega(self.max_level) if self.dim_max == 2 else None

    @property
    def b2(self) -> int:
        return self.betti()[1]

    def betti(self) -> tuple[int, int, int]:
        p = [0, 0, 0]
        p[0] += 1
        p[2] += 1
        p[1] += self.interior_points
        if self.dim_min == 2:
            p[1] += 1
        if self.dim_max == 2:
            p[1] += 1
        # degrees 0,2,4 relabeled as indices 0,1,2
        return tuple(p)

    def manifold_name(self) -> str:
        b2 = self.betti()[1]
        if b2 == 1:
            return "P2"
        even = self.e_seed % 2 == 0 if self.dim_min == 2 else None
        if self.dim_min == 0 and self.dim_max == 0:
            return "S2xS2"
        if self.dim_min == 2 and even and self.interior_points == 0 and self.e_seed == 0:
            return "S2xS2"
        return f"X{b2 - 1}"

    def e_seed_str(self) -> str:
        return {0: "0", -1: "-u", 1: "u"}.get(self.e_seed, f"{self.e_seed}u")


def _flip(t: TFD4) -> TFD4:
    return TFD4(
        min_level=-t.max_level,
        max_level=-t.min_level,
        e_seed=-t.e_top(),
        interior_points=t.interior_points,
    )


def _canonical(t: TFD4) -> TFD4:
    f = _flip(t)
    if (t.min_level, t.max_level) != (f.min_level, f.max_level):
        # orientation fixed by putting the isolated point at the bottom
        return t if t.dim_min <= t.dim_max else f
    key = lambda u: (abs(u.e_seed), u.e_seed)
    return min((t, f), key=key)


def _valid(t: TFD4) -> bool:
    # collapse at isolated extremes, positive area at sphere extremes
    if t.dim_min == 0:
        if t.omega(t.min_level) != 0 or t.e_seed != -1:
            return False
    else:
        if t.omega(t.min_level) < 1:
            return False
    if t.dim_max == 0:
        if t.omega(t.max_level) != 0 or t.e_top() != 1:
            return False
    else:
        if t.omega(t.max_level) < 1:
            return False
    # the reduced area stays positive on the open range of levels
    for lo, hi, e in ((t.min_level, 0, t.e_seed), (0, t.max_level, t.e_top())):
        for num in range(4 * lo + 1, 4 * hi):
            tt = num  # sample at quarter-integers via 4t to stay exact
            if 4 * 2 - tt * e <= 0:
                return False
    return True


def enumerate_case_4dim(spec: frozenset[int]) -> list[TFD4]:
    """All records for one of the three admissible critical-level pairs."""
    if spec not in CASES_4DIM:
        raise ValueError(f"unsupported 4-dimensional case {sorted(spec)}")
    min_level = min(spec)
    max_level = max(spec)
    out = {}
    for e_seed in range(-6, 7):
        for k in range(0, 7):
            cand = TFD4(min_level, max_level, e_seed, k)
            if not _valid(cand):
                continue
            canon = _canonical(cand)
            assert _valid(canon), "flip of a valid record must be valid"
            if set(canon.crit) - {0} != {min_level, max_level}:
                continue
            out[(canon.e_seed, canon.interior_points)] = canon
    return [out[k] for k in sorted(out)]


def table_4dim() -> list[tuple[str, TFD4]]:
    """The eight labelled rows of the 4-dimensional table."""
    rows = []
    one = enumerate_case_4dim(frozenset({-2, 2}))
    assert len(one) == 1
    rows.append(("(I-1)", one[0]))
    two = enumerate_case_4dim(frozenset({-2, 1}))
    two.sort(key=lambda t: t.interior_points)
    for i, t in enumerate(two, start=1):
        rows.append((f"(II-{i})", t))
    three = enumerate_case_4dim(frozenset({-1, 1}))

    def printed_rank(t: TFD4):
        # table order: trivial pair, twisted pair, then by interior points
        table = {(0, 0): 0, (-1, 0): 1, (0, 1): 2, (-1, 2): 3}
        return table.get((t.e_seed, t.interior_points), 99)

    three.sort(key=printed_rank)
    for i, t in enumerate(three, start=1):
        rows.append((f"(III-{i})", t))
    return rows
