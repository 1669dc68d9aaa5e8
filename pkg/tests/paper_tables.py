"""Reference classification tables, hand-encoded from the printed source.

Each row records the label, the case, the canonical presentation of the
fixed point data (lattice kind/k, Euler seed, points born at level -1,
level-0 component classes, collapsing classes), the printed first Chern
number and the printed second Betti number.  These are the acceptance
fixtures: the classifier output is matched row by row against them.

Coefficients are in the printed bases: (u, E1..Ek) for plane blow-ups
and (x, y, E1..Ek) for sphere-bundle blow-ups; rows printed over the
twisted rank-2 surface in its (x, y) basis are converted to the (u, E1)
basis here, since the middle lattice of a 4-dimensional pair is always
presented as a plane blow-up.
"""

from dataclasses import dataclass

from semifree.lattice import CohClass, SurfaceLattice
from semifree.tfd import TFD

PP = "proj_plane"
SP = "sphere_product"
HZ = "hirzebruch"


@dataclass(frozen=True)
class PaperRow:
    label: str
    dim_min: int
    dim_max: int
    kind: str
    k: int
    e_seed: tuple
    m_minus: int
    parts: tuple
    blowdowns: tuple
    c1_cubed: int
    b2: int
    b_odd: int = 0

    def tfd(self) -> TFD:
        lat = SurfaceLattice(self.kind, self.k)
        return TFD(
            dim_min=self.dim_min,
            dim_max=self.dim_max,
            lat0=lat,
            e_seed=CohClass(lat, self.e_seed),
            m_minus=self.m_minus,
            parts=tuple(CohClass(lat, p) for p in self.parts),
            blowdowns=tuple(CohClass(lat, b) for b in self.blowdowns),
        )


def R(label, dmin, dmax, kind, k, e, m, parts, bds, c1
      , b2, b_odd=0):
    return PaperRow(label, dmin, dmax, kind, k, tuple(e), m,
                    tuple(tuple(p) for p in parts),
                    tuple(tuple(b) for b in bds), c1, b2, b_odd)


# --- isolated minimum (18 rows) -------------------------------------------

TABLE_A = [
    R("(I-1)", 0, 0, PP, 0, (-1,), 0, [(2,)], [], 54, 1),
    R("(I-2)", 0, 0, PP, 3, (-1, 0, 0, 0), 3, [],
      [(1, -1, -1, 0), (1, -1, 0, -1), (1, 0, -1, -1)], 48, 3),
    R("(I-3)", 0, 0, PP, 1, (-1, 0), 1, [(1, -1), (1, -1)], [(0, 1)], 52, 3),
    R("(II-3.1)", 0, 2, PP, 1, (-1, 0), 1, [(0, 1)], [], 62, 2),
    R("(II-3.2)", 0, 2, PP, 1, (-1, 0), 1, [(1, 0)], [], 54, 2),
    R("(II-3.3)", 0, 2, PP, 1, (-1, 0), 1, [(2, -1)], [], 46, 2),
    R("(II-4.1)", 0, 2, PP, 2, (-1, 0, 0), 2,
      [(1, -1, 0), (1, -1, -1)], [(0, 1, 0)], 44, 4),
    R("(II-4.2)", 0, 2, PP, 3, (-1, 0, 0, 0), 3,
      [(1, 0, -1, -1)], [(1, -1, -1, 0), (1, -1, 0, -1)], 42, 4),
    R("(III-1)", 0, 4, PP, 0, (-1,), 0, [], [], 64, 1),
    R("(III-2)", 0, 4, PP, 1, (-1, 0), 1, [], [], 56, 2),
    R("(III-3.1)", 0, 4, PP, 0, (-1,), 0, [(1,)], [], 54, 2),
    R("(III-3.2)", 0, 4, PP, 0, (-1,), 0, [(2,)], [], 46, 2),
    R("(III-3.3)", 0, 4, PP, 0, (-1,), 0, [(3,)], [], 40, 2, b_odd=2),
    R("(III-4.1)", 0, 4, PP, 1, (-1, 0), 1, [(0, 1)], [], 50, 3),
    R("(III-4.2)", 0, 4, PP, 1, (-1, 0), 1, [(1, -1)], [], 50, 3),
    R("(III-4.3)", 0, 4, PP, 1, (-1, 0), 1, [(1, 0)], [], 46, 3),
    R("(III-4.4)", 0, 4, PP, 1, (-1, 0), 1, [(2, -1)], [], 42, 3),
    R("(III-4.5)", 0, 4, PP, 2, (-1, 0, 0), 2, [(1, -1, -1)], [], 46, 4),
]

# The printed first Chern numbers of Table A in row order.
TABLE_A_C1 = [54, 48, 52, 62, 54, 46, 44, 42, 64, 56, 54, 46, 40, 50, 50, 46, 42, 46]

# Survivor of the staged filters not present in the printed table: over an
# isolated minimum with a 2-sphere maximum and all interior levels, the
# record with two born classes, one level-0 sphere in the first ruling
# class and a collapse of the class through both points.  It satisfies
# every constraint (the printed exclusion evaluates the reduced volume at
# the top with the Euler class not corrected across the collapse) and is
# realized by the product of a sphere with the one-point blow-up of the
# plane under the diagonal circle.  Emitted as a flagged finding.
EXTRA_FINDING_A = R("(II-4.x)", 0, 2, PP, 2, (-1, 0, 0), 2,
                    [(1, -1, 0)], [(1, -1, -1)], 48, 3)

# --- 2-sphere pair (21 rows) ------------------------------------------------

TABLE_B = [
    R("(I-1)", 2, 2, SP, 0, (1, -1), 0, [], [], 64, 1),
    R("(II-1.1)", 2, 2, SP, 0, (0, -1), 0, [(1, 1)], [], 48, 2),
    R("(II-1.2)", 2, 2, SP, 0, (0, -1), 0, [(1, 0)], [], 56, 2),
    R("(II-1.3)", 2, 2, SP, 0, (0, -1), 0, [(0, 1), (0, 1)], [], 48, 3),
    R("(II-2.1)", 2, 2, HZ, 0, (-1, -1), 0, [(0, 1), (1, 1)], [], 48, 3),
    R("(II-2.2)", 2, 2, HZ, 0, (-1, -1), 0, [(2, 2)], [], 40, 2),
    R("(III.1)", 2, 2, HZ, 1, (0, -1, 0), 1, [], [(0, 1, 0)], 54, 2),
    R("(III.2)", 2, 2, SP, 2, (0, -1, 0, 0), 2, [],
      [(0, 1, -1, 0), (0, 1, 0, -1)], 44, 3),
    R("(III.3)", 2, 2, HZ, 3, (-1, -1, 0, 0, 0), 3, [],
      [(1, 1, -1, -1, 0), (1, 1, -1, 0, -1), (1, 1, 0, -1, -1)], 34, 4),
    R("(IV-1-1.1)", 2, 2, HZ, 2, (-1, -1, 0, 0), 2,
      [(1, 1, -1, -1), (1, 0, -1, 0)], [(0, 0, 1, 0), (0, 1, 0, 0)], 36, 5),
    R("(IV-1-1.2)", 2, 2, HZ, 2, (-1, -1, 0, 0), 2,
      [(0, 1, 0, 0), (1, 1, -1, -1)], [(1, 0, -1, 0), (1, 0, 0, -1)], 36, 5),
    R("(IV-1-1.3)", 2, 2, HZ, 2, (-1, -1, 0, 0), 2,
      [(1, 1, -1, 0)], [(1, 0, 0, -1), (1, 1, -1, -1)], 36, 4),
    R("(IV-1-2)", 2, 2, HZ, 2, (-1, -1, 0, 0), 2,
      [(1, 0, -1, 0)], [(0, 1, 0, 0), (1, 1, -1, -1)], 40, 4),
    R("(IV-2-1.1)", 2, 2, HZ, 1, (-1, -1, 0), 1, [(2, 1, -1)], [(0, 1, 0)], 38, 3),
    R("(IV-2-1.2)", 2, 2, HZ, 1, (-1, -1, 0), 1,
      [(1, 1, -1), (1, 1, -1)], [(0, 0, 1)], 38, 4),
    R("(IV-2-2.1)", 2, 2, HZ, 1, (-1, -1, 0), 1, [(1, 1, 0)], [(1, 0, -1)], 42, 3),
    R("(IV-2-2.2)", 2, 2, HZ, 1, (-1, -1, 0), 1,
      [(0, 1, 0), (1, 1, -1)], [(1, 0, -1)], 42, 4),
    R("(IV-2-3)", 2, 2, HZ, 1, (-1, -1, 0), 1, [(1, 0, 0)], [(0, 1, 0)], 46, 3),
    R("(IV-2-4)", 2, 2, HZ, 1, (-1, -1, 0), 1, [(0, 0, 1)], [(1, 0, -1)], 50, 3),
    R("(IV-2-5)", 2, 2, SP, 1, (0, -1, 0), 1,
      [(1, 0, -1), (0, 1, -1)], [(0, 0, 1)], 46, 4),
    R("(IV-2-6)", 2, 2, SP, 1, (0, -1, 0), 1, [(1, 0, -1)], [(0, 1, -1)], 50, 3),
]

# --- mixed and 4-dimensional pairs (56 rows) --------------------------------

TABLE_C = (
    [
        R("(I-1-1.1)", 2, 4, HZ, 0, (-1, -1), 0, [], [], 54, 2),
        R("(I-1-2.1)", 2, 4, SP, 0, (0, -1), 0, [], [], 54, 2),
        R("(I-1-2.2)", 2, 4, SP, 0, (1, -1), 0, [], [], 54, 2),
        R("(I-2)", 2, 4, HZ, 1, (-1, -1, 0), 1, [], [], 46, 3),
        R("(I-3-1.1)", 2, 4, HZ, 0, (0, -1), 0, [(0, 1)], [], 52, 3),
        R("(I-3-1.2)", 2, 4, HZ, 0, (-1, -1), 0, [(0, 1)], [], 50, 3),
        R("(I-3-1.3)", 2, 4, HZ, 0, (0, -1), 0, [(1, 1), (0, 1)], [], 44, 4),
        R("(I-3-1.4)", 2, 4, HZ, 0, (-1, -1), 0, [(1, 1)], [], 44, 3),
        R("(I-3-1.5)", 2, 4, HZ, 0, (-1, -1), 0, [(1, 1), (0, 1)], [], 40, 4),
        R("(I-3-1.6)", 2, 4, HZ, 0, (-1, -1), 0, [(2, 2)], [], 36, 3),
        R("(I-3-2.1)", 2, 4, SP, 0, (0, -1), 0, [(0, 1)], [], 48, 3),
        R("(I-3-2.2)", 2, 4, SP, 0, (1, -1), 0, [(0, 1)], [], 50, 3),
        R("(I-3-2.3)", 2, 4, SP, 0, (0, -1), 0, [(0, 1), (0, 1)], [], 42, 4),
        R("(I-3-2.4)", 2, 4, SP, 0, (1, -1), 0, [(0, 1), (0, 1)], [], 46, 4),
        R("(I-3-2.5)", 2, 4, SP, 0, (0, -1), 0, [(1, 0)], [], 46, 3),
        R("(I-3-2.6)", 2, 4, SP, 0, (0, -1), 0, [(1, 1)], [], 42, 3),
        R("(I-3-2.7)", 2, 4, SP, 0, (0, -1), 0, [(1, 2)], [], 38, 3),
        R("(I-4-1.1)", 2, 4, HZ, 1, (-1, -1, 0), 1, [(1, 1, -1)], [], 40, 4),
        R("(I-4-1.2)", 2, 4, HZ, 2, (-1, -1, 0, 0), 2, [(1, 1, -1, -1)], [], 36, 5),
        R("(I-4.2)", 2, 4, SP, 1, (0, -1, 0), 1, [(0, 1, -1)], [], 44, 4),
        R("(II-1-1.1)", 4, 4, PP, 0, (0,), 0, [], [], 54, 2),
        R("(II-1-1.2)", 4, 4, PP, 0, (1,), 0, [], [], 56, 2),
        R("(II-1-1.3)", 4, 4, PP, 0, (2,), 0, [], [], 62, 2),
        R("(II-1-2.1)", 4, 4, SP, 0, (0, 0), 0, [], [], 48, 3),
        R("(II-1-2.2)", 4, 4, SP, 0, (1, 0), 0, [], [], 48, 3),
        R("(II-1-2.3)", 4, 4, SP, 0, (1, 1), 0, [], [], 52, 3),
        R("(II-1-2.4)", 4, 4, SP, 0, (1, -1), 0, [], [], 44, 3),
        R("(II-1-3.1)", 4, 4, PP, 1, (0, 0), 0, [], [], 48, 3),
        R("(II-1-3.2)", 4, 4, PP, 1, (1, 0), 0, [], [], 50, 3),
    ]
    + [
        R(f"(II-1-4.{k})", 4, 4, PP, k, (0,) * (k + 1), 0, [], [], 54 - 6 * k, k + 2)
        for k in range(2, 9)
    ]
    + [
        R("(II-2-1.1)", 4, 4, PP, 0, (0,), 0, [(1,)], [], 46, 3),
        R("(II-2-1.2)", 4, 4, PP, 0, (1,), 0, [(1,)], [], 50, 3),
        R("(II-2-1.3)", 4, 4, PP, 0, (-1,), 0, [(2,)], [], 38, 3),
        R("(II-2-1.4)", 4, 4, PP, 0, (0,), 0, [(2,)], [], 40, 3),
        R("(II-2-1.5)", 4, 4, PP, 0, (-1,), 0, [(3,)], [], 32, 3, b_odd=2),
        R("(II-2-1.6)", 4, 4, PP, 0, (-2,), 0, [(4,)], [], 26, 3, b_odd=6),
        R("(II-2-2.1)", 4, 4, SP, 0, (-1, -1), 0, [(2, 2)], [], 28, 4, b_odd=2),
        R("(II-2-2.2)", 4, 4, SP, 0, (-1, 0), 0, [(2, 1)], [], 32, 4),
        R("(II-2-2.3)", 4, 4, SP, 0, (-1, 0), 0, [(1, 0), (1, 0)], [], 36, 5),
        R("(II-2-2.4)", 4, 4, SP, 0, (-1, 0), 0, [(1, 1)], [], 36, 4),
        R("(II-2-2.5)", 4, 4, SP, 0, (-1, 1), 0, [(1, 0), (1, 0)], [], 36, 5),
        R("(II-2-2.6)", 4, 4, SP, 0, (-1, 1), 0, [(1, 0)], [], 40, 4),
        R("(II-2-2.7)", 4, 4, SP, 0, (0, 0), 0, [(1, 1)], [], 38, 4),
        R("(II-2-2.8)", 4, 4, SP, 0, (0, 0), 0, [(1, 0)], [], 42, 4),
        R("(II-2-2.9)", 4, 4, SP, 0, (0, 1), 0, [(1, 0)], [], 44, 4),
        R("(II-2-3.1)", 4, 4, PP, 1, (-1, 0), 0, [(2, 0)], [], 32, 4),
        R("(II-2-3.2)", 4, 4, PP, 1, (0, -1), 0, [(1, 0), (0, 1)], [], 36, 5),
        R("(II-2-3.3)", 4, 4, PP, 1, (0, 0), 0, [(1, 0)], [], 40, 4),
        R("(II-2-3.4)", 4, 4, PP, 1, (1, -1), 0, [(0, 1)], [], 46, 4),
        R("(II-2-3.5)", 4, 4, PP, 1, (0, 0), 0, [(0, 1)], [], 44, 4),
    ]
)

ALL_TABLES = {"table6dim_A": TABLE_A, "table6dim_B": TABLE_B, "table6dim_C": TABLE_C}

# Case grouping per table, in printed order.
CASES_A = [(0, 0, frozenset({-3, 3})),
           (0, 0, frozenset({-3, 0, 3})),
           (0, 0, frozenset({-3, -1, 1, 3})),
           (0, 0, frozenset({-3, -1, 0, 1, 3})),
           (0, 2, frozenset({-3, -1, 2})),
           (0, 2, frozenset({-3, -1, 1, 2})),
           (0, 2, frozenset({-3, -1, 0, 2})),
           (0, 2, frozenset({-3, -1, 0, 1, 2})),
           (0, 4, frozenset({-3, 1})),
           (0, 4, frozenset({-3, -1, 1})),
           (0, 4, frozenset({-3, 0, 1})),
           (0, 4, frozenset({-3, -1, 0, 1}))]

# --- 4-dimensional table -----------------------------------------------------

# (label, manifold, min level, max level, Euler seed, interior points)
TABLE_4DIM = [
    ("(I-1)", "S2xS2", -2, 2, -1, 2),
    ("(II-1)", "P2", -2, 1, -1, 0),
    ("(II-2)", "X1", -2, 1, -1, 1),
    ("(II-3)", "X2", -2, 1, -1, 2),
    ("(III-1)", "S2xS2", -1, 1, 0, 0),
    ("(III-2)", "X1", -1, 1, -1, 0),
    ("(III-3)", "X2", -1, 1, 0, 1),
    ("(III-4)", "X3", -1, 1, -1, 2),
]

# --- capacities, verbatim from the printed appendix -------------------------

CAPACITIES_PRINTED = [
    ("(I-1)", 3, -1, -3, 2, 6),
    ("(I-2)", 3, -1, -3, 2, 6),
    ("(I-3)", 3, -1, -3, 2, 6),
    ("(II-3.1)", 2, -1, -3, 2, 5),
    ("(II-3.2)", 2, -1, -3, 2, 5),
    ("(II-3.3)", 2, -1, -3, 2, 5),
    ("(II-4.1)", 2, -1, -3, 2, 5),
    ("(II-4.2)", 2, -1, -3, 2, 5),
    ("(III-1)", 1, 1, -3, 4, 4),
    ("(III-2)", 1, -1, -3, 2, 4),
    ("(III-3.1)", 1, 0, -3, 3, 4),
    ("(III-3.2)", 1, 0, -3, 3, 4),
    ("(III-3.3)", 1, 0, -3, 3, 4),
    ("(III-4.1)", 1, -1, -3, 2, 4),
    ("(III-4.2)", 1, -1, -3, 2, 4),
    ("(III-4.3)", 1, -1, -3, 2, 4),
    ("(III-4.4)", 1, -1, -3, 2, 4),
    ("(III-4.5)", 1, -1, -3, 2, 4),
]
