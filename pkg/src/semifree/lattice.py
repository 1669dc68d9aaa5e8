"""Exact integer model of the degree-2 cohomology of rational surfaces.

Every reduced space occurring in the classification is a del Pezzo surface:
the projective plane, a product of two spheres, the twisted sphere bundle
over the sphere, or an iterated blow-up of one of these.  This module
provides their H^2 lattices with the intersection pairing, the
anticanonical class, basis conversions between the three presentations,
the finite list of exceptional classes, and the adjunction formula.

All arithmetic is exact integer arithmetic; nothing here ever touches
floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

PROJ_PLANE = "proj_plane"
SPHERE_PRODUCT = "sphere_product"
HIRZEBRUCH = "hirzebruch"

_KINDS = (PROJ_PLANE, SPHERE_PRODUCT, HIRZEBRUCH)


class LatticeError(ValueError):
    """Raised for operations on incompatible or unsupported lattices."""


@dataclass(frozen=True)
class SurfaceLattice:
    """H^2 of a rational surface with a fixed ordered basis.

    kind: one of
        proj_plane     -- blow-up of P^2, basis u, E_1..E_k
        sphere_product -- blow-up of S^2 x S^2, basis x, y, E_1..E_k
        hirzebruch     -- blow-up of the twisted S^2-bundle, basis x, y, E_1..E_k
    k: number of exceptional basis classes E_i.
    """

    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise LatticeError(f"unknown lattice kind {self.kind!r}")
        if self.k < 0:
            raise LatticeError("negative blow-up count")

    @property
    def base_rank(self) -> int:
        return 1 if self.kind == PROJ_PLANE else 2

    @property
    def rank(self) -> int:
        return self.base_rank + self.k

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        return _gram(self.kind, self.k)

    @property
    def c1(self) -> "CohClass":
        """The anticanonical class in this basis."""
        if self.kind == PROJ_PLANE:
            head = [3]
        elif self.kind == SPHERE_PRODUCT:
            head = [2, 2]
        else:
            head = [3, 2]
        return CohClass(self, tuple(head + [-1] * self.k))

    @property
    def is_even(self) -> bool:
        """True iff every class has even self-intersection."""
        return self.kind == SPHERE_PRODUCT and self.k == 0

    def basis_names(self) -> tuple[str, ...]:
        head = ("u",) if self.kind == PROJ_PLANE else ("x", "y")
        return head + tuple(f"E{i}" for i in range(1, self.k + 1))

    def zero(self) -> "CohClass":
        return CohClass(self, (0,) * self.rank)

    def basis_class(self, i: int) -> "CohClass":
        coeffs = [0] * self.rank
        coeffs[i] = 1
        return CohClass(self, tuple(coeffs))

    def cls(self, *coeffs: int) -> "CohClass":
        if len(coeffs) != self.rank:
            raise LatticeError(f"expected {self.rank} coefficients, got {len(coeffs)}")
        return CohClass(self, tuple(int(c) for c in coeffs))

    def exceptional_basis(self) -> list["CohClass"]:
        return [self.basis_class(self.base_rank + i) for i in range(self.k)]

    def key(self) -> str:
        return f"{self.kind}/{self.k}"

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"SurfaceLattice({self.kind}, k={self.k})"


@lru_cache(maxsize=None)
def _gram(kind: str, k: int) -> tuple[tuple[int, ...], ...]:
    base = 1 if kind == PROJ_PLANE else 2
    n = base + k
    g = [[0] * n for _ in range(n)]
    if kind == PROJ_PLANE:
        g[0][0] = 1
    elif kind == SPHERE_PRODUCT:
        g[0][1] = g[1][0] = 1
    else:
        g[0][1] = g[1][0] = 1
        g[1][1] = -1
    for i in range(base, n):
        g[i][i] = -1
    return tuple(tuple(row) for row in g)


@dataclass(frozen=True)
class CohClass:
    """An integer class in H^2 of a fixed surface lattice."""

    lattice: SurfaceLattice
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.lattice.rank:
            raise LatticeError("coefficient length does not match lattice rank")

    def __add__(self, other: "CohClass") -> "CohClass":
        _same_lattice(self, other)
        return CohClass(self.lattice, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CohClass") -> "CohClass":
        _same_lattice(self, other)
        return CohClass(self.lattice, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CohClass":
        return CohClass(self.lattice, tuple(-a for a in self.coeffs))

    def __rmul__(self, n: int) -> "CohClass":
        return CohClass(self.lattice, tuple(n * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def dot(self, other: "CohClass") -> int:
        return pairing(self, other)

    @property
    def square(self) -> int:
        return pairing(self, self)

    def to_json(self) -> dict:
        return {"lattice": self.lattice.key(), "coeffs": list(self.coeffs)}

    def __str__(self):
        names = self.lattice.basis_names()
        terms = []
        for c, name in zip(self.coeffs, names):
            if c == 0:
                continue
            if c == 1:
                terms.append(f"+{name}")
            elif c == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{c:+d}{name}")
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


def class_from_json(obj: dict) -> CohClass:
    kind, _, k = obj["lattice"].partition("/")
    return CohClass(SurfaceLattice(kind, int(k)), tuple(int(c) for c in obj["coeffs"]))


def _same_lattice(a: CohClass, b: CohClass):
    if a.lattice != b.lattice:
        raise LatticeError(f"lattice mismatch: {a.lattice} vs {b.lattice}")


def pairing(a: CohClass, b: CohClass) -> int:
    """Intersection pairing a . b (symmetric, bilinear, exact)."""
    _same_lattice(a, b)
    gram = a.lattice.gram
    return sum(
        ai * gram[i][j] * bj
        for i, ai in enumerate(a.coeffs)
        if ai
        for j, bj in enumerate(b.coeffs)
        if bj
    )


def adjunction_genus(c: CohClass) -> int | None:
    """Genus of a connected embedded symplectic surface in the class.

    Returns (c.c - c1.c + 2)/2 when that is a non-negative integer and
    None otherwise; callers use None as a pruning predicate.
    """
    num = c.square - pairing(c.lattice.c1, c) + 2
    if num % 2 != 0:
        return None
    g = num // 2
    return g if g >= 0 else None


# ---------------------------------------------------------------------------
# basis conversion between the three rank >= 2 presentations
#
# hirzebruch(k)     <-> proj_plane(k+1): u = x + y, E_1 = y, E_{i+1} = E_i
# sphere_product(k) <-> proj_plane(k+1) (k >= 1):
#                       x = u - E_1, y = u - E_2, E_1 -> u - E_1 - E_2,
#                       E_i -> E_{i+1} for i >= 2.
# ---------------------------------------------------------------------------


def _conversion_matrix(src: SurfaceLattice, dst: SurfaceLattice) -> list[list[int]] | None:
    """Rows express the src basis vectors as classes of dst, or None."""
    if src == dst:
        return [[1 if i == j else 0 for j in range(src.rank)] for i in range(src.rank)]

    def shift(vec, total):
        return vec + [0] * (total - len(vec))

    if src.kind == HIRZEBRUCH and dst == SurfaceLattice(PROJ_PLANE, src.k + 1):
        n = dst.rank
        rows = [shift([1, -1], n), shift([0, 1], n)]  # x = u - E1, y = E1
        for i in range(src.k):
            e = [0] * n
            e[2 + i] = 1
            rows.append(e)
        return rows
    if src.kind == SPHERE_PRODUCT and src.k >= 1 and dst == SurfaceLattice(PROJ_PLANE, src.k + 1):
        n = dst.rank
        rows = [shift([1, -1, 0], n), shift([1, 0, -1], n), shift([1, -1, -1], n)]
        for i in range(1, src.k):
            e = [0] * n
            e[2 + i] = 1
            rows.append(e)
        return rows
    if src.kind == PROJ_PLANE and dst.kind in (HIRZEBRUCH, SPHERE_PRODUCT):
        back = _conversion_matrix(dst, src)
        if back is None:
            return None
        return _invert_unimodular(back)
    if src.kind in (HIRZEBRUCH, SPHERE_PRODUCT) and dst.kind in (HIRZEBRUCH, SPHERE_PRODUCT):
        mid = SurfaceLattice(PROJ_PLANE, src.k + 1)
        first = _conversion_matrix(src, mid)
        second = _conversion_matrix(mid, dst)
        if first is None or second is None:
            return None
        return _mat_mul(first, second)
    return None


def _mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, m, p = len(a), len(b), len(b[0])
    assert len(a[0]) == m
    return [[sum(a[i][t] * b[t][j] for t in range(m)) for j in range(p)] for i in range(n)]


def _invert_unimodular(m: list[list[int]]) -> list[list[int]]:
    """Exact inverse of a unimodular integer matrix (fraction-free)."""
    n = len(m)
    a = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    from fractions import Fraction

    a = [[Fraction(x) for x in row] for row in a]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = []
    for row in a:
        tail = row[n:]
        assert all(x.denominator == 1 for x in tail), "matrix was not unimodular"
        inv.append([int(x) for x in tail])
    return inv


def convert_basis(c: CohClass, target: SurfaceLattice) -> CohClass:
    """Re-express a class in another standard presentation of the same lattice.

    The conversion is the standard isometry carrying c1 to c1; converting
    forth and back is the identity.  Raises LatticeError when no such
    isometry exists (e.g. the even rank-2 lattice into a plane blow-up).
    """
    rows = _conversion_matrix(c.lattice, target)
    if rows is None:
        raise LatticeError(f"no standard isometry {c.lattice} -> {target}")
    out = [0] * target.rank
    for coeff, row in zip(c.coeffs, rows):
        for j, rj in enumerate(row):
            out[j] += coeff * rj
    return CohClass(target, tuple(out))


# ---------------------------------------------------------------------------
# exceptional classes
# ---------------------------------------------------------------------------

# Each family is (u-coefficient, multiset of E-coefficients); the complete
# list of degree-1 square-(-1) classes on a plane blow-up with k <= 8.
_EXC_FAMILIES = (
    (0, (1,)),
    (1, (-1, -1)),
    (2, (-1, -1, -1, -1, -1)),
    (3, (-2, -1, -1, -1, -1, -1, -1)),
    (4, (-2, -2, -2, -1, -1, -1, -1, -1)),
    (5, (-2, -2, -2, -2, -2, -2, -1, -1)),
    (6, (-3, -2, -2, -2, -2, -2, -2, -2)),
)


@lru_cache(maxsize=None)
def _exceptional_on_plane(k: int) -> tuple[CohClass, ...]:
    if k > 8:
        raise LatticeError("exceptional classes are only finite for k <= 8")
    lat = SurfaceLattice(PROJ_PLANE, k)
    out = set()
    for d, mults in _EXC_FAMILIES:
        support = len(mults)
        if support > k:
            continue
        for positions in itertools.permutations(range(k), support):
            coeffs = [d] + [0] * k
            for pos, m in zip(positions, mults):
                coeffs[1 + pos] = m
            out.add(tuple(coeffs))
    classes = [CohClass(lat, c) for c in sorted(out)]
    return tuple(classes)


def exceptional_classes(lat: SurfaceLattice) -> list[CohClass]:
    """All classes with self-intersection -1 and anticanonical degree 1.

    The list is finite for lattices convertible to a plane blow-up with
    k <= 8 and empty for the bare even lattice, which contains no class
    of odd square.
    """
    if lat.kind == PROJ_PLANE:
        return list(_exceptional_on_plane(lat.k))
    if lat.kind == SPHERE_PRODUCT and lat.k == 0:
        return []
    plane = SurfaceLattice(PROJ_PLANE, lat.k + 1)
    return [convert_basis(c, lat) for c in _exceptional_on_plane(plane.k)]


# ---------------------------------------------------------------------------
# sublattices: orthogonal complements and recognition of standard bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """A standard lattice embedded in an ambient one.

    rows[i] is the ambient coefficient vector of the i-th standard basis
    vector of `sub`, so classes of `sub` push to ambient classes and
    ambient classes lying in the span pull back.
    """

    sub: SurfaceLattice
    ambient: SurfaceLattice
    rows: tuple[tuple[int, ...], ...]

    def push(self, c: CohClass) -> CohClass:
        assert c.lattice == self.sub
        out = [0] * self.ambient.rank
        for coeff, row in zip(c.coeffs, self.rows):
            for j, rj in enumerate(row):
                out[j] += coeff * rj
        return CohClass(self.ambient, tuple(out))

    def pull(self, c: CohClass) -> CohClass:
        """Express an ambient class in the sub-basis; it must lie in the span."""
        assert c.lattice == self.ambient
        basis = [self.push(self.sub.basis_class(i)) for i in range(self.sub.rank)]
        gram = [[pairing(a, b) for b in basis] for a in basis]
        rhs = [pairing(a, c) for a in basis]
        sol = _solve_integer(gram, rhs)
        if sol is None:
            raise LatticeError("class does not lie in the sublattice")
        got = self.sub.zero()
        for s, i in zip(sol, range(self.sub.rank)):
            got = got + s * self.sub.basis_class(i)
        if self.push(got) != c:
            raise LatticeError("class does not lie in the sublattice")
        return got


def _solve_integer(mat: list[list[int]], rhs: list[int]) -> list[int] | None:
    """Solve an invertible integer system exactly; None for non-integral."""
    from fractions import Fraction

    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(mat, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = [row[n] for row in a]
    if any(x.denominator != 1 for x in out):
        return None
    return [int(x) for x in out]


def orthogonal_complement(lat: SurfaceLattice, classes: list[CohClass]) -> list[CohClass]:
    """Integer basis of the orthogonal complement of disjoint (-1)-classes.

    Realized by projecting the standard basis along the given classes
    (each has square -1, so v -> v + (v.C) C) and row-reducing the image.
    """
    for c in classes:
        if c.square != -1:
            raise LatticeError("blow-down class must have square -1")
    for a, b in itertools.combinations(classes, 2):
        if pairing(a, b) != 0:
            raise LatticeError("blow-down classes must be pairwise orthogonal")
    vecs = []
    for i in range(lat.rank):
        v = lat.basis_class(i)
        for c in classes:
            v = v + pairing(v, c) * c
        vecs.append(list(v.coeffs))
    reduced = _hnf_rows(vecs)
    want = lat.rank - len(classes)
    if len(reduced) != want:
        raise LatticeError("complement has unexpected rank")
    return [CohClass(lat, tuple(r)) for r in reduced]


def _hnf_rows(vecs: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite reduction; returns a basis of the row span."""
    rows = [list(v) for v in vecs if any(v)]
    out = []
    col = 0
    ncols = len(vecs[0]) if vecs else 0
    while rows and col < ncols:
        pivots = [r for r in rows if r[col] != 0]
        if not pivots:
            col += 1
            continue
        piv = min(pivots, key=lambda r: abs(r[col]))
        rows.remove(piv)
        if piv[col] < 0:
            piv = [-x for x in piv]
        done = True
        new_rows = []
        for r in rows:
            if r[col] != 0:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col] != 0:
                    done = False
            if any(r):
                new_rows.append(r)
        rows = new_rows
        if done:
            out.append(piv)
            col += 1
        else:
            rows.append(piv)
    return out


def _search_vectors(basis: list[CohClass], square: int, degree: int, c1: CohClass, bound: int = 4):
    """All integer combinations of basis with given square and c1-degree."""
    n = len(basis)
    gram = [[pairing(a, b) for b in basis] for a in basis]
    degs = [pairing(c1, b) for b in basis]
    hits = []
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=n):
        sq = sum(
            coeffs[i] * gram[i][j] * coeffs[j] for i in range(n) for j in range(n) if coeffs[i] and gram[i][j] and coeffs[j]
        )
        if sq != square:
            continue
        if sum(c * d for c, d in zip(coeffs, degs)) != degree:
            continue
        v = basis[0].lattice.zero()
        for c, b in zip(coeffs, basis):
            v = v + c * b
        hits.append(v)
    return hits


def standardize(lat: SurfaceLattice, basis: list[CohClass], c1: CohClass) -> Embedding:
    """Recognize the sublattice spanned by `basis` as a standard lattice.

    `c1` is the anticanonical class of the sublattice, expressed in ambient
    coordinates.  Exceptional directions are peeled off one at a time until
    a rank-1 or even rank-2 core remains.  Raises LatticeError when the
    span is not one of the standard del Pezzo lattices.
    """
    n = len(basis)
    peeled: list[CohClass] = []
    cur = list(basis)
    cur_c1 = c1
    while True:
        rank = len(cur)
        if rank == 1:
            u = cur[0]
            if u.square == 1 and pairing(c1, u) == 3 - len(peeled):
                pass
            if u.square != 1:
                u = -u
            if u.square != 1 or pairing(cur_c1, u) != 3:
                raise LatticeError("core is not a plane lattice")
            rows = [tuple(u.coeffs)] + [tuple(e.coeffs) for e in reversed(peeled)]
            sub = SurfaceLattice(PROJ_PLANE, len(peeled))
            emb = Embedding(sub, lat, tuple(rows))
            _check_embedding(emb, c1)
            return emb
        excs = _search_vectors(cur, -1, 1, cur_c1)
        if excs:
            e = min(excs, key=lambda v: v.coeffs)
            peeled.append(e)
            cur = [v + pairing(v, e) * e for v in cur]
            cur = [CohClass(lat, tuple(r)) for r in _hnf_rows([list(v.coeffs) for v in cur])]
            cur_c1 = cur_c1 + e
            continue
        if rank == 2:
            nulls = _search_vectors(cur, 0, 2, cur_c1)
            pairs = [
                (x, y)
                for x in nulls
                for y in nulls
                if pairing(x, y) == 1 and (2 * x + 2 * y) == cur_c1
            ]
            if not pairs:
                raise LatticeError("rank-2 core is not a standard bundle lattice")
            x, y = min(pairs, key=lambda p: (p[0].coeffs, p[1].coeffs))
            rows = [tuple(x.coeffs), tuple(y.coeffs)] + [tuple(e.coeffs) for e in reversed(peeled)]
            sub = SurfaceLattice(SPHERE_PRODUCT, len(peeled))
            emb = Embedding(sub, lat, tuple(rows))
            _check_embedding(emb, c1)
            return emb
        raise LatticeError("no exceptional vector found while standardizing")


def _check_embedding(emb: Embedding, ambient_c1: CohClass):
    sub = emb.sub
    for i in range(sub.rank):
        for j in range(sub.rank):
            got = pairing(emb.push(sub.basis_class(i)), emb.push(sub.basis_class(j)))
            if got != sub.gram[i][j]:
                raise LatticeError("standardization produced a non-isometric basis")
    if emb.push(sub.c1) != ambient_c1:
        raise LatticeError("standardization does not carry c1 to c1")
