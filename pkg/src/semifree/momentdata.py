"""Verification of example constructions: polytopes and moment graphs.

A polytope file carries explicit integer vertices; the half-space data,
edge graph, smoothness (a lattice basis of edge directions at every
vertex), reflexivity and exact volume are all derived here.  A moment
graph file carries vertices, edges and integer weight vectors (possibly
imprimitive, in which case the sphere area is the image length divided
by the multiplicity).  For a chosen primitive circle selector the fixed
components, their levels under the balanced normalization, their
volumes, the normal degrees of fixed spheres and the Euler pairings of
extremal facets are extracted, cross-checked by localization, and
matched against the classification tables.

Everything is exact; no floating point.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import localization as loc


class MomentDataError(ValueError):
    """Malformed or unsupported moment data."""


def _gcd_vec(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def _primitive(v):
    g = _gcd_vec(v)
    if g == 0:
        raise MomentDataError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _det3(a, b, c):
    return _dot(a, _cross(b, c))


# ---------------------------------------------------------------------------
# polytopes
# ---------------------------------------------------------------------------


@dataclass
class DelzantPolytope:
    """A full-dimensional lattice polytope in dimension 3, from vertices."""

    vertices: tuple[tuple[int, int, int], ...]
    facets: list[tuple[tuple[int, int, int], int]] = field(init=False)
    edges: list[tuple[int, int]] = field(init=False)

    def __post_init__(self):
        self.vertices = tuple(tuple(int(x) for x in v) for v in self.vertices)
        if len({v for v in self.vertices}) != len(self.vertices):
            raise MomentDataError("repeated vertices")
        if len(self.vertices) < 4:
            raise MomentDataError("need at least four vertices")
        self.facets = self._compute_facets()
        self.edges = self._compute_edges()
        for i, v in enumerate(self.vertices):
            if not any(_dot(n, v) == c for n, c in self.facets):
                raise MomentDataError(f"vertex {v} is not on the boundary")

    # facets as (inward primitive normal n, offset c) with n.x >= c on P
    def _compute_facets(self):
        vs = self.vertices
        facets = {}
        for i, j, k in itertools.combinations(range(len(vs)), 3):
            n = _cross(_sub(vs[j], vs[i]), _sub(vs[k], vs[i]))
            if n == (0, 0, 0):
                continue
            n = _primitive(n)
            c = _dot(n, vs[i])
            sides = [_dot(n, v) - c for v in vs]
            if all(s >= 0 for s in sides):
                facets[(n, c)] = True
            elif all(s <= 0 for s in sides):
                nn = tuple(-x for x in n)
                facets[(nn, -c)] = True
        if len(facets) < 4:
            raise MomentDataError("vertices are not full-dimensional")
        return sorted(facets)

    def _facets_of_vertex(self, v):
        return [f for f in self.facets if _dot(f[0], v) == f[1]]

    def _compute_edges(self):
        vs = self.vertices
        edges = []
        for i, j in itertools.combinations(range(len(vs)), 2):
            common = [
                f
                for f in self.facets
                if _dot(f[0], vs[i]) == f[1] and _dot(f[0], vs[j]) == f[1]
            ]
            if len(common) < 2:
                continue
            # reject pairs with another vertex strictly between them
            d = _sub(vs[j], vs[i])
            between = False
            for t, w in enumerate(vs):
                if t in (i, j):
                    continue
                dw = _sub(w, vs[i])
                if _cross(d, dw) == (0, 0, 0) and 0 < _dot(dw, d) < _dot(d, d):
                    between = True
                    break
            if not between:
                edges.append((i, j))
        return edges

    def vertex_edge_dirs(self, i: int) -> list[tuple[int, int, int]]:
        dirs = []
        for a, b in self.edges:
            if a == i:
                dirs.append(_primitive(_sub(self.vertices[b], self.vertices[a])))
            elif b == i:
                dirs.append(_primitive(_sub(self.vertices[a], self.vertices[b])))
        return dirs

    def is_simple(self) -> bool:
        return all(len(self.vertex_edge_dirs(i)) == 3 for i in range(len(self.vertices)))

    def is_delzant(self) -> bool:
        if not self.is_simple():
            return False
        for i in range(len(self.vertices)):
            d1, d2, d3 = self.vertex_edge_dirs(i)
            if abs(_det3(d1, d2, d3)) != 1:
                return False
        return True

    def interior_lattice_points(self):
        lo = [min(v[i] for v in self.vertices) for i in range(3)]
        hi = [max(v[i] for v in self.vertices) for i in range(3)]
        pts = []
        for x in range(lo[0], hi[0] + 1):
            for y in range(lo[1], hi[1] + 1):
                for z in range(lo[2], hi[2] + 1):
                    p = (x, y, z)
                    if all(_dot(n, p) > c for n, c in self.facets):
                        pts.append(p)
        return pts

    def is_reflexive(self) -> bool:
        interior = self.interior_lattice_points()
        if len(interior) != 1:
            return False
        p = interior[0]
        return all(_dot(n, p) - c == 1 for n, c in self.facets)

    def facet_vertices(self, facet) -> list[int]:
        n, c = facet
        return [i for i, v in enumerate(self.vertices) if _dot(n, v) == c]

    def _facet_cycle(self, facet) -> list[int]:
        """Vertex indices of a facet in cyclic boundary order."""
        idx = self.facet_vertices(facet)
        adj = {i: [] for i in idx}
        for a, b in self.edges:
            if a in adj and b in adj:
                adj[a].append(b)
                adj[b].append(a)
        if any(len(v) != 2 for v in adj.values()):
            raise MomentDataError("facet boundary is not a cycle")
        start = idx[0]
        cycle = [start]
        prev, cur = None, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            nxt = nxt[0]
            if nxt == start:
                break
            cycle.append(nxt)
            prev, cur = cur, nxt
        return cycle

    def volume(self) -> Fraction:
        """Exact Euclidean volume via signed facet cones over the origin."""
        total = Fraction(0)
        for facet in self.facets:
            n, _ = facet
            cycle = self._facet_cycle(facet)
            pts = [self.vertices[i] for i in cycle]
            # orient the cycle so the facet normal n points inward
            a, b = _sub(pts[1], pts[0]), _sub(pts[2], pts[0])
            if _dot(_cross(a, b), n) < 0:
                pts.reverse()
            for t in range(1, len(pts) - 1):
                total += Fraction(_det3(pts[0], pts[t], pts[t + 1]), 6)
        return -total if total < 0 else total

    def chern_number_cubed(self) -> int:
        """Six times the volume; integral for the monotone normalization."""
        if not self.is_reflexive():
            raise MomentDataError("anticanonical cube needs a reflexive polytope")
        v = 6 * self.volume()
        if v.denominator != 1:
            raise MomentDataError("six times the volume is not integral")
        return int(v)

    # lattice-plane helpers for facet surfaces

    def _plane_basis(self, n):
        """Integer basis of the rank-2 lattice orthogonal to n."""
        cands = []
        for v in itertools.product(range(-3, 4), repeat=3):
            if v != (0, 0, 0) and _dot(v, n) == 0:
                cands.append(v)
        for a, b in itertools.combinations(cands, 2):
            if _primitive_pair_is_basis(a, b, n):
                return a, b
        raise MomentDataError("no plane basis found")

    def facet_polygon(self, facet):
        """2D lattice coordinates of the facet boundary, counterclockwise."""
        n, _ = facet
        b1, b2 = self._plane_basis(n)
        cycle = self._facet_cycle(facet)
        origin = self.vertices[cycle[0]]
        pts2 = []
        for i in cycle:
            d = _sub(self.vertices[i], origin)
            alpha, beta = _solve2(b1, b2, d)
            pts2.append((alpha, beta))
        if _shoelace(pts2) < 0:
            pts2.reverse()
        return pts2

    def facet_surface_data(self, facet):
        """Boundary self-intersections and invariants of a facet surface."""
        poly = self.facet_polygon(facet)
        n = len(poly)
        rays = []
        for i in range(n):
            a, b = poly[i], poly[(i + 1) % n]
            d = (b[0] - a[0], b[1] - a[1])
            rays.append(_primitive((-d[1], d[0])))  # inward normal of a CCW edge
        selfints = []
        for i in range(n):
            u_prev = rays[(i - 1) % n]
            u_next = rays[(i + 1) % n]
            u = rays[i]
            # u_prev + u_next = a * u with a = -D_i^2
            det = u[0] * 1  # placeholder
            a = None
            s = (u_prev[0] + u_next[0], u_prev[1] + u_next[1])
            if u[0] != 0:
                if s[0] % u[0] == 0 and s[1] == (s[0] // u[0]) * u[1]:
                    a = s[0] // u[0]
            elif u[1] != 0 and s[0] == 0 and s[1] % u[1] == 0:
                a = s[1] // u[1]
            if a is None:
                raise MomentDataError("facet fan is not smooth")
            selfints.append(-a)
            del det
        area2 = _shoelace(poly)
        return {"edges": n, "selfints": selfints, "lattice_area_x2": area2}

    def facet_surface_name(self, facet) -> str:
        data = self.facet_surface_data(facet)
        n = data["edges"]
        if n == 3:
            return "P2"
        if n == 4:
            return "S2xS2" if all(s % 2 == 0 for s in data["selfints"]) else "X1"
        return f"X{n - 2}"


def _shoelace(pts2) -> int:
    s = 0
    n = len(pts2)
    for i in range(n):
        a, b = pts2[i], pts2[(i + 1) % n]
        s += a[0] * b[1] - a[1] * b[0]
    return s


def _solve2(b1, b2, d):
    """Integer coordinates of d in the plane basis (b1, b2)."""
    # solve alpha*b1 + beta*b2 = d using two independent coordinate rows
    for i, j in itertools.combinations(range(3), 2):
        det = b1[i] * b2[j] - b1[j] * b2[i]
        if det != 0:
            alpha = Fraction(d[i] * b2[j] - d[j] * b2[i], det)
            beta = Fraction(b1[i] * d[j] - b1[j] * d[i], det)
            if alpha.denominator == 1 and beta.denominator == 1:
                cand = (int(alpha), int(beta))
                if all(
                    cand[0] * b1[t] + cand[1] * b2[t] == d[t] for t in range(3)
                ):
                    return cand
            break
    raise MomentDataError("vector does not lie in the facet plane lattice")


def _primitive_pair_is_basis(a, b, n) -> bool:
    """(a, b) spans the saturated plane lattice iff a x b = +-n (n primitive)."""
    g = _cross(a, b)
    return g == tuple(n) or g == tuple(-x for x in n)


# ---------------------------------------------------------------------------
# moment graphs
# ---------------------------------------------------------------------------


@dataclass
class GkmGraph:
    """A 3-valent moment graph in the plane with integer edge weights.

    Edge weights point from the first endpoint to the second; the sphere
    area is the image length divided by the weight multiplicity.
    """

    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int, tuple[int, int]], ...]

    def __post_init__(self):
        self.vertices = tuple(tuple(int(x) for x in v) for v in self.vertices)
        self.edges = tuple(
            (int(i), int(j), tuple(int(x) for x in w)) for i, j, w in self.edges
        )
        for i, j, w in self.edges:
            delta = _sub(self.vertices[j], self.vertices[i])
            t = self.edge_area((i, j, w))
            if tuple(t * x for x in w) != delta:
                raise MomentDataError(f"edge {i}-{j} weight does not match its image")

    def edge_area(self, edge) -> int:
        i, j, w = edge
        delta = _sub(self.vertices[j], self.vertices[i])
        g = _gcd_vec(delta)
        m = _gcd_vec(w)
        if m == 0 or g % m:
            raise MomentDataError(f"edge {i}-{j} has non-integral area")
        prim_d = _primitive(delta)
        prim_w = _primitive(w)
        if prim_d != prim_w:
            raise MomentDataError(f"edge {i}-{j} weight not parallel to its image")
        return g // m

    def vertex_weights(self, i: int) -> list[tuple[int, int]]:
        out = []
        for a, b, w in self.edges:
            if a == i:
                out.append(w)
            elif b == i:
                out.append(tuple(-x for x in w))
        return out

    def is_wellformed(self) -> bool:
        for i in range(len(self.vertices)):
            ws = self.vertex_weights(i)
            if len(ws) != 3:
                return False
            for a, b in itertools.combinations(ws, 2):
                if a[0] * b[1] - a[1] * b[0] == 0:
                    return False
        return True


# ---------------------------------------------------------------------------
# circle selectors, fixed components, extraction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FixedComponentRecord:
    level: int
    dim: int
    volume: Fraction | None
    topology: str
    normal: tuple = ()
    face: tuple = ()


def _check_xi(xi):
    xi = tuple(int(x) for x in xi)
    if _gcd_vec(xi) != 1:
        raise MomentDataError("circle selector must be a primitive vector")
    return xi


def check_semifree(data, xi) -> bool:
    """Every tangent weight at every fixed point lies in {-1, 0, +1}."""
    xi = _check_xi(xi)
    if isinstance(data, DelzantPolytope):
        for i in range(len(data.vertices)):
            for d in data.vertex_edge_dirs(i):
                if abs(_dot(d, xi)) > 1:
                    return False
        return True
    for i in range(len(data.vertices)):
        for w in data.vertex_weights(i):
            if abs(_dot(w, xi)) > 1:
                return False
    return True


def _polytope_fixed_faces(p: DelzantPolytope, xi):
    """Maximal faces on which the selector pairing is constant."""
    vert_dirs = {i: p.vertex_edge_dirs(i) for i in range(len(p.vertices))}
    flat_edges = [
        (a, b)
        for a, b in p.edges
        if _dot(_sub(p.vertices[b], p.vertices[a]), xi) == 0
    ]
    flat_facets = []
    for f in p.facets:
        idx = p.facet_vertices(f)
        vals = {_dot(p.vertices[i], xi) for i in idx}
        if len(vals) == 1:
            flat_facets.append(f)
    in_flat_facet = set()
    for f in flat_facets:
        in_flat_facet.update(p.facet_vertices(f))
    comps = []
    for f in flat_facets:
        comps.append(("facet", f))
    for a, b in flat_edges:
        if a in in_flat_facet and b in in_flat_facet:
            shared = [
                f
                for f in flat_facets
                if a in p.facet_vertices(f) and b in p.facet_vertices(f)
            ]
            if shared:
                continue  # edge of a fixed facet
        comps.append(("edge", (a, b)))
    flat_vertices = {v for e in flat_edges for v in e} | in_flat_facet
    for i in range(len(p.vertices)):
        if i not in flat_vertices:
            if all(_dot(d, xi) != 0 for d in vert_dirs[i]):
                comps.append(("vertex", i))
    return comps


def _transverse_pairs(dirs_v, dirs_w, tau):
    """Match transverse directions at the two ends of a fixed edge."""
    pairs = []
    used = set()
    for a in dirs_v:
        for idx, b in enumerate(dirs_w):
            if idx in used:
                continue
            diff = _sub(a, b)
            if _gcd_vec(diff) == 0:
                k = 0
            else:
                if _primitive(diff) not in (tau, tuple(-x for x in tau)):
                    continue
                k = _gcd_vec(diff) * (1 if _primitive(diff) == tau else -1)
            pairs.append((a, b, k))
            used.add(idx)
            break
    return pairs


def _edge_normal_degrees(dirs_v, dirs_w, tau, xi):
    """Weighted normal degrees of a fixed sphere.

    Matched transverse directions a at one end and b at the other differ
    by an integer multiple of the edge direction, a - b = d tau, and d is
    the degree of that normal line bundle; returns ((weight, degree),
    (weight, degree)) with weight the selector pairing.
    """
    trans_v = [d for d in dirs_v if _primitive(d) not in (tau, tuple(-x for x in tau))]
    trans_w = [d for d in dirs_w if _primitive(d) not in (tau, tuple(-x for x in tau))]
    pairs = _transverse_pairs(trans_v, trans_w, tau)
    if len(pairs) != 2 or len(trans_v) != 2:
        raise MomentDataError("transverse directions at a fixed edge do not match up")
    out = []
    for a, b, d in pairs:
        w = _dot(a, xi)
        if w == 0:
            raise MomentDataError("fixed edge with a zero transverse weight")
        out.append((w, d))
    return tuple(out)


def fixed_components(data, xi) -> list[FixedComponentRecord]:
    """Fixed components with balanced levels, volumes and normal data."""
    xi = _check_xi(xi)
    if not check_semifree(data, xi):
        raise MomentDataError("selector is not semifree on this data")
    raw = []
    if isinstance(data, DelzantPolytope):
        p = data
        for kind, obj in _polytope_fixed_faces(p, xi):
            if kind == "vertex":
                v = p.vertices[obj]
                weights = tuple(_dot(d, xi) for d in p.vertex_edge_dirs(obj))
                raw.append(("pt", _dot(v, xi), -sum(weights), None, (), (obj,)))
            elif kind == "edge":
                a, b = obj
                va, vb = p.vertices[a], p.vertices[b]
                tau = _primitive(_sub(vb, va))
                degs = _edge_normal_degrees(
                    p.vertex_edge_dirs(a), p.vertex_edge_dirs(b), tau, xi
                )
                length = _gcd_vec(_sub(vb, va))
                sigma = sum(
                    _dot(d, xi) for d in p.vertex_edge_dirs(a) if _dot(d, xi) != 0
                )
                raw.append(("sphere", _dot(va, xi), -sigma, Fraction(length), degs, obj))
            else:
                f = obj
                idx = p.facet_vertices(f)
                v0 = p.vertices[idx[0]]
                sigma = sum(
                    _dot(d, xi) for d in p.vertex_edge_dirs(idx[0]) if _dot(d, xi) != 0
                )
                vol = Fraction(p.facet_surface_data(f)["lattice_area_x2"])
                raw.append(("facet", _dot(v0, xi), -sigma, vol, (), tuple(idx)))
    else:
        g = data
        flat = [(e, g.edge_area(e)) for e in g.edges if _dot(e[2], xi) == 0]
        flat_vertices = {e[0] for e, _ in flat} | {e[1] for e, _ in flat}
        for (i, j, w), area in flat:
            dirs_i = g.vertex_weights(i)
            dirs_j = g.vertex_weights(j)
            tau = _primitive(w)
            degs = _edge_normal_degrees(
                [d for d in dirs_i], [d for d in dirs_j], tau, xi
            )
            sigma = sum(_dot(d, xi) for d in dirs_i if _dot(d, xi) != 0)
            raw.append(("sphere", _dot(g.vertices[i], xi), -sigma, Fraction(area), degs, (i, j)))
        for i in range(len(g.vertices)):
            if i in flat_vertices:
                continue
            ws = g.vertex_weights(i)
            raw.append(("pt", _dot(g.vertices[i], xi), -sum(_dot(w, xi) for w in ws), None, (), (i,)))
    # consistency of the balanced shift across all components
    shifts = {want - have for _, have, want, _, _, _ in raw}
    if len(shifts) != 1:
        raise MomentDataError(f"no consistent balanced shift: {sorted(shifts)}")
    shift = shifts.pop()
    out = []
    for kind, have, want, vol, degs, face in raw:
        level = have + shift
        if kind == "pt":
            out.append(FixedComponentRecord(level, 0, None, "pt", (), face))
        elif kind == "sphere":
            out.append(FixedComponentRecord(level, 2, vol, "S2", degs, face))
        else:
            facet = _facet_from_vertices(data, face)
            name = data.facet_surface_name(facet)
            out.append(FixedComponentRecord(level, 4, vol, name, (), face))
    out.sort(key=lambda r: (r.level, r.dim, r.face))
    return out


def _facet_from_vertices(p: DelzantPolytope, idx):
    for f in p.facets:
        if set(p.facet_vertices(f)) == set(idx):
            return f
    raise MomentDataError("no facet with the given vertex set")


def balanced_shift(data, xi) -> int:
    """The unique constant making every level equal minus its weight sum."""
    xi = _check_xi(xi)
    if isinstance(data, DelzantPolytope):
        i = 0
        dirs = data.vertex_edge_dirs(i)
        have = _dot(data.vertices[i], xi)
        want = -sum(_dot(d, xi) for d in dirs)
    else:
        i = 0
        ws = data.vertex_weights(i)
        have = _dot(data.vertices[i], xi)
        want = -sum(_dot(w, xi) for w in ws)
    # fixed_components asserts global consistency; reuse it
    fixed_components(data, xi)
    return want - have


# ---------------------------------------------------------------------------
# localization cross-check and Euler pairings of extremal facets
# ---------------------------------------------------------------------------


def _facet_euler_pairings(p: DelzantPolytope, facet, sign: str):
    """(c1_sq, c1_e, e_sq) for an extremal facet component.

    The Euler class of the adjacent level bundle pairs with a boundary
    sphere C as -(D.C) at a maximum and +(D.C) at a minimum, with D the
    facet divisor; D.C follows from the fan relation around the edge.
    """
    idx = p.facet_vertices(facet)
    cycle = p._facet_cycle(facet)
    n_f = facet[0]
    data = p.facet_surface_data(facet)
    n = data["edges"]
    dc = []
    for t in range(n):
        a, b = cycle[t], cycle[(t + 1) % n]
        va, vb = p.vertices[a], p.vertices[b]
        other = [
            f
            for f in p.facets
            if f != facet and _dot(f[0], va) == f[1] and _dot(f[0], vb) == f[1]
        ]
        if len(other) != 1:
            raise MomentDataError("boundary edge not on exactly two facets")
        f_j = other[0]
        third_a = _third_facet(p, a, facet, f_j)
        third_b = _third_facet(p, b, facet, f_j)
        # a n_F + b n_Fj + n_a + n_b = 0
        rhs = tuple(-(third_a[0][i] + third_b[0][i]) for i in range(3))
        coeffs = _solve_two_vectors(n_f, f_j[0], rhs)
        dc.append(coeffs[0])
    sgn = -1 if sign == loc.MAX else 1
    e_pair = [sgn * x for x in dc]
    c1_sq = 12 - n
    c1_e = sum(e_pair)
    # express e in the boundary classes: M x = e_pair with M the
    # boundary intersection matrix, then e^2 = x . e_pair
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = data["selfints"][i]
        M[i][(i + 1) % n] += 1
        M[(i + 1) % n][i] += 1
    x = _solve_consistent(M, e_pair)
    e_sq = sum(Fraction(xi_) * pi for xi_, pi in zip(x, e_pair))
    if e_sq.denominator != 1:
        raise MomentDataError("non-integral Euler square on a facet")
    return c1_sq, c1_e, int(e_sq)


def _third_facet(p: DelzantPolytope, vi, f1, f2):
    fs = [f for f in p._facets_of_vertex(p.vertices[vi]) if f not in (f1, f2)]
    if len(fs) != 1:
        raise MomentDataError("vertex not simple")
    return fs[0]


def _solve_two_vectors(u, v, rhs):
    """Solve a u + b v = rhs exactly (consistent overdetermined system)."""
    for i, j in itertools.combinations(range(3), 2):
        det = u[i] * v[j] - u[j] * v[i]
        if det:
            a = Fraction(rhs[i] * v[j] - rhs[j] * v[i], det)
            b = Fraction(u[i] * rhs[j] - u[j] * rhs[i], det)
            if all(a * u[t] + b * v[t] == rhs[t] for t in range(3)):
                return a, b
            raise MomentDataError("incompatible fan relation")
    raise MomentDataError("parallel facet normals")


def _solve_consistent(M, rhs):
    """One exact solution of a consistent rational linear system."""
    n = len(M)
    a = [[Fraction(M[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if a[i][n] != 0:
            raise MomentDataError("inconsistent intersection system")
    x = [Fraction(0)] * n
    for row, c in enumerate(piv_cols):
        x[c] = a[row][n]
    return x


def local_records(data, xi) -> list[loc.FixedComponentLocal]:
    """Localization records extracted from the moment data."""
    xi = _check_xi(xi)
    comps = fixed_components(data, xi)
    levels = [c.level for c in comps]
    lo, hi = min(levels), max(levels)
    recs: list[loc.FixedComponentLocal] = []
    for c in comps:
        if c.dim == 0:
            weights = _point_weights(data, xi, c.face[0])
            recs.append(loc.Point(weights))
        elif c.dim == 2:
            weights = sorted(w for w, _ in c.normal)
            total_deg = sum(d for _, d in c.normal)
            if weights == [1, 1]:
                if c.level != lo:
                    raise MomentDataError("sphere with two positive weights off the bottom")
                if c.volume != 2 + total_deg:
                    raise MomentDataError("monotone area mismatch at the minimum sphere")
                recs.append(loc.ExtremalSurface(loc.MIN, total_deg, int(c.volume)))
            elif weights == [-1, -1]:
                if c.level != hi:
                    raise MomentDataError("sphere with two negative weights off the top")
                if c.volume != 2 + total_deg:
                    raise MomentDataError("monotone area mismatch at the maximum sphere")
                recs.append(loc.ExtremalSurface(loc.MAX, total_deg, int(c.volume)))
            else:
                b_neg = next(d for w, d in c.normal if w == -1)
                b_pos = next(d for w, d in c.normal if w == 1)
                if c.volume != 2 + b_neg + b_pos:
                    raise MomentDataError("monotone area mismatch on an interior sphere")
                recs.append(loc.Surface(b_neg, b_pos, int(c.volume)))
        else:
            p = data
            facet = _facet_from_vertices(p, c.face)
            sign = loc.MIN if c.level == lo else loc.MAX
            c1_sq, c1_e, e_sq = _facet_euler_pairings(p, facet, sign)
            recs.append(_FacetTerm(sign, c1_sq, c1_e, e_sq))
    return recs


@dataclass(frozen=True)
class _FacetTerm:
    """Extremal facet contribution carried by its pairing numbers."""

    sign: str
    c1_sq: int
    c1_e: int
    e_sq: int


def _facet_contribution(term: _FacetTerm, power: int):
    return loc.fourmanifold_contribution_from_numbers(
        term.sign, term.c1_sq, term.c1_e, term.e_sq, power
    )


def integrate_moment(recs, power: int) -> Fraction:
    total = Fraction(0)
    for r in recs:
        if isinstance(r, _FacetTerm):
            total += _facet_contribution(r, power).coeff
        else:
            total += loc.contribution(r, power).coeff
    return total


def _point_weights(data, xi, vi):
    if isinstance(data, DelzantPolytope):
        dirs = data.vertex_edge_dirs(vi)
    else:
        dirs = data.vertex_weights(vi)
    return tuple(_dot(d, xi) for d in dirs)


# ---------------------------------------------------------------------------
# extraction signature and table matching
# ---------------------------------------------------------------------------


def extraction_signature(data, xi):
    """Coarse invariants used for matching against the classified rows."""
    comps = fixed_components(data, xi)
    recs = local_records(data, xi)
    for p in (0, 1):
        if integrate_moment(recs, p) != 0:
            raise MomentDataError(f"degree-{2*p} localization residue is nonzero")
    c1_cubed = integrate_moment(recs, 3)
    assert c1_cubed.denominator == 1
    per_level = {}
    for c in comps:
        per_level.setdefault(c.level, []).append(c)
    sig_levels = []
    for level in sorted(per_level):
        entries = sorted(
            (
                c.dim,
                str(c.volume) if c.volume is not None else "",
                c.topology if c.dim == 4 else "",
            )
            for c in per_level[level]
        )
        sig_levels.append((level, tuple(entries)))
    betti = _betti_from_components(comps)
    return {
        "levels": tuple(sig_levels),
        "c1_cubed": int(c1_cubed),
        "b2": betti[2],
        "b_odd": betti[1] + betti[3] + betti[5],
    }


def _betti_from_components(comps):
    coeffs = [0] * 7
    levels = [c.level for c in comps]
    lo, hi = min(levels), max(levels)
    for c in comps:
        if c.dim == 0:
            index = {lo: 0, hi: 6}.get(c.level)
            if index is None:
                index = 2 if c.level < 0 else 4
            coeffs[index] += 1
        elif c.dim == 2:
            index = 0 if c.level == lo else (4 if c.level == hi else 2)
            coeffs[index] += 1
            coeffs[index + 2] += 1
        else:
            index = 0 if c.level == lo else 2
            coeffs[index] += 1
            coeffs[index + 4] += 1
            coeffs[index + 2] += _surface_b2(c.topology)
    return coeffs


def _surface_b2(name: str) -> int:
    if name == "P2":
        return 1
    if name == "S2xS2":
        return 2
    if name.startswith("X"):
        return int(name[1:]) + 1
    raise MomentDataError(f"unknown surface name {name}")


def classified_signature(tfd, label: str):
    from .tables import surface_name
    from .tfd import betti_odd, betti_two, chern_cubed, components, top_data

    per_level = {}
    for c in components(tfd):
        for _ in range(c.count):
            per_level.setdefault(c.level, []).append(c)
    names = {}
    if tfd.dim_min == 4:
        names[tfd.min_level] = surface_name(tfd.lat0)
    if tfd.dim_max == 4:
        names[tfd.max_level] = surface_name(
            top_data(tfd).lattice if tfd.blowdowns else tfd.lat0
        )
    sig_levels = []
    for level in sorted(per_level):
        entries = sorted(
            (
                c.dim,
                str(c.volume) if c.dim != 0 else "",
                names.get(level, "") if c.dim == 4 else "",
            )
            for c in per_level[level]
        )
        sig_levels.append((level, tuple(entries)))
    return {
        "levels": tuple(sig_levels),
        "c1_cubed": chern_cubed(tfd),
        "b2": betti_two(tfd),
        "b_odd": betti_odd(tfd),
    }


def match_tfd(data, xi, table_rows) -> tuple[str | None, list[str]]:
    """Match the extraction against classified rows.

    table_rows: iterable of (label, tfd).  Returns (label, candidates):
    the unique label, or None with the ambiguous candidate list (empty
    when nothing matches).  Orientation is normalized by also trying the
    reversed selector.
    """
    candidates = []
    for flip in (False, True):
        sel = tuple(-x for x in xi) if flip else tuple(xi)
        try:
            sig = extraction_signature(data, sel)
        except MomentDataError:
            continue
        for label, t in table_rows:
            if classified_signature(t, label) == sig:
                candidates.append(label)
        if candidates:
            break
    candidates = sorted(set(candidates))
    if len(candidates) == 1:
        return candidates[0], candidates
    return None, candidates


# ---------------------------------------------------------------------------
# surgeries used to build the shipped example files
# ---------------------------------------------------------------------------


def blow_up_vertex(p: DelzantPolytope, v) -> DelzantPolytope:
    """Monotone point blow-up: truncate at lattice distance two, so the
    exceptional plane carries lines of area one."""
    v = tuple(v)
    i = p.vertices.index(v)
    dirs = p.vertex_edge_dirs(i)
    if len(dirs) != 3:
        raise MomentDataError("vertex blow-up needs a simple vertex")
    new = [_add(v, _add(d, d)) for d in dirs]
    rest = [w for w in p.vertices if w != v]
    return DelzantPolytope(tuple(rest + new))


def blow_up_edge(p: DelzantPolytope, v1, v2) -> DelzantPolytope:
    v1, v2 = tuple(v1), tuple(v2)
    i1, i2 = p.vertices.index(v1), p.vertices.index(v2)
    if tuple(sorted((i1, i2))) not in {tuple(sorted(e)) for e in p.edges}:
        raise MomentDataError("not an edge of the polytope")
    tau = _primitive(_sub(v2, v1))
    new = []
    for i, v in ((i1, v1), (i2, v2)):
        for d in p.vertex_edge_dirs(i):
            if _primitive(d) not in (tau, tuple(-x for x in tau)):
                new.append(_add(v, d))
    rest = [w for w in p.vertices if w not in (v1, v2)]
    return DelzantPolytope(tuple(rest + new))


def gkm_blow_up_edge(g: GkmGraph, i: int, j: int) -> GkmGraph:
    """Blow up an invariant sphere of a moment graph along its edge."""
    edge = next(
        (e for e in g.edges if {e[0], e[1]} == {i, j}), None
    )
    if edge is None:
        raise MomentDataError("not an edge of the graph")
    vi, vj = g.vertices[i], g.vertices[j]
    tau = _primitive(_sub(vj, vi))
    dirs_i = [w for w in g.vertex_weights(i) if _primitive(w) not in (tau, tuple(-x for x in tau))]
    dirs_j = [w for w in g.vertex_weights(j) if _primitive(w) not in (tau, tuple(-x for x in tau))]
    pairs = _transverse_pairs(dirs_i, dirs_j, tau)
    if len(pairs) != 2:
        raise MomentDataError("edge blow-up needs matched transverse directions")
    verts = list(g.vertices)
    new_idx = {}
    for t, (a, b, _) in enumerate(pairs):
        new_idx[("i", t)] = len(verts)
        verts.append(_add(vi, _primitive(a)))
        new_idx[("j", t)] = len(verts)
        verts.append(_add(vj, _primitive(b)))
    edges = []
    for a, b, w in g.edges:
        if {a, b} == {i, j}:
            continue
        if a in (i, j) or b in (i, j):
            # reattach the truncated transverse edge to the new vertex
            end, far = (a, b) if a in (i, j) else (b, a)
            side = "i" if end == i else "j"
            wdir = w if a == end else tuple(-x for x in w)
            t = _match_pair_index(pairs, side, wdir)
            edges.append((new_idx[(side, t)], far, wdir))
        else:
            edges.append((a, b, w))
    # exceptional fibers and the two sections
    a0, b0, _ = pairs[0]
    a1, b1, _ = pairs[1]
    edges.append((new_idx[("i", 0)], new_idx[("i", 1)], _sub(_primitive(a1), _primitive(a0))))
    edges.append((new_idx[("j", 0)], new_idx[("j", 1)], _sub(_primitive(b1), _primitive(b0))))
    edges.append((new_idx[("i", 0)], new_idx[("j", 0)], tau))
    edges.append((new_idx[("i", 1)], new_idx[("j", 1)], tau))
    # drop the removed vertices, reindexing
    keep = [t for t in range(len(verts)) if t not in (i, j)]
    remap = {old: new for new, old in enumerate(keep)}
    verts2 = tuple(verts[t] for t in keep)
    edges2 = tuple((remap[a], remap[b], w) for a, b, w in edges)
    return GkmGraph(verts2, edges2)


def _match_pair_index(pairs, side, wdir):
    for t, (a, b, _) in enumerate(pairs):
        ref = a if side == "i" else b
        if _primitive(ref) == _primitive(wdir):
            return t
    raise MomentDataError("transverse direction not matched in blow-up")


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------


def load_example(obj_or_path):
    """Load an example file: {name, kind, data, xi, expected_label, ...}."""
    if isinstance(obj_or_path, (str,)):
        with open(obj_or_path) as fh:
            obj = json.load(fh)
    else:
        obj = obj_or_path
    kind = obj["kind"]
    if kind == "polytope":
        data = DelzantPolytope(tuple(tuple(v) for v in obj["data"]["vertices"]))
    elif kind == "gkm":
        data = GkmGraph(
            tuple(tuple(v) for v in obj["data"]["vertices"]),
            tuple((e[0], e[1], tuple(e[2])) for e in obj["data"]["edges"]),
        )
    else:
        raise MomentDataError(f"unknown example kind {kind!r}")
    return obj, data


def verify_example(obj_or_path, table_rows) -> dict:
    """Run every check on one example file; returns a report dict."""
    obj, data = load_example(obj_or_path)
    xi = tuple(obj["xi"])
    report = {"name": obj.get("name"), "kind": obj["kind"], "checks": {}}
    if isinstance(data, DelzantPolytope):
        report["checks"]["delzant"] = data.is_delzant()
        report["checks"]["reflexive"] = data.is_reflexive()
    else:
        report["checks"]["wellformed"] = data.is_wellformed()
    report["checks"]["semifree"] = check_semifree(data, xi)
    if not all(report["checks"].values()):
        report["label"] = None
        report["expected_label"] = obj.get("expected_label")
        report["ok"] = False
        return report
    label, candidates = match_tfd(data, xi, table_rows)
    report["label"] = label
    report["candidates"] = candidates
    report["expected_label"] = obj.get("expected_label")
    recs = local_records(data, xi)
    report["c1_cubed_localization"] = int(integrate_moment(recs, 3))
    if isinstance(data, DelzantPolytope) and data.is_reflexive():
        report["c1_cubed_volume"] = data.chern_number_cubed()
    report["ok"] = label is not None and label == obj.get("expected_label")
    return report
