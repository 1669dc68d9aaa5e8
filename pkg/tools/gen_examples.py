"""Build and freeze the shipped moment-data example files.

Each construction below is a moment polytope or moment graph of one of
the example manifolds, together with one circle selector per file.  The
script verifies every candidate completely (smoothness, reflexivity,
semifreeness, unique table match, localization cross-checks) and only
then freezes it under src/semifree/data/examples/.  A construction that
fails any check aborts the run.

Run from the repository root: python3 tools/gen_examples.py
"""

import itertools
import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT = ROOT / "src" / "semifree" / "data" / "examples"

from semifree.momentdata import (  # noqa: E402
    DelzantPolytope,
    GkmGraph,
    blow_up_edge,
    blow_up_vertex,
    gkm_blow_up_edge,
    verify_example,
)
from semifree.tables import all_tables  # noqa: E402


def prod(poly2, interval):
    """Polygon x interval, polygon in the last two coordinates."""
    return tuple(
        (z, x, y) for z in interval for (x, y) in poly2
    )


def p3():
    return DelzantPolytope(((0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4)))


def cube():
    return DelzantPolytope(tuple(itertools.product((0, 2), repeat=3)))


def p1p2():
    return DelzantPolytope(prod(((0, 0), (3, 0), (0, 3)), (0, 2)))


def v7():
    return blow_up_vertex(p3(), (0, 0, 4))


def popo11():
    return DelzantPolytope(
        (
            (0, 0, 0), (3, 0, 0), (0, 3, 0), (3, 3, 0),
            (0, 0, 2), (1, 0, 2), (0, 1, 2), (1, 1, 2),
        )
    )


def popo2():
    return DelzantPolytope(
        ((0, 0, 0), (5, 0, 0), (0, 5, 0), (0, 0, 2), (1, 0, 2), (0, 1, 2))
    )


def p1f1():
    return DelzantPolytope(prod(((0, 0), (3, 0), (1, 2), (0, 2)), (0, 2)))


def p1x2():
    return DelzantPolytope(prod(((0, 0), (2, 0), (0, 2), (2, 1), (1, 2)), (0, 2)))


def p1x3():
    return DelzantPolytope(
        prod(((1, 0), (2, 0), (0, 1), (0, 2), (2, 1), (1, 2)), (0, 2))
    )


def y_one_line():
    return blow_up_edge(p3(), (0, 0, 0), (0, 0, 4))


def y_two_lines():
    return blow_up_edge(y_one_line(), (4, 0, 0), (0, 4, 0))


def quadric():
    vs = ((0, -3), (3, 0), (0, 3), (-3, 0))
    edges = (
        (0, 1, (1, 1)),
        (1, 2, (-1, 1)),
        (2, 3, (-1, -1)),
        (3, 0, (1, -1)),
        (3, 1, (1, 0)),
        (0, 2, (0, 1)),
    )
    return GkmGraph(vs, edges)


def flag():
    vs = ((0, 0), (2, 0), (4, 2), (4, 4), (2, 4), (0, 2))
    edges = (
        (0, 1, (1, 0)),
        (1, 2, (1, 1)),
        (2, 3, (0, 1)),
        (3, 4, (-1, 0)),
        (4, 5, (-1, -1)),
        (5, 0, (0, -1)),
        (1, 4, (0, 1)),
        (0, 3, (1, 1)),
        (5, 2, (1, 0)),
    )
    return GkmGraph(vs, edges)


def gkm_blow(g, v1, v2):
    i = g.vertices.index(tuple(v1))
    j = g.vertices.index(tuple(v2))
    return gkm_blow_up_edge(g, i, j)


CONSTRUCTIONS = {
    "p3": (p3(), "simplex of size four (projective 3-space)"),
    "cube": (cube(), "cube of side two (product of three spheres)"),
    "p1p2": (p1p2(), "interval times size-3 triangle (line times plane)"),
    "v7": (v7(), "corner-truncated simplex (blow-up of 3-space at a point)"),
    "popo11": (popo11(), "prism over the bidegree-(1,1) projectivization"),
    "popo2": (popo2(), "tent of the degree-2 projectivization over the plane"),
    "p1f1": (p1f1(), "interval times trapezoid (line times one-point blow-up)"),
    "p1x2": (p1x2(), "interval times pentagon (line times two-point blow-up)"),
    "p1x3": (p1x3(), "interval times hexagon (line times three-point blow-up)"),
    "y1": (y_one_line(), "edge-truncated simplex (blow-up of 3-space along a line)"),
    "y2": (y_two_lines(), "simplex truncated along two skew edges"),
    "v7e1": (
        blow_up_edge(v7(), (2, 0, 2), (0, 2, 2)),
        "point blow-up then a line on the exceptional plane",
    ),
    "v7e2": (
        blow_up_edge(v7(), (0, 0, 0), (0, 0, 2)),
        "point blow-up then a line through the exceptional plane",
    ),
    "v7e3": (
        blow_up_edge(v7(), (4, 0, 0), (0, 4, 0)),
        "point blow-up then a disjoint line",
    ),
    "v7s": (
        blow_up_edge(v7(), (2, 0, 2), (4, 0, 0)),
        "point blow-up then a line meeting the exceptional plane",
    ),
    "v7exc": (
        blow_up_edge(v7(), (0, 0, 2), (2, 0, 2)),
        "point blow-up then a conic direction on the exceptional plane",
    ),
    "p1f1blow": (
        blow_up_edge(p1f1(), (2, 0, 2), (2, 1, 2)),
        "line times one-point blow-up, then a fiber times the (-1)-curve",
    ),
    "yc1c2": (
        blow_up_edge(y_two_lines(), (1, 0, 3), (0, 1, 3)),
        "two-line truncation then a ruling of one exceptional divisor",
    ),
    "i315": (
        blow_up_edge(y_two_lines(), (3, 0, 0), (3, 0, 1)),
        "two-line truncation then one exceptional ruling fiber",
    ),
    "i412": (
        blow_up_edge(
            blow_up_edge(y_two_lines(), (3, 0, 0), (3, 0, 1)), (0, 3, 0), (0, 3, 1)
        ),
        "two-line truncation then both ruling fibers of one divisor",
    ),
    "yexc2": (
        blow_up_edge(
            blow_up_edge(y_one_line(), (1, 0, 0), (0, 1, 0)), (1, 0, 3), (0, 1, 3)
        ),
        "one-line truncation then both rulings of the exceptional divisor",
    ),
    "quadric": (quadric(), "moment graph of the 3-dimensional quadric"),
    "qtilde": (
        gkm_blow(quadric(), (0, 3), (3, 0)),
        "quadric graph blown up along a boundary line",
    ),
    "qtilde2": (
        gkm_blow(quadric(), (0, -3), (0, 3)),
        "quadric graph blown up along the vertical conic",
    ),
    "q2blow": (
        gkm_blow(gkm_blow(quadric(), (0, 3), (3, 0)), (0, -3), (-3, 0)),
        "quadric graph blown up along two disjoint lines",
    ),
    "flag": (flag(), "moment graph of the full flag 3-fold"),
}


def candidate_selectors():
    out = []
    for xi in itertools.product((-1, 0, 1), repeat=3):
        if xi == (0, 0, 0):
            continue
        from math import gcd

        g = 0
        for x in xi:
            g = gcd(g, abs(x))
        if g == 1 and xi < tuple(-x for x in xi):
            out.append(xi)
    return out


def main():
    tables = all_tables()
    rows = []
    for name in ("table6dim_A", "table6dim_B", "table6dim_C"):
        for r in tables[name].rows:
            rows.append((r.label, r.tfd))

    files = []
    seen_labels = {}
    for cname, (data, desc) in CONSTRUCTIONS.items():
        if isinstance(data, DelzantPolytope):
            assert data.is_delzant(), f"{cname}: not smooth"
            assert data.is_reflexive(), f"{cname}: not reflexive"
            selectors = candidate_selectors()
            payload = {"vertices": [list(v) for v in data.vertices]}
            kind = "polytope"
        else:
            assert data.is_wellformed(), f"{cname}: malformed graph"
            selectors = [(0, 1), (1, 0), (1, 1), (1, -1)]
            payload = {
                "vertices": [list(v) for v in data.vertices],
                "edges": [[a, b, list(w)] for a, b, w in data.edges],
            }
            kind = "gkm"
        for xi in selectors:
            obj = {
                "name": f"{cname}_xi{''.join(_sgn(x) for x in xi)}",
                "kind": kind,
                "data": payload,
                "xi": list(xi),
                "expected_label": None,
                "paper_figure": desc,
            }
            report = verify_example(obj, rows)
            if not all(report["checks"].values()):
                continue
            if report["label"] is None:
                if report.get("candidates"):
                    print(f"  SKIP ambiguous {obj['name']}: {report['candidates']}")
                continue
            label = report["label"]
            if label in seen_labels:
                continue
            seen_labels[label] = obj["name"]
            obj["expected_label"] = label
            files.append(obj)
            print(f"{obj['name']:>22} -> {label}")

    assert len(files) >= 30, f"only {len(files)} files produced"
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    for obj in files:
        (OUT / f"{obj['name']}.json").write_text(json.dumps(obj, indent=1))
    print(f"wrote {len(files)} example files covering {len(seen_labels)} labels")


def _sgn(x):
    return {1: "p", 0: "0", -1: "m"}[x]


if __name__ == "__main__":
    main()
