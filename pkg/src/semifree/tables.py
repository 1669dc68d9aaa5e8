"""Assembly of the classification tables with labels and findings.

The enumerators return canonical records; this module groups them into
the three 6-dimensional summary tables plus the 4-dimensional one, keyed
by the shipped label catalog.  Survivors without a catalog label are
never dropped: they are reported as findings next to the table, as are
catalog rows that the enumeration failed to produce (there are none).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from . import fourdim
from .classifier import CaseSpec, enumerate_case
from .lattice import CohClass, HIRZEBRUCH, PROJ_PLANE, SPHERE_PRODUCT, SurfaceLattice
from .tfd import (
    TFD,
    betti_odd,
    betti_two,
    chern_cubed,
    components,
    content_key,
    top_data,
)

CASES_BY_TABLE = {
    "table6dim_A": [
        CaseSpec(0, 0, frozenset({-3, 3})),
        CaseSpec(0, 0, frozenset({-3, 0, 3})),
        CaseSpec(0, 0, frozenset({-3, -1, 1, 3})),
        CaseSpec(0, 0, frozenset({-3, -1, 0, 1, 3})),
        CaseSpec(0, 2, frozenset({-3, -1, 2})),
        CaseSpec(0, 2, frozenset({-3, -1, 1, 2})),
        CaseSpec(0, 2, frozenset({-3, -1, 0, 2})),
        CaseSpec(0, 2, frozenset({-3, -1, 0, 1, 2})),
        CaseSpec(0, 4, frozenset({-3, 1})),
        CaseSpec(0, 4, frozenset({-3, -1, 1})),
        CaseSpec(0, 4, frozenset({-3, 0, 1})),
        CaseSpec(0, 4, frozenset({-3, -1, 0, 1})),
    ],
    "table6dim_B": [
        CaseSpec(2, 2, frozenset({-2, 2})),
        CaseSpec(2, 2, frozenset({-2, 0, 2})),
        CaseSpec(2, 2, frozenset({-2, -1, 1, 2})),
        CaseSpec(2, 2, frozenset({-2, -1, 0, 1, 2})),
    ],
    "table6dim_C": [
        CaseSpec(2, 4, frozenset({-2, 1})),
        CaseSpec(2, 4, frozenset({-2, -1, 1})),
        CaseSpec(2, 4, frozenset({-2, 0, 1})),
        CaseSpec(2, 4, frozenset({-2, -1, 0, 1})),
        CaseSpec(4, 4, frozenset({-1, 1})),
        CaseSpec(4, 4, frozenset({-1, 0, 1})),
    ],
}

TABLES_6DIM = tuple(CASES_BY_TABLE)


def surface_name(lat: SurfaceLattice) -> str:
    if lat.kind == PROJ_PLANE:
        return "P2" if lat.k == 0 else f"X{lat.k}"
    base = "S2xS2" if lat.kind == SPHERE_PRODUCT else "E(S2)"
    return base if lat.k == 0 else f"{base}#{lat.k}"


def _genus_name(g: int) -> str:
    return {0: "S2", 1: "T2"}.get(g, f"Sigma_{g}")


def component_summaries(t: TFD) -> list[dict]:
    out = []
    for comp in components(t):
        entry: dict = {"level": comp.level, "dim": comp.dim, "count": comp.count}
        if comp.dim == 0:
            entry["topology"] = "pt"
        elif comp.dim == 2:
            entry["topology"] = _genus_name(comp.genus)
            entry["volume"] = int(comp.volume)
            if comp.cls is not None:
                entry["class"] = list(comp.cls.coeffs)
                entry["normal"] = list(comp.normal)
            else:
                entry["normal_chern"] = comp.normal[0]
        else:
            lat = t.lat0 if comp.level == t.crit[0] or not t.blowdowns else top_data(t).lattice
            entry["topology"] = surface_name(lat)
            entry["volume"] = str(comp.volume)
        out.append(entry)
    return out


@dataclass
class LabeledRow:
    label: str
    tfd: TFD
    flags: tuple[str, ...] = ()

    def to_json(self) -> dict:
        t = self.tfd
        return {
            "label": self.label,
            "case": {
                "dim_min": t.dim_min,
                "dim_max": t.dim_max,
                "crit": list(t.crit),
            },
            "M0": surface_name(t.lat0),
            "omega0": list(t.lat0.c1.coeffs),
            "e_seed": list(t.e_seed.coeffs),
            "m_minus": t.m_minus,
            "parts": [list(p.coeffs) for p in t.parts],
            "blowdowns": [list(b.coeffs) for b in t.blowdowns],
            "b2": betti_two(t),
            "b_odd": betti_odd(t),
            "c1_cubed": chern_cubed(t),
            "components": component_summaries(t),
            "flags": list(self.flags),
            "key": content_key(t),
        }


@dataclass
class TableResult:
    name: str
    rows: list[LabeledRow] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "table": self.name,
            "rows": [r.to_json() if isinstance(r, LabeledRow) else r for r in self.rows],
            "findings": self.findings,
        }


def _load_labels() -> dict[str, list[dict]]:
    path = resources.files("semifree.data.golden").joinpath("labels.json")
    with path.open() as fh:
        return json.load(fh)


def _row_flags(label: str, t: TFD) -> tuple[str, ...]:
    flags = []
    if label.startswith("(II-1-4."):
        k = t.lat0.k
        if k >= 5:
            flags.append("uniqueness argument differs: rigidity unknown for X_k, k >= 5")
    return tuple(flags)


def build_table(name: str, labels: dict[str, list[dict]] | None = None) -> TableResult:
    if labels is None:
        labels = _load_labels()
    catalog = labels[name]
    by_key = {entry["key"]: entry["label"] for entry in catalog}
    order = {entry["label"]: i for i, entry in enumerate(catalog)}
    result = TableResult(name)
    emitted: dict[str, TFD] = {}
    for spec in CASES_BY_TABLE[name]:
        for t in enumerate_case(spec):
            emitted[content_key(t)] = t
    labeled = []
    for key, t in emitted.items():
        label = by_key.get(key)
        if label is None:
            result.findings.append(
                {
                    "kind": "unlabeled_survivor",
                    "detail": "record passes every constraint but matches no catalog row",
                    "row": LabeledRow("(unlabeled)", t).to_json(),
                }
            )
        else:
            labeled.append(LabeledRow(label, t, _row_flags(label, t)))
    labeled.sort(key=lambda r: order[r.label])
    result.rows = labeled
    missing = set(order) - {r.label for r in labeled}
    for label in sorted(missing, key=order.get):
        result.findings.append(
            {"kind": "missing_row", "detail": f"catalog row {label} was not emitted"}
        )
    return result


def all_tables() -> dict[str, TableResult]:
    labels = _load_labels()
    out = {name: build_table(name, labels) for name in TABLES_6DIM}
    out["table4dim"] = table4dim_result()
    return out


def table4dim_result() -> TableResult:
    result = TableResult("table4dim")
    rows = []
    for label, t in fourdim.table_4dim():
        rows.append(
            {
                "label": label,
                "M": t.manifold_name(),
                "crit": list(t.crit),
                "min_level": t.min_level,
                "max_level": t.max_level,
                "e_min_plus": t.e_seed_str(),
                "interior_points": t.interior_points,
                "b2": t.b2,
                "vol_min": t.vol_min(),
                "vol_max": t.vol_max(),
            }
        )
    result.findings = []
    result.rows = rows  # type: ignore[assignment]
    return result


# --- text rendering ---------------------------------------------------------


def _class_str(lat: SurfaceLattice, coeffs) -> str:
    return str(CohClass(lat, tuple(coeffs)))


def render_markdown(res: TableResult) -> str:
    lines = [f"## {res.name}", ""]
    if res.name == "table4dim":
        lines.append("| label | M | crit | e(P_min^+) | interior pts | b2 |")
        lines.append("|---|---|---|---|---|---|")
        for row in res.rows:
            lines.append(
                f"| {row['label']} | {row['M']} | {row['crit']} | {row['e_min_plus']} "
                f"| {row['interior_points']} | {row['b2']} |"
            )
    else:
        lines.append("| label | M0 | e_seed | components | b2 | c1^3 |")
        lines.append("|---|---|---|---|---|---|")
        for row in res.rows:
            t = row.tfd
            comps = []
            for c in component_summaries(t):
                desc = f"Z_{c['level']}: {c['count']}x{c['topology']}" if c["count"] > 1 else f"Z_{c['level']}: {c['topology']}"
                if "class" in c:
                    desc += f" [{_class_str(t.lat0, c['class'])}]"
                comps.append(desc)
            lines.append(
                f"| {row.label} | {surface_name(t.lat0)} | {t.e_seed} | "
                f"{'; '.join(comps)} | {betti_two(t)} | {chern_cubed(t)} |"
            )
    if res.findings:
        lines.append("")
        lines.append(f"FINDINGS ({len(res.findings)}):")
        for f in res.findings:
            lines.append(f"- {f['kind']}: {f['detail']}")
    lines.append("")
    return "\n".join(lines)


def render_text(res: TableResult) -> str:
    return render_markdown(res).replace("|", " ")
