"""Gromov width and Hofer-Zehnder capacity from the critical levels.

For an action whose minimal fixed component is an isolated point, the
Gromov width equals the gap from the minimal to the second-smallest
critical level and the Hofer-Zehnder capacity equals the full moment
interval.  Records whose minimum is not an isolated point fall outside
the hypothesis and are reported as unsupported rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tfd import TFD


@dataclass(frozen=True)
class CapacityRow:
    label: str
    h_max: int
    h_smin: int
    h_min: int
    w_g: int
    c_hz: int

    def __post_init__(self):
        assert self.w_g == self.h_smin - self.h_min
        assert self.c_hz == self.h_max - self.h_min
        assert self.h_min < self.h_smin <= self.h_max

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "h_max": self.h_max,
            "h_smin": self.h_smin,
            "h_min": self.h_min,
            "w_G": self.w_g,
            "c_HZ": self.c_hz,
        }


def capacities(t: TFD, label: str = "") -> CapacityRow | None:
    """Capacity row for a record with isolated minimum; None otherwise."""
    if t.dim_min != 0:
        return None
    crit = t.crit
    h_min, h_max = crit[0], crit[-1]
    h_smin = crit[1]
    return CapacityRow(
        label=label,
        h_max=h_max,
        h_smin=h_smin,
        h_min=h_min,
        w_g=h_smin - h_min,
        c_hz=h_max - h_min,
    )
