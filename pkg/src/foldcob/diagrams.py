"""Circle-valued fiber diagrams for boundary maps to S^1.

A diagram is a cyclic alternating sequence of regular arcs and singular
events, read counterclockwise.  An arc records how many circle and arc
components the regular fiber has; an event records the singular fiber
class and its component count.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .reeb import ReebGraph, fiber_profile


class BoundaryMode(Enum):
    CLOSED = "CLOSED"
    WITH_BOUNDARY = "WITH_BOUNDARY"


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class RegularArc:
    circles: int
    arcs: int = 0

    @property
    def total(self) -> int:
        return self.circles + self.arcs


@dataclass(frozen=True)
class DiagramEvent:
    fiber_class: str       # "I0" | "I1" | "I2" | "Ia"
    components: int

    @property
    def parity(self) -> str:
        return "o" if self.components % 2 == 1 else "e"


@dataclass(frozen=True)
class CircleFiberDiagram:
    mode: BoundaryMode
    cells: tuple          # (arc, event, arc, event, ...) cyclically

    def arcs(self):
        return self.cells[0::2]

    def events(self):
        return self.cells[1::2]

    def event_neighbors(self, event_index: int):
        """(arc before, arc after) the event at cells[2*event_index+1]."""
        i = 2 * event_index + 1
        after = self.cells[(i + 1) % len(self.cells)]
        return self.cells[i - 1], after


_CLASSES = {"I0", "I1", "I2", "Ia"}


def validate_diagram(d: CircleFiberDiagram) -> list[str]:
    out = []
    cells = d.cells
    if len(cells) == 0:
        return ["diagram needs at least one arc"]
    if len(cells) == 1:
        if not isinstance(cells[0], RegularArc):
            return ["single cell must be a regular arc"]
    elif len(cells) % 2 != 0:
        return ["cell list must alternate arc/event cyclically"]
    for i, cell in enumerate(cells):
        want_arc = i % 2 == 0
        if want_arc != isinstance(cell, RegularArc):
            return [f"cell {i}: expected {'arc' if want_arc else 'event'}"]
    for i, arc in enumerate(d.arcs()):
        if arc.circles < 0 or arc.arcs < 0:
            out.append(f"arc {i}: negative component count")
        if d.mode is BoundaryMode.CLOSED and arc.arcs != 0:
            out.append(f"arc {i}: arc components in a CLOSED diagram")
    for i, ev in enumerate(d.events()):
        if ev.fiber_class not in _CLASSES:
            out.append(f"event {i}: unknown class {ev.fiber_class!r}")
            continue
        if ev.components < 1:
            out.append(f"event {i}: components must be >= 1")
        if ev.fiber_class == "Ia" and d.mode is BoundaryMode.CLOSED:
            out.append(f"event {i}: boundary class in a CLOSED diagram")
        if ev.fiber_class == "I2" and d.mode is not BoundaryMode.CLOSED:
            out.append(f"event {i}: cross-cap class outside CLOSED mode")
    if out:
        return out
    for i, ev in enumerate(d.events()):
        before, after = d.event_neighbors(i)
        dc = after.circles - before.circles
        da = after.arcs - before.arcs
        if ev.fiber_class in ("I0", "I1"):
            if abs(dc) != 1 or da != 0:
                out.append(f"event {i}: {ev.fiber_class} transition must "
                           "change circles by 1 and keep arcs")
        elif ev.fiber_class == "I2":
            if dc != 0 or da != 0:
                out.append(f"event {i}: I2 transition must keep both counts")
        else:
            if abs(dc + da) != 1:
                out.append(f"event {i}: Ia transition must change the "
                           "total count by 1")
    return out


def _require_valid(d: CircleFiberDiagram):
    bad = validate_diagram(d)
    if bad:
        raise DiagramError(bad[0])


def algebraic_counts(d: CircleFiberDiagram) -> dict:
    """Signed event totals per class and parity.

    Sign is +1 when the regular total-component parity goes even to odd
    in the counterclockwise direction.  The cross-cap class I2 does not
    flip parity and is reported as an unsigned count mod 2.
    """
    _require_valid(d)
    counts = {f"{cls}_{p}": 0 for cls in ("I0", "I1", "Ia") for p in "oe"}
    counts["I2"] = 0
    for i, ev in enumerate(d.events()):
        before, after = d.event_neighbors(i)
        if ev.fiber_class == "I2":
            counts["I2"] = (counts["I2"] + 1) % 2
            continue
        sign = 1 if before.total % 2 == 0 else -1
        counts[f"{ev.fiber_class}_{ev.parity}"] += sign
    return counts


@dataclass(frozen=True)
class CuspCount:
    count: int
    cross_check: str       # "ok" | "mismatch"
    lhs: int
    rhs: int


def cusp_count_closed(d: CircleFiberDiagram) -> CuspCount:
    """Algebraic number of cusps read from a closed-fiber diagram.

    Returns -|I0_o| + |I0_e|, cross-checked against -|I1_o| + |I1_e|;
    a mismatch means the diagram is not realizable as a boundary map.
    """
    if d.mode is not BoundaryMode.CLOSED:
        raise DiagramError("closed cusp count needs a CLOSED diagram")
    c = algebraic_counts(d)
    lhs = -c["I0_o"] + c["I0_e"]
    rhs = -c["I1_o"] + c["I1_e"]
    return CuspCount(lhs, "ok" if lhs == rhs else "mismatch", lhs, rhs)


def cusp_count_boundary(d: CircleFiberDiagram) -> CuspCount:
    """Algebraic number of cusps from a boundary-fiber diagram.

    Returns -|I0_o| + |I0_e|, cross-checked against the second
    invariant expression -|Ia_o| + |Ia_e| - |I1_o| + |I1_e|; for
    diagrams without boundary classes this reduces to the closed check.
    """
    if d.mode is not BoundaryMode.WITH_BOUNDARY:
        raise DiagramError("boundary cusp count needs a WITH_BOUNDARY diagram")
    c = algebraic_counts(d)
    lhs = -c["I0_o"] + c["I0_e"]
    rhs = -c["Ia_o"] + c["Ia_e"] - c["I1_o"] + c["I1_e"]
    return CuspCount(lhs, "ok" if lhs == rhs else "mismatch", lhs, rhs)


def from_reeb(g: ReebGraph) -> CircleFiberDiagram:
    """Closed diagram of a real-valued function, viewed in the circle.

    The function misses one point of the circle, so the diagram starts
    and ends with an empty arc.
    """
    prof = fiber_profile(g)
    if not prof.events:
        return CircleFiberDiagram(BoundaryMode.CLOSED, (RegularArc(0),))
    byid = {v.id: v for v in g.vertices}
    spans = [tuple(sorted((byid[a].value, byid[b].value))) for a, b in g.edges]
    cells = [RegularArc(0)]
    for i, ev in enumerate(prof.events):
        cells.append(DiagramEvent(ev.fiber_class, ev.components))
        if i + 1 < len(prof.events):
            level = (ev.value + prof.events[i + 1].value) / 2
            circles = sum(1 for lo, hi in spans if lo < level < hi)
            cells.append(RegularArc(circles))
    d = CircleFiberDiagram(BoundaryMode.CLOSED, tuple(cells))
    _require_valid(d)
    return d


def reverse(d: CircleFiberDiagram) -> CircleFiberDiagram:
    """The diagram read in the opposite direction around the circle."""
    _require_valid(d)
    if len(d.cells) == 1:
        return d
    cells = (d.cells[0],) + tuple(reversed(d.cells[1:]))
    return CircleFiberDiagram(d.mode, cells)


def disjoint_union_diagrams(d1: CircleFiberDiagram,
                            d2: CircleFiberDiagram) -> CircleFiberDiagram:
    """Superpose two diagrams on the same circle.

    Each diagram's events keep their cyclic order; while one diagram is
    at an event, the other contributes its base arc to the fiber.
    """
    _require_valid(d1)
    _require_valid(d2)
    if d1.mode is not d2.mode:
        raise DiagramError("cannot combine diagrams of different modes")
    base1, base2 = d1.cells[0], d2.cells[0]

    def shifted(cells, other_base):
        out = []
        for i, cell in enumerate(cells):
            if i % 2 == 0:
                out.append(RegularArc(cell.circles + other_base.circles,
                                      cell.arcs + other_base.arcs))
            else:
                out.append(DiagramEvent(cell.fiber_class,
                                        cell.components + other_base.total))
        return out

    part1 = shifted(d1.cells, base2)
    part2 = shifted(d2.cells, base1)
    if len(d1.cells) == 1:
        cells = part2
    elif len(d2.cells) == 1:
        cells = part1
    else:
        cells = part1 + part2
    d = CircleFiberDiagram(d1.mode, tuple(cells))
    _require_valid(d)
    return d


def diagram_to_json(d: CircleFiberDiagram) -> dict:
    cells = []
    for i, cell in enumerate(d.cells):
        if i % 2 == 0:
            cells.append({"arc": {"circles": cell.circles, "arcs": cell.arcs}})
        else:
            cells.append({"event": {"class": cell.fiber_class,
                                    "components": cell.components}})
    return {"mode": d.mode.value, "cells": cells}


def diagram_from_json(doc) -> CircleFiberDiagram:
    if not isinstance(doc, dict):
        raise DiagramError("diagram document must be a JSON object")
    try:
        mode = BoundaryMode(doc["mode"])
        cells = []
        for cell in doc["cells"]:
            if "arc" in cell:
                cells.append(RegularArc(int(cell["arc"]["circles"]),
                                        int(cell["arc"].get("arcs", 0))))
            elif "event" in cell:
                cells.append(DiagramEvent(cell["event"]["class"],
                                          int(cell["event"]["components"])))
            else:
                raise ValueError(f"cell {cell!r} is neither arc nor event")
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramError(f"malformed diagram document: {exc}") from exc
    d = CircleFiberDiagram(mode, tuple(cells))
    bad = validate_diagram(d)
    if bad:
        raise DiagramError(bad[0])
    return d
