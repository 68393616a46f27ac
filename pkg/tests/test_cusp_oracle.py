"""Detailed checks of the numeric germ oracle (component counting only).

The oracle samples the fibers of (x, y, z) -> (x, y^3 - xy + z^2) over a
small circle around the origin and never consults the library's sign
conventions, so agreement here is evidence, not circularity.
"""

import sys

import pytest

sys.path.insert(0, "tests")

from foldcob.diagrams import (BoundaryMode, DiagramEvent, RegularArc,
                              cusp_count_boundary, cusp_count_closed,
                              reverse, validate_diagram)

import oracle_cusp


@pytest.fixture(scope="module")
def closed_diag():
    return oracle_cusp.closed_diagram(2048, 1501)


@pytest.fixture(scope="module")
def boundary_diag():
    return oracle_cusp.boundary_diagram(2048, 1501)


def test_closed_diagram_shape(closed_diag):
    assert not validate_diagram(closed_diag)
    events = closed_diag.events()
    assert sorted(ev.fiber_class for ev in events) == ["I0", "I1"]
    # the loop is born at a point (two components with the ambient
    # circle) and dies by merging into it (one component)
    by_class = {ev.fiber_class: ev for ev in events}
    assert by_class["I0"].components == 2
    assert by_class["I1"].components == 1


def test_boundary_diagram_shape(boundary_diag):
    assert not validate_diagram(boundary_diag)
    assert boundary_diag.mode is BoundaryMode.WITH_BOUNDARY
    # exactly one arc component throughout: the boundary cut survives
    for arc in boundary_diag.arcs():
        assert arc.arcs == 1
    assert sorted(ev.fiber_class for ev in boundary_diag.events()) == [
        "I0", "I1"]


def test_counts_are_plus_minus_one(closed_diag, boundary_diag):
    c = cusp_count_closed(closed_diag)
    b = cusp_count_boundary(boundary_diag)
    assert c.count in (1, -1)
    assert c.cross_check == "ok"
    assert b.cross_check == "ok"
    assert b.count == c.count


def test_reversal_negates(closed_diag):
    c = cusp_count_closed(closed_diag)
    r = cusp_count_closed(reverse(closed_diag))
    assert r.count == -c.count


def test_refinement_stability(closed_diag):
    assert oracle_cusp.closed_diagram(4096, 3001) == closed_diag


def test_raw_component_counts():
    import numpy as np
    y = np.linspace(-oracle_cusp.Y_SPAN, oracle_cusp.Y_SPAN, 2001)
    # far from the fold wedge the fiber is a single circle
    assert oracle_cusp.closed_components(3.0, y) == 1
    # at angle 0 the target sits inside the wedge: circle plus loop
    assert oracle_cusp.closed_components(0.0, y) == 2
    circles, arcs = oracle_cusp.boundary_components(0.0, y)
    assert (circles, arcs) == (1, 1)
    circles, arcs = oracle_cusp.boundary_components(3.0, y)
    assert (circles, arcs) == (0, 1)
