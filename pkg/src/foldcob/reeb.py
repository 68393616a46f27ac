"""Reeb graphs of stable Morse functions on closed surfaces.

Vertices carry distinct rational critical values.  MIN/MAX vertices
have degree 1, saddles degree 3 (two edges on one side of the critical
value, one on the other), and degree-2 vertices model the nonorientable
cross-cap level; they may occur only when ``orientable`` is False.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class VertexKind(Enum):
    MIN = "MIN"
    MAX = "MAX"
    SADDLE = "SADDLE"
    DEG2 = "DEG2"


class Category(Enum):
    ORIENTED = "oriented"
    UNORIENTED = "unoriented"
    SIMPLE_ORIENTED = "simple_oriented"
    SIMPLE_UNORIENTED = "simple_unoriented"

    @property
    def oriented(self) -> bool:
        return self in (Category.ORIENTED, Category.SIMPLE_ORIENTED)


# moves admissible in each category, recorded as metadata; the reduction
# below only uses their multiset-level consequences
ADMISSIBLE_MOVES = {
    Category.ORIENTED: ("a", "b", "c", "d", "e", "f", "g"),
    Category.UNORIENTED: ("a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"),
    Category.SIMPLE_ORIENTED: ("a", "b", "c", "d"),
    Category.SIMPLE_UNORIENTED: ("a", "b", "c", "d", "h", "i"),
}


class ReebError(ValueError):
    pass


class CategoryError(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    id: object
    value: Fraction
    kind: VertexKind


@dataclass(frozen=True)
class ReebGraph:
    orientable: bool
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[object, object], ...]

    def vertex(self, vid):
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def count(self, kind: VertexKind) -> int:
        return sum(1 for v in self.vertices if v.kind is kind)


def make_graph(orientable, vertices, edges) -> ReebGraph:
    vs = tuple(Vertex(i, Fraction(val), VertexKind(kind))
               for i, val, kind in vertices)
    es = tuple((a, b) for a, b in edges)
    return ReebGraph(orientable, vs, es)


def validate_reeb(g: ReebGraph) -> list[str]:
    out = []
    ids = [v.id for v in g.vertices]
    if len(set(ids)) != len(ids):
        out.append("duplicate vertex ids")
        return out
    byid = {v.id: v for v in g.vertices}
    values = [v.value for v in g.vertices]
    if len(set(values)) != len(values):
        out.append("vertex values not distinct")
    deg = {v.id: 0 for v in g.vertices}
    for a, b in g.edges:
        if a not in byid or b not in byid:
            out.append(f"edge ({a},{b}) references unknown vertex")
            continue
        if byid[a].value == byid[b].value:
            out.append(f"edge ({a},{b}) joins equal values")
        deg[a] += 1
        deg[b] += 1
    if any("unknown vertex" in s for s in out):
        return out
    expected = {VertexKind.MIN: 1, VertexKind.MAX: 1,
                VertexKind.SADDLE: 3, VertexKind.DEG2: 2}
    for v in g.vertices:
        if deg[v.id] != expected[v.kind]:
            out.append(f"vertex {v.id}: {v.kind.value} has degree {deg[v.id]}")
    for v in g.vertices:
        if deg[v.id] != expected[v.kind]:
            continue
        up = sum(1 for a, b in g.edges if v.id in (a, b)
                 and byid[b if a == v.id else a].value > v.value)
        down = deg[v.id] - up
        if v.kind is VertexKind.MIN and up != 1:
            out.append(f"vertex {v.id}: MIN must have its neighbor above")
        if v.kind is VertexKind.MAX and down != 1:
            out.append(f"vertex {v.id}: MAX must have its neighbor below")
        if v.kind is VertexKind.SADDLE and up not in (1, 2):
            out.append(f"vertex {v.id}: saddle needs edges on both sides")
        if v.kind is VertexKind.DEG2 and (up != 1 or down != 1):
            out.append(f"vertex {v.id}: DEG2 needs one edge on each side")
    if g.orientable and any(v.kind is VertexKind.DEG2 for v in g.vertices):
        out.append("DEG2 vertex in an orientable graph")
    return out


def _require_valid(g: ReebGraph):
    bad = validate_reeb(g)
    if bad:
        raise ReebError(bad[0])


def saddle_sign(g: ReebGraph, v: Vertex) -> int:
    """+1 for a saddle with two upper edges, -1 with two lower."""
    byid = {w.id: w for w in g.vertices}
    up = sum(1 for a, b in g.edges if v.id in (a, b)
             and byid[b if a == v.id else a].value > v.value)
    return 1 if up == 2 else -1


@dataclass(frozen=True)
class FiberEvent:
    value: Fraction
    fiber_class: str       # "I0" | "I1" | "I2"
    parity: str            # "o" | "e"
    sign: int | None       # None for I2
    components: int


@dataclass(frozen=True)
class FiberProfile:
    events: tuple[FiberEvent, ...]
    counts: dict

    def count(self, key: str) -> int:
        return self.counts[key]


_EVENT_CLASS = {VertexKind.MIN: "I0", VertexKind.MAX: "I0",
                VertexKind.SADDLE: "I1", VertexKind.DEG2: "I2"}


def fiber_profile(g: ReebGraph) -> FiberProfile:
    """One singular-fiber event per vertex, with signed totals.

    The fiber over a critical value has one component for the vertex
    plus one for every edge strictly crossing the level.  The sign of a
    parity-flipping event is +1 when the regular-level component parity
    goes even to odd with increasing value.
    """
    _require_valid(g)
    byid = {v.id: v for v in g.vertices}
    spans = [tuple(sorted((byid[a].value, byid[b].value))) for a, b in g.edges]
    events = []
    counts = {"I0_o": 0, "I0_e": 0, "I1_o": 0, "I1_e": 0, "I2": 0}
    for v in sorted(g.vertices, key=lambda w: w.value):
        strict = sum(1 for lo, hi in spans if lo < v.value < hi)
        below = sum(1 for lo, hi in spans if lo < v.value <= hi)
        components = 1 + strict
        parity = "o" if components % 2 == 1 else "e"
        cls = _EVENT_CLASS[v.kind]
        if cls == "I2":
            sign = None
            counts["I2"] += 1
        else:
            # the event flips regular parity; below-count parity decides
            sign = 1 if below % 2 == 0 else -1
            counts[f"{cls}_{parity}"] += sign
        events.append(FiberEvent(v.value, cls, parity, sign, components))
    return FiberProfile(tuple(events), counts)


@dataclass(frozen=True)
class InvariantVector:
    z: int
    w: int
    category: Category


def invariants(g: ReebGraph, category: Category) -> InvariantVector:
    _require_valid(g)
    if category.oriented and not g.orientable:
        raise CategoryError("oriented category requires an orientable graph")
    z = g.count(VertexKind.MAX) - g.count(VertexKind.MIN)
    w = 0 if category.oriented else g.count(VertexKind.DEG2) % 2
    sig = sum(saddle_sign(g, v) for v in g.vertices
              if v.kind is VertexKind.SADDLE)
    assert z == sig, "strand-count identity failed"
    prof = fiber_profile(g)
    assert z == -prof.count("I0_o") + prof.count("I0_e"), \
        "signed minimum/maximum identity failed"
    return InvariantVector(z, w, category)


@dataclass(frozen=True)
class PieceMultiset:
    n1: int  # capped star (one extremum)
    n2: int  # saddle with two upper edges
    n3: int  # saddle with two lower edges
    n4: int  # cross-cap level


def decompose(g: ReebGraph) -> PieceMultiset:
    _require_valid(g)
    n2 = sum(1 for v in g.vertices
             if v.kind is VertexKind.SADDLE and saddle_sign(g, v) == 1)
    n3 = g.count(VertexKind.SADDLE) - n2
    return PieceMultiset(
        n1=g.count(VertexKind.MIN) + g.count(VertexKind.MAX),
        n2=n2, n3=n3, n4=g.count(VertexKind.DEG2))


def euler_characteristic(g: ReebGraph) -> int:
    _require_valid(g)
    return (g.count(VertexKind.MIN) + g.count(VertexKind.MAX)
            - g.count(VertexKind.SADDLE) - g.count(VertexKind.DEG2))


def canonical_graph(z: int, w: int, category: Category) -> ReebGraph:
    """The normal-form graph with the given invariants."""
    vertices = []
    edges = []
    nid = 0
    for i in range(abs(z)):
        base = Fraction(4 * i)
        if z > 0:
            kinds = [("MIN", 0), ("SADDLE", 1), ("MAX", 2), ("MAX", 3)]
        else:
            kinds = [("MIN", 0), ("MIN", 1), ("SADDLE", 2), ("MAX", 3)]
        piece = []
        for kind, off in kinds:
            vertices.append((nid, base + off, kind))
            piece.append(nid)
            nid += 1
        if z > 0:
            edges += [(piece[0], piece[1]), (piece[1], piece[2]),
                      (piece[1], piece[3])]
        else:
            edges += [(piece[0], piece[2]), (piece[1], piece[2]),
                      (piece[2], piece[3])]
    if w:
        base = Fraction(4 * abs(z))
        vertices += [(nid, base, "MIN"), (nid + 1, base + 1, "DEG2"),
                     (nid + 2, base + 2, "MAX")]
        edges += [(nid, nid + 1), (nid + 1, nid + 2)]
    return make_graph(category.oriented, vertices, edges)


@dataclass(frozen=True)
class ReductionResult:
    invariants: InvariantVector
    trace: tuple[tuple[str, int], ...]
    canonical: ReebGraph


def reduce_to_normal_form(g: ReebGraph, category: Category) -> ReductionResult:
    """Cancel pieces until only the normal form remains.

    Moves act on the piece multiset: CANCEL_PAIR removes one saddle of
    each kind (leaving a sphere piece), CANCEL_RP2 removes two cross-cap
    pieces (unoriented categories only), DELETE_SPHERE drops a capped
    star.  The surviving data is exactly the invariant vector.
    """
    inv = invariants(g, category)
    pieces = decompose(g)
    pairs = min(pieces.n2, pieces.n3)
    rp2 = pieces.n4 // 2
    if rp2 and category.oriented:
        raise CategoryError("cross-cap cancellation outside unoriented "
                            "categories")
    spheres = pieces.n1 + pairs + rp2
    trace = []
    if pairs:
        trace.append(("CANCEL_PAIR", pairs))
    if rp2:
        trace.append(("CANCEL_RP2", rp2))
    if spheres:
        trace.append(("DELETE_SPHERE", spheres))
    assert inv.z == pieces.n2 - pieces.n3
    if not category.oriented:
        assert inv.w == pieces.n4 % 2
    return ReductionResult(inv, tuple(trace),
                           canonical_graph(inv.z, inv.w, category))


def cobordant(g1: ReebGraph, g2: ReebGraph, category: Category) -> bool:
    a = invariants(g1, category)
    b = invariants(g2, category)
    return (a.z, a.w) == (b.z, b.w)


def disjoint_union(g1: ReebGraph, g2: ReebGraph) -> ReebGraph:
    """Union with ids relabeled and values re-ranked (order-preserving)."""
    _require_valid(g1)
    _require_valid(g2)
    tagged = ([(v.value, 0, v) for v in g1.vertices]
              + [(v.value, 1, v) for v in g2.vertices])
    tagged.sort(key=lambda t: (t[0], t[1]))
    newid = {}
    vertices = []
    for rank, (_, side, v) in enumerate(tagged):
        newid[(side, v.id)] = rank
        vertices.append(Vertex(rank, Fraction(rank), v.kind))
    edges = [(newid[(0, a)], newid[(0, b)]) for a, b in g1.edges]
    edges += [(newid[(1, a)], newid[(1, b)]) for a, b in g2.edges]
    return ReebGraph(g1.orientable and g2.orientable,
                     tuple(vertices), tuple(edges))


_FLIP = {VertexKind.MIN: VertexKind.MAX, VertexKind.MAX: VertexKind.MIN,
         VertexKind.SADDLE: VertexKind.SADDLE, VertexKind.DEG2: VertexKind.DEG2}


def negate(g: ReebGraph) -> ReebGraph:
    """The graph of the negated function: values flip sign, extrema swap."""
    vertices = tuple(Vertex(v.id, -v.value, _FLIP[v.kind]) for v in g.vertices)
    return ReebGraph(g.orientable, vertices, g.edges)


def random_reeb(seed: int, size: int, orientable: bool) -> ReebGraph:
    """Deterministic random valid graph built by an upward sweep.

    Maintains the set of circles of the current regular level; each step
    opens, splits, merges, caps, or (nonorientable case) twists one of
    them, and the sweep ends by capping every open circle.
    """
    rng = random.Random(seed)
    vertices = []
    edges = []
    open_circles = []     # vertex id whose upward edge is still open
    nid = 0
    t = 0

    def add(kind):
        nonlocal nid, t
        vertices.append((nid, Fraction(t), kind))
        nid += 1
        t += 1
        return nid - 1

    for _ in range(size):
        choices = ["MIN"]
        if open_circles:
            choices += ["MAX", "SADDLE_UP"]
            if not orientable:
                choices.append("DEG2")
        if len(open_circles) >= 2:
            choices.append("SADDLE_DOWN")
        kind = rng.choice(choices)
        if kind == "MIN":
            open_circles.append(add("MIN"))
        elif kind == "MAX":
            below = open_circles.pop(rng.randrange(len(open_circles)))
            edges.append((below, add("MAX")))
        elif kind == "DEG2":
            below = open_circles.pop(rng.randrange(len(open_circles)))
            v = add("DEG2")
            edges.append((below, v))
            open_circles.append(v)
        elif kind == "SADDLE_UP":
            below = open_circles.pop(rng.randrange(len(open_circles)))
            v = add("SADDLE")
            edges.append((below, v))
            open_circles += [v, v]
        else:
            i = rng.randrange(len(open_circles))
            a = open_circles.pop(i)
            j = rng.randrange(len(open_circles))
            b = open_circles.pop(j)
            v = add("SADDLE")
            edges.append((a, v))
            edges.append((b, v))
            open_circles.append(v)
    while open_circles:
        below = open_circles.pop()
        edges.append((below, add("MAX")))
    g = make_graph(orientable, vertices, edges)
    _require_valid(g)
    return g


def sphere_graph() -> ReebGraph:
    return make_graph(True, [(0, 0, "MIN"), (1, 1, "MAX")], [(0, 1)])


def torus_graph() -> ReebGraph:
    return make_graph(
        True,
        [(0, 0, "MIN"), (1, 1, "SADDLE"), (2, 2, "SADDLE"), (3, 3, "MAX")],
        [(0, 1), (1, 2), (1, 2), (2, 3)])


def projective_plane_graph() -> ReebGraph:
    return make_graph(False, [(0, 0, "MIN"), (1, 1, "DEG2"), (2, 2, "MAX")],
                      [(0, 1), (1, 2)])


def klein_bottle_graph() -> ReebGraph:
    return make_graph(
        False,
        [(0, 0, "MIN"), (1, 1, "DEG2"), (2, 2, "DEG2"), (3, 3, "MAX")],
        [(0, 1), (1, 2), (2, 3)])


def graph_to_json(g: ReebGraph) -> dict:
    vs = sorted(g.vertices, key=lambda v: v.value)
    return {
        "orientable": g.orientable,
        "vertices": [{"id": v.id, "value": _frac_str(v.value),
                      "kind": v.kind.value} for v in vs],
        "edges": [list(e) for e in g.edges],
    }


def graph_from_json(doc) -> ReebGraph:
    if not isinstance(doc, dict):
        raise ReebError("graph document must be a JSON object")
    try:
        orientable = bool(doc["orientable"])
        vertices = tuple(Vertex(v["id"], _parse_frac(v["value"]),
                                VertexKind(v["kind"]))
                         for v in doc["vertices"])
        edges = tuple((a, b) for a, b in doc["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ReebError(f"malformed graph document: {exc}") from exc
    g = ReebGraph(orientable, vertices, edges)
    bad = validate_reeb(g)
    if bad:
        raise ReebError(bad[0])
    return g


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_frac(s) -> Fraction:
    if isinstance(s, str):
        return Fraction(s)
    if isinstance(s, int):
        return Fraction(s)
    raise ValueError(f"bad rational value {s!r}")
