"""Named singular-fiber classes and the universal complexes built on them.

Generator labels are ``<class>_<parity>`` with parity ``o`` (odd number
of fiber components) or ``e`` (even); the auxiliary degree-2 generator
of the free approximation is plain ``A``.  Within each degree the
generators are ordered by class name (ASCII lexicographic) with ``o``
before ``e``; ``A`` is appended last.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum

from .complexes import (ChainMap, ComplexError, Direction, MixedComplex,
                        RingTag, hom_dual, induced_is_isomorphism,
                        induced_map, is_surjective_on_degree, make_complex,
                        validate_chain_map, validate_complex)
from .intmat import IntMatrix


class CatalogId(Enum):
    CO32 = "CO32"
    CO32_ORI = "CO32_ORI"
    SCO32 = "SCO32"
    SCO32_ORI = "SCO32_ORI"
    CO21 = "CO21"
    C32_Z2 = "C32_Z2"
    C32_Z2_SIMPLE = "C32_Z2_SIMPLE"
    C21_Z2 = "C21_Z2"
    V32 = "V32"
    F32 = "F32"
    CUSP32 = "CUSP32"
    BCUSP32 = "BCUSP32"


@dataclass(frozen=True)
class FiberClass:
    name: str
    parity: str          # "o" | "e"
    codim: int
    coorientable: bool
    cusp_class: bool = False

    @property
    def label(self) -> str:
        return f"{self.name}_{self.parity}"


def _ordered(names):
    """Both parities of each class, sorted by (name, o-before-e)."""
    out = []
    for name in sorted(names):
        out.append(f"{name}_o")
        out.append(f"{name}_e")
    return out


def _gens(labels, ring_of):
    return [(lbl, ring_of(lbl)) for lbl in labels]


def _free(_lbl):
    return RingTag.FREE


def _z2(_lbl):
    return RingTag.TWO_TORSION


# degree-2 classes of the closed three-to-two catalogs (Z2 / mixed side)
_DEG2_CLOSED = ["II00", "II01", "II02", "II11", "II12", "II22",
                "II3", "II4", "II5", "II6", "II7"]
_COOR_CLOSED = {"0", "I0", "I1", "II01", "IIa"}
_COOR_BOUNDARY = {"0", "I0", "I1", "Ia", "II01", "II0a", "II1a",
                  "IIb", "IIg", "IIa"}
_CUSP_CLASSES = {"IIa", "IIg"}


def fiber_classes(catalog_id: CatalogId) -> tuple[FiberClass, ...]:
    """The classes appearing in a catalog, in generator order."""
    cx = catalog(catalog_id)
    coor = _COOR_BOUNDARY if catalog_id is CatalogId.BCUSP32 else _COOR_CLOSED
    out = []
    for deg in range(cx.top_degree + 1):
        for g in cx.generators[deg]:
            if g.name == "A":
                continue
            name, parity = g.name.rsplit("_", 1)
            out.append(FiberClass(name, parity, deg, name in coor,
                                  name in _CUSP_CLASSES))
    return tuple(out)


def _both(formula_per_class):
    """Expand {class: image} to both parities with the same image."""
    out = {}
    for cls, image in formula_per_class.items():
        out[f"{cls}_o"] = image
        out[f"{cls}_e"] = image
    return out


_ALL_FOLDS = {"I0_o": 1, "I0_e": 1, "I1_o": 1, "I1_e": 1}


def _co32():
    delta0 = {"0_o": dict(_ALL_FOLDS),
              "0_e": {k: -v for k, v in _ALL_FOLDS.items()}}
    delta1 = {"I0_o": {"II01_o": 1, "II01_e": -1},
              "I0_e": {"II01_o": 1, "II01_e": -1},
              "I1_o": {"II01_o": -1, "II01_e": 1},
              "I1_e": {"II01_o": -1, "II01_e": 1}}
    return make_complex(
        Direction.COHOMOLOGICAL,
        [_gens(_ordered(["0"]), _free),
         _gens(_ordered(["I0", "I1"]), _free),
         _gens(_ordered(["II01"]), _free)],
        [delta0, delta1])


def _co21():
    delta0 = {"0_o": dict(_ALL_FOLDS),
              "0_e": {k: -v for k, v in _ALL_FOLDS.items()}}
    return make_complex(
        Direction.COHOMOLOGICAL,
        [_gens(_ordered(["0"]), _free),
         _gens(_ordered(["I0", "I1"]), _free)],
        [delta0])


_Z2_DELTA0 = {"0_o": dict(_ALL_FOLDS), "0_e": dict(_ALL_FOLDS)}
_Z2_DELTA1 = _both({
    "I0": {"II01_o": 1, "II01_e": 1},
    "I1": {"II01_o": 1, "II01_e": 1},
    "I2": {"II02_o": 1, "II02_e": 1, "II12_o": 1, "II12_e": 1,
           "II6_o": 1, "II6_e": 1},
})


def _c32_z2(simple=False):
    deg2 = [n for n in _DEG2_CLOSED if not (simple and n == "II6")]
    delta1 = {src: {t: c for t, c in img.items()
                    if not (simple and t.startswith("II6_"))}
              for src, img in _Z2_DELTA1.items()}
    return make_complex(
        Direction.COHOMOLOGICAL,
        [_gens(_ordered(["0"]), _z2),
         _gens(_ordered(["I0", "I1", "I2"]), _z2),
         _gens(_ordered(deg2), _z2)],
        [dict(_Z2_DELTA0), delta1])


def _c21_z2():
    return make_complex(
        Direction.COHOMOLOGICAL,
        [_gens(_ordered(["0"]), _z2),
         _gens(_ordered(["I0", "I1", "I2"]), _z2)],
        [dict(_Z2_DELTA0)])


_V32_D1 = _both({
    "I0": {"0_o": 1, "0_e": -1},
    "I1": {"0_o": 1, "0_e": -1},
    "I2": {},
})
_V32_D2 = {
    "II01_o": {"I0_o": 1, "I0_e": 1, "I1_o": -1, "I1_e": -1},
    "II01_e": {"I0_o": -1, "I0_e": -1, "I1_o": 1, "I1_e": 1},
    **_both({
        "II00": {}, "II11": {}, "II22": {}, "II3": {}, "II4": {},
        "II5": {}, "II7": {},
        "II02": {"I2_o": 1, "I2_e": 1},
        "II12": {"I2_o": 1, "I2_e": 1},
        "II6": {"I2_o": 1, "I2_e": 1},
    }),
}


def _v32_ring(lbl):
    name = lbl.rsplit("_", 1)[0]
    return RingTag.FREE if name in _COOR_CLOSED else RingTag.TWO_TORSION


def _v32():
    return make_complex(
        Direction.HOMOLOGICAL,
        [_gens(_ordered(["0"]), _v32_ring),
         _gens(_ordered(["I0", "I1", "I2"]), _v32_ring),
         _gens(_ordered(_DEG2_CLOSED), _v32_ring)],
        [_V32_D1, _V32_D2])


def _f32():
    d2 = dict(_V32_D2)
    d2["A"] = {"I2_o": 2}
    degrees = [_gens(_ordered(["0"]), _free),
               _gens(_ordered(["I0", "I1", "I2"]), _free),
               _gens(_ordered(_DEG2_CLOSED) + ["A"], _free)]
    return make_complex(Direction.HOMOLOGICAL, degrees, [_V32_D1, d2])


def _cusp32():
    delta0 = {"0_o": dict(_ALL_FOLDS),
              "0_e": {k: -v for k, v in _ALL_FOLDS.items()}}
    delta1 = {"I0_o": {"II01_o": 1, "II01_e": -1, "IIa_e": 1},
              "I0_e": {"II01_o": 1, "II01_e": -1, "IIa_o": -1},
              "I1_o": {"II01_o": -1, "II01_e": 1, "IIa_o": 1},
              "I1_e": {"II01_o": -1, "II01_e": 1, "IIa_e": -1}}
    return make_complex(
        Direction.COHOMOLOGICAL,
        [_gens(_ordered(["0"]), _free),
         _gens(_ordered(["I0", "I1"]), _free),
         _gens(_ordered(["II01", "IIa"]), _free)],
        [delta0, delta1])


def _bcusp32():
    deg1 = _ordered(["I0", "I1", "Ia"])
    delta0 = {"0_o": {lbl: 1 for lbl in deg1},
              "0_e": {lbl: -1 for lbl in deg1}}
    delta1 = {
        "I0_o": {"II01_o": 1, "II01_e": -1, "IIa_e": -1,
                 "II0a_o": -1, "II0a_e": 1, "IIg_e": -1},
        "I0_e": {"II01_o": 1, "II01_e": -1, "IIa_o": 1,
                 "II0a_o": -1, "II0a_e": 1, "IIg_o": 1},
        "I1_o": {"II01_o": -1, "II01_e": 1, "IIa_o": -1,
                 "II1a_o": -1, "II1a_e": 1, "IIb_e": -1},
        "I1_e": {"II01_o": -1, "II01_e": 1, "IIa_e": 1,
                 "II1a_o": -1, "II1a_e": 1, "IIb_o": 1},
        "Ia_o": {"II0a_o": 1, "II0a_e": -1, "II1a_o": 1, "II1a_e": -1,
                 "IIb_e": 1, "IIg_o": -1},
        "Ia_e": {"II0a_o": 1, "II0a_e": -1, "II1a_o": 1, "II1a_e": -1,
                 "IIb_o": -1, "IIg_e": 1},
    }
    return make_complex(
        Direction.COHOMOLOGICAL,
        [_gens(_ordered(["0"]), _free),
         _gens(deg1, _free),
         _gens(_ordered(["II01", "II0a", "II1a", "IIa", "IIb", "IIg"]), _free)],
        [delta0, delta1])


_BUILDERS = {
    CatalogId.CO32: _co32,
    CatalogId.CO32_ORI: _co32,
    CatalogId.SCO32: _co32,
    CatalogId.SCO32_ORI: _co32,
    CatalogId.CO21: _co21,
    CatalogId.C32_Z2: _c32_z2,
    CatalogId.C32_Z2_SIMPLE: lambda: _c32_z2(simple=True),
    CatalogId.C21_Z2: _c21_z2,
    CatalogId.V32: _v32,
    CatalogId.F32: _f32,
    CatalogId.CUSP32: _cusp32,
    CatalogId.BCUSP32: _bcusp32,
}


@functools.lru_cache(maxsize=None)
def catalog(catalog_id: CatalogId) -> MixedComplex:
    if catalog_id not in _BUILDERS:
        raise KeyError(f"unknown catalog id {catalog_id}")
    cx = _BUILDERS[catalog_id]()
    bad = validate_complex(cx)
    if bad:
        raise ComplexError(f"catalog {catalog_id.value} invalid: {bad[0]}")
    return cx


def _v21():
    """Degree-truncated n=2 analogue of V32 (internal suspension source)."""
    return make_complex(
        Direction.HOMOLOGICAL,
        [_gens(_ordered(["0"]), _v32_ring),
         _gens(_ordered(["I0", "I1", "I2"]), _v32_ring)],
        [_V32_D1])


@dataclass(frozen=True)
class SuspensionMaps:
    """Name-preserving chain map from the n=2 to the n=3 complex, with
    the pullback it induces on the co-orientable / Z2 cochain side."""
    chain: ChainMap
    pullback: ChainMap


@functools.lru_cache(maxsize=None)
def suspension_map(variant: str) -> SuspensionMaps:
    """variant 'co_Z': pullback CO32 -> CO21; 'full_Z2': C32_Z2 -> C21_Z2."""
    if variant not in ("co_Z", "full_Z2"):
        raise ValueError(f"unknown suspension variant {variant!r}")
    v21, v32 = _v21(), catalog(CatalogId.V32)
    chain = ChainMap(v21, v32,
                     (IntMatrix.identity(2), IntMatrix.identity(6)))
    if validate_chain_map(chain):
        raise ComplexError("suspension chain map fails chain condition")
    if variant == "co_Z":
        src = catalog(CatalogId.CO32)
        tgt = catalog(CatalogId.CO21)
        mats = (IntMatrix.identity(2), IntMatrix.identity(4))
    else:
        src = catalog(CatalogId.C32_Z2)
        tgt = catalog(CatalogId.C21_Z2)
        mats = (IntMatrix.identity(2), IntMatrix.identity(6))
    pullback = ChainMap(src, tgt, mats)
    if validate_chain_map(pullback):
        raise ComplexError("suspension pullback fails chain condition")
    return SuspensionMaps(chain, pullback)


def free_approximation(v: MixedComplex):
    """The all-free resolution of the mixed closed catalog.

    Returns (f, lam) where f adds the generator A with boundary twice
    I2_o, and lam collapses A and reduces torsion coordinates.  Only the
    specific mixed catalog is supported.
    """
    if v != catalog(CatalogId.V32):
        raise ComplexError("free approximation is defined for the V32 "
                           "catalog only")
    f = catalog(CatalogId.F32)
    mats = []
    for d in range(3):
        m = [[0] * f.n(d) for _ in range(v.n(d))]
        names = v.names(d)
        for c, g in enumerate(f.generators[d]):
            if g.name in names:
                m[names.index(g.name)][c] = 1
        mats.append(IntMatrix.from_rows(m, f.n(d)))
    lam = ChainMap(f, v, tuple(mats))
    bad = validate_chain_map(lam)
    if bad:
        raise ComplexError(f"collapse map fails: {bad[0]}")
    for d in range(3):
        if not is_surjective_on_degree(lam, d):
            raise ComplexError(f"collapse map not surjective at degree {d}")
    for d in (0, 1):
        if not induced_is_isomorphism(lam, d):
            raise ComplexError(
                f"collapse map not a homology isomorphism at degree {d}")
    return f, lam


@dataclass(frozen=True)
class Hypercohomology:
    group: "object"              # AbelianGroupPresentation
    comparison: IntMatrix
    comparison_is_isomorphism: bool


def hypercohomology(v: MixedComplex, g: RingTag, deg: int) -> Hypercohomology:
    """Cohomology of the dualized free approximation, with the
    comparison map from the cohomology of the dualized mixed complex."""
    if deg not in (0, 1, 2):
        raise ComplexError("degree out of range 0..2")
    f, lam = free_approximation(v)
    dual_v = hom_dual(v, g)
    dual_f = hom_dual(f, g)
    mats = []
    for d in range(3):
        lm = lam.matrices[d]
        if g is RingTag.FREE:
            keep = [i for i, gen in enumerate(v.generators[d])
                    if gen.ring is RingTag.FREE]
            m = lm.submatrix(keep, range(f.n(d))).transpose()
        else:
            m = lm.transpose().mod2()
        mats.append(m)
    dual_lam = ChainMap(dual_v, dual_f, tuple(mats))
    bad = validate_chain_map(dual_lam)
    if bad:
        raise ComplexError(f"dualized collapse map fails: {bad[0]}")
    from .complexes import homology
    group = homology(dual_f, deg)
    comparison = induced_map(dual_lam, deg)
    iso = induced_is_isomorphism(dual_lam, deg)
    return Hypercohomology(group, comparison, iso)


@dataclass(frozen=True)
class CountingIdentity:
    """Sum of f-side and F-side signed fiber counts that equals zero.

    Reads as sum(c * count(X, f)) + sum(c * count(Y, F)) = 0 where the
    f terms range over codimension-1 classes of a generic function and
    the F terms over codimension-2 classes of a generic homotopy.
    """
    f_terms: tuple[tuple[str, int], ...]
    F_terms: tuple[tuple[str, int], ...]


def counting_identities(catalog_id: CatalogId) -> tuple[CountingIdentity, ...]:
    """Boundary-of-a-chain counting identities of the catalog.

    For each codimension-1 class X the signed number of X-fibers of the
    boundary function equals minus the signed incidence sum over
    codimension-2 classes of the homotopy.
    """
    if catalog_id not in (CatalogId.CO32, CatalogId.CUSP32, CatalogId.BCUSP32):
        raise ComplexError(
            f"catalog {catalog_id.value} carries no counting identities")
    if catalog_id is CatalogId.CO32:
        return (CountingIdentity((("I0_o", 1), ("I1_e", 1)), ()),
                CountingIdentity((("I0_e", 1), ("I1_o", 1)), ()))
    cx = catalog(catalog_id)
    d1 = cx.differentials[1]
    deg2 = cx.names(2)
    out = []
    for c, lbl in enumerate(cx.names(1)):
        terms = tuple((deg2[r], d1.entries[r][c])
                      for r in range(len(deg2)) if d1.entries[r][c] != 0)
        out.append(CountingIdentity(((lbl, 1),), terms))
    return tuple(out)


@dataclass(frozen=True)
class CocycleReport:
    image_c1: tuple[int, ...]
    image_c2: tuple[int, ...]
    c2_hits_cusp_classes: bool
    c1_plus_c2_closed: bool

    @property
    def ok(self) -> bool:
        return self.c2_hits_cusp_classes and self.c1_plus_c2_closed


def cusp_cocycle_check() -> CocycleReport:
    """Exact check that the two cusp-counting cochains are compatible.

    In the boundary catalog, c1 = Ia_o - Ia_e + I1_o - I1_e and
    c2 = -I0_o + I0_e satisfy: the coboundary of c2 is the sum of the
    four cusp classes and the coboundary of c1 + c2 vanishes.
    """
    cx = catalog(CatalogId.BCUSP32)
    d1 = cx.differentials[1]
    c1 = cx.chain(1, {"Ia_o": 1, "Ia_e": -1, "I1_o": 1, "I1_e": -1})
    c2 = cx.chain(1, {"I0_o": -1, "I0_e": 1})
    im1 = d1.apply(c1)
    im2 = d1.apply(c2)
    cusp_sum = cx.chain(2, {"IIa_o": 1, "IIa_e": 1, "IIg_o": 1, "IIg_e": 1})
    total = tuple(a + b for a, b in zip(im1, im2))
    return CocycleReport(im1, im2, im2 == cusp_sum,
                         all(x == 0 for x in total))
