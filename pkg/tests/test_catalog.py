import pytest

from foldcob.catalog import (CatalogId, catalog, counting_identities,
                             cusp_cocycle_check, fiber_classes,
                             free_approximation, hypercohomology,
                             suspension_map)
from foldcob.complexes import (ComplexError, Direction, RingTag, homology,
                               validate_complex)


def ring_counts(cx, deg):
    free = sum(1 for g in cx.generators[deg] if g.ring is RingTag.FREE)
    return free, cx.n(deg) - free


def test_co32_generators():
    cx = catalog(CatalogId.CO32)
    assert cx.direction is Direction.COHOMOLOGICAL
    assert cx.names(0) == ["0_o", "0_e"]
    assert cx.names(1) == ["I0_o", "I0_e", "I1_o", "I1_e"]
    assert cx.names(2) == ["II01_o", "II01_e"]


def test_oriented_and_simple_ids_share_the_complex():
    base = catalog(CatalogId.CO32)
    for cid in (CatalogId.CO32_ORI, CatalogId.SCO32, CatalogId.SCO32_ORI):
        assert catalog(cid) == base


def test_v32_generator_table():
    cx = catalog(CatalogId.V32)
    assert cx.direction is Direction.HOMOLOGICAL
    assert ring_counts(cx, 0) == (2, 0)
    assert ring_counts(cx, 1) == (4, 2)
    assert ring_counts(cx, 2) == (2, 20)
    assert cx.names(1) == ["I0_o", "I0_e", "I1_o", "I1_e", "I2_o", "I2_e"]


def test_f32_adds_one_free_generator():
    f32 = catalog(CatalogId.F32)
    assert f32.n(2) == 23
    assert f32.names(2)[-1] == "A"
    assert all(g.ring is RingTag.FREE
               for deg in f32.generators for g in deg)


def test_z2_catalog_shapes():
    z2 = catalog(CatalogId.C32_Z2)
    assert z2.n(0) == 2 and z2.n(1) == 6 and z2.n(2) == 22
    simple = catalog(CatalogId.C32_Z2_SIMPLE)
    assert simple.n(2) == 20
    assert all(not n.startswith("II6") for n in simple.names(2))


def test_simple_catalog_is_the_filtered_full_catalog():
    full = catalog(CatalogId.C32_Z2)
    simple = catalog(CatalogId.C32_Z2_SIMPLE)
    keep = [i for i, n in enumerate(full.names(2)) if not n.startswith("II6")]
    assert [full.names(2)[i] for i in keep] == simple.names(2)
    filtered = full.differentials[1].submatrix(keep, range(full.n(1)))
    assert filtered == simple.differentials[1]
    assert full.differentials[0] == simple.differentials[0]


def test_every_catalog_validates():
    for cid in CatalogId:
        assert not validate_complex(catalog(cid))


def test_bcusp32_shape_and_cocycles():
    cx = catalog(CatalogId.BCUSP32)
    assert cx.names(1) == ["I0_o", "I0_e", "I1_o", "I1_e", "Ia_o", "Ia_e"]
    assert cx.n(2) == 12
    report = cusp_cocycle_check()
    assert report.ok
    expected = cx.chain(2, {"IIa_o": 1, "IIa_e": 1, "IIg_o": 1, "IIg_e": 1})
    assert report.image_c2 == expected
    assert tuple(-x for x in report.image_c2) == report.image_c1


def test_counting_identities_cusp32():
    idents = {i.f_terms: i.F_terms
              for i in counting_identities(CatalogId.CUSP32)}
    assert idents[(("I0_o", 1),)] == (("II01_o", 1), ("II01_e", -1),
                                      ("IIa_e", 1))
    assert idents[(("I1_o", 1),)] == (("II01_o", -1), ("II01_e", 1),
                                      ("IIa_o", 1))


def test_counting_identities_co32_pairs():
    idents = counting_identities(CatalogId.CO32)
    assert {i.f_terms for i in idents} == {
        (("I0_o", 1), ("I1_e", 1)), (("I0_e", 1), ("I1_o", 1))}
    assert all(i.F_terms == () for i in idents)


def test_counting_identities_rejects_truncated_catalog():
    with pytest.raises(ComplexError):
        counting_identities(CatalogId.CO21)


def test_fiber_classes_metadata():
    classes = {(fc.name, fc.parity): fc for fc in fiber_classes(CatalogId.V32)}
    assert classes[("I2", "o")].codim == 1
    assert not classes[("I2", "o")].coorientable
    assert classes[("II01", "e")].coorientable
    bclasses = {fc.name for fc in fiber_classes(CatalogId.BCUSP32)
                if fc.cusp_class}
    assert bclasses == {"IIa", "IIg"}


def test_suspension_rejects_unknown_variant():
    with pytest.raises(ValueError):
        suspension_map("co_Q")


def test_free_approximation_rejects_other_complexes():
    with pytest.raises(ComplexError):
        free_approximation(catalog(CatalogId.CO32))


def test_free_approximation_collapses_torsion():
    v32 = catalog(CatalogId.V32)
    f32, lam = free_approximation(v32)
    assert f32 == catalog(CatalogId.F32)
    col = f32.names(2).index("A")
    assert all(lam.matrices[2].entries[r][col] == 0 for r in range(v32.n(2)))
    # degree-2 comparison data is recorded, not asserted: the collapse
    # map need not be a homology isomorphism at the top degree
    h2_v = homology(v32, 2)
    h2_f = homology(f32, 2)
    assert isinstance(h2_v.free_rank, int) and isinstance(h2_f.free_rank, int)


def test_hypercohomology_degree_range():
    with pytest.raises(ComplexError):
        hypercohomology(catalog(CatalogId.V32), RingTag.FREE, 3)


def test_hyper_groups_over_z():
    v32 = catalog(CatalogId.V32)
    h0 = hypercohomology(v32, RingTag.FREE, 0)
    assert (h0.group.free_rank, h0.group.torsion) == (1, ())
    h1 = hypercohomology(v32, RingTag.FREE, 1)
    assert (h1.group.free_rank, h1.group.torsion) == (2, ())
    assert h0.comparison_is_isomorphism and h1.comparison_is_isomorphism
