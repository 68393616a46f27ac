import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foldcob.complexes import (ChainMap, Direction, Generator, MixedComplex,
                               NotACycleError, RingTag, express_class,
                               hom_dual, homology, induced_map, make_complex,
                               validate_chain_map, validate_complex,
                               zero_complex)
from foldcob.intmat import IntMatrix, kernel_basis

from test_intmat import frac_rank


def free_gens(prefix, n):
    return tuple((f"{prefix}{i}", RingTag.FREE) for i in range(n))


def build_free_complex(d1_rows, seed_rows):
    """Three-term all-free homological complex with d1 ∘ d2 = 0.

    d2 is built inside the kernel of d1 (seeded by the second matrix),
    so the complex is valid by construction; the homology checks below
    are independent of that step.
    """
    d1 = IntMatrix.from_rows(d1_rows)
    k = kernel_basis(d1)
    ncols = len(seed_rows)
    flat = [x for row in seed_rows for x in row] or [0]
    data = [[flat[(i * ncols + j) % len(flat)] for j in range(ncols)]
            for i in range(k.cols)]
    r = IntMatrix(k.cols, ncols, tuple(tuple(row) for row in data))
    d2 = k.mul(r)
    gens = (
        tuple(Generator(f"a{i}", RingTag.FREE) for i in range(d1.rows)),
        tuple(Generator(f"b{i}", RingTag.FREE) for i in range(d1.cols)),
        tuple(Generator(f"c{i}", RingTag.FREE) for i in range(d2.cols)),
    )
    return MixedComplex(Direction.HOMOLOGICAL, gens, (d1, d2))


small_mats = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-3, 3), min_size=c, max_size=c),
            min_size=r, max_size=r)))


@settings(max_examples=60, deadline=None)
@given(small_mats, small_mats)
def test_free_homology_matches_rational_ranks(d1_rows, mix_rows):
    cx = build_free_complex(d1_rows, mix_rows)
    assert not validate_complex(cx)
    d1, d2 = cx.differentials
    # degree 1: nullity(d1) - rank(d2) over the rationals
    expect = (d1.cols - frac_rank(d1)) - frac_rank(d2)
    assert homology(cx, 1).free_rank == expect
    assert homology(cx, 0).free_rank == d1.rows - frac_rank(d1)
    assert homology(cx, 2).free_rank == d2.cols - frac_rank(d2)


def t2(pres):
    return sum(1 for d in pres.torsion if d % 2 == 0)


@settings(max_examples=60, deadline=None)
@given(small_mats, small_mats)
def test_universal_coefficients_dimensions(d1_rows, mix_rows):
    cx = build_free_complex(d1_rows, mix_rows)
    dual = hom_dual(cx, RingTag.TWO_TORSION)
    for k in range(3):
        hk = homology(cx, k)
        below = t2(homology(cx, k - 1)) if k >= 1 else 0
        dim = len(homology(dual, k).torsion)
        assert dim == hk.free_rank + t2(hk) + below


@settings(max_examples=40, deadline=None)
@given(small_mats, small_mats)
def test_express_class_of_basis_is_identity(d1_rows, mix_rows):
    cx = build_free_complex(d1_rows, mix_rows)
    for deg in range(3):
        pres = homology(cx, deg)
        for j, cyc in enumerate(pres.basis_cycles):
            coords = express_class(cx, deg, cyc)
            assert coords == tuple(1 if i == j else 0
                                   for i in range(pres.rank))


def test_hom_dual_generator_counts():
    from foldcob.catalog import CatalogId, catalog
    v32 = catalog(CatalogId.V32)
    dual = hom_dual(v32, RingTag.TWO_TORSION)
    for deg in range(3):
        assert dual.n(deg) == v32.n(deg)
        assert all(g.ring is RingTag.TWO_TORSION for g in dual.generators[deg])
    dual_z = hom_dual(v32, RingTag.FREE)
    for deg in range(3):
        free = sum(1 for g in v32.generators[deg] if g.ring is RingTag.FREE)
        assert dual_z.n(deg) == free


def test_validator_flags_torsion_to_free_entry():
    cx = make_complex(
        Direction.HOMOLOGICAL,
        [[("x", RingTag.FREE)], [("t", RingTag.TWO_TORSION)]],
        [{"t": {"x": 1}}])
    bad = validate_complex(cx)
    assert bad and bad[0].kind == "two-torsion source maps to free target"


def test_validator_flags_nonzero_composite():
    cx = make_complex(
        Direction.HOMOLOGICAL,
        [[("x", RingTag.FREE)], [("y", RingTag.FREE)], [("z", RingTag.FREE)]],
        [{"y": {"x": 1}}, {"z": {"y": 2}}])
    bad = validate_complex(cx)
    assert bad and bad[0].kind == "nonzero composite"
    assert bad[0].degree == 2


def test_composite_vanishing_mod_two_is_accepted():
    cx = make_complex(
        Direction.HOMOLOGICAL,
        [[("x", RingTag.TWO_TORSION)], [("y", RingTag.TWO_TORSION)],
         [("z", RingTag.TWO_TORSION)]],
        [{"y": {"x": 1}}, {"z": {"y": 2}}])
    assert not validate_complex(cx)
    assert homology(cx, 1).torsion == ()


def test_zero_complex():
    cx = zero_complex()
    pres = homology(cx, 0)
    assert pres.free_rank == 0 and pres.torsion == ()


def test_express_class_rejects_non_cycles():
    cx = make_complex(
        Direction.HOMOLOGICAL,
        [[("x", RingTag.FREE)], [("y", RingTag.FREE)]],
        [{"y": {"x": 1}}])
    with pytest.raises(NotACycleError):
        express_class(cx, 1, (1,))


def test_identity_chain_map_induces_identity():
    from foldcob.catalog import CatalogId, catalog
    v32 = catalog(CatalogId.V32)
    ident = ChainMap(v32, v32, tuple(IntMatrix.identity(v32.n(d))
                                     for d in range(3)))
    assert not validate_chain_map(ident)
    for deg in range(3):
        m = induced_map(ident, deg)
        assert m == IntMatrix.identity(homology(v32, deg).rank)


def test_chain_map_condition_is_checked():
    a = make_complex(Direction.HOMOLOGICAL,
                     [[("x", RingTag.FREE)], [("y", RingTag.FREE)]],
                     [{"y": {"x": 2}}])
    b = make_complex(Direction.HOMOLOGICAL,
                     [[("x", RingTag.FREE)], [("y", RingTag.FREE)]],
                     [{"y": {"x": 3}}])
    f = ChainMap(a, b, (IntMatrix.identity(1), IntMatrix.identity(1)))
    bad = validate_chain_map(f)
    assert bad and bad[0].kind == "chain-map square fails"
