from fractions import Fraction as F

import pytest

from hopfmod.algebra import (
    FinAlgebra,
    LinearMap,
    antipode_as_anti_morphisms,
    check_algebra_map,
    check_coalgebra_map,
    co_opposite,
    iterated_comultiply,
    op_cop,
    opposite,
    verify,
)
from hopfmod import linalg as la
from hopfmod.catalog import ALGEBRA_NAMES, get_algebra
from hopfmod.report import StructureError


@pytest.mark.parametrize("name", ALGEBRA_NAMES)
def test_catalog_algebras_verify(name):
    report = verify(get_algebra(name))
    assert report.passed, report.format_text()


@pytest.mark.parametrize("name", ALGEBRA_NAMES)
@pytest.mark.parametrize("twist", [opposite, co_opposite, op_cop])
def test_twisted_versions_verify(name, twist):
    assert verify(twist(get_algebra(name))).passed


@pytest.mark.parametrize("name", ALGEBRA_NAMES)
def test_antipode_reverses_products_and_coproducts(name):
    assert antipode_as_anti_morphisms(get_algebra(name)).passed


def test_h4_antipode_order_four():
    H = get_algebra("sweedler-H4")
    S = H.antipode
    assert la.matmul(S, S) != la.identity(4)
    S4 = la.matmul(la.matmul(S, S), la.matmul(S, S))
    assert S4 == la.identity(4)
    assert H.S({2: F(1)}) == {3: F(-1)}
    assert H.S({3: F(1)}) == {2: F(1)}


def test_h4_iterated_coproduct_of_x():
    H = get_algebra("sweedler-H4")
    t = iterated_comultiply(H, {2: F(1)}, 3)
    # Δ²x = x⊗1⊗1 + g⊗x⊗1 + g⊗g⊗x
    assert t == {(2, 0, 0): F(1), (1, 2, 0): F(1), (1, 1, 2): F(1)}
    assert iterated_comultiply(H, {2: F(1)}, 1) == {(2,): F(1)}


def test_iterated_coproduct_rejects_zero_legs():
    with pytest.raises(ValueError):
        iterated_comultiply(get_algebra("kZ2"), {0: F(1)}, 0)


def test_opposite_is_involution():
    H = get_algebra("kS3")
    twice = opposite(opposite(H))
    assert twice.algebra.mult == H.algebra.mult
    assert twice.antipode == H.antipode


def test_co_opposite_differs_for_h4():
    H = get_algebra("sweedler-H4")
    assert co_opposite(H).coalgebra.comult != H.coalgebra.comult
    assert co_opposite(H).antipode == H.antipode_inverse
    assert op_cop(H).antipode == H.antipode


def test_antipode_is_anti_morphism_map():
    H = get_algebra("sweedler-H4")
    S = H.antipode_map()
    assert check_algebra_map(S, H, H).passed
    assert check_coalgebra_map(S, H, H).passed
    # as a plain morphism it fails on the noncommutative H4
    assert not check_algebra_map(S, H, H, anti=False).passed


def test_compose_kind_parity():
    H = get_algebra("sweedler-H4")
    S, Si = H.antipode_map(), H.antipode_inverse_map()
    assert S.compose(S).kind == "morphism"
    assert S.compose(Si).matrix == la.identity(4)
    assert S.compose(LinearMap.identity(H)).kind == "anti-morphism"


def test_non_associative_algebra_reports_witness():
    # x·x = 1 + x is fine; make x·(x·x) ≠ (x·x)·x by an inconsistent table
    A = FinAlgebra(("1", "x"), {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1, 1: 1}}, {0: 1})
    assert verify(A).passed
    bad = FinAlgebra(("1", "x"), {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {0: 1}, (1, 1): {1: 1}}, {0: 1})
    report = verify(bad)
    assert not report.passed


def test_bad_map_dimensions():
    H = get_algebra("kZ2")
    with pytest.raises(StructureError):
        check_algebra_map(LinearMap(la.identity(3), "morphism"), H, H)
