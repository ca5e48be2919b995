import json
from dataclasses import replace
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hopfmod import linalg as la
from hopfmod.calculus import (
    cartan_action,
    check_cartan,
    check_fodc,
    check_right_covariance,
    convolution,
    differential,
    evaluate,
    finite_group_calculus,
    perturbed,
    quantum_lie_bracket,
    woronowicz_functionals,
)
from hopfmod.catalog import get_algebra
from hopfmod.groups import cyclic, symmetric
from hopfmod.report import StructureError

Z2, Z3, S3 = cyclic(2), cyclic(3), symmetric(3)
CALCULI = {
    "Z2:1": (Z2, (1,)),
    "Z3:1": (Z3, (1,)),
    "Z3:1,2": (Z3, (1, 2)),
    "S3:transpositions": (S3, (1, 2, 3)),
}


@pytest.fixture(params=sorted(CALCULI))
def calc(request):
    return finite_group_calculus(*CALCULI[request.param])


def test_calculus_checks(calc):
    assert check_fodc(calc).passed
    assert check_right_covariance(calc, samples=5, seed=3).passed
    assert check_cartan(calc).passed


def test_d_of_unit_vanishes(calc):
    assert differential(calc, calc.bialgebra.one()) == {}


def test_z3_differential_example():
    C = finite_group_calculus(Z3, (1,))
    # d(δ_0) = -e1⊗δ_0 + e1⊗δ_2
    assert differential(C, {0: F(1)}) == {(0, 0): F(-1), (2, 0): F(1)}
    assert C.name == "Z3:1"
    assert woronowicz_functionals(C) == [{0: F(-1), 1: F(1)}]


def test_cartan_pairs_dual_basis():
    C = finite_group_calculus(Z3, (1,))
    f = {1: F(1)}
    one_x = {(a, 0): F(1) for a in range(3)}  # 1⊗e^1
    # ∂^1(δ_1) = δ_0 - δ_1
    assert cartan_action(C, one_x, f) == {0: F(1), 1: F(-1)}
    # δ_0⊗e^1 picks out the δ_0 component only
    assert cartan_action(C, {(0, 0): F(1)}, f) == {0: F(1)}


def test_subset_validation():
    for bad in ((), (0,), (1, 1)):
        with pytest.raises(StructureError):
            finite_group_calculus(Z3, bad)


def test_non_conjugation_closed_has_no_coaction():
    C = finite_group_calculus(S3, (1,))
    assert C.coaction is None
    assert check_fodc(C).passed
    with pytest.raises(StructureError):
        quantum_lie_bracket(C)


def test_perturbed_fails():
    C = perturbed(finite_group_calculus(Z3, (1,)), 0, 1, 0)
    rep = check_fodc(C)
    assert not rep["fodc.twisted_leibniz"].passed
    assert rep["fodc.twisted_leibniz"].witness == ("δ_0", "δ_0", "1")
    cov = check_right_covariance(C)
    assert not cov["covariance.partials"].passed
    assert cov["covariance.partials"].witness == ("∂^1", "δ_0")


def test_abelian_brackets_vanish():
    for group, subset in ((Z2, (1,)), (Z3, (1, 2))):
        t = quantum_lie_bracket(finite_group_calculus(group, subset))
        assert t.is_zero and t.closed


def test_zero_partials_give_zero_table():
    C = finite_group_calculus(Z2, (1,))
    zero = replace(C, partials=(la.zeros(2, 2),))
    t = quantum_lie_bracket(zero)
    assert t.chi == ({},)
    assert t.is_zero


def test_s3_bracket_closes():
    C = finite_group_calculus(S3, (1, 2, 3))
    t = quantum_lie_bracket(C)
    assert t.closed and not t.is_zero
    # [χ^(12), χ^(13)] = -χ^(13) + χ^(23)
    assert t.constants[0][1] == (F(0), F(-1), F(1))
    again = quantum_lie_bracket(finite_group_calculus(S3, (1, 2, 3)))
    assert json.dumps(t.to_dict(), ensure_ascii=False) == json.dumps(again.to_dict(), ensure_ascii=False)


H4 = get_algebra("sweedler-H4")
functionals = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=4, max_size=4).map(la.sparse)


@settings(max_examples=40)
@given(functionals, functionals, functionals)
def test_convolution_associative_on_h4(a, b, c):
    assert convolution(convolution(a, b, H4), c, H4) == convolution(a, convolution(b, c, H4), H4)


@given(functionals)
def test_counit_is_convolution_unit(a):
    eps = la.clean({j: H4.eps({j: F(1)}) for j in range(4)})
    assert convolution(eps, a, H4) == a
    assert convolution(a, eps, H4) == a


def test_characters_multiply_on_grouplikes():
    B = get_algebra("kS3")
    ev = lambda g: {g: F(1)}  # a functional supported at one basis element
    # on group algebras Δg = g⊗g, so φ⋆ψ(g) = φ(g)ψ(g)
    assert convolution({1: F(2), 2: F(3)}, {1: F(5)}, B) == {1: F(10)}
    assert evaluate({1: F(2)}, {1: F(3), 0: F(1)}) == F(6)
    assert ev(0) == {0: F(1)}
