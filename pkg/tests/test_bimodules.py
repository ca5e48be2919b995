from fractions import Fraction as F

import pytest

from hopfmod import linalg as la
from hopfmod.bimodules import (
    SIDES,
    CommutationRule,
    CovariantBimodule,
    FreeBimodule,
    bicovariant_from_yd,
    bimodule_from_right_module,
    check_bimodule,
    check_covariance,
    check_epsilon_projection,
    check_rule_intertwining,
    check_twist,
    epsilon_projection,
    module_from_rule,
    right_action_on_generators,
    rule_from_bimodule,
    rule_from_left_module,
    rule_from_left_module_cop,
    rule_from_twist,
    rule_intertwining_witnesses,
    twist_from_rule,
    verify_rule,
)
from hopfmod.catalog import broken_yd_catalog, get_algebra, module_catalog, sign_module, yd_catalog
from hopfmod.groups import cyclic
from hopfmod.modules import transpose_comodule, transpose_module
from hopfmod.report import StructureError, VerificationFailed
from hopfmod.yd import yd_condition_witnesses, yd_ll_to_rr

MODULES = module_catalog()


def sign_rule():
    lam = sign_module(cyclic(2))
    return rule_from_left_module(lam.algebra, lam)


def test_sign_rule_values():
    R = sign_rule()
    assert R.rule[1][0][0] == {1: F(-1)}  # Λ(g) = -g
    assert R.rule[0][0][0] == {0: F(1)}


def test_sign_twist_values():
    T = twist_from_rule(sign_rule())
    # g⊗v ↦ -v⊗g, 1⊗v ↦ v⊗1
    assert T.image(1, 0) == {(0, 1): F(-1)}
    assert T.image(0, 0) == {(0, 0): F(1)}


@pytest.mark.parametrize("name", sorted(MODULES))
def test_rule_twist_roundtrip(name):
    lam = MODULES[name]
    B = lam.algebra
    for R in (rule_from_left_module(B, lam), rule_from_left_module_cop(B, lam)):
        assert verify_rule(R).passed
        T = twist_from_rule(R)
        rep = check_twist(T)
        assert rep.passed
        assert rep["twist.hexagon"].cases == B.dim ** 2 * lam.dim
        assert rule_from_twist(T).same_tensors(R)
    assert module_from_rule(rule_from_left_module(B, lam)).matrices == lam.matrices


@pytest.mark.parametrize("name", sorted(MODULES))
def test_free_bimodule_axioms(name):
    lam = MODULES[name]
    M = FreeBimodule(rule_from_left_module(lam.algebra, lam))
    assert check_bimodule(M).passed
    assert rule_from_bimodule(M).same_tensors(M.rule)


def test_broken_rule_fails_rule_and_hexagon():
    R = sign_rule()
    bad = CommutationRule(R.algebra, 1, (R.rule[0], (({1: F(2)},),)), "left")
    assert not verify_rule(bad).passed
    with pytest.raises(VerificationFailed):
        twist_from_rule(bad)


@pytest.mark.parametrize("name", sorted(MODULES))
def test_right_module_bimodule_roundtrip(name):
    lam = MODULES[name]
    B, rho = lam.algebra, transpose_module(lam)
    for cop in (False, True):
        M = bimodule_from_right_module(B, rho, cop=cop)
        assert M.presentation == "AV"
        assert check_bimodule(M).passed
        assert check_epsilon_projection(M).passed
        assert right_action_on_generators(M, cop=cop).matrices == rho.matrices


def test_reconstruction_failure_detected():
    lam = MODULES["two-dim-H4"]
    M = bimodule_from_right_module(lam.algebra, transpose_module(lam))
    with pytest.raises(VerificationFailed):
        right_action_on_generators(M, cop=True)


def test_epsilon_projection_examples():
    lam = MODULES["line-H4"]
    H = lam.algebra
    M = bimodule_from_right_module(H, transpose_module(lam))
    assert epsilon_projection(M, {(1, 0): F(3)}) == {0: F(3)}  # ε(g) = 1
    assert epsilon_projection(M, {(2, 0): F(3)}) == {}  # ε(x) = 0
    with pytest.raises(StructureError):
        epsilon_projection(FreeBimodule(rule_from_left_module(H, lam)), {})


@pytest.mark.parametrize("name", sorted(yd_catalog()))
def test_bicovariant_from_yd(name):
    CM = bicovariant_from_yd(yd_ll_to_rr(yd_catalog()[name]))
    report = check_covariance(CM, SIDES)
    assert report.passed
    assert len(report.names()) == 9


def test_right_covariant_only_without_comodule():
    lam = MODULES["two-dim-H4"]
    CM = CovariantBimodule(FreeBimodule(rule_from_left_module(lam.algebra, lam)), lam.algebra)
    assert check_covariance(CM, ("right-hopf", "right")).passed


def test_left_coaction_on_va_side():
    M = yd_catalog()["adjoint-H4"]
    H = M.bialgebra
    CM = CovariantBimodule(FreeBimodule(rule_from_left_module(H, M.action)), H, M.coaction)
    assert check_covariance(CM, SIDES).passed


def test_comodule_side_checked():
    lam = MODULES["sign-kZ2"]
    M = FreeBimodule(rule_from_left_module(lam.algebra, lam))
    R = transpose_comodule(yd_catalog()["sign-kZ2"].coaction)
    with pytest.raises(StructureError):
        CovariantBimodule(M, lam.algebra, R)


@pytest.mark.parametrize("name", sorted(yd_catalog()))
def test_intertwining_holds_for_yd(name):
    M = yd_catalog()[name]
    assert check_rule_intertwining(M.bialgebra, M.action, M.coaction).passed


@pytest.mark.parametrize("name", sorted(broken_yd_catalog()))
def test_intertwining_witnesses_match_yd_condition(name):
    M = broken_yd_catalog()[name]
    assert not check_rule_intertwining(M.bialgebra, M.action, M.coaction).passed
    assert rule_intertwining_witnesses(M.bialgebra, M.action, M.coaction) == yd_condition_witnesses(M)


def test_swapped_roles_fail_on_noncocommutative():
    for name, count in (("adjoint-H4", 4), ("calculus-kS3-fun", 12)):
        M = yd_catalog()[name]
        assert len(rule_intertwining_witnesses(M.bialgebra, M.action, M.coaction, swap_roles=True)) == count
    M = yd_catalog()["conjugation-kS3"]
    assert not rule_intertwining_witnesses(M.bialgebra, M.action, M.coaction, swap_roles=True)
