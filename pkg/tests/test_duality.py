from fractions import Fraction as F

import pytest

from hopfmod.bimodules import FreeBimodule, bimodule_from_right_module, rule_from_left_module
from hopfmod.catalog import BIMODULE_SEEDS, bimodule_seed, right_comodule_catalog, sign_module
from hopfmod.duality import (
    check_dual_covariance,
    check_pairing,
    dual_of_left_module,
    dualize,
    pair,
    pairing_identity,
)
from hopfmod.groups import cyclic
from hopfmod.modules import RightComodule, transpose_module
from hopfmod.report import StructureError, VerificationFailed
from hopfmod.catalog import get_algebra

DICHOTOMY = "plain.covariance.left.right_action"


def sign_dual():
    lam = sign_module(cyclic(2))
    return dual_of_left_module(lam.algebra, lam)


def test_sign_dual_rule():
    D = sign_dual()
    assert D.dual.presentation == "AV"
    assert D.dual.basis == ("~e0",)
    assert D.dual.rule.rule[1][0][0] == {1: F(-1)}  # Φ(g) = -g


def test_pair_examples():
    D = sign_dual()
    # ≪g⊗e^0, e_0⊗g≫ = g·g = 1
    assert D.pair({(1, 0): F(1)}, {(1, 0): F(1)}) == {0: F(1)}
    assert D.pair({(1, 0): F(2)}, {(0, 0): F(3)}) == {1: F(6)}
    with pytest.raises(StructureError):
        pair(D.source, {}, D.dual, {})


@pytest.mark.parametrize("seed", sorted(BIMODULE_SEEDS))
def test_pairing_checks_and_double_dual(seed):
    B, lam, _ = bimodule_seed(seed)
    D = dual_of_left_module(B, lam)
    assert check_pairing(D).passed
    back = dualize(D.dual)
    assert back.source.rule.same_tensors(D.source.rule)
    assert back.source.basis == D.source.basis


@pytest.mark.parametrize("seed", sorted(BIMODULE_SEEDS))
def test_dual_covariance_dichotomy(seed):
    B, lam, b_covariant = bimodule_seed(seed)
    report = check_dual_covariance(dual_of_left_module(B, lam))
    cop = [c for c in report.checks if not c.name.startswith("plain.")]
    assert all(c.passed for c in cop)
    assert report[DICHOTOMY].passed is b_covariant


def test_dichotomy_witnesses():
    B, lam, _ = bimodule_seed("H4-bimodule")
    assert check_dual_covariance(dual_of_left_module(B, lam))[DICHOTOMY].witness == ("x", "1⊗~w")
    B, lam, _ = bimodule_seed("kS3-fun-bimodule")
    assert check_dual_covariance(dual_of_left_module(B, lam))[DICHOTOMY].witness == ("δ_e", "δ_(12)⊗~(12)")


def test_dual_of_left_module_matches_cop_construction():
    B, lam, _ = bimodule_seed("H4-bimodule")
    D = dual_of_left_module(B, lam)
    M = bimodule_from_right_module(B, transpose_module(lam), cop=True)
    assert D.dual.rule.rule == M.rule.rule


def test_dual_covariance_needs_module_form():
    B = get_algebra("sweedler-H4")
    lam = bimodule_seed("H4-bimodule")[1]
    M = bimodule_from_right_module(B, transpose_module(lam))
    D = dualize(M)
    with pytest.raises(StructureError):
        check_dual_covariance(D)


@pytest.mark.parametrize("name", sorted(right_comodule_catalog()))
def test_pairing_identity(name):
    assert pairing_identity(right_comodule_catalog()[name]).passed


def test_pairing_identity_rejects_invalid():
    H = get_algebra("kZ2")
    bad = RightComodule(H, 1, (({1: 2},),))
    with pytest.raises(VerificationFailed):
        pairing_identity(bad)
