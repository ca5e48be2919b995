from fractions import Fraction as F

import pytest

from hopfmod import linalg as la
from hopfmod.algebra import LinearMap
from hopfmod.catalog import get_algebra, h4_two_dim_module, module_catalog, regular_right_comodule, sign_module
from hopfmod.groups import cyclic
from hopfmod.modules import (
    LeftComodule,
    LeftModule,
    RightComodule,
    RightModule,
    pull_back,
    push_forward,
    regular_module,
    transpose_comodule,
    transpose_module,
    trivial_comodule,
    trivial_module,
    verify_comodule,
    verify_module,
)
from hopfmod.report import StructureError, VerificationFailed


@pytest.mark.parametrize("name", sorted(module_catalog()))
def test_catalog_modules_verify(name):
    M = module_catalog()[name]
    assert verify_module(M).passed
    T = transpose_module(M)
    assert isinstance(T, RightModule)
    assert verify_module(T).passed
    assert transpose_module(T).matrices == M.matrices


def test_transpose_labels_and_entries():
    M = h4_two_dim_module()
    T = transpose_module(M)
    assert T.basis == ("~u", "~w")
    assert T.matrices[2][0][1] == M.matrices[2][1][0]


def test_non_multiplicative_action_fails():
    B = get_algebra("kZ2")
    bad = LeftModule(B, 1, (((1,),), ((2,),)))
    report = verify_module(bad)
    assert not report.passed
    assert [c.name for c in report.failures()] == ["module.multiplicative"]


def test_right_module_order_convention():
    # H4 is noncommutative, so a left action is not a right one
    M = h4_two_dim_module(F(1))
    as_right = RightModule(M.algebra, M.dim, M.matrices, M.basis)
    assert verify_module(M).passed
    assert not verify_module(as_right).passed


def test_shape_errors():
    B = get_algebra("kZ2")
    with pytest.raises(StructureError):
        LeftModule(B, 1, (((1,),),))
    with pytest.raises(StructureError):
        LeftComodule(B, 1, (({5: 1},),))


def test_regular_comodule_and_transpose():
    for name in ("kZ3", "sweedler-H4", "kS3-fun"):
        H = get_algebra(name)
        R = regular_right_comodule(H)
        assert verify_comodule(R).passed
        L = transpose_comodule(R)
        assert isinstance(L, LeftComodule)
        assert verify_comodule(L).passed


def test_trivial_instances():
    H = get_algebra("sweedler-H4")
    assert verify_module(trivial_module(H, 3)).passed
    assert verify_module(trivial_module(H, 2, right=True)).passed
    assert verify_comodule(trivial_comodule(H, 2)).passed
    assert verify_comodule(trivial_comodule(H, 2, right=True)).passed
    assert verify_module(regular_module(H)).passed


def test_pull_back_along_antipode_flips_side():
    H = get_algebra("sweedler-H4")
    M = h4_two_dim_module()
    P = pull_back(H.antipode_map(), M)
    assert isinstance(P, RightModule)
    assert verify_module(P).passed
    # ρ(x) = λ(S(x)) = -λ(gx)
    assert P.matrices[2] == la.matscale(M.matrices[3], -1)


def test_pull_back_functorial():
    H = get_algebra("sweedler-H4")
    M = h4_two_dim_module()
    S, Si = H.antipode_map(), H.antipode_inverse_map()
    assert pull_back(Si, pull_back(S, M)).matrices == M.matrices
    assert pull_back(S.compose(S), M).matrices == pull_back(S, pull_back(S, M)).matrices


def test_push_forward_along_antipode():
    H = get_algebra("sweedler-H4")
    R = regular_right_comodule(H)
    L = push_forward(H.antipode_map(), R)
    assert isinstance(L, LeftComodule)
    assert verify_comodule(L).passed
    back = push_forward(H.antipode_inverse_map(), L)
    assert back.entries == R.entries


def test_pull_back_rejects_bad_maps():
    H = get_algebra("kZ2")
    M = sign_module(cyclic(2))
    with pytest.raises(StructureError):
        pull_back(LinearMap(la.identity(2)), M)
    swap = LinearMap(((0, 1), (1, 0)), "morphism", H, H)
    with pytest.raises(VerificationFailed):
        pull_back(swap, M)
    with pytest.raises(StructureError):
        push_forward(LinearMap(la.identity(2), "morphism"), trivial_comodule(H))


def test_coaction_formulas():
    H = get_algebra("kZ2")
    L = LeftComodule(H, 1, (({1: 1},),))
    R = RightComodule(H, 1, (({1: 1},),))
    assert L.coact({0: F(2)}) == {(1, 0): F(2)}
    assert R.coact({0: F(2)}) == {(0, 1): F(2)}
