import json

import pytest

from hopfmod.bimodules import CovariantBimodule, bicovariant_from_yd
from hopfmod.calculus import finite_group_calculus
from hopfmod.catalog import ALGEBRA_NAMES, get_algebra, h4_two_dim_module, yd_catalog
from hopfmod.groups import symmetric
from hopfmod.io import InputError, dump, dumps, load, loads
from hopfmod.yd import yd_ll_to_rr


@pytest.mark.parametrize("name", ALGEBRA_NAMES)
def test_algebra_roundtrip(name):
    H = get_algebra(name)
    back = loads(dumps(H))
    assert back.algebra == H.algebra
    assert back.coalgebra == H.coalgebra
    assert back.antipode == H.antipode


@pytest.mark.parametrize("name", sorted(yd_catalog()))
def test_yd_roundtrip(name):
    M = yd_catalog()[name]
    assert loads(dumps(M)).same_tensors(M)
    rr = yd_ll_to_rr(M)
    assert loads(dumps(rr)).same_tensors(rr)


def test_module_with_indeterminate_roundtrip(fixtures):
    M = load(fixtures / "h4_two_dim_module.json")
    assert M.matrices == h4_two_dim_module().matrices
    assert loads(dumps(M)).matrices == M.matrices


def test_bimodule_roundtrip():
    CM = bicovariant_from_yd(yd_ll_to_rr(yd_catalog()["adjoint-H4"]))
    back = loads(dumps(CM))
    assert isinstance(back, CovariantBimodule)
    assert back.bimodule.rule.same_tensors(CM.bimodule.rule)
    assert back.comodule.entries == CM.comodule.entries


def test_fodc_roundtrip():
    C = finite_group_calculus(symmetric(3), (1, 2, 3))
    back = loads(dumps(C))
    assert back.partials == C.partials
    assert back.coaction.entries == C.coaction.entries
    assert back.name == C.name


def test_dumps_deterministic():
    M = yd_catalog()["conjugation-kS3"]
    assert dumps(M) == dumps(M)
    assert json.loads(dumps(M)) == dump(M)


def test_bad_scalar_location(fixtures):
    with pytest.raises(InputError) as info:
        load(fixtures / "bad_scalar.json")
    assert info.value.location.endswith("bad_scalar.json:$.unit[0]")


@pytest.mark.parametrize("text, location", [
    ('{"dim": 2,\n "basis": [}', "<string>:2:12"),
    ('{"kind": "left-module", "algebra": "nope", "dim": 1}', "<string>:$.algebra"),
    ('{"kind": "left-module", "algebra": "kZ2", "dim": 1, "action": [[5, []]]}', "<string>:$.action[0][0]"),
    ('{"kind": "widget"}', "<string>:$.kind"),
    ('[1, 2]', "<string>:$"),
])
def test_error_locations(text, location):
    with pytest.raises(InputError) as info:
        loads(text)
    assert info.value.location == location


def test_missing_file():
    with pytest.raises(InputError):
        load("/nonexistent/definition.json")
