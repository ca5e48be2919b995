"""Acceptance criteria 1-10, each an exact check over the built-in catalogs.

Run under pytest (one PASS/FAIL line per criterion is printed and repeated
in the terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import ACCEPTANCE  # noqa: E402

from hopfmod import linalg as la  # noqa: E402
from hopfmod.algebra import verify  # noqa: E402
from hopfmod.bimodules import (  # noqa: E402
    CommutationRule,
    bimodule_from_right_module,
    check_twist,
    module_from_rule,
    right_action_on_generators,
    rule_from_left_module,
    rule_from_left_module_cop,
    twist_from_rule,
    verify_rule,
)
from hopfmod.calculus import (  # noqa: E402
    check_fodc,
    check_right_covariance,
    finite_group_calculus,
    perturbed,
    quantum_lie_bracket,
)
from hopfmod.catalog import (  # noqa: E402
    ALGEBRA_NAMES,
    bimodule_seed,
    broken_yd_catalog,
    get_algebra,
    module_catalog,
    right_comodule_catalog,
    trivial_yd,
    yd_catalog,
)
from hopfmod.duality import check_dual_covariance, dual_of_left_module, pairing_identity  # noqa: E402
from hopfmod.groups import cyclic, symmetric  # noqa: E402
from hopfmod.modules import transpose_module  # noqa: E402
from hopfmod.report import VerificationFailed  # noqa: E402
from hopfmod.yd import (  # noqa: E402
    check_yd,
    yang_baxter,
    yd_dual,
    yd_ll_to_rr,
    yd_rr_to_ll,
    yd_to_cop,
)

DICHOTOMY = "plain.covariance.left.right_action"


def _fail(problems):
    return (not problems), ("; ".join(problems[:3]) if problems else "")


def criterion_1():
    problems = []
    for name in ALGEBRA_NAMES:
        H = get_algebra(name)
        for level in ("algebra", "coalgebra", "bialgebra", "hopf"):
            rep = verify(H, level)
            if not rep.passed:
                problems.append(f"{name} {level}: {[c.name for c in rep.failures()]}")
    H = get_algebra("sweedler-H4")
    S = H.antipode
    S2 = la.matmul(S, S)
    if S2 == la.identity(4):
        problems.append("H4: S² = id")
    if la.matmul(S2, S2) != la.identity(4):
        problems.append("H4: S⁴ ≠ id")
    if not H.has_bijective_antipode:
        problems.append("H4: S not invertible")
    ok, why = _fail(problems)
    return ok, why or f"{len(ALGEBRA_NAMES)} algebras at 4 levels; H4 has S² ≠ id, S⁴ = id, S invertible"


def criterion_2():
    good, broken = yd_catalog(), broken_yd_catalog()
    problems = []
    for name, M in {**good, **broken}.items():
        src, dual = check_yd(M), check_yd(yd_dual(M))
        if src.passed != dual.passed:
            problems.append(f"{name}: verdicts differ")
        if not src.passed and not (dual.failures() and dual.failures()[0].witness):
            problems.append(f"{name}: dual failure has no witness")
    if sum(check_yd(M).passed for M in good.values()) < 3:
        problems.append("fewer than 3 passing instances")
    if sum(not check_yd(M).passed for M in broken.values()) < 2:
        problems.append("fewer than 2 broken instances")
    ok, why = _fail(problems)
    return ok, why or f"{len(good)} passing and {len(broken)} broken instances agree with their duals"


def criterion_3():
    problems = []
    for name, M in yd_catalog().items():
        rr, cop = yd_ll_to_rr(M), yd_to_cop(M)
        if not check_yd(rr).passed:
            problems.append(f"{name}: LL→RR fails")
        if not check_yd(cop).passed:
            problems.append(f"{name}: LL→cop fails")
        if not yd_rr_to_ll(rr).same_tensors(M):
            problems.append(f"{name}: RR→LL round trip differs")
        back = yd_to_cop(cop)
        if not back.same_tensors(M) or back.bialgebra.coalgebra != M.bialgebra.coalgebra:
            problems.append(f"{name}: cop round trip differs")
    ok, why = _fail(problems)
    return ok, why or f"{len(yd_catalog())} catalog modules transform and round-trip"


def criterion_4():
    problems = []
    for name, M in yd_catalog().items():
        op = yang_baxter(yd_ll_to_rr(M))
        braid = op.check_braid()
        if not braid.passed or braid.cases != op.dim ** 3:
            problems.append(f"{name}: braid relation ({braid.cases} cases)")
        if not op.is_invertible():
            problems.append(f"{name}: not invertible")
    for B, d in ((get_algebra("kZ2"), 1), (get_algebra("kS3"), 3), (get_algebra("sweedler-H4"), 2)):
        op = yang_baxter(yd_ll_to_rr(trivial_yd(B, d)))
        if op.matrix != op.flip():
            problems.append(f"trivial over {B.name}: not the flip")
    ok, why = _fail(problems)
    return ok, why or "braid relation and invertibility on all instances; trivial modules give the flip"


def criterion_5():
    comodules = right_comodule_catalog()
    problems = [name for name, R in comodules.items() if not pairing_identity(R).passed]
    ok, why = _fail(problems)
    return ok, why or f"matrix and pairing identities on {len(comodules)} right comodules"


def criterion_6():
    problems = []
    expected = {"H4-bimodule": False, "kS3-fun-bimodule": False, "kZ2-bimodule": True, "kZ3-bimodule": True}
    witnesses = {}
    for seed, plain_ok in expected.items():
        B, lam, flag = bimodule_seed(seed)
        if flag != plain_ok:
            problems.append(f"{seed}: catalog flag disagrees")
        rep = check_dual_covariance(dual_of_left_module(B, lam))
        cop = [c for c in rep.checks if not c.name.startswith("plain.")]
        if not all(c.passed for c in cop):
            problems.append(f"{seed}: fails over B^cop")
        plain = rep[DICHOTOMY]
        if plain.passed != plain_ok:
            problems.append(f"{seed}: plain side {'passes' if plain.passed else 'fails'}")
        if not plain.passed:
            if not plain.witness:
                problems.append(f"{seed}: no witness")
            witnesses[seed] = plain.witness
    ok, why = _fail(problems)
    shown = ", ".join(f"{k} at {v}" for k, v in sorted(witnesses.items()))
    return ok, why or f"cop side passes everywhere; plain side fails for {shown}"


def criterion_7():
    problems = []
    for name, lam in module_catalog().items():
        B = lam.algebra
        if module_from_rule(rule_from_left_module(B, lam)).matrices != lam.matrices:
            problems.append(f"{name}: λ → Λ → λ")
        if module_from_rule(rule_from_left_module_cop(B, lam)).matrices != lam.matrices:
            problems.append(f"{name}: λ → Λcop → λ")
        rho = transpose_module(lam)
        for cop in (False, True):
            M = bimodule_from_right_module(B, rho, cop=cop)
            if right_action_on_generators(M, cop=cop).matrices != rho.matrices:
                problems.append(f"{name}: ρ → bimodule → ρ (cop={cop})")
    ok, why = _fail(problems)
    return ok, why or f"{len(module_catalog())} modules round-trip through rules and bimodules"


CALCULI = ((cyclic(2), (1,)), (cyclic(3), (1, 2)), (symmetric(3), (1, 2, 3)))


def criterion_8():
    problems = []
    for G, T in CALCULI:
        C = finite_group_calculus(G, T)
        n = C.bialgebra.dim
        rep = check_fodc(C)
        tl = rep["fodc.twisted_leibniz"]
        if not rep.passed or tl.cases != n * n * C.dim:
            problems.append(f"{C.name}: Leibniz")
        cov = check_right_covariance(C)
        if not cov.passed or cov["covariance.partials"].cases != n * C.dim:
            problems.append(f"{C.name}: covariance")
    bad = perturbed(finite_group_calculus(cyclic(3), (1, 2)))
    ctl = check_fodc(bad)["fodc.twisted_leibniz"]
    if ctl.passed or not ctl.witness:
        problems.append("perturbed control did not fail with a witness")
    ok, why = _fail(problems)
    return ok, why or f"3 calculi pass; perturbed control fails at {ctl.witness}"


def _table_bytes(G, T) -> bytes:
    return json.dumps(quantum_lie_bracket(finite_group_calculus(G, T)).to_dict(),
                      ensure_ascii=False, sort_keys=True).encode()


def criterion_9():
    problems = []
    if not quantum_lie_bracket(finite_group_calculus(cyclic(2), (1,))).is_zero:
        problems.append("Z2 table is not zero")
    closure = []
    for G, T in CALCULI[1:]:
        table = quantum_lie_bracket(finite_group_calculus(G, T))
        closure.append(f"{G.name} closed={table.closed}")
        if _table_bytes(G, T) != _table_bytes(G, T):
            problems.append(f"{G.name}: table differs between runs")
    ok, why = _fail(problems)
    return ok, why or "Z2 table is zero; " + ", ".join(closure) + "; byte-identical reruns"


def _broken(R: CommutationRule) -> CommutationRule:
    # alter the first nonzero structure constant of a non-unit basis element
    rule = [list(list(row) for row in mat) for mat in R.rule]
    j = 1
    v = dict(rule[j][0][0])
    p = next(iter(v), 0)
    v[p] = v.get(p, 0) + 1
    rule[j][0][0] = v
    return CommutationRule(R.algebra, R.dim, tuple(tuple(tuple(r) for r in m) for m in rule), R.orientation, R.basis)


def criterion_10():
    problems = []
    count = 0
    for name, lam in module_catalog().items():
        for R in (rule_from_left_module(lam.algebra, lam), rule_from_left_module_cop(lam.algebra, lam)):
            rep = check_twist(twist_from_rule(R))
            count += 1
            if not rep.passed:
                problems.append(f"{name}: hexagon")
    for name in ("sign-kZ2", "two-dim-H4", "transpositions-kS3"):
        lam = module_catalog()[name]
        bad = _broken(rule_from_left_module(lam.algebra, lam))
        if verify_rule(bad).passed:
            problems.append(f"{name}: broken rule passes the rule check")
        # twist_from_rule refuses invalid rules, so build the matrix directly
        if check_twist(_raw_twist(bad))["twist.hexagon"].passed:
            problems.append(f"{name}: broken rule passes the hexagon")
    ok, why = _fail(problems)
    return ok, why or f"hexagon on {count} rules; 3 hand-broken rules fail both checks"


def _raw_twist(R: CommutationRule):
    from hopfmod.bimodules import TwistMap

    n, d = R.algebra.dim, R.dim
    cols = []
    for j in range(n):
        for k in range(d):
            col = {}
            for i in range(d):
                for l, c in R.rule[j][i][k].items():
                    col[i * n + l] = c
            cols.append(col)
    return TwistMap(R.algebra, d, la.from_columns(cols, d * n), R.basis)


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 11)}


def evaluate(n: int):
    try:
        ok, text = CRITERIA[n]()
    except VerificationFailed as exc:
        ok, text = False, str(exc)
    ACCEPTANCE[n] = (ok, text)
    return ok, text


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, text = evaluate(n)
    with capsys.disabled():
        print(f"\ncriterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
    assert ok, text


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        ok, text = evaluate(n)
        failed += not ok
        print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
    sys.exit(1 if failed else 0)
