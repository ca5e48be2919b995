import io
import json

import pytest

from hopfmod import __version__
from hopfmod.cli import run
from hopfmod.io import load


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def report(*argv):
    code, out, _ = call(*argv, "--format", "json")
    return code, json.loads(out)


@pytest.mark.parametrize("name", ["kZ2", "kS3", "kS3-fun", "sweedler-H4"])
def test_check_catalog_algebra(name):
    code, rep = report("check", name)
    assert code == 0
    assert rep["tool_version"] == __version__
    assert set(rep) >= {"tool_version", "input_digest", "checks"}
    names = [c["name"] for c in rep["checks"]]
    assert names == sorted(names)


def test_check_fixture_files(fixtures):
    assert call("check", str(fixtures / "kz2.json"))[0] == 0
    assert call("check", str(fixtures / "h4.json"))[0] == 0
    code, rep = report("check", str(fixtures / "noncoassociative.json"))
    assert code == 1
    failed = [c["name"] for c in rep["checks"] if not c["passed"]]
    assert "coalgebra.coassociativity" in failed


def test_bad_scalar_is_input_error(fixtures):
    code, _, err = call("check", str(fixtures / "bad_scalar.json"))
    assert code == 2
    assert "$.unit[0]" in err


def test_usage_errors():
    assert call()[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("check", "no-such-algebra")[0] == 2
    assert call("check", "kZ2", "--expect", "garbage")[0] == 2


def test_yd_commands(fixtures):
    assert call("yd", "check", str(fixtures / "conjugation_ks3_yd.json"))[0] == 0
    assert call("yd", "check", "broken-conjugation-kS3")[0] == 1
    # both verdicts fail, and they agree
    code, rep = report("yd", "dual", "broken-line-H4")
    assert code == 1
    by_name = {c["name"]: c["passed"] for c in rep["checks"]}
    assert by_name["verdicts_agree"] and not by_name["source.yd.LL"] and not by_name["dual.yd.RR"]
    assert call("yd", "dual", "broken-line-H4", "--expect", "source.yd.LL=fail",
                "--expect", "dual.yd.RR=fail")[0] == 0
    assert call("yd", "transform", "adjoint-H4", "--to", "rr")[0] == 0
    code, rep = report("yangbaxter", "conjugation-kS3", "--emit-matrix")
    assert code == 0
    assert "artifacts" in rep


def test_expectations_flip_exit_code():
    assert call("yd", "check", "broken-line-H4", "--expect", "yd.LL=fail")[0] == 0
    assert call("check", "kZ2", "--expect", "hopf.antipode_left=fail")[0] in (1, 2)


def test_dualize_dichotomy():
    code, rep = report("dualize", "--catalog", "H4-bimodule", "--check-covariance")
    assert code == 0
    entry = {c["name"]: c for c in rep["checks"]}["plain.covariance.left.right_action"]
    assert entry["passed"] is False
    args = ("dualize", "--catalog", "H4-bimodule", "--check-covariance",
            "--expect", "plain.covariance.left.right_action=pass")
    assert call(*args)[0] == 1


def test_pairing_identity_all():
    assert call("pairing-identity", "--all")[0] == 0


def test_bimodule_build_and_check(tmp_path):
    target = tmp_path / "bm.json"
    assert call("bimodule", "build", "--from-module", "two-dim-H4", "--output", str(target))[0] == 0
    assert call("bimodule", "check", str(target), "--sides", "right")[0] == 0
    assert call("bimodule", "from-yd", "adjoint-H4")[0] == 0


def test_calculus_build_then_check(tmp_path):
    target = tmp_path / "s3.json"
    code, _, _ = call("calculus", "build", "--group", "S3", "--subset", "transpositions", "--output", str(target))
    assert code == 0
    C = load(target)
    assert C.dim == 3
    assert call("calculus", "check", str(target))[0] == 0
    assert call("calculus", "vector-fields", str(target))[0] == 0
    assert call("calculus", "build", "--group", "Z3", "--subset", "0")[0] == 2


def test_bracket_output_deterministic():
    first = call("calculus", "bracket", "S3:transpositions", "--emit", "table", "--format", "json")
    second = call("calculus", "bracket", "S3:transpositions", "--emit", "table", "--format", "json")
    assert first[0] == 0
    assert first[1] == second[1]
    table = json.loads(first[1])["artifacts"]["bracket"]
    assert table["closed"] is True


def test_text_format_lists_checks():
    code, out, _ = call("calculus", "check", "Z3:1")
    assert code == 0
    assert "fodc.twisted_leibniz" in out
