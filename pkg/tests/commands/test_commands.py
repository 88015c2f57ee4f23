import json
from io import StringIO
from pathlib import Path

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError


def run(*args: str) -> str:
    stdout = StringIO()
    call_command(*args, stdout=stdout)
    return stdout.getvalue()


def test_moment():
    assert run("moment", "ikm", "0", "1", "1").strip() == "1.0000000000000000000E+00"


def test_divergent_moment():
    with pytest.raises(CommandError, match="diverge") as exc_info:
        run("moment", "ikm", "2", "1", "1")
    assert exc_info.value.returncode == 1


def test_crandall_exact():
    assert run("crandall", "1", "1", "--exact").strip() == "1"


def test_det():
    output = run("det", "M", "1")
    assert output.splitlines()[0].startswith("numeric 6.04599788")
    assert "significant digits" in output


def test_lvalue_form_is_case_insensitive():
    assert run("lvalue", "f4_6", "2") == run("lvalue", "F4_6", "2")


def test_eta_coeffs():
    assert run("eta_coeffs", "F4_6", "4") == "n,A_n\n1,1\n2,-2\n3,-3\n4,4\n"


def test_kloosterman():
    assert run("kloosterman", "--p", "3", "--k", "2", "--n", "1").splitlines() == ["S_1(9) = -1", "c_1(9) = 0"]


def test_kloosterman_beyond_cyclotomic_limit():
    lines = run("kloosterman", "--p", "1009", "--n", "4").splitlines()
    assert lines == ["S_4(1009) = -1018082", "c_4(1009) = 1"]
    assert run("kloosterman", "--p", "13", "--n", "4", "--method", "modular").splitlines()[0] == "S_4(13) = -170"


def test_kloosterman_local_data():
    lines = run("kloosterman", "--p", "5", "--n", "1", "--degree", "2").splitlines()
    assert lines[0] == "p,k,n,S_n,c_num,c_den"
    assert lines[-1] == "Z: 1, 0, 0"


def test_kloosterman_field_limit():
    with pytest.raises(CommandError, match="KLOOSTERMAN_MAX_FIELD"):
        run("kloosterman", "--p", "2", "--k", "21", "--n", "1")


def test_cache_commands():
    assert "Cache cleared." in run("cache", "clear")
    output = run("cache", "stats")
    assert "alias    bessel_moments" in output
    assert "entries  0" in output


def test_verify_json(tmp_path: Path):
    report_path = tmp_path / "report.json"
    run("verify", "all", "--include", "CLOSED-ikm121", "K1-S1-2^1", "--format", "json", "--output", str(report_path))
    data = json.loads(report_path.read_text(encoding="utf-8"))
    assert [result["id"] for result in data["results"]] == ["CLOSED-ikm121", "K1-S1-2^1"]
    assert data["summary"]["pass"] == 2
    assert data["digits"] == 20


def test_verify_without_cache():
    run("cache", "clear")
    output = run("verify", "kloosterman", "--include", "K1-S1-3^1", "--no-cache", "--format", "csv")
    assert output.splitlines()[1].startswith("K1-S1-3^1,pass,")
    assert "entries  0" in run("cache", "stats")


def test_verify_unknown_suite():
    with pytest.raises(CommandError):
        run("verify", "everything")
