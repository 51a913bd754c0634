import json
import math
import re
import subprocess
import sys
from fractions import Fraction

import pytest

from supercatalan.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_numbers_check(capsys):
    code, data = run_json(capsys, "numbers", "--m", "2", "--max-n", "5", "--check")
    assert code == 0 and data["ok"]
    rows = data["results"]["rows"]
    assert [r["value"] for r in rows] == ["3", "2", "3", "6", "14", "36"]
    assert all(r["pass"] for r in rows if "pass" in r)


def test_numbers_catalan(capsys):
    _, data = run_json(capsys, "numbers", "--m", "1", "--max-n", "5")
    assert [r["value"] for r in data["results"]["rows"]] == ["1", "1", "2", "5", "14", "42"]


def test_numbers_half(capsys):
    code, out, _ = run(capsys, "numbers", "--m", "0", "--max-n", "0")
    assert code == 0
    assert "1/2" in out


def test_numbers_usage_error(capsys):
    code, _, err = run(capsys, "numbers", "--m", "3", "--max-n", "1")
    assert code == 2 and "error" in err


def test_enumerate_two(capsys):
    code, data = run_json(capsys, "enumerate", "--n", "2")
    assert code == 0
    assert len(data["results"]["codes"]) == 3


def test_enumerate_by_hidden(capsys):
    code, data = run_json(capsys, "enumerate", "--n", "4", "--by-hidden")
    assert code == 0
    groups = data["results"]["by_hidden"]
    assert {k: v["count"] for k, v in groups.items()} == {"0": "12", "1": "2"}


def test_enumerate_count_only(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "9", "--count-only")
    assert code == 0
    assert "2652" in out


def test_validate_paper_chain(capsys):
    code, out, _ = run(capsys, "validate", "0:1,1,2,1,0,2,3,0")
    assert code == 0
    assert "11210230 -> 1120130 -> 111030 -> 11020 -> 1010 -> 000" in out
    _, data = run_json(capsys, "validate", "0:1,1,2,1,0,2,3,0")
    assert data["results"]["valid"] is True
    assert len(data["results"]["trace"]) == 6


def test_validate_underflow(capsys):
    code, out, _ = run(capsys, "validate", "0:1,1,0,0")
    assert code == 1
    assert "underflow" in out


def test_validate_one_ctree(capsys):
    assert run(capsys, "validate", "0:0,0,0")[0] == 0


def test_validate_parse_error(capsys):
    code, _, err = run(capsys, "validate", "0:1,,2")
    assert code == 2
    assert "position" in err


def test_argparse_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["numbers"])
    assert exc.value.code == 2


def test_bijection_forward_inverse_round_trip(capsys, tmp_path):
    cfg_file = tmp_path / "cfg.json"
    cfg_file.write_text(json.dumps({"n": 4, "base": "0:0,0,0", "strips": ["", "", ""]}))
    code, data = run_json(capsys, "bijection", "forward", "--config", str(cfg_file))
    assert code == 0
    tree_code = data["results"]["code"]
    assert data["results"]["census"]["Hidden"] == "1"
    code, data = run_json(capsys, "bijection", "inverse", "--code", tree_code)
    assert code == 0
    assert data["results"]["config"] == {"n": 4, "base": "0:0,0,0", "strips": ["", "", ""]}


def test_bijection_forward_invalid(capsys):
    code, data = run_json(capsys, "bijection", "forward", "--config-json",
                          '{"n": 5, "base": "0:0,0,0", "strips": ["", "", ""]}')
    assert code == 1 and not data["ok"]
    assert any("squares" in e for e in data["results"]["errors"])
    assert run(capsys, "bijection", "forward", "--config-json", "{not json")[0] == 2


def test_bijection_verify(capsys):
    code, data = run_json(capsys, "bijection", "verify", "--max-n", "6")
    assert code == 0 and data["ok"]


def test_paths_duu(capsys):
    code, data = run_json(capsys, "paths", "--m", "1", "--n", "3", "--stat", "duu")
    assert code == 0
    assert data["results"]["distribution"] == {"0": "4", "1": "1"}


def test_paths_odd_inclines(capsys):
    code, data = run_json(capsys, "paths", "--m", "0", "--n", "2", "--stat", "odd-inclines")
    assert code == 0
    assert data["results"]["distribution"] == {"0": "2", "1": "1"}


def test_paths_trivial(capsys):
    code, data = run_json(capsys, "paths", "--m", "1", "--n", "1", "--stat", "duu")
    assert code == 0
    assert data["results"]["distribution"] == {"0": "1"}


def test_paths_usage(capsys):
    assert run(capsys, "paths", "--m", "2", "--n", "3")[0] == 2
    assert run(capsys, "paths", "--m", "1", "--n", "3", "--stat", "odd-inclines")[0] == 2


def test_json_numbers_are_strings(capsys):
    _, data = run_json(capsys, "numbers", "--m", "2", "--max-n", "45", "--check")

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)
        elif isinstance(x, int) and not isinstance(x, bool):
            raise AssertionError(f"bare integer {x}")

    walk(data)
    assert Fraction(data["results"]["rows"][-1]["value"]) > 2 ** 64


@pytest.mark.parametrize("argv", [
    ["enumerate", "--n", "5", "--by-hidden"],
    ["bijection", "verify", "--max-n", "5"],
    ["paths", "--m", "0", "--n", "4", "--stat", "duu"],
])
def test_output_deterministic(capsys, argv):
    first = run(capsys, "--format", "json", *argv)
    second = run(capsys, "--format", "json", *argv)
    assert first == second


def _svg_lines(text):
    return [tuple(float(v) for v in m) for m in
            re.findall(r'<line x1="([-\d.]+)" y1="([-\d.]+)" x2="([-\d.]+)" y2="([-\d.]+)"', text)]


@pytest.mark.parametrize("code_text,edges", [("2:3,0,1,1,1,0", 9), ("0:0,0,0", 3)])
def test_render(capsys, tmp_path, code_text, edges):
    out = tmp_path / "t.svg"
    code, _, _ = run(capsys, "render", code_text, "-o", str(out))
    assert code == 0
    text = out.read_text()
    assert text.startswith("<?xml")
    lines = _svg_lines(text)
    assert len(lines) == edges
    for x1, y1, x2, y2 in lines:
        angle = math.degrees(math.atan2(-(y2 - y1), x2 - x1)) % 360
        nearest = round((angle - 30) / 60) * 60 + 30
        assert abs(angle - nearest) < 0.05
    # deterministic
    run(capsys, "render", code_text, "-o", str(tmp_path / "u.svg"))
    assert (tmp_path / "u.svg").read_text() == text


def test_render_invalid(capsys, tmp_path):
    assert run(capsys, "render", "0:1,1,0,0", "-o", str(tmp_path / "x.svg"))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "supercatalan", "numbers", "--m", "1", "--max-n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "n=3 5" in proc.stdout
