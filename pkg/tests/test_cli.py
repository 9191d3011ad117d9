"""The qcalc command line: outputs, exit codes, rendering, round trips."""

import json
from pathlib import Path

from qcalc.cli import main, render_lacing, render_pipedream
from qcalc.poly import parse_poly
from qcalc.quiver import Dims, LaceArray, parse_input

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_zperm_oldpd(capsys):
    code, out, _ = run(capsys, "zperm", str(FIXTURES / "ex_oldpd.json"))
    assert code == 0
    assert out.strip() == "52361487"


def test_qpoly_letters_final(capsys):
    code, out, _ = run(
        capsys, "qpoly", "--method", "pd", "--letters", str(FIXTURES / "ex_final.json")
    )
    assert code == 0
    assert out.strip() == "a1*a2 - a1*c - a2*c - b1*b2 + b1*c + b2*c"


def test_qpoly_methods_agree(capsys):
    outputs = set()
    for method in ("pd", "cgpd", "ratio"):
        code, out, _ = run(
            capsys, "qpoly", "--method", method, str(FIXTURES / "ex_final.json")
        )
        assert code == 0
        outputs.add(out.strip())
    assert len(outputs) == 1
    parse_poly(outputs.pop())


def test_lace_output(capsys):
    code, out, _ = run(capsys, "lace", str(FIXTURES / "ex_lace.json"))
    assert code == 0
    values = dict(
        line.split(" = ") for line in out.strip().splitlines()
    )
    assert values["s[0,0]"] == "2"
    assert values["s[1,2]"] == "1"
    assert values["s[2,2]"] == "0"


def test_lace_json_round_trip(capsys):
    code, out, _ = run(capsys, "lace", "--format", "json", str(FIXTURES / "ex_lace.json"))
    assert code == 0
    obj = json.loads(out)
    r = parse_input(json.loads((FIXTURES / "ex_lace.json").read_text()))
    assert parse_input(obj) == r


def test_check_a3_exit_zero(capsys):
    code, out, _ = run(capsys, "check", str(FIXTURES / "ex_a3.json"))
    assert code == 0
    assert "result: ok" in out


def test_check_json_schema(capsys):
    code, out, _ = run(capsys, "check", "--format", "json", str(FIXTURES / "ex_a3.json"))
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["counts"]["perm"] == 4


def test_sweep_small(capsys):
    code, out, _ = run(capsys, "sweep", "1")
    assert code == 0
    assert "0 failures" in out


def test_enum_perm(capsys):
    code, out, _ = run(
        capsys, "enum", "--what", "perm", "--format", "json", str(FIXTURES / "ex_perm12.json")
    )
    assert code == 0
    perms = [tuple(item["perm"]) for item in json.loads(out)]
    assert perms == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1)]


def test_enum_pd_counts(capsys):
    code, out, _ = run(
        capsys, "enum", "--what", "pd", "--region", "full", "--format", "json",
        str(FIXTURES / "ex_oldpd.json"),
    )
    assert code == 0
    assert len(json.loads(out)) == 21
    code, out, _ = run(
        capsys, "enum", "--what", "pd", "--format", "json", str(FIXTURES / "ex_oldpd.json")
    )
    assert len(json.loads(out)) == 9


def test_input_error_names_entry(capsys):
    code, out, err = run(capsys, "zperm", '{"dims":[1,2,1],"rank":{"0,1":1}}')
    assert code == 1
    assert "(0,2)" in err


def test_bad_flag_exits_one(capsys):
    try:
        code = main(["qpoly", "--method", "sorcery", str(FIXTURES / "ex_a3.json")])
    except SystemExit as exc:
        code = exc.code
    assert code == 1


def test_render_pipedream_empty_grid(capsys):
    code, out, _ = run(capsys, "render", '{"d": 3}', "--what", "pipedream")
    assert code == 0
    assert out == "...\n...\n...\n"


def test_render_pipedream_with_blocks():
    text = render_pipedream(4, frozenset([(1, 1)]), Dims((1, 2, 1)))
    assert text.splitlines() == [
        "+|..|.",
        "-+--+-",
        ".|..|.",
        ".|..|.",
        "-+--+-",
        ".|..|.",
    ]


def test_render_cgpd_forced(capsys):
    code, out, _ = run(
        capsys, "render", '{"dims": [1, 1], "rects": [[["r"]]]}', "--what", "cgpd"
    )
    assert code == 0
    assert out.strip() == "r"


def test_render_lacing_shape():
    s = LaceArray(Dims((1, 2, 1)), {(0, 2): 1, (1, 1): 1})
    lines = render_lacing(s).splitlines()
    assert lines[0] == "*"
    assert lines[2] == "* *"
    assert lines[4] == "*"
    assert len(lines) == 5


def test_render_unknown_object(capsys):
    code, _, err = run(capsys, "render", '{"d": 3}', "--what", "sculpture")
    assert code == 1
    assert "sculpture" in err


def test_render_zmatrix(capsys):
    code, out, _ = run(capsys, "render", str(FIXTURES / "ex_perm12.json"), "--what", "zmatrix")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()]
    assert len(rows) == 3 and all(len(row) == 3 for row in rows)


def test_csm_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "csm", "--format", "json", str(FIXTURES / "ex_a3.json")
    )
    assert code == 0
    payload = json.loads(out)
    from qcalc.engine import compute

    r = parse_input(json.loads((FIXTURES / "ex_a3.json").read_text()))
    assert parse_poly(payload["polynomial"]) == compute(r, "csm", "pd")
