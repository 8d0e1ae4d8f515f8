import json

import pytest

from hives.cli import main
from hives.jsonio import dumps, hive_to_obj
from hives.hive import Hive

WORKED = '{"n":2,"values":[[0,2,2],[1,2],[1]]}\n'
PAIR = ('{"f1":{"n":2,"values":[[0,2,2],[1,2],[1]]},'
        '"f2":{"n":2,"values":[[0,1,1],[1,1],[1]]}}\n')


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_lr_both_agree(capsys):
    assert main(["lr", "--mu", "2,1", "--nu", "2,1", "--lambda", "3,2,1",
                 "--method", "both"]) == 0
    assert capsys.readouterr().out.split() == ["2", "2"]


def test_lr_single_methods(capsys):
    assert main(["lr", "--mu", "1", "--nu", "1", "--lambda", "2"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["lr", "--mu", "1", "--nu", "1", "--lambda", "3"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_lr_json_format(capsys):
    assert main(["lr", "--mu", "1", "--nu", "1", "--lambda", "2",
                 "--method", "both", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"hive": 1, "tableaux": 1}


def test_bad_partition_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["lr", "--mu", "1,2", "--nu", "1", "--lambda", "2"])
    assert exc.value.code == 2


def test_verify_dc(tmp_path, capsys):
    path = write(tmp_path, "h.json", WORKED)
    assert main(["verify", path]) == 0
    out = capsys.readouterr().out
    assert out.startswith("DC;") and "left=(1, 0)" in out


def test_verify_not_dc(tmp_path, capsys):
    path = write(tmp_path, "bad.json",
                 '{"n":2,"values":[[0,2,2],[1,4],[1]]}\n')
    assert main(["verify", path]) == 1
    out = capsys.readouterr().out
    assert "NOT DC" in out and "kind I at (0, 0)" in out


def test_verify_schema_error(tmp_path, capsys):
    path = write(tmp_path, "g.json", "{broken")
    assert main(["verify", path]) == 2


def test_enumerate(tmp_path, capsys):
    out = tmp_path / "hives.json"
    assert main(["enumerate", "--mu", "2,1,0", "--nu", "2,1,0",
                 "--lambda", "3,2,1", "--canonical", "-o", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["count"] == 2 and len(obj["hives"]) == 2


def test_assoc_roundtrip_byte_identical(tmp_path, capsys):
    pair = write(tmp_path, "pair.json", PAIR)
    fwd = tmp_path / "walls.json"
    assert main(["assoc", "forward", pair, "--canonical", "-o", str(fwd)]) == 0
    walls = json.loads(fwd.read_text())
    assert walls["w1"]["values"] == [[0, 2, 2], [1, 2], [1]]
    assert walls["w2"]["values"] == [[0, 2, 2], [2, 2], [2]]
    back = tmp_path / "back.json"
    assert main(["assoc", "inverse", str(fwd), "--canonical",
                 "-o", str(back)]) == 0
    assert back.read_text() == PAIR


def test_assoc_rejects_invalid_pair(tmp_path, capsys):
    bad = write(tmp_path, "bad.json",
                '{"f1":{"n":2,"values":[[0,2,2],[1,2],[1]]},'
                '"f2":{"n":2,"values":[[0,0,0],[0,0],[0]]}}\n')
    assert main(["assoc", "forward", bad]) == 2


def test_commute_singleton(tmp_path, capsys):
    path = write(tmp_path, "h.json", '{"n":1,"values":[[0,3],[1]]}\n')
    assert main(["commute", path, "--check", "--canonical"]) == 0
    assert capsys.readouterr().out == '{"n":1,"values":[[0,3],[2]]}\n'


def test_propagate_with_pcpm(tmp_path, capsys):
    g = write(tmp_path, "g.json", WORKED)
    c = write(tmp_path, "c.json", '{"n":2,"values":[[0,1,1],[1,1],[1]]}\n')
    assert main(["propagate", "--ground", g, "--ceiling", c,
                 "--check-pcpm", "--canonical"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["values"][1][0][0] == 2  # T(0, 0, 1)


def test_propagate_rejects_mismatch(tmp_path, capsys):
    g = write(tmp_path, "g.json", WORKED)
    c = write(tmp_path, "c.json", '{"n":2,"values":[[0,1,2],[1,1],[1]]}\n')
    assert main(["propagate", "--ground", g, "--ceiling", c]) == 2


def test_render(tmp_path):
    path = write(tmp_path, "h.json", WORKED)
    out = tmp_path / "h.svg"
    assert main(["render", path, "-o", str(out)]) == 0
    svg = out.read_text()
    assert svg.startswith("<svg") and svg.count("<circle") == 6


def test_selfcheck_small(capsys):
    assert main(["selfcheck", "--max-n", "2", "--max-part", "2",
                 "--random-cases", "5"]) == 0
    out = capsys.readouterr().out
    assert "selfcheck: PASS" in out and out.count("cases=") == 4


def test_selfcheck_degenerate(capsys):
    assert main(["selfcheck", "--max-n", "0", "--random-cases", "0"]) == 0
    assert "selfcheck: PASS" in capsys.readouterr().out


def test_selfcheck_fault_injection_fails(capsys):
    assert main(["selfcheck", "--max-n", "2", "--max-part", "2",
                 "--random-cases", "0", "--inject-fault"]) == 1
    assert "selfcheck: FAIL" in capsys.readouterr().out


def test_outputs_independent_of_threads(capsys):
    argsets = [["selfcheck", "--max-n", "2", "--max-part", "1",
                "--random-cases", "3"],
               ["selfcheck", "--max-n", "2", "--max-part", "1",
                "--random-cases", "3", "--threads", "4"]]
    outs = []
    for argv in argsets:
        assert main(argv) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_canonical_output_byte_stable(tmp_path):
    path = write(tmp_path, "h.json", WORKED)
    outs = set()
    for k in range(2):
        out = tmp_path / f"o{k}.json"
        assert main(["commute", path, "--canonical", "-o", str(out)]) == 0
        outs.add(out.read_bytes())
    assert len(outs) == 1


def test_dumps_matches_cli_canonical():
    h = Hive(((0, 2, 2), (1, 2), (1,)))
    assert dumps(hive_to_obj(h)) == WORKED
