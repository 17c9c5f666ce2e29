import json

import pytest

from cubeforge.adc import disk, save_adc, to_json_dict, with_group_cones_above
from cubeforge.cli import main
from cubeforge.core import is_thin
from cubeforge.nerve import NcModel, cell_to_json
from cubeforge.transfor import homotopy_lax_transfor


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_ok(tmp_path, capsys):
    path = tmp_path / "disk2.adc"
    save_adc(disk(2), str(path))
    code, out, _ = run(capsys, "check", "--adc", str(path), "--dim", "2", "--bound", "1")
    assert code == 0
    assert "result: ok" in out
    assert "cubeforge 0.1.0" in out
    assert "d_convention" in out


def test_check_corrupted_exit1(tmp_path, capsys):
    data = to_json_dict(disk(2))
    data["boundary"]["2"] = [[1], [1]]  # d[x] = s1 + t1: breaks d o d = 0
    path = tmp_path / "bad.adc"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "check", "--adc", str(path), "--dim", "1")
    assert code == 1
    assert "d o d" in out


def test_check_missing_file_exit2(capsys):
    code, _, err = run(capsys, "check", "--adc", "nowhere.adc", "--dim", "1")
    assert code == 2
    assert "no such file" in err


def test_check_json_deterministic(tmp_path, capsys):
    path = tmp_path / "disk1.adc"
    save_adc(disk(1), str(path))
    args = ("check", "--adc", str(path), "--dim", "2", "--seed", "9",
            "--random", "5", "--format", "json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["ok"] is True and payload["version"]


def test_classify_printed_and_omega0(tmp_path, capsys):
    path = tmp_path / "disk2.adc"
    save_adc(disk(2), str(path))
    code, out, _ = run(capsys, "classify", "--adc", str(path), "--dims", "1..2")
    assert code == 0
    assert "p-estimate: >= 2" in out
    assert "witness" in out

    g = tmp_path / "omega0.adc"
    save_adc(with_group_cones_above(disk(2), 0), str(g))
    code, out, _ = run(capsys, "classify", "--adc", str(g), "--dims", "1..2")
    assert code == 0
    assert "p-estimate: >= 0" in out


def test_classify_empty_dims_exit2(capsys):
    code, _, err = run(capsys, "classify", "--adc", "disk:2", "--dims", "3..1")
    assert code == 2
    assert "empty" in err


def test_perm_commands(capsys):
    assert run(capsys, "perm", "boundary", "--word", "T1 T2", "--i", "2") == (0, "T1\n", "")
    assert run(capsys, "perm", "boundary", "--word", "T1 T2", "--i", "1")[1] == "1\n"
    assert run(capsys, "perm", "eval", "--word", "T1 T1")[1] == "(1 2)\n"
    assert run(capsys, "perm", "length", "--word", "T1 T2 T1")[1] == "3\n"
    assert run(capsys, "perm", "minrep", "--word", "T2 T1 T2")[1] == "T1 T2 T1\n"
    assert run(capsys, "perm", "rho", "--n", "1", "--m", "1")[1] == "(2 1)\n"
    assert run(capsys, "perm", "bc-eval", "--word", "R1 R1")[1] == "(1)\n"
    code, out, _ = run(capsys, "perm", "boundary", "--word", "T1 T2", "--i", "3",
                       "--format", "json")
    assert json.loads(out)["word"] == "T1"


def test_invert_thin_cell_stays_thin(tmp_path, capsys):
    model = NcModel(with_group_cones_above(disk(2), 0))
    x = next(c for c in model.cells(1, 1) if any(model.value(c, "0")))
    thin = model.conn(x, 1, "-")
    cellfile = tmp_path / "thin.cell"
    cellfile.write_text(json.dumps(cell_to_json(model, thin)))
    code, out, _ = run(capsys, "invert", "--cell", str(cellfile), "--kind", "T",
                       "--i", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    back = model.make(data["dim"], {k: tuple(v) for k, v in data["assignment"].items()})
    assert is_thin(model, back)


def test_invert_not_invertible_exit1(tmp_path, capsys):
    model = NcModel(disk(2))
    fat = next(c for c in model.cells(2, 1) if any(model.value(c, "00")))
    cellfile = tmp_path / "fat.cell"
    cellfile.write_text(json.dumps(cell_to_json(model, fat)))
    code, _, err = run(capsys, "invert", "--cell", str(cellfile), "--kind", "R", "--i", "1")
    assert code == 1
    assert "not invertible" in err
    # the offending basis element is named
    assert "0" in err


def test_invert_sigma(tmp_path, capsys):
    model = NcModel(with_group_cones_above(disk(2), 0))
    A = model.cells(2, 1)[5]
    cellfile = tmp_path / "a.cell"
    cellfile.write_text(json.dumps(cell_to_json(model, A)))
    code, out, _ = run(capsys, "invert", "--cell", str(cellfile), "--kind", "sigma",
                       "--sigma", "T1", "--format", "json")
    assert code == 0
    assert json.loads(out)["dim"] == 2


def test_fold_phi2_degenerate_sides(tmp_path, capsys):
    model = NcModel(disk(2))
    A = next(c for c in model.cells(2, 1) if any(model.value(c, "00")))
    cellfile = tmp_path / "a.cell"
    cellfile.write_text(json.dumps(cell_to_json(model, A)))
    code, out, _ = run(capsys, "fold", "--cell", str(cellfile), "--phi", "2",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    folded = model.make(data["dim"], {k: tuple(v) for k, v in data["assignment"].items()})
    from cubeforge.core import in_deg_image

    for a in "-+":
        assert in_deg_image(model, model.face(folded, 2, a), 1)


def test_transfor_convert_roundtrip(tmp_path, capsys):
    src = NcModel(disk(1))
    tgt = NcModel(with_group_cones_above(disk(2), 0))
    f_minus = [[[1, 1], [0, 0]], [[0], [0]]]
    f_plus = [[[0, 0], [1, 1]], [[0], [0]]]
    h = [[[1, 1], [0, 0]], [[0]]]
    F = homotopy_lax_transfor(src, tgt, f_minus, f_plus, h, [0, 1], 1)
    table = {
        "variance": "lax",
        "p": 1,
        "adc_source": to_json_dict(src.K),
        "adc_target": to_json_dict(tgt.K),
        "entries": [
            {
                "dim": A.dim,
                "cell": {k: list(A.payload[pos])
                         for pos, (_, k) in enumerate(src.elements(A.dim))},
                "image": {k: list(FA.payload[pos])
                          for pos, (_, k) in enumerate(tgt.elements(FA.dim))},
            }
            for A, FA in F.pairs()
        ],
    }
    path = tmp_path / "f.transfor"
    path.write_text(json.dumps(table))
    code, out, _ = run(capsys, "transfor", "--table", str(path), "--to", "oplax",
                       "--format", "json")
    assert code == 0
    converted = json.loads(out)
    assert converted["variance"] == "oplax"
    # write the converted table and convert back
    path2 = tmp_path / "g.transfor"
    path2.write_text(out)
    code, out2, _ = run(capsys, "transfor", "--table", str(path2), "--to", "lax",
                        "--format", "json")
    assert code == 0
    back = json.loads(out2)
    assert back["entries"] == table["entries"]


def test_transfor_validate_only(tmp_path, capsys):
    src = NcModel(disk(1))
    tgt = NcModel(disk(1))
    f_id = [[[1, 0], [0, 1]], [[1]]]
    from cubeforge.transfor import chain_map_transfor

    F = chain_map_transfor(src, tgt, f_id, [0, 1], 1)
    table = {
        "variance": "lax",
        "p": 0,
        "adc_source": "disk:1",
        "adc_target": "disk:1",
        "entries": [
            {
                "dim": A.dim,
                "cell": {k: list(A.payload[pos])
                         for pos, (_, k) in enumerate(src.elements(A.dim))},
                "image": {k: list(FA.payload[pos])
                          for pos, (_, k) in enumerate(tgt.elements(FA.dim))},
            }
            for A, FA in F.pairs()
        ],
    }
    path = tmp_path / "id.transfor"
    path.write_text(json.dumps(table))
    code, out, _ = run(capsys, "transfor", "--table", str(path))
    assert code == 0
    assert "valid: yes" in out


def test_shorthand_adc(capsys):
    code, out, _ = run(capsys, "check", "--adc", "disk:1", "--dim", "1",
                       "--orientation", "flipped")
    assert code == 0
    assert "source-minus-target" in out


def test_usage_error_exit2(capsys):
    code = main(["check"])  # missing --adc
    assert code == 2
