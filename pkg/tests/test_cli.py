import json
import subprocess
import sys
import xml.etree.ElementTree as ET

from resflat.cli import main


def run_cli(args, tmp_path, doc=None, name="in.json"):
    argv = list(args)
    if doc is not None:
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        argv.append(str(path))
    out = tmp_path / "out.json"
    argv += ["-o", str(out)]
    code = main(argv)
    payload = json.loads(out.read_text()) if out.exists() else None
    return code, payload


def test_decide_excluded_ray(tmp_path):
    doc = {
        "stratum": {"genus": 0, "zeros": [2], "poles": [], "simple_poles": 4},
        "residues": [1, 1, -1, -1],
    }
    code, out = run_cli(["decide"], tmp_path, doc)
    assert code == 1
    assert out["verdict"]["reason"] == "excluded-primitive-ray"


def test_decide_realizable_exit_zero(tmp_path):
    doc = {
        "stratum": {"genus": 1, "zeros": [6], "poles": [3, 3], "simple_poles": 0},
        "residues": [0, 0],
    }
    code, out = run_cli(["decide"], tmp_path, doc)
    assert code == 0
    assert out["verdict"]["every_component"] is True


def test_table_counts(tmp_path):
    code, out = run_cli(["table", "--s-min", "2", "--s-max", "6"], tmp_path)
    assert code == 0
    assert [row["count"] for row in out["rows"]] == [0, 0, 1, 1, 4]


def test_witness_then_verify_same_process(tmp_path):
    doc = {
        "stratum": {"genus": 0, "zeros": [5], "poles": [], "simple_poles": 7},
        "residues": [3, 1, 1, 1, -2, -2, -2],
    }
    code, cert = run_cli(["witness"], tmp_path, doc)
    assert code == 0 and cert["kind"] == "certificate"
    code2, out2 = run_cli(["verify"], tmp_path, cert, name="cert.json")
    assert code2 == 0
    assert out2["profile"]["zeros"] == [5]


def test_witness_verify_separate_processes(tmp_path):
    req = tmp_path / "req.json"
    req.write_text(
        json.dumps(
            {
                "stratum": {"genus": 1, "zeros": [4], "poles": [2, 2], "simple_poles": 0},
                "residues": [0, 0],
                "rotation": 1,
            }
        )
    )
    cert_path = tmp_path / "cert.json"
    r1 = subprocess.run(
        [sys.executable, "-m", "resflat.cli", "witness", str(req), "-o", str(cert_path)],
        capture_output=True,
        text=True,
    )
    assert r1.returncode == 0, r1.stderr
    r2 = subprocess.run(
        [sys.executable, "-m", "resflat.cli", "verify", str(cert_path)],
        capture_output=True,
        text=True,
    )
    assert r2.returncode == 0, r2.stderr
    assert json.loads(r2.stdout)["kind"] == "profile"


def test_stable_assembly_round_trips_through_json(tmp_path):
    doc = {
        "stratum": {"genus": 0, "zeros": [2, 2], "poles": [], "simple_poles": 6},
        "residues": [2, 1, 1, -1, -1, -2],
    }
    code, cert = run_cli(["witness"], tmp_path, doc)
    assert code == 0 and len(cert["bases"]) == 2 and cert["node_pairings"]
    code2, out2 = run_cli(["verify"], tmp_path, cert, name="stable.json")
    assert code2 == 0
    assert out2["profile"]["zeros"] == [2, 2]


def test_witness_not_realizable(tmp_path):
    doc = {
        "stratum": {"genus": 0, "zeros": [2], "poles": [2, 2], "simple_poles": 0},
        "residues": [0, 0],
    }
    code, out = run_cli(["witness"], tmp_path, doc)
    assert code == 1
    assert out["kind"] == "verdict" and not out["verdict"]["realizable"]


def test_deterministic_output(tmp_path):
    doc = {
        "stratum": {"genus": 0, "zeros": [2], "poles": [], "simple_poles": 4},
        "residues": [
            {"re": [1, 1]},
            {"im": [1, 1]},
            {"re": [-1, 1]},
            {"im": [-1, 1]},
        ],
    }
    _, first = run_cli(["witness"], tmp_path, doc)
    path = tmp_path / "again.json"
    path.write_text(json.dumps(doc))
    out2 = tmp_path / "out2.json"
    main(["witness", str(path), "-o", str(out2)])
    assert json.dumps(first, sort_keys=True) == json.dumps(
        json.loads(out2.read_text()), sort_keys=True
    )


def test_svg_emission(tmp_path):
    doc = {
        "stratum": {"genus": 0, "zeros": [2], "poles": [], "simple_poles": 4},
        "residues": [
            {"re": [1, 1]},
            {"im": [1, 1]},
            {"re": [-1, 1]},
            {"im": [-1, 1]},
        ],
    }
    req = tmp_path / "req.json"
    req.write_text(json.dumps(doc))
    svg_path = tmp_path / "drawing.svg"
    code = main(
        ["witness", str(req), "-o", str(tmp_path / "c.json"), "--svg", str(svg_path)]
    )
    assert code == 0 and svg_path.exists()
    root = ET.parse(svg_path).getroot()
    assert root.tag.endswith("svg")
    assert len(list(root.iter())) > 5


def test_oracle_check_small(tmp_path):
    code, out = run_cli(
        ["oracle-check", "--s-max", "5", "--entry-bound", "3"], tmp_path
    )
    assert code == 0
    assert out["agreement"] == "100%"
    assert out["cases"] > 0 and out["disagreements"] == []


def test_cylinders_closed_form(tmp_path):
    doc = {
        "stratum": {"genus": 4, "zeros": [6], "poles": [], "simple_poles": 0},
        "circumferences": [1, 1, 1, 1],
    }
    code, out = run_cli(["cylinders"], tmp_path, doc)
    assert code == 1 and out["via"] == "closed-form"


def test_cylinders_search(tmp_path):
    doc = {
        "stratum": {"genus": 4, "zeros": [4, 1, 1], "poles": [], "simple_poles": 0},
        "circumferences": [1, 1, 1, 1],
    }
    code, out = run_cli(["cylinders"], tmp_path, doc)
    assert code == 0 and out["via"] == "search"


def test_cylinders_budget_exceeded_is_status_two(tmp_path, capsys):
    doc = {
        "stratum": {"genus": 4, "zeros": [4, 1, 1], "poles": [], "simple_poles": 0},
        "circumferences": [1, 1, 1, 1],
    }
    path = tmp_path / "req.json"
    path.write_text(json.dumps(doc))
    code = main(["cylinders", str(path), "--budget", "1", "-o", str(tmp_path / "o.json")])
    assert code == 2
    assert "budget" in capsys.readouterr().err


def test_malformed_json_is_status_two(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["decide", str(path)]) == 2


def test_missing_field_is_status_two(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"residues": [1, -1]}))
    assert main(["decide", str(path)]) == 2


def test_bad_validation_is_status_two(tmp_path):
    doc = {
        "stratum": {"genus": 0, "zeros": [2], "poles": [], "simple_poles": 4},
        "residues": [1, 1, -1, -2],
    }
    code, _ = run_cli(["decide"], tmp_path, doc)
    assert code == 2


def test_verify_rejects_tampered_certificate(tmp_path):
    doc = {
        "stratum": {"genus": 0, "zeros": [5], "poles": [], "simple_poles": 7},
        "residues": [3, 1, 1, 1, -2, -2, -2],
    }
    _, cert = run_cli(["witness"], tmp_path, doc)
    cert["claimed_profile"]["zeros"] = [4, 1]
    code, out = run_cli(["verify"], tmp_path, cert, name="tampered.json")
    assert code == 1
    assert out["kind"] == "violation"
