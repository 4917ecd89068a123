import json

from invcat.cli import main
from invcat.jobs import parse_job


CROWN3 = {
    "field": {"kind": "cyclotomic", "n": 3},
    "quiver": {
        "vertices": ["t0", "t1", "t2"],
        "arrows": [
            {"source": "t0", "target": "t1", "dim": 1},
            {"source": "t1", "target": "t2", "dim": 1},
            {"source": "t2", "target": "t0", "dim": 1},
        ],
    },
    "action": {
        "generators": [
            {
                "name": "t",
                "matrices": {"t1<-t0": [["z"]], "t2<-t1": [["z"]], "t0<-t2": [["z"]]},
            }
        ]
    },
    "options": {"max_degree": 6},
}

KRONECKER_TRIVIAL = {
    "field": {"kind": "rationals"},
    "quiver": {
        "vertices": ["x", "y"],
        "arrows": [{"source": "x", "target": "y", "dim": 2}],
    },
    "action": {"generators": []},
    "options": {"max_degree": 2},
}


def write_job(tmp_path, data, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def without_timing(text):
    data = json.loads(text)
    data.pop("timing", None)
    return json.dumps(data, sort_keys=True)


def test_compute_crown(tmp_path, capsys):
    job = write_job(tmp_path, CROWN3)
    out = tmp_path / "report.json"
    assert main(["compute", "--input", job, "--out", str(out)]) == 0
    stdout = capsys.readouterr().out
    assert "generators up to degree 6: 3" in stdout
    assert "freeness: holds" in stdout
    report = json.loads(out.read_text())
    assert report["schema_version"] == 1
    assert report["group_size"] == 3
    assert len(report["generators"]) == 3
    assert report["completeness"]["status"] == "certified"
    assert report["invariant_classification"]["components"] == ["A~0", "A~0", "A~0"]
    assert report["invariant_classification"]["certified"] is True
    assert report["schurian_check"]["agrees"] is True
    assert report["hom_series"]["t0<-t0"] == [1, 0, 0, 1, 0, 0, 1]


def test_compute_is_deterministic(tmp_path):
    job = write_job(tmp_path, CROWN3)
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert main(["compute", "--input", job, "--out", str(out1)]) == 0
    assert main(["compute", "--input", job, "--out", str(out2)]) == 0
    assert without_timing(out1.read_text()) == without_timing(out2.read_text())


def test_kronecker_outcome(tmp_path):
    job = write_job(tmp_path, KRONECKER_TRIVIAL)
    out = tmp_path / "report.json"
    assert main(["compute", "--input", job, "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["invariant_classification"]["components"] == ["A~1"]
    assert report["invariant_classification"]["overall"] == "tame"


def test_job_echo_round_trips(tmp_path):
    job_path = write_job(tmp_path, CROWN3)
    out = tmp_path / "report.json"
    assert main(["compute", "--input", job_path, "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    echoed = parse_job(report["job"])
    original = parse_job(CROWN3)
    assert echoed.quiver == original.quiver
    assert echoed.field == original.field
    assert echoed.max_degree == original.max_degree
    assert echoed.action.generator_elements == original.action.generator_elements


def test_malformed_matrix_dimensions(tmp_path, capsys):
    bad = json.loads(json.dumps(KRONECKER_TRIVIAL))
    bad["action"]["generators"] = [
        {"name": "s", "matrices": {"y<-x": [["1", "0"]]}}  # 1x2, should be 2x2
    ]
    job = write_job(tmp_path, bad)
    out = tmp_path / "report.json"
    assert main(["compute", "--input", job, "--out", str(out)]) == 1
    err = capsys.readouterr().err
    assert "y<-x" in err
    assert not out.exists()


def test_unknown_vertex_in_arrows(tmp_path, capsys):
    bad = json.loads(json.dumps(KRONECKER_TRIVIAL))
    bad["quiver"]["arrows"][0]["target"] = "zz"
    job = write_job(tmp_path, bad)
    assert main(["compute", "--input", job, "--out", str(tmp_path / "r.json")]) == 1
    assert "unknown vertex" in capsys.readouterr().err


def test_invalid_json_reports_position(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"field": }', encoding="utf-8")
    assert main(["compute", "--input", str(path), "--out", str(tmp_path / "r.json")]) == 1
    err = capsys.readouterr().err
    assert "line 1" in err


def test_missing_file(tmp_path, capsys):
    assert main(["compute", "--input", str(tmp_path / "nope.json"), "--out", str(tmp_path / "r.json")]) == 1
    assert "cannot read" in capsys.readouterr().err


def test_classify_command(tmp_path, capsys):
    a4 = {
        "field": {"kind": "rationals"},
        "quiver": {
            "vertices": ["u0", "u1", "u2", "u3"],
            "arrows": [
                {"source": "u0", "target": "u1", "dim": 1},
                {"source": "u1", "target": "u2", "dim": 1},
                {"source": "u2", "target": "u3", "dim": 1},
            ],
        },
    }
    assert main(["classify", "--input", write_job(tmp_path, a4)]) == 0
    assert "overall: finite" in capsys.readouterr().out

    star5 = {
        "quiver": {
            "vertices": ["c", "a1", "a2", "a3", "a4", "a5"],
            "arrows": [
                {"source": "c", "target": f"a{i}", "dim": 1} for i in range(1, 6)
            ],
        }
    }
    assert main(["classify", "--input", write_job(tmp_path, star5, "star.json")]) == 0
    assert "overall: wild" in capsys.readouterr().out

    cycle = {
        "quiver": {
            "vertices": ["t0", "t1", "t2"],
            "arrows": [
                {"source": "t0", "target": "t1", "dim": 1},
                {"source": "t1", "target": "t2", "dim": 1},
                {"source": "t2", "target": "t0", "dim": 1},
            ],
        }
    }
    assert main(["classify", "--input", write_job(tmp_path, cycle, "cycle.json")]) == 0
    assert "overall: tame" in capsys.readouterr().out


def test_schurian_check_command(tmp_path, capsys):
    job = write_job(tmp_path, CROWN3)
    assert main(["schurian-check", "--input", job, "--max-degree", "6"]) == 0
    assert "agree" in capsys.readouterr().out


def test_schurian_check_rejects_fat_arrows(tmp_path, capsys):
    job = write_job(tmp_path, KRONECKER_TRIVIAL)
    assert main(["schurian-check", "--input", job]) == 1
    assert "not Schurian" in capsys.readouterr().err


def test_group_cap_error(tmp_path, capsys):
    capped = json.loads(json.dumps(CROWN3))
    capped["options"] = {"max_degree": 3, "group_cap": 2}
    job = write_job(tmp_path, capped)
    assert main(["compute", "--input", job, "--out", str(tmp_path / "r.json")]) == 1
    err = capsys.readouterr().err
    assert "closure exceeds" in err and "group-cap" in err


def test_field_validation(tmp_path, capsys):
    for field, fragment in [
        ({"kind": "cyclotomic", "n": 1}, "cyclotomic"),
        ({"kind": "prime", "p": 4}, "prime"),
        ({"kind": "gaussian"}, "unknown field kind"),
    ]:
        bad = json.loads(json.dumps(KRONECKER_TRIVIAL))
        bad["field"] = field
        job = write_job(tmp_path, bad)
        assert main(["compute", "--input", job, "--out", str(tmp_path / "r.json")]) == 1
        assert fragment in capsys.readouterr().err


def test_bad_scalar_entry_names_position(tmp_path, capsys):
    bad = json.loads(json.dumps(KRONECKER_TRIVIAL))
    bad["action"]["generators"] = [
        {"name": "s", "matrices": {"y<-x": [["1", "0"], ["0", "z"]]}}
    ]
    job = write_job(tmp_path, bad)
    assert main(["compute", "--input", job, "--out", str(tmp_path / "r.json")]) == 1
    err = capsys.readouterr().err
    assert "[1][1]" in err


def test_falsified_property_exits_two(tmp_path, monkeypatch):
    # the mathematics cannot fail, so fake a failing freeness verdict to
    # check the reserved exit code is wired through
    import invcat.jobs as jobs_module
    from invcat.category import FreenessVerdict

    def fake_verify(table, report, verify_depth=None):
        return FreenessVerdict(holds=False, verify_depth=0, checked_paths=0)

    monkeypatch.setattr(jobs_module, "verify_freeness", fake_verify)
    job = write_job(tmp_path, CROWN3)
    out = tmp_path / "r.json"
    assert main(["compute", "--input", job, "--out", str(out)]) == 2
    report = json.loads(out.read_text())
    assert report["freeness"]["holds"] is False


def test_duplicate_arrow_rejected(tmp_path, capsys):
    bad = json.loads(json.dumps(KRONECKER_TRIVIAL))
    bad["quiver"]["arrows"].append({"source": "x", "target": "y", "dim": 1})
    job = write_job(tmp_path, bad)
    assert main(["compute", "--input", job, "--out", str(tmp_path / "r.json")]) == 1
    assert "duplicate arrow" in capsys.readouterr().err


def test_flag_overrides_file_options(tmp_path):
    job = write_job(tmp_path, CROWN3)
    out = tmp_path / "r.json"
    assert main(["compute", "--input", job, "--out", str(out), "--max-degree", "3"]) == 0
    report = json.loads(out.read_text())
    assert report["job"]["options"]["max_degree"] == 3
    assert len(report["hom_series"]["t0<-t0"]) == 4
