import csv
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from angle_extremes import hyperbolic as H
from angle_extremes.cli import main
from angle_extremes.configuration import Configuration
from angle_extremes.io import SchemaError, dumps_config, parse_config, read_config, write_config


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write_json(path, doc):
    path.write_text(json.dumps(doc))
    return path


finite = st.floats(allow_nan=False, allow_infinity=False, min_value=-1e300, max_value=1e300)


@settings(max_examples=50)
@given(st.lists(st.tuples(finite, finite, finite), min_size=3, max_size=6, unique=True))
def test_round_trip_bit_exact(pts):
    pts = np.array(pts)
    try:
        cfg = Configuration("euclidean", pts)
    except Exception:
        return
    back = parse_config(dumps_config(cfg))
    assert back.points.tobytes() == cfg.points.tobytes()
    assert back.dim == 3


def test_round_trip_hyperbolic(tmp_path, rng):
    cfg = Configuration("hyperbolic", H.sample_uniform_disk(rng, 7, 2.0))
    write_config(tmp_path / "h.json", cfg)
    back = read_config(tmp_path / "h.json")
    assert back.geometry == "hyperbolic"
    assert np.array_equal(back.points, cfg.points)


@pytest.mark.parametrize("doc,needle", [
    ({"points": [[0, 0], [1, 0], [0, 1]]}, "geometry"),
    ({"geometry": "flat", "points": [[0, 0], [1, 0], [0, 1]]}, "geometry"),
    ({"geometry": "euclidean", "points": [[0, 0], [1, 0]]}, "points"),
    ({"geometry": "euclidean", "points": [[0, 0], [1, "a"], [0, 1]]}, "points[1][1]"),
    ({"geometry": "euclidean", "dim": 3, "points": [[0, 0, 0], [1, 0], [0, 1, 1]]}, "points[1]"),
    ({"geometry": "hyperbolic", "dim": 3, "points": [[0, 0, 0], [0.1, 0, 0], [0, 0.1, 0]]}, "dim"),
])
def test_schema_errors(doc, needle):
    with pytest.raises(SchemaError, match=needle.replace("[", r"\[").replace("]", r"\]")):
        parse_config(json.dumps(doc))


def test_json_syntax_error_reports_line():
    with pytest.raises(SchemaError, match="line 2"):
        parse_config('{"geometry": "euclidean",\n "points": [[0, 0],, [1, 0]]}')


def test_min_angle_square(tmp_path, capsys):
    assert run(capsys, "ngon", "--n", 4, "--geometry", "euclidean", "--out", tmp_path / "sq.json")[0] == 0
    code, out, _ = run(capsys, "min-angle", "--input", tmp_path / "sq.json")
    assert code == 0
    assert "min_angle = 0.785398163397 rad" in out
    assert "(pi/4)" in out
    assert "meets_bound = true" in out


def test_min_angle_json(tmp_path, capsys):
    path = write_json(tmp_path / "c.json", {"geometry": "euclidean", "points": [[0, 0], [1, 0], [2, 0]]})
    code, out, _ = run(capsys, "min-angle", "--input", path, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["min_angle"] == 0.0 and doc["meets_bound"] is True


def test_min_angle_hyperbolic_random(tmp_path, capsys, rng):
    cfg = Configuration("hyperbolic", H.sample_uniform_disk(rng, 5, 1.0))
    write_config(tmp_path / "h.json", cfg)
    code, out, _ = run(capsys, "min-angle", "--input", tmp_path / "h.json", "--json")
    assert json.loads(out)["min_angle"] < math.pi / 5


def test_exit_codes(tmp_path, capsys):
    bad_schema = write_json(tmp_path / "a.json", {"geometry": "euclidean", "points": [[0, 0]]})
    code, _, err = run(capsys, "min-angle", "--input", bad_schema)
    assert code == 2 and "points" in err
    outside = write_json(tmp_path / "b.json", {"geometry": "hyperbolic", "points": [[0, 0], [0.5, 0], [0, 1.2]]})
    assert run(capsys, "min-angle", "--input", outside)[0] == 3
    coincident = write_json(tmp_path / "c.json", {"geometry": "euclidean", "points": [[0, 0], [0, 0], [1, 1]]})
    assert run(capsys, "witness", "--input", coincident)[0] == 3
    assert run(capsys, "min-angle", "--input", tmp_path / "missing.json")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["ngon", "--n", "5", "--geometry", "euclidean", "--area-eps", "0.1", "--out", str(tmp_path / "x")])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "5", "--trials", "3"])  # --geometry is mandatory
    assert exc.value.code == 2


def test_witness_octagon(tmp_path, capsys):
    run(capsys, "ngon", "--n", 8, "--geometry", "euclidean", "--out", tmp_path / "o.json")
    code, out, _ = run(capsys, "witness", "--input", tmp_path / "o.json")
    cert = json.loads(out)
    assert code == 0
    assert cert["branch"] == "gap"
    assert cert["certified_angle"] == pytest.approx(math.pi / 8, abs=1e-12)
    for key in ("extremal_index", "ordering", "gaps", "certified_triple"):
        assert key in cert


def test_witness_random_against_min_angle(tmp_path, capsys, rng):
    write_config(tmp_path / "r.json", Configuration("euclidean", rng.random((10, 2))))
    cert = json.loads(run(capsys, "witness", "--input", tmp_path / "r.json")[1])
    oracle = json.loads(run(capsys, "min-angle", "--input", tmp_path / "r.json", "--json")[1])
    assert oracle["min_angle"] - 1e-12 <= cert["certified_angle"] <= math.pi / 10


def test_witness_hyperbolic(tmp_path, capsys, rng):
    write_config(tmp_path / "h.json", Configuration("hyperbolic", H.sample_uniform_disk(rng, 6, 1.0)))
    cert = json.loads(run(capsys, "witness", "--input", tmp_path / "h.json")[1])
    assert cert["certified_angle"] < math.pi / 6


def test_ngon_hyperbolic(tmp_path, capsys):
    code, out, _ = run(capsys, "ngon", "--n", 12, "--geometry", "hyperbolic",
                       "--area-eps", 0.1, "--out", tmp_path / "h.json")
    val = json.loads(out)
    assert code == 0 and val["ok"]
    assert all(g > math.pi / 12 - 0.1 for g in val["gamma"])
    cfg = read_config(tmp_path / "h.json")
    assert cfg.geometry == "hyperbolic" and cfg.n == 12


def test_ngon_flag_errors(tmp_path):
    for argv in (["--geometry", "hyperbolic"],
                 ["--geometry", "hyperbolic", "--area-eps", "0.1", "--circumradius", "2"]):
        with pytest.raises(SystemExit) as exc:
            main(["ngon", "--n", "5", "--out", str(tmp_path / "x.json")] + argv)
        assert exc.value.code == 2


def test_ngon_circumradius(tmp_path, capsys):
    run(capsys, "ngon", "--n", 12, "--geometry", "euclidean", "--circumradius", 2, "--out", tmp_path / "t.json")
    cfg = read_config(tmp_path / "t.json")
    assert np.allclose(np.linalg.norm(cfg.points, axis=1), 2.0)


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--geometry", "hyperbolic", "--n", 5, "--trials", 200, "--seed", 1)
    s = json.loads(out)
    assert code == 0 and s["violations"] == 0 and s["trials"] == 200


def test_verify_exit_1_on_violation(capsys, monkeypatch):
    from angle_extremes import analysis

    monkeypatch.setattr(analysis, "check_configuration",
                        lambda c: analysis.TrialRecord(9.0, 9.0, "gap", True, True))
    code, out, _ = run(capsys, "verify", "--geometry", "euclidean", "--n", 4, "--trials", 3)
    assert code == 1 and json.loads(out)["violations"] == 3


def test_threads_env(monkeypatch):
    from angle_extremes.analysis import default_threads

    monkeypatch.setenv("ANGLE_EXTREMES_THREADS", "3")
    assert default_threads() == 3


def test_optimize_writes_trace(tmp_path, capsys):
    code, out, _ = run(capsys, "optimize", "--geometry", "euclidean", "--n", 4, "--budget", 800,
                       "--seed", 0, "--restarts", 2, "--threads", 1, "--trace", tmp_path / "t.csv")
    res = json.loads(out)
    assert code == 0 and res["gap"] >= -1e-12
    with open(tmp_path / "t.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["iteration", "best_min_angle", "gap"]
    vals = [float(r[1]) for r in rows[1:]]
    assert vals == sorted(vals)


def test_hist(tmp_path, capsys, rng):
    run(capsys, "ngon", "--n", 3, "--geometry", "euclidean", "--out", tmp_path / "t.json")
    assert run(capsys, "hist", "--input", tmp_path / "t.json", "--bins", 3, "--out", tmp_path / "h.csv")[0] == 0
    with open(tmp_path / "h.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["bin_lo", "bin_hi", "count"]
    assert [int(r[2]) for r in rows[1:]] == [0, 3, 0]

    run(capsys, "ngon", "--n", 6, "--geometry", "euclidean", "--out", tmp_path / "s.json")
    run(capsys, "hist", "--input", tmp_path / "s.json", "--bins", 6, "--out", tmp_path / "s.csv")
    with open(tmp_path / "s.csv") as fh:
        rows = list(csv.reader(fh))[1:]
    first = next(r for r in rows if int(r[2]) > 0)
    assert float(first[0]) == pytest.approx(math.pi / 6, abs=1e-15)

    write_config(tmp_path / "r.json", Configuration("euclidean", rng.random((20, 2))))
    run(capsys, "hist", "--input", tmp_path / "r.json", "--bins", 17, "--out", tmp_path / "r.csv")
    with open(tmp_path / "r.csv") as fh:
        rows = list(csv.reader(fh))[1:]
    assert sum(int(r[2]) for r in rows) == 3420
