import json
from fractions import Fraction

import pytest

from combibounds.channel import Certificate, WeightVec, cover_violations
from combibounds.cli import main
from combibounds.fileio import load_certificate, load_channel, save_certificate
from combibounds.zoo import grain_channel


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _values(stdout: str) -> dict[str, str]:
    return {ln.split()[0]: ln.split()[2] for ln in stdout.splitlines() if ln.strip()}


def test_fig1_lp(capsys):
    code, out, _ = run(capsys, "bounds", "--gen", "fig1", "--methods", "lp")
    assert code == 0 and _values(out)["lp"] == "2"


def test_fig1_all_methods(capsys):
    methods = "mdu,dsu,mdl,dsl,ldl,ldu:1,ldu:inf,dsu-threshold:2,caro-wei,motzkin-straus,turan," \
        "edge-upper,edge-lower,lp,ilp,ilp-cover,theta-star"
    code, out, err = run(capsys, "bounds", "--gen", "fig1", "--methods", methods, "--emit-certificates")
    assert code == 0, err
    vals = _values(out)
    assert vals["mdu"] == "3" and vals["dsu"] == "2" and vals["mdl"] == "4/3"
    assert vals["ilp"] == "2" and vals["ilp-cover"] == "2"


def test_channel_file_input(capsys, tmp_path):
    path = tmp_path / "fig1.txt"
    assert run(capsys, "gen", "--gen", "fig1", "--out", str(path))[0] == 0
    assert load_channel(path).num_edges == 7
    code, out, _ = run(capsys, "bounds", "--channel", str(path), "--methods", "lp")
    assert code == 0 and _values(out)["lp"] == "2"


def test_deletion_8_local_degree_and_closed_forms(capsys):
    code, out, _ = run(capsys, "bounds", "--gen", "deletion:8", "--methods", "ldu:2,thm1,kk")
    vals = _values(out)
    assert code == 0
    assert int(Fraction(vals["thm1"])) == 35
    assert Fraction(vals["ldu:2"]) <= Fraction(vals["thm1"])


def test_grain_6_sandwich(capsys):
    code, out, _ = run(capsys, "bounds", "--gen", "grain:6", "--methods", "ldu:1,lp")
    vals = _values(out)
    assert code == 0 and Fraction(vals["ldu:1"]) >= Fraction(vals["lp"])


def test_csv_is_byte_stable(capsys, tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        run(capsys, "bounds", "--gen", "fig1", "--methods", "mdu,mdl,lp", "--csv", str(p))
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].read_text() == (
        "channel,bound,direction,exact,floor,approx\n"
        "fig1,mdu,upper-on-p,3,3,3\n"
        "fig1,mdl,lower-on-kappa-star,4/3,1,1.333333333\n"
        "fig1,lp,upper-on-p,2,2,2\n"
    )


def test_json_output(capsys, tmp_path):
    path = tmp_path / "out.json"
    run(capsys, "bounds", "--gen", "fig1", "--methods", "dsu", "--json", str(path), "--emit-certificates")
    data = json.loads(path.read_text())
    rep = data["reports"][0]
    assert rep["exact"] == [2, 1] and rep["certificate"]["kind"] == "cover"


def test_weights_file(capsys, tmp_path):
    t = tmp_path / "t.txt"
    t.write_text("2\n1\n1\n")
    code, out, _ = run(capsys, "bounds", "--gen", "fig1", "--methods", "mdu", "--t", str(t))
    assert code == 0 and _values(out)["mdu"] == "2"  # At = (2, 3, 3, 2)


def test_negative_weights_reported(capsys, tmp_path):
    t = tmp_path / "t.txt"
    t.write_text("1\n-1\n1\n")
    code, _, err = run(capsys, "bounds", "--gen", "fig1", "--methods", "mdu", "--t", str(t))
    assert code == 1 and "nonnegative" in err


def test_lp_cap_reported(capsys):
    code, _, err = run(capsys, "bounds", "--gen", "deletion:6", "--methods", "lp", "--lp-cap", "10")
    assert code == 1 and "cap" in err


def test_usage_errors(capsys):
    assert run(capsys, "bounds", "--gen", "nope:3")[0] == 2
    assert run(capsys, "bounds", "--methods", "lp")[0] == 2
    assert run(capsys, "bounds", "--gen", "fig1", "--methods", "thm1")[0] == 1


@pytest.fixture
def grain10_certificate(capsys, tmp_path):
    code, _, err = run(
        capsys, "bounds", "--gen", "grain:10", "--methods", "thm4", "--emit-certificates",
        "--certificate-dir", str(tmp_path),
    )
    assert code == 0, err
    return tmp_path / "thm4.json"


def test_verify_pass(capsys, grain10_certificate):
    code, out, _ = run(capsys, "verify", "--gen", "grain:10", "--certificate", str(grain10_certificate))
    assert code == 0 and out.startswith("PASS")


def test_verify_reports_violated_input(capsys, tmp_path, grain10_certificate):
    cert = load_certificate(grain10_certificate)
    A = grain_channel(10)
    # halve the first entry whose halving uncovers some input
    for y, v in enumerate(cert.vector):
        vals = list(cert.vector)
        vals[y] = v / 2
        bad = cover_violations(A, vals)
        if bad:
            break
    else:
        pytest.fail("no single halving breaks the cover")
    broken = Certificate("cover", WeightVec("output", vals), sum(vals))
    path = tmp_path / "broken.json"
    save_certificate(broken, path)
    code, out, _ = run(capsys, "verify", "--gen", "grain:10", "--certificate", str(path))
    assert code == 1
    assert out.startswith("FAIL") and f"constraint violated at input {bad[0]}" in out


def test_verify_all_ones(capsys, tmp_path):
    A = grain_channel(5)
    path = tmp_path / "ones.json"
    save_certificate(Certificate("cover", WeightVec.ones("output", A.num_outputs), A.num_outputs), path)
    assert run(capsys, "verify", "--gen", "grain:5", "--certificate", str(path))[0] == 0


def test_deletion_table_rows(capsys, tmp_path):
    path = tmp_path / "table.csv"
    code, _, _ = run(capsys, "deletion-table", "--n-min", "5", "--n-max", "9", "--csv", str(path))
    lines = path.read_text().splitlines()
    assert code == 0
    assert lines[0] == "n,vt_size,p_star,thm1,fvy,kk,thm2"
    assert lines[1] == "5,6,6,7,7,7,12"
    assert lines[5] == "9,52,53,61,61,63,69"


def test_deletion_table_sentinel(capsys):
    code, out, _ = run(capsys, "deletion-table", "--n-min", "20", "--n-max", "20")
    assert code == 0
    # closed forms only; the thm1 cell is the exact floor
    assert out.splitlines()[1] == "20,49940,—,52719,53202,55188,53348"


def test_family_csv(capsys):
    code, out, _ = run(capsys, "family", "--q", "4", "--n", "20")
    rows = out.splitlines()
    assert code == 0 and rows[0].startswith("s,delta,hamming")
    assert len(rows) == 1 + 10
