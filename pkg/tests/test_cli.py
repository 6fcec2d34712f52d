import csv
import io
import math
import subprocess
import sys

import pytest

from aptqubit import cli
from aptqubit.errors import QuadratureFailure


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse(out):
    lines = [line for line in out.splitlines() if line and not line.startswith("#")]
    return list(csv.reader(lines))


def test_decoherence_csv(capsys):
    code, out, _ = run(capsys, "decoherence", "--steps", "11")
    assert code == 0
    header = [line for line in out.splitlines() if line.startswith("#")]
    assert any("alpha=1.0 delta=0.56 xi=0.81 theta=0.86" in h for h in header)
    assert any("beta=0.5" in h for h in header)
    rows = parse(out)
    assert rows[0] == ["t", "D_H", "D_PT", "D_APT"]
    assert len(rows) == 12
    assert rows[1] == ["0", "1", "1", "1"]
    for row in rows[2:]:
        d_h, d_pt, d_apt = map(float, row[1:])
        assert d_apt > d_pt > d_h


def test_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "bloch", "--steps", "7", "--params-preset", "fig6")
    _, b, _ = run(capsys, "bloch", "--steps", "7", "--params-preset", "fig6")
    assert a == b
    assert a.endswith("\n")


def test_twelve_significant_digits(capsys):
    _, out, _ = run(capsys, "decoherence", "--steps", "3", "--class", "APT")
    value = parse(out)[2][1]
    assert len(value.replace(".", "").lstrip("0")) <= 12
    assert float(value) == pytest.approx(float(format(float(value), ".12g")))


def test_class_selection_keeps_canonical_order(capsys):
    _, out, _ = run(capsys, "entropy", "--steps", "3", "--class", "APT", "--class", "h")
    assert parse(out)[0] == ["t", "S_H", "S_APT"]


@pytest.mark.parametrize(
    "argv, field",
    [
        (["decoherence", "--t-max", "0"], "t-max"),
        (["decoherence", "--steps", "1"], "steps"),
        (["decoherence", "--class", "XY"], "class"),
        (["decoherence", "--beta", "-1"], "beta"),
        (["decoherence", "--alpha", "nan"], "alpha"),
        (["decoherence", "--alpha", "0.1"], "APT"),
        (["renyi", "--r", "0"], "r"),
        (["bloch", "--theta0", "4"], "theta0"),
        (["nonsense"], "command"),
        (["decoherence", "--alpha", "abc"], "alpha"),
    ],
)
def test_invalid_config_exits_1(capsys, argv, field):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert field in err
    assert out == ""


def test_numerical_failure_exits_2(capsys, monkeypatch):
    def boom(cfg):
        raise QuadratureFailure("no convergence")

    monkeypatch.setattr(cli, "cmd_decoherence", boom)
    code, _, err = run(capsys, "decoherence")
    assert code == 2
    assert "no convergence" in err


def test_renyi_series_and_ratio(capsys):
    code, out, _ = run(capsys, "renyi", "--params-preset", "fig3", "--r", "2", "--steps", "5")
    assert code == 0
    assert parse(out)[0] == ["t", "S_r2_H", "S_r2_PT", "S_r2_APT"]
    code, out, _ = run(capsys, "renyi", "--params-preset", "fig3", "--ratio-at", "1.25", "--r-max", "2", "--steps", "4")
    rows = parse(out)
    assert rows[0] == ["r", "ratio_H", "ratio_PT", "ratio_APT"]
    # r = 1 is in the sweep and gives exactly 1
    assert rows[2] == ["1", "1", "1", "1"]


def test_fisher_summary_rows(capsys):
    code, out, _ = run(capsys, "fisher", "--params-preset", "table1", "--fisher-param", "omega0", "--summary",
                       "--steps", "5", "--class", "APT")
    assert code == 0
    rows = parse(out)
    assert rows[0] == ["t", "Sf_omega0_APT"]
    labels = {r[0]: float(r[1]) for r in rows[-3:]}
    assert labels["max"] == pytest.approx(5.8874, rel=2e-3)
    assert labels["argmax"] == pytest.approx(0.7210, abs=2e-3)
    assert labels["area"] == pytest.approx(4.8039, rel=2e-3)


def test_bloch_columns(capsys):
    _, out, _ = run(capsys, "bloch", "--params-preset", "fig6", "--steps", "3", "--class", "H")
    assert "clockwise" in out
    rows = parse(out)
    assert rows[0] == ["t", "sx_H", "sy_H", "sz_H", "d_H", "omega_ang_H", "v_lin_H"]
    t0 = list(map(float, rows[1]))
    assert t0[3] == pytest.approx(math.cos(3 * math.pi / 8))


def test_table_text_and_csv(capsys, tmp_path):
    out_file = tmp_path / "table.csv"
    code, out, _ = run(capsys, "table", "--out", str(out_file))
    assert code == 0
    assert "S_f^max" in out
    apt_beta = [line for line in out.splitlines() if line.startswith("APT") and "beta" in line][0]
    s_max, t_max, area = map(float, apt_beta.split()[2:])
    assert (s_max, t_max, area) == (0.6190, 0.7242, 0.5058)
    rows = parse(out_file.read_text())
    assert rows[0] == ["class", "param", "s_max", "t_max", "area"]
    assert len(rows) == 7


def test_out_file(capsys, tmp_path):
    target = tmp_path / "d.csv"
    code, out, _ = run(capsys, "decoherence", "--steps", "4", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("# command=decoherence")


def test_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "decoherence", "--steps", "4", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 1


def test_explicit_flags_override_preset(capsys):
    _, out, _ = run(capsys, "decoherence", "--params-preset", "fig6", "--theta", "0.5", "--steps", "2", "--class", "H")
    assert "alpha=0.9 delta=0.38 xi=0.8 theta=0.5" in out


def test_verify_reports_every_check(capsys):
    code, out, _ = run(capsys, "verify")
    names = ["quadrature_vs_simpson", "liouville_rk4_vs_closed_form", "fock_vs_closed_form_H",
             "fock_vs_closed_form_APT", "fock_vs_similarity_form_APT", "sampled_bath_vs_continuum",
             "dyson_density_map", "fisher_vs_kl_curvature"]
    for name in names:
        assert name in out
    status = {line.split()[1]: line.split()[0] for line in out.splitlines() if line.startswith(("PASS", "FAIL"))}
    # exit status reflects whether every check passed
    assert code == (0 if all(v == "PASS" for v in status.values()) else 3)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "aptqubit", "decoherence", "--t-max", "-1"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "t-max" in proc.stderr
