"""Command-line entry point: CSV time series, the Fisher table, and the oracle suite.

Exit codes: 0 success, 1 invalid configuration, 2 numerical failure,
3 verification failure.
"""

from __future__ import annotations

import argparse
import io
import logging
import math
import sys
from dataclasses import dataclass, field
from typing import Sequence, TextIO

import numpy as np

from . import bath_integrals as bi
from . import info_measures as im
from .bloch import TrajectoryParams, angular_velocity, axis_distance, linear_velocity, spin_vector
from .dynamics import decoherence_function, time_grid
from .errors import AptQubitError, DomainError, NumericalFailure
from .model import BathSpec, QubitSpec, SymmetryClass, omega0
from .presets import DEFAULT_PRESET, PRESETS, get_preset

log = logging.getLogger(__name__)

COMMANDS = ("decoherence", "entropy", "renyi", "fisher", "bloch", "table", "verify")
EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL, EXIT_VERIFY = 0, 1, 2, 3
CLASS_ORDER = (SymmetryClass.HERMITIAN, SymmetryClass.PT_SYMMETRIC, SymmetryClass.ANTI_PT_SYMMETRIC)


class ConfigError(AptQubitError, ValueError):
    """Invalid command-line configuration."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        raise ConfigError(message)


@dataclass(frozen=True)
class RunConfig:
    command: str
    alpha: float
    delta: float
    xi: float
    theta: float
    bath: BathSpec
    classes: tuple[SymmetryClass, ...] = CLASS_ORDER
    t_max: float = 5.0
    steps: int = 400
    r: float = 2.0
    r_max: float = 10.0
    ratio_at: float | None = None
    fisher_param: str = "beta"
    summary: bool = False
    theta0: float = math.pi / 2
    phi0: float = 0.0
    out_path: str | None = None
    preset: str = DEFAULT_PRESET
    qubits: dict = field(default_factory=dict, compare=False)

    def header(self) -> list[str]:
        b = self.bath
        lines = [
            f"command={self.command}",
            f"preset={self.preset}",
            f"classes={','.join(k.value for k in self.classes)}",
            f"alpha={self.alpha!r} delta={self.delta!r} xi={self.xi!r} theta={self.theta!r}",
            f"j0={b.j0!r} mu={b.mu!r} wc={b.wc!r} beta={b.beta!r}",
            f"t_max={self.t_max!r} steps={self.steps}",
        ]
        lines.append("omega0: " + " ".join(f"{k.value}={omega0(q)!r}" for k, q in self.qubits.items()))
        if self.command == "renyi":
            lines.append(f"r={self.r!r} ratio_at={self.ratio_at!r} r_max={self.r_max!r}")
        if self.command == "fisher":
            lines.append(f"fisher_param={self.fisher_param} summary={self.summary}")
        if self.command == "bloch":
            lines.append(f"theta0={self.theta0!r} phi0={self.phi0!r}")
            lines.append("omega_ang is dphi/dt; clockwise (decreasing phi seen from +z) is negative")
        return ["# " + line for line in lines]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="aptqubit", description="Dephasing of H, PT and anti-PT qubits in a bosonic bath.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--params-preset", choices=sorted(PRESETS), default=None,
                   help="named parameter set (default fig1; table1 for 'table')")
    p.add_argument("--class", dest="classes", action="append", metavar="H|PT|APT",
                   help="symmetry class; repeat for several (default: all three)")
    for name in ("alpha", "delta", "xi", "theta", "j0", "wc", "mu", "beta"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--t-max", type=float, default=5.0)
    p.add_argument("--steps", type=int, default=400)
    p.add_argument("--r", type=float, default=2.0, help="Renyi order")
    p.add_argument("--ratio-at", type=float, help="emit S_r/S against r at this time")
    p.add_argument("--r-max", type=float, default=10.0, help="largest order in the ratio sweep")
    p.add_argument("--fisher-param", choices=("beta", "omega0"), default="beta")
    p.add_argument("--summary", action="store_true", help="append max/argmax/area rows")
    p.add_argument("--theta0", type=float)
    p.add_argument("--phi0", type=float)
    p.add_argument("--out", help="CSV destination (default standard output)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _finite(name: str, value: float) -> float:
    if not math.isfinite(value):
        raise ConfigError(f"--{name} must be finite, got {value}")
    return value


def resolve_config(ns: argparse.Namespace) -> RunConfig:
    preset_name = ns.params_preset or ("table1" if ns.command == "table" else DEFAULT_PRESET)
    preset = get_preset(preset_name)

    def pick(name, default):
        value = getattr(ns, name)
        return _finite(name.replace("_", "-"), float(default if value is None else value))

    alpha, delta, xi, theta = (pick(n, getattr(preset, n)) for n in ("alpha", "delta", "xi", "theta"))
    pb = preset.bath
    try:
        bath = BathSpec(pick("j0", pb.j0), pick("mu", pb.mu), pick("wc", pb.wc), pick("beta", pb.beta))
    except DomainError as exc:
        raise ConfigError(str(exc)) from None

    t_max = _finite("t-max", ns.t_max)
    if not t_max > 0:
        raise ConfigError(f"--t-max must be > 0, got {t_max}")
    if ns.steps < 2:
        raise ConfigError(f"--steps must be >= 2, got {ns.steps}")
    r = _finite("r", ns.r)
    if not r > 0:
        raise ConfigError(f"--r must be > 0, got {r}")
    r_max = _finite("r-max", ns.r_max)
    if not r_max > 0:
        raise ConfigError(f"--r-max must be > 0, got {r_max}")
    ratio_at = None if ns.ratio_at is None else _finite("ratio-at", ns.ratio_at)
    if ratio_at is not None and not ratio_at > 0:
        raise ConfigError(f"--ratio-at must be > 0, got {ratio_at}")
    theta0 = pick("theta0", preset.theta0)
    if not 0 <= theta0 <= math.pi:
        raise ConfigError(f"--theta0 must lie in [0, pi], got {theta0}")
    phi0 = pick("phi0", preset.phi0)

    if ns.classes:
        try:
            parsed = {SymmetryClass.parse(c) for c in ns.classes}
        except DomainError as exc:
            raise ConfigError(f"--class: {exc}") from None
        classes = tuple(k for k in CLASS_ORDER if k in parsed)
    else:
        classes = CLASS_ORDER
    qubits = {}
    for k in classes:
        try:
            qubits[k] = QubitSpec(k, alpha, delta, xi, theta)
        except DomainError as exc:
            raise ConfigError(f"class {k.value}: {exc}") from None

    return RunConfig(
        command=ns.command, alpha=alpha, delta=delta, xi=xi, theta=theta, bath=bath,
        classes=classes, t_max=t_max, steps=ns.steps, r=r, r_max=r_max, ratio_at=ratio_at,
        fisher_param=ns.fisher_param, summary=ns.summary, theta0=theta0, phi0=phi0,
        out_path=ns.out, preset=preset_name, qubits=qubits,
    )


# ---------------------------------------------------------------------------
# output


def fmt(x) -> str:
    return format(float(x), ".12g")


def write_csv(stream: TextIO, header: list[str], columns: list[str], rows) -> None:
    for line in header:
        stream.write(line + "\n")
    stream.write(",".join(columns) + "\n")
    for row in rows:
        stream.write(",".join(v if isinstance(v, str) else fmt(v) for v in row) + "\n")


# ---------------------------------------------------------------------------
# commands


def _series(cfg: RunConfig, label: str, fn):
    ts = time_grid(cfg.t_max, cfg.steps)
    cache = bi.BathIntegralCache(cfg.bath)
    cols = ["t"] + [f"{label}_{k.value}" for k in cfg.classes]
    rows = [[t] + [fn(cfg.qubits[k], t, cache) for k in cfg.classes] for t in ts]
    return cols, rows


def cmd_decoherence(cfg: RunConfig):
    return _series(cfg, "D", lambda q, t, c: decoherence_function(q, cfg.bath, t, cache=c))


def cmd_entropy(cfg: RunConfig):
    return _series(cfg, "S", lambda q, t, c: im.von_neumann_entropy(decoherence_function(q, cfg.bath, t, cache=c)))


def cmd_renyi(cfg: RunConfig):
    if cfg.ratio_at is None:
        return _series(cfg, f"S_r{fmt(cfg.r)}",
                       lambda q, t, c: im.renyi_entropy(decoherence_function(q, cfg.bath, t, cache=c), cfg.r))
    lengths = {k: decoherence_function(q, cfg.bath, cfg.ratio_at) for k, q in cfg.qubits.items()}
    rs = np.linspace(cfg.r_max / cfg.steps, cfg.r_max, cfg.steps)
    cols = ["r"] + [f"ratio_{k.value}" for k in cfg.classes]
    rows = []
    for r in rs:
        row = [r]
        for k in cfg.classes:
            s = im.von_neumann_entropy(lengths[k])
            row.append(im.renyi_entropy(lengths[k], r) / s)
        rows.append(row)
    return cols, rows


def _fisher_curve(cfg: RunConfig, q: QubitSpec, cache):
    fn = im.fisher_beta if cfg.fisher_param == "beta" else im.fisher_omega0
    return lambda t: fn(q, cfg.bath, t, cache=cache)


FISHER_T_MIN = 1e-3


def cmd_fisher(cfg: RunConfig):
    cache = bi.BathIntegralCache(cfg.bath)
    curves = {k: _fisher_curve(cfg, q, cache) for k, q in cfg.qubits.items()}
    ts = time_grid(cfg.t_max, cfg.steps, t_min=min(FISHER_T_MIN, cfg.t_max / 2))
    cols = ["t"] + [f"Sf_{cfg.fisher_param}_{k.value}" for k in cfg.classes]
    rows = [[t] + [curves[k](t) for k in cfg.classes] for t in ts]
    if cfg.summary:
        summaries = [im.fisher_summary(curves[k]) for k in cfg.classes]
        rows.append(["max"] + [s.s_max for s in summaries])
        rows.append(["argmax"] + [s.t_max for s in summaries])
        rows.append(["area"] + [s.area for s in summaries])
    return cols, rows


def cmd_bloch(cfg: RunConfig):
    tp = TrajectoryParams(cfg.theta0, cfg.phi0)
    cache = bi.BathIntegralCache(cfg.bath)
    cols = ["t"]
    for k in cfg.classes:
        cols += [f"{name}_{k.value}" for name in ("sx", "sy", "sz", "d", "omega_ang", "v_lin")]
    rows = []
    for t in time_grid(cfg.t_max, cfg.steps):
        row = [t]
        for k in cfg.classes:
            q = cfg.qubits[k]
            s = spin_vector(q, cfg.bath, tp, t, cache=cache)
            row += [s.sx, s.sy, s.sz, axis_distance(q, cfg.bath, tp, t, cache=cache),
                    angular_velocity(q, cfg.bath, tp, t, cache=cache),
                    linear_velocity(q, cfg.bath, tp, t, cache=cache)]
        rows.append(row)
    return cols, rows


def fisher_table(qubits: dict, bath: BathSpec) -> dict:
    """``{(class, param): FisherSummary}`` for ``param`` in (beta, omega0)."""
    cache = bi.BathIntegralCache(bath)
    table = {}
    for k, q in qubits.items():
        table[(k, "beta")] = im.fisher_summary(lambda t, q=q: im.fisher_beta(q, bath, t, cache=cache))
        table[(k, "omega0")] = im.fisher_summary(lambda t, q=q: im.fisher_omega0(q, bath, t, cache=cache))
    return table


def cmd_table(cfg: RunConfig, text_out: TextIO):
    table = fisher_table(cfg.qubits, cfg.bath)
    head = f"{'class':<6}{'param':<8}{'S_f^max':>12}{'t^max':>12}{'S_f^area':>12}"
    text_out.write(head + "\n" + "-" * len(head) + "\n")
    rows = []
    for k in cfg.classes:
        for param in ("beta", "omega0"):
            s = table[(k, param)]
            text_out.write(f"{k.value:<6}{param:<8}{s.s_max:>12.4f}{s.t_max:>12.4f}{s.area:>12.4f}\n")
            rows.append([k.value, param, s.s_max, s.t_max, s.area])
    return ["class", "param", "s_max", "t_max", "area"], rows


def cmd_verify(cfg: RunConfig, text_out: TextIO):
    from .oracle import run_suite

    qubit_apt = QubitSpec(SymmetryClass.ANTI_PT_SYMMETRIC, 1.0, 0.5, 0.8, 0.6)
    checks = run_suite(cfg.bath, qubit_apt)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        text_out.write(f"{status}  {c.name:<32} discrepancy={c.discrepancy:.3e}  "
                       f"tol={c.tolerance:.0e}  ({c.seconds:.1f}s)  {c.detail}\n")
    rows = [[c.name, c.discrepancy, c.tolerance, "pass" if c.passed else "fail"] for c in checks]
    return ["check", "discrepancy", "tolerance", "status"], rows, all(c.passed for c in checks)


# ---------------------------------------------------------------------------


def run(cfg: RunConfig, stdout: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    ok = True
    if cfg.command == "table":
        text = io.StringIO()
        cols, rows = cmd_table(cfg, text)
    elif cfg.command == "verify":
        text = io.StringIO()
        cols, rows, ok = cmd_verify(cfg, text)
    else:
        text = None
        cols, rows = {
            "decoherence": cmd_decoherence,
            "entropy": cmd_entropy,
            "renyi": cmd_renyi,
            "fisher": cmd_fisher,
            "bloch": cmd_bloch,
        }[cfg.command](cfg)

    buf = io.StringIO()
    write_csv(buf, cfg.header(), cols, rows)
    if text is not None:
        stdout.write(text.getvalue())
    if cfg.out_path:
        with open(cfg.out_path, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        if text is not None:
            stdout.write("\n")
        stdout.write(buf.getvalue())
    return EXIT_OK if ok else EXIT_VERIFY


def main(argv: Sequence[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if ns.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        cfg = resolve_config(ns)
    except (ConfigError, DomainError) as exc:
        print(f"aptqubit: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return run(cfg)
    except NumericalFailure as exc:
        print(f"aptqubit: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except DomainError as exc:
        print(f"aptqubit: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"aptqubit: cannot write output: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
