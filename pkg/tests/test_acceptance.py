"""Acceptance criteria, one check per criterion.

Run under pytest (a summary block lists every criterion) or directly with
``python tests/test_acceptance.py`` for the pass/fail lines alone.
"""

import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES  # noqa: E402
from reference_forms import script_L_quotient  # noqa: E402

from solowswan import BertalanffyParams, ClassicalParams, CobbDouglas  # noqa: E402
from solowswan.cli import main  # noqa: E402
from solowswan.closed_form import k_bertalanffy, log_k_classical, script_L, trajectory_closed_form  # noqa: E402
from solowswan.core import ORACLE_TOLERANCES  # noqa: E402
from solowswan.errors import DomainError  # noqa: E402
from solowswan.numerics import (  # noqa: E402
    bertalanffy_problem,
    classical_problem,
    hyp2f1,
    hyp2f1_euler,
    hyp2f1_pfaff,
    hyp2f1_series,
    integrate,
)

ALPHAS = (0.3, 0.5, 0.7)
DEGREES = (0.8, 0.9, 1.1, 1.2)
GRID = np.linspace(0.0, 10.0, 400)


def classical(alpha, n, k0=1.0):
    cd = CobbDouglas.from_degree(alpha, n, strict=False)
    return ClassicalParams(cd, s=0.4, gamma=0.7, L0=1.0, k0=k0)


def bertalanffy(alpha, n, k0=1.0, L0=1.0):
    cd = CobbDouglas.from_degree(alpha, n, strict=False)
    return BertalanffyParams(cd, s=0.4, r=0.9, Linf=5.0, L0=L0, k0=k0)


def worst_deviation(params):
    build = classical_problem if isinstance(params, ClassicalParams) else bertalanffy_problem
    exact = trajectory_closed_form(params, GRID)
    numeric = integrate(build(params, GRID[-1]), GRID, ORACLE_TOLERANCES).trajectory
    return float(np.max(np.abs(numeric.k - exact.k) / exact.k))


def criterion_1():
    start = time.perf_counter()
    worst = max(
        worst_deviation(classical(a, n, k0)) for a in ALPHAS for n in DEGREES for k0 in (1.0, 1.5, 2.0)
    )
    elapsed = time.perf_counter() - start
    return worst <= 1e-6 and elapsed < 10.0, f"max rel dev {worst:.2e} (<= 1e-6), {elapsed:.2f}s (< 10s)"


def criterion_2():
    worst = max(
        worst_deviation(bertalanffy(a, n, k0)) for a in ALPHAS for n in DEGREES for k0 in (1.0, 5.0, 10.0, 20.0)
    )
    return worst <= 1e-6, f"max rel dev {worst:.2e} (<= 1e-6)"


def criterion_3():
    devs = {}
    for n in (0.8, 1.2):
        devs[f"classical n={n}"] = max(worst_deviation(classical(1.0, n, k0)) for k0 in (1.0, 1.5, 2.0))
        devs[f"bertalanffy n={n}"] = max(worst_deviation(bertalanffy(1.0, n, k0)) for k0 in (1.0, 5.0, 10.0, 20.0))
    worst = max(devs.values())
    return worst <= 1e-6, "; ".join(f"{k}: {v:.2e}" for k, v in devs.items()) + " (<= 1e-6)"


def criterion_4():
    T, alpha = 40.0, 0.5
    ok = True
    parts = []
    for n in (1.2, 0.8):
        p = classical(alpha, n)
        target = p.gamma * (n - 1.0) / (1.0 - alpha)
        estimate = log_k_classical(T, p) / T
        rel = abs(estimate - target) / abs(target)
        good = rel <= 0.05 and (n > 1.0 or estimate < 0.0)
        ok &= good
        parts.append(f"n={n}: ln k(T)/T = {estimate:.4f} vs {target:.4f} ({rel:.1%}, {'ok' if good else 'off'})")
    return ok, "; ".join(parts) + " (<= 5%)"


def criterion_5():
    p = classical(0.5, 1.0)
    limit = (4.0 / 7.0) ** 2
    err = abs(math.exp(log_k_classical(60.0, p)) - limit)
    return err <= 1e-6, f"|k(60) - (4/7)^2| = {err:.2e} (<= 1e-6)"


def criterion_6():
    T, h, alpha = 40.0, 1e-3, 0.5
    parts, ok = [], True
    for n in (0.8, 1.2):
        p = bertalanffy(alpha, n)
        q = 1.0 - alpha
        v = lambda t: k_bertalanffy(t, p) ** q
        slope = (v(T + h) - v(T - h)) / (2 * h)
        target = q * p.s * p.Linf ** (n - 1.0)
        rel = abs(slope - target) / target
        ok &= rel <= 0.01
        parts.append(f"n={n}: {rel:.2e}")
    return ok, "; ".join(parts) + " (<= 1%)"


def criterion_7():
    worst = 0.0
    for k0 in (1.0, 5.0, 20.0):
        p = bertalanffy(0.5, 0.8, k0=k0, L0=5.0)
        traj = trajectory_closed_form(p, GRID)
        hand = (k0**0.5 + 0.4 * 0.5 * 5.0 ** -0.2 * GRID) ** 2
        worst = max(worst, float(np.max(np.abs(traj.k - hand) / hand)))
    return worst <= 1e-10, f"max rel dev {worst:.2e} (<= 1e-10)"


def criterion_8():
    worst = 0.0
    for a in ALPHAS:
        for n in DEGREES:
            p = bertalanffy(a, n)
            for tau in np.linspace(0.0, 20.0, 401):
                ref = script_L_quotient(tau, p)
                worst = max(worst, abs(script_L(tau, p) - ref) / abs(ref))
    return worst <= 1e-12, f"max rel diff {worst:.2e} (<= 1e-12)"


def criterion_9():
    checks = {"z=0": hyp2f1(0.7, 1.3, 2.1, 0.0) == 1.0}
    worst = 0.0
    for z in (-0.9, -0.5, 0.3, 0.7):
        exact = -math.log1p(-z) / z
        worst = max(worst, abs(hyp2f1(1.0, 1.0, 2.0, z) - exact) / exact)
    checks["log identity"] = worst <= 1e-12
    overlap = 0.0
    for a, b, c in ((0.2, 0.2, 1.2), (1.0, 1.0, 2.0), (-0.2, -0.2, 0.8), (0.5, 1.5, 2.5)):
        for u in np.linspace(0.3, 0.5, 11):
            raw_neg, raw_pos = hyp2f1_series(a, b, c, -u), hyp2f1_series(a, b, c, u)
            overlap = max(overlap, abs(hyp2f1_pfaff(a, b, c, -u) - raw_neg) / abs(raw_neg))
            overlap = max(overlap, abs(hyp2f1_euler(a, b, c, u) - raw_pos) / abs(raw_pos))
    checks["overlap"] = overlap <= 1e-12
    try:
        hyp2f1(0.2, 0.2, 1.2, 1.25)
        checks["z=1.25 rejected"] = False
    except DomainError:
        checks["z=1.25 rejected"] = True
    ok = all(checks.values())
    detail = ", ".join(f"{k}: {'ok' if v else 'FAIL'}" for k, v in checks.items())
    return ok, f"{detail}; identity err {worst:.1e}, overlap err {overlap:.1e} (<= 1e-12)"


def criterion_10(tmp_dir: Path):
    first, second = tmp_dir / "first", tmp_dir / "second"
    codes = [main(["preset", "fig1a", "--out", str(d)]) for d in (first, second)]
    names = sorted(p.name for p in first.iterdir())
    identical = names == sorted(p.name for p in second.iterdir()) and all(
        (first / name).read_bytes() == (second / name).read_bytes() for name in names
    )
    scenario = tmp_dir / "fig1a.toml"
    from solowswan.harness import format_scenario, preset

    scenario.write_text(format_scenario(preset("fig1a")))
    verify_ok = main(["verify", str(scenario)])
    verify_tight = main(["verify", str(scenario), "--threshold", "1e-14"])
    ok = codes == [0, 0] and identical and len(names) == 6 and verify_ok == 0 and verify_tight == 4
    return ok, f"{len(names)} files byte-identical: {identical}; verify exit {verify_ok} at 1e-6, {verify_tight} at 1e-14"


CRITERIA = {
    1: ("oracle equivalence, exponential labor", criterion_1),
    2: ("oracle equivalence, saturating labor", criterion_2),
    3: ("alpha = 1 branches", criterion_3),
    4: ("regime asymptotics at T = 40", criterion_4),
    5: ("constant-returns limit", criterion_5),
    6: ("saturating-labor late-time slope", criterion_6),
    7: ("constant-labor reduction", criterion_7),
    8: ("two integrand forms agree", criterion_8),
    9: ("2F1 unit suite", criterion_9),
    10: ("CLI determinism and verify exit code", criterion_10),
}


def evaluate(number, tmp_dir):
    title, check = CRITERIA[number]
    ok, detail = check(tmp_dir) if number == 10 else check()
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}: {detail}"
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, tmp_path, capsys):
    ok, line = evaluate(number, tmp_path)
    ACCEPTANCE_LINES.append(line)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import tempfile

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for number in sorted(CRITERIA):
            ok, line = evaluate(number, Path(tmp) / str(number))
            failures += not ok
            print(line)
    sys.exit(1 if failures else 0)
