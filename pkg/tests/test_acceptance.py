"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (also collected for the terminal
summary) and then asserts, so a failing criterion lists every failed check.
Run directly with ``python tests/test_acceptance.py`` for just the lines.
"""

import math
import random

import numpy as np
import pytest

import golden
import oracles
import test_special
from conftest import close_to_printed
from linprob.bayes import run_chain
from linprob.contingency import TwoByTwoTable, analyze_2x2, characteristics_from_rates
from linprob.continuous import ProportionSample, sample_stats, two_sample_w_test
from linprob.core import prob_to_weight, weight_to_prob
from linprob.horizon import fit_tau, maximal_effect, project
from linprob.meta import replication_probability
from linprob.special import (
    chi_square_upper_p,
    normal_cdf,
    reg_incomplete_beta,
    reg_lower_gamma,
    student_t_two_sided_p,
)

pytestmark = pytest.mark.acceptance

RESULTS: list[str] = []


def report(number, title, failures):
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {number}: {title}"
    if failures:
        line += f" ({len(failures)} failed: {failures[0]}{' ...' if len(failures) > 1 else ''})"
    RESULTS.append(line)
    print(line)
    assert not failures, "\n".join(failures)


def _check_printed(failures, where, value, printed, units=1.0):
    if not close_to_printed(value, printed, units):
        failures.append(f"{where}: got {value!r}, printed {printed}")


def _check_table_column(failures, label, cells, printed):
    r = analyze_2x2(TwoByTwoTable(*cells))
    for field, text in printed.items():
        value = getattr(r, field)
        if field in golden.P_VALUE_FIELDS:
            if abs(value / float(text) - 1) > 0.05:
                failures.append(f"{label} {field}: got {value:.4g}, printed {text}")
        else:
            _check_printed(failures, f"{label} {field}", value, text)


def test_criterion_1_statin_trial_tables():
    failures = []
    for label, cells in golden.TRIAL_COUNTS.items():
        _check_table_column(failures, label, cells, golden.TRIAL_PRINTED[label])
    report(1, "statin trial 2x2 tables reproduce every printed value", failures)


def test_criterion_2_goodman_tables():
    failures = []
    for label, cells in golden.GOODMAN_COUNTS.items():
        _check_table_column(failures, label, cells, golden.GOODMAN_PRINTED[label])
    report(2, "Goodman 2x2 tables reproduce every printed value", failures)


def test_criterion_3_weight_space_sample_summaries():
    failures = []
    for label, values in golden.SAMPLES.items():
        s = sample_stats(ProportionSample(values, label))
        for field, text in golden.SAMPLE_PRINTED[label].items():
            scale = 100 if field in golden.PERCENT_FIELDS else 1
            # "to the printed decimals" means agreement after rounding
            _check_printed(failures, f"{label} {field}", getattr(s, field) * scale, text, units=0.5)
    report(3, "sample means/SDs in raw, Weight and back-transformed space", failures)


def test_criterion_4_weight_probability_ladder():
    failures = []
    # the printed ladder has 23 rows
    if len(golden.LADDER) != 23:
        failures.append(f"ladder has {len(golden.LADDER)} rows")
    for w_text, p_text in golden.LADDER:
        w, p = float(w_text), float(p_text)
        # probabilities are printed rounded to their last digit
        _check_printed(failures, f"P({w_text})", weight_to_prob(w), p_text, units=0.5)
        got_w = prob_to_weight(p)
        if abs(got_w - w) > 0.05:
            failures.append(f"W({p_text}): got {got_w:.4f}, printed {w_text}")
    report(4, f"all {len(golden.LADDER)} Weight <-> probability ladder rows", failures)


def test_criterion_5_diagnostic_chain():
    failures = []
    w0 = golden.CAD_PRETEST_W
    if round(prob_to_weight(0.04), 2) != w0:
        failures.append(f"prevalence 4% -> W {prob_to_weight(0.04):.4f}")
    base = run_chain(list(golden.CAD_STEPS), pretest_weight=w0)
    running = [s.running_weight for s in base.steps]
    for got, text in zip(running, golden.CAD_RUNNING_W):
        _check_printed(failures, f"running W {text}", got, text, units=0.5)
    for step, text in ((golden.CAD_POSITIVE, golden.CAD_POSITIVE_W), (golden.CAD_NEGATIVE, golden.CAD_NEGATIVE_W)):
        r = run_chain([*golden.CAD_STEPS, step], pretest_weight=w0)
        _check_printed(failures, f"posttest W {text}", r.posttest_weight, text, units=0.5)
    for text, percent in golden.CAD_PERCENT.items():
        got = round(100 * weight_to_prob(float(text)))
        if got != percent:
            failures.append(f"W {text} -> {got}%, printed {percent}%")
    for name, (ip, im, it) in golden.TEST_IMPACTS.items():
        lp, lm = 10 ** float(ip), 10 ** float(im)
        spec = (lp - 1) / (lp - lm)
        sens = lp * (1 - spec)
        tc = characteristics_from_rates(sens, spec)
        _check_printed(failures, f"{name} I_test", tc.i_test, it, units=0.5)
    report(5, "additive diagnostic chain and test Impacts", failures)


def _arr_peak(impact, tau):
    grid = [tau * k / 1000 for k in range(1, 10_000)]
    best = max(grid, key=lambda h: project(impact, tau, h).arr)
    lo, hi = best - tau / 1000, best + tau / 1000
    g = (math.sqrt(5) - 1) / 2
    for _ in range(100):
        m1, m2 = hi - g * (hi - lo), lo + g * (hi - lo)
        if project(impact, tau, m1).arr < project(impact, tau, m2).arr:
            lo = m1
        else:
            hi = m2
    return project(impact, tau, (lo + hi) / 2)


def test_criterion_6_time_horizons():
    failures = []
    for label, cells in golden.TRIAL_COUNTS.items():
        r = analyze_2x2(TwoByTwoTable(*cells))
        tau = fit_tau(r.control_rate, golden.TRIAL_DURATION[label])
        _check_printed(failures, f"{label} tau", tau, golden.TRIAL_TAU[label])
        for years, (control, treated, arr) in golden.TRIAL_PROJECTIONS[label].items():
            p = project(r.impact, tau, years)
            _check_printed(failures, f"{label} {years}y control", p.control_rate, control)
            _check_printed(failures, f"{label} {years}y treated", p.treated_rate, treated)
            _check_printed(failures, f"{label} {years}y ARR", p.arr, arr)
        half_c, half_t, arr_max, nnt_max, peak_rate = golden.TRIAL_MAXIMAL[label]
        m = maximal_effect(r.impact)
        _check_printed(failures, f"{label} rate at -I/2", m.rate_half_control, half_c)
        _check_printed(failures, f"{label} rate at +I/2", m.rate_half_treated, half_t)
        _check_printed(failures, f"{label} ARR max", m.arr_maximal, arr_max)
        _check_printed(failures, f"{label} NNT max", m.nnt_maximal, nnt_max)
        peak = _arr_peak(r.impact, tau)
        if abs(peak.control_rate - float(peak_rate)) > 0.01:
            failures.append(f"{label} ARR peak at control rate {peak.control_rate:.4f}, printed {peak_rate}")
        if abs(peak.arr - m.arr_maximal) > 1e-6:
            failures.append(f"{label} scanned peak ARR {peak.arr:.8f} vs {m.arr_maximal:.8f}")
    report(6, "tau fits, 10/20-year projections, maximal ARR and NNT", failures)


def test_criterion_7_replication_anchors():
    failures = []
    for c, (want, tol) in golden.REPLICATION.items():
        got = replication_probability(c).probability_replicates
        if abs(got - want) > tol:
            failures.append(f"C={c}: got {got:.6f}, printed {want}")
    report(7, "replication probability anchors", failures)


def test_criterion_8_property_suite():
    failures = []
    rng = np.random.default_rng(8)

    # probabilities spread over the whole ladder range
    ps = np.concatenate([rng.uniform(1e-9, 1 - 1e-9, 5000), 10.0 ** rng.uniform(-9, -0.3, 5000)])
    worst = max(abs(weight_to_prob(prob_to_weight(p)) - p) / p for p in ps.tolist())
    if not worst < 1e-12:
        failures.append(f"round trip relative error {worst:.3g}")

    tables = rng.integers(1, 100_000, size=(10_000, 4)).tolist()
    worst = 0.0
    for cells in tables:
        r = analyze_2x2(TwoByTwoTable(*cells))
        worst = max(worst, abs(r.impact_from_weights - r.impact))
    if not worst < 1e-12:
        failures.append(f"log-OR identity error {worst:.3g}")

    rnd = random.Random(8)
    worst = 0.0
    for _ in range(1000):
        steps = [rnd.uniform(-3, 3) for _ in range(rnd.randint(0, 12))]
        w0 = rnd.uniform(-5, 5)
        shuffled = steps[:]
        rnd.shuffle(shuffled)
        a = run_chain(steps, pretest_weight=w0).posttest_weight
        b = run_chain(shuffled, pretest_weight=w0).posttest_weight
        worst = max(worst, abs(a - b))
    if not worst < 1e-12:
        failures.append(f"chain order dependence {worst:.3g}")

    worst = 0.0
    for cells in tables[:2000]:
        t = TwoByTwoTable(*cells)
        x, xt = analyze_2x2(t).chi_square, analyze_2x2(t.transpose()).chi_square
        worst = max(worst, abs(x - xt) / max(1.0, x))
    if not worst < 1e-12:
        failures.append(f"chi-square transposition error {worst:.3g}")

    oracle_checks = [
        (test_special.BETA_GRID, reg_incomplete_beta, test_special.beta_oracle, 1e-8),
        (test_special.GAMMA_GRID, reg_lower_gamma, test_special.gamma_oracle, 1e-8),
        (test_special.T_GRID, student_t_two_sided_p, test_special.t_oracle, 1e-8),
        (test_special.CHI_GRID, chi_square_upper_p, test_special.chi_oracle, 1e-8),
        ([(z,) for z in test_special.Z_GRID], normal_cdf, test_special.normal_oracle, 1e-12),
    ]
    for grid, func, oracle, tol in oracle_checks:
        for args in grid:
            err = abs(func(*args) - oracle(*args))
            if err > tol:
                failures.append(f"{func.__name__}{args}: quadrature error {err:.3g}")
    report(8, "round trip, log-OR identity, chain order, chi-square transpose, kernel oracles", failures)


def test_criterion_9_monte_carlo_oracles():
    failures = []
    r = analyze_2x2(TwoByTwoTable(*oracles.MC_TABLE))
    simulated = oracles.simulated_chi_square_p(oracles.MC_TABLE)
    if abs(simulated / r.p_chi - 1) > 0.15:
        failures.append(f"chi-square p {r.p_chi:.4g} vs simulated {simulated:.4g}")

    s1 = ProportionSample(tuple(oracles.weight_to_prob(w) for w in oracles.PERM_W_CONTROL))
    s2 = ProportionSample(tuple(oracles.weight_to_prob(w) for w in oracles.PERM_W_TREATED))
    welch = two_sample_w_test(s1, s2)
    exact = oracles.exact_permutation_p(oracles.PERM_W_CONTROL, oracles.PERM_W_TREATED)
    if abs(exact / welch.p - 1) > 0.20:
        failures.append(f"Welch p {welch.p:.4g} vs permutation {exact:.4g}")
    report(9, "chi-square vs simulated null, Welch vs permutation", failures)


if __name__ == "__main__":
    import sys

    ok = True
    for name, func in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                func()
            except AssertionError:
                ok = False
    sys.exit(0 if ok else 1)
