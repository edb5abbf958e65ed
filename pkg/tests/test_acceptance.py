"""Acceptance gate: the nine advertised capabilities at full size.

Each test runs one criterion from the selftest module and prints one
PASS/FAIL line, so `pytest -v tests/test_acceptance.py` reads as the
acceptance checklist. Time budgets are part of the contract for the
three large suites.
"""

from __future__ import annotations

from uniqpoly import selftest


def _run(result, budget: float | None = None) -> None:
    line = (f"{'PASS' if result.ok else 'FAIL'}  {result.name}  "
            f"cases={result.cases}  time={result.seconds:.1f}s  "
            f"{result.detail}")
    print(line)
    assert result.ok, line
    if budget is not None:
        assert result.seconds < budget, \
            f"{result.name} took {result.seconds:.1f}s, budget {budget}s"


def test_criterion_1_one_gap_table_agreement():
    _run(selftest.one_gap_table_agreement(max_n=10), budget=30.0)


def test_criterion_2_witness_oracle_agreement():
    _run(selftest.witness_oracle_agreement(max_n=10))


def test_criterion_3_converse_factor_pins():
    _run(selftest.converse_factor_pins())


def test_criterion_4_curve_identity_suite():
    _run(selftest.curve_identity_suite(cases=100, seed=0))


def test_criterion_5_separation_float_agreement():
    _run(selftest.separation_float_agreement(cases=200, seed=0))


def test_criterion_6_genus_pins():
    _run(selftest.genus_pins())


def test_criterion_7_order_table_agreement():
    _run(selftest.order_table_agreement(max_n=12), budget=60.0)


def test_criterion_8_exceptional_quartic_flags():
    _run(selftest.exceptional_quartic_flags())


def test_criterion_9_property_suites():
    _run(selftest.property_suites(cases=10_000, seed=0), budget=120.0)
