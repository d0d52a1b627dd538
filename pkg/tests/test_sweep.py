"""Bandwidth sweeps, complexity tables, and bit-exact CSV round trips."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import reference_utilities
from rbfair import Scenario, allocate, report_complexity, run_sweep
from rbfair.sweep import (
    SweepRow,
    complexity_to_csv,
    fmt17,
    parse_sweep_csv,
    sweep_to_csv,
)


@pytest.fixture
def cell():
    return Scenario.from_utilities(reference_utilities(), bandwidth=100.0)


class TestRunSweep:
    def test_degenerate_sweep_matches_single_shot(self, cell):
        rows = run_sweep(cell, 100.0, 100.0)
        assert len(rows) == 1
        single = allocate(cell)
        assert rows[0].rates == single.continuous.rates
        assert rows[0].bids == single.continuous.bids
        assert rows[0].rbs == single.maximizers[0].rbs
        assert rows[0].converged == single.continuous.converged
        assert rows[0].error is None

    def test_row_count_and_grid(self, cell):
        rows = run_sweep(cell, 96.0, 100.0)
        assert [row.bandwidth for row in rows] == [96.0, 97.0, 98.0, 99.0, 100.0]

    def test_fractional_step(self, cell):
        rows = run_sweep(cell, 99.0, 100.0, step=0.5)
        assert [row.bandwidth for row in rows] == [99.0, 99.5, 100.0]

    def test_validation(self, cell):
        with pytest.raises(ValueError, match="below the UE count"):
            run_sweep(cell, 5.0, 100.0)
        with pytest.raises(ValueError, match="step"):
            run_sweep(cell, 50.0, 100.0, step=0.0)
        with pytest.raises(ValueError, match="below start"):
            run_sweep(cell, 100.0, 90.0)

    def test_every_user_always_holds_a_block(self, cell):
        for row in run_sweep(cell, 50.0, 60.0):
            assert row.error is None
            assert all(q >= 1 for q in row.rbs)

    def test_wall_time_recorded(self, cell):
        row = run_sweep(cell, 100.0, 100.0)[0]
        assert row.wall_time_s > 0.0


class TestSweepCSV:
    def test_round_trip_is_bit_exact(self, cell):
        rows = run_sweep(cell, 97.0, 100.0)
        parsed = parse_sweep_csv(sweep_to_csv(rows))
        assert parsed == rows

    def test_timing_can_be_zeroed(self, cell):
        rows = run_sweep(cell, 100.0, 100.0)
        parsed = parse_sweep_csv(sweep_to_csv(rows, include_timing=False))
        assert parsed[0].wall_time_s == 0.0

    def test_error_rows_round_trip(self):
        row = SweepRow(
            bandwidth=4.0,
            rates=(3.1, 0.45, 0.45),
            bids=(0.9, 0.13, 0.13),
            rbs=None,
            converged=False,
            wall_time_s=0.001,
            error="exhausted bandwidth: smallest candidate total 5",
        )
        parsed = parse_sweep_csv(sweep_to_csv([row]))
        assert parsed == [row]

    def test_header_layout(self, cell):
        text = sweep_to_csv(run_sweep(cell, 100.0, 100.0))
        header = text.splitlines()[0].split(",")
        assert header[0] == "R"
        assert header[1:7] == [f"rate_{i}" for i in range(1, 7)]
        assert header[7:13] == [f"bid_{i}" for i in range(1, 7)]
        assert header[13:19] == [f"rb_{i}" for i in range(1, 7)]
        assert header[19:] == ["converged", "wall_time_s", "error"]

    def test_unix_line_endings(self, cell):
        text = sweep_to_csv(run_sweep(cell, 100.0, 100.0))
        assert "\r" not in text


class TestFmt17:
    @settings(deadline=None)
    @given(st.floats(allow_nan=False, allow_infinity=False))
    def test_round_trips_any_float(self, x):
        assert float(fmt17(x)) == x

    def test_decimal_point_style(self):
        assert fmt17(0.1) == "0.10000000000000001"  # full 17 significant digits
        assert fmt17(100.0) == "100"
        assert fmt17(0.5) == "0.5"


class TestComplexityReport:
    def test_semilog_columns(self):
        rows = report_complexity(range(1, 101), 10)
        assert len(rows) == 100
        for row in rows:
            assert row.log10_full == float(row.ues)
            assert row.log10_boundary == pytest.approx(row.ues * math.log10(2), rel=1e-15)

    def test_reference_cell_dimensions(self):
        row = report_complexity([6], 100)[0]
        assert row.full == 10**12
        assert row.boundary == 64
        assert row.log10_full == pytest.approx(12.0, rel=1e-15)
        assert row.log10_boundary == pytest.approx(1.806, abs=1e-3)

    def test_two_candidates_degenerate(self):
        for row in report_complexity(range(1, 30), 2):
            assert row.full == row.boundary
            assert row.log10_full == row.log10_boundary

    def test_empty_range_rejected(self):
        with pytest.raises(ValueError):
            report_complexity([], 10)

    def test_csv_has_exact_big_integers(self):
        text = complexity_to_csv(report_complexity([100], 10))
        line = text.splitlines()[1].split(",")
        assert line[1] == str(10**100)
        assert line[2] == str(2**100)
