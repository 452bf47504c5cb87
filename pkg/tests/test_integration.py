"""
Integration tests for the full verification pipeline.
"""

import json
import math
import os
import tempfile

import numpy as np
import pandas as pd

from discrete_edgeworth.config import Config
from discrete_edgeworth.evaluation.harness import VerificationHarness, compute_row, scaling_sweep
from discrete_edgeworth.export import FIT_COLUMNS, SCALING_COLUMNS, expansion_frame, law_frame
from discrete_edgeworth.expansion.breakpoints import breakpoint_table
from discrete_edgeworth.law.exact import build_exact_law


def test_sweep_and_artifacts():
    """Sweep, fit and save artifacts to a temporary reports directory."""
    with tempfile.TemporaryDirectory() as tmpdir:
        config = Config(base_dir=tmpdir)
        config.ensure_dirs()

        harness = VerificationHarness(config, verbose=False)
        results = harness.run_sweep([24, 48, 96])

        rows = results["rows"]
        assert [r.N for r in rows] == [24, 48, 96]
        assert all(r.sup_f_psi > 0 and r.sup_f_phi > 0 for r in rows)
        assert set(results["fits"]) == {"sup_f_psi", "sup_f_phi"}
        assert len(results["trends"]["p0_ratio"]) == 3

        paths = harness.save_artifacts(results)
        assert os.path.dirname(paths["scaling"]) == config.reports_dir
        for path in paths.values():
            assert os.path.exists(path)

        df = pd.read_csv(paths["scaling"])
        assert list(df.columns) == SCALING_COLUMNS
        with open(paths["fit_sup_f_phi"]) as f:
            fit = json.load(f)
        assert fit["slope"] < 0


def test_full_verification_saves_summary():
    """Sweep, witness and interval checks end up in the saved summary."""
    with tempfile.TemporaryDirectory() as tmpdir:
        config = Config(base_dir=tmpdir, sweep_ns=[24, 48, 96], witness_ns=[300])
        harness = VerificationHarness(config, verbose=False)
        results = harness.run_verification()

        assert [entry["n"] for entry in results["witness"]] == [300]
        assert results["interval"]["trials"] == config.interval_trials
        assert results["interval"]["c_hat"] > 0

        paths = harness.save_artifacts(results)
        with open(paths["summary"]) as f:
            summary = json.load(f)
        assert set(summary) >= {"witness", "interval", "trends", "timestamp"}
        assert isinstance(summary["witness"][0]["upper_ok"], bool)
        with open(paths["fit_sup_f_psi"]) as f:
            assert set(json.load(f)) == set(FIT_COLUMNS)


def test_sweep_order_independent_of_threads():
    """Rows come back in input order whatever the worker count."""
    serial = scaling_sweep([10, 20, 30], config=Config(threads=1))
    pooled = scaling_sweep([10, 20, 30], config=Config(threads=3))
    assert [r.to_dict(False) for r in serial] == [r.to_dict(False) for r in pooled]


def test_row_fields():
    row = compute_row(30)
    assert row.N == 30
    assert row.n_breakpoints == len(breakpoint_table(30, 8.0))
    assert 0 < row.max_off_origin_mass < row.p0
    assert "runtime_ms" in row.to_dict()
    assert "runtime_ms" not in row.to_dict(include_runtime=False)


def test_law_frame_roundtrip():
    """Law table keeps exact keys and cumulative masses."""
    law = build_exact_law(5)
    df = law_frame(law)
    assert len(df) == len(law)
    assert np.array_equal(df["num"].to_numpy(), law.num)
    assert abs(df["cum"].iloc[-1] - 1.0) < 1e-12


def test_expansion_frame_breakpoint_rows():
    """Each breakpoint gives a left-limit row followed by a right-value row."""
    N = 10
    ws = np.linspace(0, 1, 11)
    df = expansion_frame(N, ws, 1.0)
    table = breakpoint_table(N, 1.0)

    for loc, jump in zip(table.loc, table.jump):
        rows = df[df["w"] == loc]
        left, right = rows.iloc[0], rows.iloc[1]
        assert left["psi"] == left["psi_left"]
        assert abs((right["psi"] - right["psi_left"]) - jump) < 1e-12
        assert right["psi_left"] == left["psi_left"]
        assert abs((right["lambda"] - left["lambda"]) - jump * math.sqrt(N)) < 1e-12

    assert df["w"].is_monotonic_increasing
    assert math.isclose(df["phi"].iloc[0], 0.5)


if __name__ == "__main__":
    print("Running integration tests...")

    test_sweep_and_artifacts()
    print("✓ test_sweep_and_artifacts")

    test_full_verification_saves_summary()
    print("✓ test_full_verification_saves_summary")

    test_sweep_order_independent_of_threads()
    print("✓ test_sweep_order_independent_of_threads")

    test_row_fields()
    print("✓ test_row_fields")

    test_law_frame_roundtrip()
    print("✓ test_law_frame_roundtrip")

    test_expansion_frame_breakpoint_rows()
    print("✓ test_expansion_frame_breakpoint_rows")

    print("\nAll integration tests passed!")
