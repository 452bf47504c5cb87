"""
CSV and JSON artifacts.

Every writer goes through atomic_write: the text lands in a temporary file
next to the destination and is renamed over it on success. A path of "-"
writes to standard output.
"""

import json
import os
import sys
import tempfile
from collections.abc import Sequence
from typing import Any

import numpy as np
import pandas as pd

from discrete_edgeworth.expansion.breakpoints import breakpoint_table
from discrete_edgeworth.expansion.psi import lambda_grid, psi_grid
from discrete_edgeworth.expansion.weights import theta_weights
from discrete_edgeworth.law.exact import ExactLaw
from discrete_edgeworth.logs import log_event
from discrete_edgeworth.numerics.special import std_normal_cdf

FLOAT_FORMAT = "%.17g"

LAW_COLUMNS = ["w", "sign", "num", "den", "mass", "cum"]
EXPANSION_COLUMNS = ["w", "psi", "psi_left", "phi", "lambda"]
SCALING_COLUMNS = [
    "N",
    "sup_f_psi",
    "sup_f_phi",
    "p0",
    "max_off_origin_mass",
    "n_breakpoints",
    "runtime_ms",
]
FIT_COLUMNS = ["column", "slope", "intercept", "r_squared", "residual_max"]


def atomic_write(path: str, text: str) -> str:
    """
    Write text to path atomically ("-" means stdout).

    Returns:
        The path written

    Raises:
        OSError: If the directory cannot be created or written
    """
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return path

    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise

    log_event(event="export_written", path=path, bytes=len(text.encode("utf-8")))
    return path


def frame_to_csv(df: pd.DataFrame) -> str:
    """CSV text with 17 significant digits and \\n line endings."""
    return df.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def _json_default(obj: Any) -> Any:
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    return str(obj)


def json_text(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_json_default) + "\n"


def write_json(obj: Any, path: str) -> str:
    return atomic_write(path, json_text(obj))


def write_fit_json(fit: Any, path: str) -> str:
    """One log-log fit as a JSON object with exactly FIT_COLUMNS as keys."""
    record = fit.to_dict()
    return write_json({c: record[c] for c in FIT_COLUMNS}, path)


# =============================================================================
# TABLES
# =============================================================================


def law_frame(law: ExactLaw) -> pd.DataFrame:
    """One row per atom, ascending."""
    return pd.DataFrame(
        {
            "w": law.w,
            "sign": law.sign,
            "num": law.num,
            "den": law.den,
            "mass": law.mass,
            "cum": law.cum,
        },
        columns=LAW_COLUMNS,
    )


def write_law_csv(law: ExactLaw, path: str) -> str:
    return atomic_write(path, frame_to_csv(law_frame(law)))


def expansion_frame(N: int, ws: np.ndarray, w_max: float | None = None) -> pd.DataFrame:
    """
    Ψ on a grid of nonnegative points plus every breakpoint up to w_max.

    Each breakpoint contributes two rows at the same w: first the left
    limit (psi = psi_left = Ψ(w−), lambda = Λ(w−)), then the right value
    (psi = Ψ(w), psi_left = Ψ(w−), lambda = Λ(w)).
    """
    ws = np.asarray(ws, dtype=float)
    w_max = float(ws.max(initial=0.0)) if w_max is None else w_max
    weights = theta_weights(N)
    table = breakpoint_table(N, max(w_max, float(ws.max(initial=0.0)), 1e-12), weights)

    bp = table.loc[table.loc <= w_max]
    bp_right, bp_left = psi_grid(N, bp, table, weights)
    grid_right, grid_left = psi_grid(N, ws, table, weights)

    grid = pd.DataFrame(
        {
            "w": ws,
            "psi": grid_right,
            "psi_left": grid_left,
            "phi": std_normal_cdf(ws),
            "lambda": lambda_grid(N, ws, table, weights, "right"),
        }
    )
    left = pd.DataFrame(
        {
            "w": bp,
            "psi": bp_left,
            "psi_left": bp_left,
            "phi": std_normal_cdf(bp),
            "lambda": lambda_grid(N, bp, table, weights, "left"),
        }
    )
    right = pd.DataFrame(
        {
            "w": bp,
            "psi": bp_right,
            "psi_left": bp_left,
            "phi": std_normal_cdf(bp),
            "lambda": lambda_grid(N, bp, table, weights, "right"),
        }
    )
    left["_order"], right["_order"], grid["_order"] = 0, 1, 1
    out = pd.concat([left, right, grid], ignore_index=True)
    out = out.sort_values(["w", "_order"], kind="stable").drop(columns="_order")
    return out.reset_index(drop=True)[EXPANSION_COLUMNS]


def write_expansion_csv(N: int, ws: np.ndarray, path: str, w_max: float | None = None) -> str:
    return atomic_write(path, frame_to_csv(expansion_frame(N, ws, w_max)))


def scaling_frame(rows: Sequence) -> pd.DataFrame:
    records = [r.to_dict() if hasattr(r, "to_dict") else dict(r) for r in rows]
    return pd.DataFrame(records, columns=SCALING_COLUMNS)


def write_scaling_csv(rows: Sequence, path: str) -> str:
    return atomic_write(path, frame_to_csv(scaling_frame(rows)))


def write_curve_csv(ws: np.ndarray, values: np.ndarray, path: str) -> str:
    """Figure-style curve: columns w,lambda."""
    df = pd.DataFrame({"w": np.asarray(ws, dtype=float), "lambda": np.asarray(values, dtype=float)})
    return atomic_write(path, frame_to_csv(df))


def write_frame_csv(df: pd.DataFrame, path: str) -> str:
    return atomic_write(path, frame_to_csv(df))
