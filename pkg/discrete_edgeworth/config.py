"""
Configuration for the discrete expansion engine.

Centralizes artifact paths, numerical tolerances, sweep grids and the
acceptance constants used by the verification harness.
"""

import logging
import os
from dataclasses import dataclass, field

from dotenv import load_dotenv

load_dotenv()


def _env_threads() -> int:
    """DE_THREADS as a positive int; unset or malformed means all cores."""
    default = os.cpu_count() or 1
    raw = os.getenv("DE_THREADS", "").strip()
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        logging.getLogger("discrete_edgeworth").warning(
            f"ignoring DE_THREADS={raw!r}, using {default} threads"
        )
        return default


@dataclass(frozen=True)
class Settings:
    """Immutable settings from environment."""

    threads: int = field(default_factory=_env_threads)
    log_level: str = os.getenv("DE_LOG_LEVEL", "INFO")
    reports_dir: str = os.getenv("DE_REPORTS_DIR", "")


settings = Settings()


@dataclass
class Config:
    """Configuration container for the engine."""

    # ==========================================================================
    # PATHS
    # ==========================================================================

    base_dir: str = field(
        default_factory=lambda: settings.reports_dir
        or os.path.expanduser("~/DiscreteEdgeworth")
    )

    @property
    def reports_dir(self) -> str:
        """Default directory for CLI artifacts."""
        return os.path.join(self.base_dir, "reports")

    def ensure_dirs(self) -> None:
        """Create all directories if they don't exist."""
        for d in [self.base_dir, self.reports_dir]:
            os.makedirs(d, exist_ok=True)

    # ==========================================================================
    # EXACT LAW
    # ==========================================================================

    # Largest N accepted by build_exact_law (O(N^2) lattice points)
    max_n: int = 20000

    # Largest N for 3^N brute-force enumeration
    brute_force_max_n: int = 14

    # Worker cap for law construction and sweeps
    threads: int = field(default_factory=lambda: settings.threads)

    # ==========================================================================
    # EXPANSION / SUP-NORM
    # ==========================================================================

    # Tail truncation for sup-norm scans
    w_max: float = 8.0

    # Interior points per refined gap
    refine_points: int = 4

    # A gap is refined when its bound exceeds the running max by this much
    sup_slack: float = 1e-10

    # Windowed n-sum half width, in units of sqrt(N)
    window_sigmas: float = 7.0

    # ==========================================================================
    # OSCILLATORY
    # ==========================================================================

    # Theta sums stop once the next term falls below this
    theta_term_floor: float = 1e-18

    # Witness scan range (w >= 1 by the lower-bound statement)
    witness_w_min: float = 1.0
    witness_w_max: float = 3.0

    # Defaults for the figure1 curve command
    figure1_n: int = 100
    figure1_m: int = 10
    figure1_w_min: float = 0.05
    figure1_w_max: float = 2.34
    figure1_step: float = 1e-3

    # Poisson identity sampling
    theta_check_pairs: int = 100
    theta_z_range: tuple[float, float] = (1e-3, 10.0)

    # ==========================================================================
    # SWEEP / ACCEPTANCE
    # ==========================================================================

    sweep_ns: list[int] = field(
        default_factory=lambda: [48 * 2**j for j in range(7)]
    )

    # Lower-bound statement needs N divisible by 3
    witness_ns: list[int] = field(default_factory=lambda: [300, 999, 3000])

    # |rho| below this counts as "no trend"
    spearman_no_trend: float = 0.6

    # Random closed intervals for the interval-mass clause
    interval_trials: int = 1000

    # Random seed for reproducibility
    random_seed: int = 7


# Global default config instance
DEFAULT_CONFIG = Config()
