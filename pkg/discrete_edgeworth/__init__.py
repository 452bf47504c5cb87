"""
Discrete Edgeworth - exact law and oscillatory expansion of a self-normalised sum.

Modules:
- numerics: special functions, exact keys, log-factorials
- law: exact law of W = D/√T by lattice enumeration
- expansion: Ψ = Φ + N^{-1/2}Λ, its jumps and left limits
- oscillatory: Fourier/theta machinery and the lower-bound witness
- evaluation: sup-norm engine, scaling sweep, fits and oracles
"""

__version__ = "1.0.0"

from discrete_edgeworth.config import DEFAULT_CONFIG, Config, Settings, settings
from discrete_edgeworth.errors import DomainError, SweepError

__all__ = [
    "DEFAULT_CONFIG",
    "Config",
    "Settings",
    "settings",
    "DomainError",
    "SweepError",
]
