"""
Exact law of W = D/√T for the symmetric three-point model.

X_i are i.i.d. uniform on {−1, 0, 1}; T counts the nonzero draws and D is
their sum. The law of W is built by enumerating every lattice point (t, d),
composing its probability in log space, and merging points that represent
the same real number through their exact keys.
"""

import math
import time
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from discrete_edgeworth.config import DEFAULT_CONFIG, Config
from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.logs import log_event
from discrete_edgeworth.numerics.keys import (
    ZERO_KEY,
    RationalKey,
    assert_strictly_increasing,
    compare_keys,
    key_images,
    reduce_keys,
)
from discrete_edgeworth.numerics.logfact import LogFactorialTable, log_factorials
from discrete_edgeworth.numerics.special import compensated_sum

LOG3 = math.log(3.0)


@dataclass(frozen=True)
class LatticePoint:
    """A joint outcome (T, D) = (t, d) with its log-probability."""

    t: int
    d: int
    log_mass: float

    @property
    def mass(self) -> float:
        return math.exp(self.log_mass)


@dataclass(frozen=True)
class SupportAtom:
    """One support point of W with its aggregated mass."""

    key: RationalKey
    w: float
    mass: float


@dataclass(frozen=True, eq=False)
class ExactLaw:
    """
    Sorted law of W stored column-wise.

    Atoms are held as parallel arrays (sign, num, den, w, mass, cum) rather
    than a list of objects; `atoms()` yields SupportAtom views on demand.
    """

    n_total: int
    sign: np.ndarray
    num: np.ndarray
    den: np.ndarray
    w: np.ndarray
    mass: np.ndarray
    cum: np.ndarray

    def __len__(self) -> int:
        return len(self.w)

    def key(self, i: int) -> RationalKey:
        return RationalKey(int(self.sign[i]), int(self.num[i]), int(self.den[i]))

    def atom(self, i: int) -> SupportAtom:
        return SupportAtom(key=self.key(i), w=float(self.w[i]), mass=float(self.mass[i]))

    def atoms(self) -> Iterator[SupportAtom]:
        for i in range(len(self)):
            yield self.atom(i)

    @property
    def total_mass(self) -> float:
        return compensated_sum(self.mass)


def _freeze(*arrays: np.ndarray) -> None:
    for a in arrays:
        a.flags.writeable = False


def _law_from_sorted(
    n_total: int,
    sign: np.ndarray,
    num: np.ndarray,
    den: np.ndarray,
    mass: np.ndarray,
) -> ExactLaw:
    assert_strictly_increasing(sign, num, den)
    w = key_images(sign, num, den)
    cum = np.cumsum(mass)
    arrays = (sign, num, den, w, mass, cum)
    _freeze(*arrays)
    return ExactLaw(n_total, *arrays)


def law_from_keys(
    n_total: int,
    sign: np.ndarray,
    num: np.ndarray,
    den: np.ndarray,
    mass: np.ndarray,
    divisor: int = 1,
) -> ExactLaw:
    """
    Aggregate unsorted, possibly repeated reduced keys into an ExactLaw.

    Args:
        n_total: Sample size the law belongs to
        sign, num, den: Reduced key columns (int64)
        mass: Weight of each row
        divisor: Aggregated weights are divided by this (e.g. 3**N for counts)
    """
    stacked = np.stack([sign, num, den], axis=1).astype(np.int64)
    uniq, inverse = np.unique(stacked, axis=0, return_inverse=True)
    agg = np.bincount(inverse.reshape(-1), weights=mass, minlength=len(uniq))
    if divisor != 1:
        agg = agg / divisor
    u_sign, u_num, u_den = uniq[:, 0].copy(), uniq[:, 1].copy(), uniq[:, 2].copy()
    order = np.argsort(key_images(u_sign, u_num, u_den), kind="stable")
    return _law_from_sorted(
        n_total, u_sign[order], u_num[order], u_den[order], agg[order]
    )


# =============================================================================
# JOINT PMF
# =============================================================================


def _check_lattice(N: int, t: int, d: int) -> None:
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if not 0 <= t <= N:
        raise DomainError(f"t must lie in [0, {N}], got {t}")
    if abs(d) > t:
        raise DomainError(f"|d| must be <= t = {t}, got d = {d}")
    if (d - t) % 2 != 0:
        raise DomainError(f"d and t must share parity, got t = {t}, d = {d}")


def joint_pmf_exact(
    N: int, t: int, d: int, table: LogFactorialTable | None = None
) -> float:
    """
    log P(T = t, D = d).

    Equal to log[N! / (3^N s! (t−s)! (N−t)!)] with s = (t + d)/2, the count
    of +1 draws.

    Raises:
        DomainError: If |d| > t, parities differ or t is outside [0, N]
    """
    _check_lattice(N, t, d)
    table = table if table is not None and table.max_n >= N else log_factorials(N)
    s = (t + d) // 2
    hi, lo = table.hi, table.lo
    return compensated_sum(
        [
            hi[N], -hi[s], -hi[t - s], -hi[N - t],
            lo[N], -lo[s], -lo[t - s], -lo[N - t],
            -N * LOG3,
        ]
    )


def joint_pmf_asymptotic(N: int, n: int, m: int) -> float:
    """
    Explicit part of the local expansion of log P(D = 2m, T = 2n).

    Uses ñ = n − N/3; the O(1/N + (ñ⁴ + m⁴)/N³) remainder is not included.

    Raises:
        DomainError: Unless 1 <= m <= n <= N/2
    """
    if not (1 <= m <= n and 2 * n <= N):
        raise DomainError(f"need 1 <= m <= n <= N/2, got N={N}, n={n}, m={m}")
    nt = n - N / 3.0
    return (
        math.log(3.0**1.5 / (2.0 * math.pi * N))
        - 3.0 * (3.0 * nt * nt + m * m) / N
        - 9.0 * (nt**3 - nt * m * m) / (N * N)
    )


def lattice_points(N: int) -> Iterator[LatticePoint]:
    """Every valid (t, d), t ascending then d ascending."""
    table = log_factorials(N)
    for t in range(N + 1):
        for d in range(-t, t + 1, 2):
            yield LatticePoint(t, d, joint_pmf_exact(N, t, d, table))


def _lattice_block(
    N: int, ts: np.ndarray, table: LogFactorialTable
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Lattice points with d >= 0 for a contiguous block of t values."""
    ts = np.asarray(ts, dtype=np.int64)
    if len(ts) == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, np.zeros(0)
    counts = ts // 2 + 1
    starts = np.cumsum(counts) - counts
    t = np.repeat(ts, counts)
    offset = np.arange(int(counts.sum()), dtype=np.int64) - np.repeat(starts, counts)
    d = t % 2 + 2 * offset
    s = (t + d) // 2
    log_mass = table.log_multinomial(N, [s, t - s, N - t]) - N * LOG3
    return t, d, log_mass


# =============================================================================
# LAW CONSTRUCTION
# =============================================================================


def build_exact_law(N: int, config: Config | None = None) -> ExactLaw:
    """
    Exact law of W for sample size N.

    The t-range is cut into contiguous blocks evaluated on a thread pool;
    blocks are concatenated in order, so the result does not depend on the
    worker count. Negative atoms mirror the positive ones with identical
    masses.

    Args:
        N: Sample size, 1 <= N <= config.max_n
        config: Configuration (uses defaults if not provided)

    Raises:
        DomainError: If N is out of range
    """
    config = config or DEFAULT_CONFIG
    if not 1 <= N <= config.max_n:
        raise DomainError(f"N must lie in [1, {config.max_n}], got {N}")

    start = time.perf_counter()
    table = log_factorials(N)
    n_blocks = max(1, min(config.threads, N + 1))
    blocks = np.array_split(np.arange(N + 1, dtype=np.int64), n_blocks)
    with ThreadPoolExecutor(max_workers=n_blocks) as pool:
        parts = list(pool.map(lambda ts: _lattice_block(N, ts, table), blocks))

    t = np.concatenate([p[0] for p in parts])
    d = np.concatenate([p[1] for p in parts])
    mass = np.exp(np.concatenate([p[2] for p in parts]))

    at_zero = d == 0
    origin = compensated_sum(mass[at_zero])

    pos = ~at_zero
    p_sign, p_num, p_den = reduce_keys(
        np.ones(int(pos.sum()), dtype=np.int64), d[pos] * d[pos], t[pos]
    )
    code = p_num * (N + 1) + p_den
    uniq, inverse = np.unique(code, return_inverse=True)
    p_mass = np.bincount(inverse.reshape(-1), weights=mass[pos], minlength=len(uniq))
    p_num = uniq // (N + 1)
    p_den = uniq % (N + 1)
    p_sign = np.ones(len(uniq), dtype=np.int64)
    order = np.argsort(key_images(p_sign, p_num, p_den), kind="stable")
    p_num, p_den, p_mass = p_num[order], p_den[order], p_mass[order]

    sign = np.concatenate([-p_sign, [0], p_sign]).astype(np.int64)
    num = np.concatenate([p_num[::-1], [0], p_num]).astype(np.int64)
    den = np.concatenate([p_den[::-1], [1], p_den]).astype(np.int64)
    masses = np.concatenate([p_mass[::-1], [origin], p_mass])

    law = _law_from_sorted(N, sign, num, den, masses)
    log_event(
        event="law_built",
        n=N,
        lattice_points=int(2 * pos.sum() + at_zero.sum()),
        atoms=len(law),
        ms=int((time.perf_counter() - start) * 1000),
    )
    return law


# =============================================================================
# QUERIES
# =============================================================================


def _count_le_key(law: ExactLaw, key: RationalKey, strict: bool) -> int:
    """Number of atoms <= key (or < key when strict)."""
    i = int(np.searchsorted(law.w, key.to_float(), side="left"))
    limit = 0 if strict else 1
    while i > 0 and compare_keys(law.key(i - 1), key) >= limit:
        i -= 1
    while i < len(law) and compare_keys(law.key(i), key) < limit:
        i += 1
    return i


def _cum_before(law: ExactLaw, count: int) -> float:
    return float(law.cum[count - 1]) if count > 0 else 0.0


def cdf(law: ExactLaw, w: float | RationalKey) -> float:
    """P(W <= w) for a float threshold or an exact key."""
    if isinstance(w, RationalKey):
        return _cum_before(law, _count_le_key(law, w, strict=False))
    return _cum_before(law, int(np.searchsorted(law.w, w, side="right")))


def cdf_left(law: ExactLaw, w: float | RationalKey) -> float:
    """P(W < w) for a float threshold or an exact key."""
    if isinstance(w, RationalKey):
        return _cum_before(law, _count_le_key(law, w, strict=True))
    return _cum_before(law, int(np.searchsorted(law.w, w, side="left")))


def point_mass(law: ExactLaw, key: RationalKey) -> float:
    """Aggregated mass at the key, 0 when the key is not an atom."""
    i = _count_le_key(law, key, strict=True)
    if i < len(law) and compare_keys(law.key(i), key) == 0:
        return float(law.mass[i])
    return 0.0


def origin_mass(law: ExactLaw) -> float:
    """P(W = 0)."""
    return point_mass(law, ZERO_KEY)


def max_off_origin_mass(law: ExactLaw) -> float:
    """Largest point mass away from the origin."""
    off = law.sign != 0
    return float(law.mass[off].max()) if off.any() else 0.0


def law_moments(law: ExactLaw) -> tuple[float, float]:
    """
    Mean and variance of W.

    The variance equals P(T > 0) = 1 − 3^{−N}.
    """
    mean = compensated_sum(law.w * law.mass)
    second = compensated_sum((law.num / law.den) * law.mass)
    return mean, second - mean * mean


def parity_cdf(N: int, w: float, parity: str, config: Config | None = None) -> float:
    """
    P(0 < W <= w, T even) or P(0 < W <= w, T odd).

    Args:
        N: Sample size
        w: Positive threshold
        parity: "even" or "odd"
    """
    config = config or DEFAULT_CONFIG
    if parity not in ("even", "odd"):
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    if w <= 0:
        raise DomainError(f"w must be > 0, got {w}")
    if not 1 <= N <= config.max_n:
        raise DomainError(f"N must lie in [1, {config.max_n}], got {N}")
    first = 0 if parity == "even" else 1
    t, d, log_mass = _lattice_block(N, np.arange(first, N + 1, 2), log_factorials(N))
    pos = d > 0
    sign, num, den = reduce_keys(np.ones(int(pos.sum()), dtype=np.int64), d[pos] ** 2, t[pos])
    inside = key_images(sign, num, den) <= w
    return compensated_sum(np.exp(log_mass[pos][inside]))
