"""
Jump locations of the expansion.

Λ jumps wherever w√(2n) crosses a positive integer k, i.e. at w = k/√(2n).
Pairs (n, k) that give the same location are merged by exact key and their
jumps add up.
"""

import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.expansion.weights import ThetaWeights, theta_weights
from discrete_edgeworth.logs import log_event
from discrete_edgeworth.numerics.keys import (
    RationalKey,
    assert_strictly_increasing,
    key_images,
    reduce_keys,
)
from discrete_edgeworth.numerics.special import std_normal_pdf


@dataclass(frozen=True)
class ExpansionBreakpoint:
    """
    One merged jump location k/√(2n).

    n and k are the contributing pair with the smallest n; members lists
    every contributing (n, k).
    """

    w_loc: float
    n: int
    k: int
    jump: float
    log_jump: float
    key: RationalKey
    members: tuple[tuple[int, int], ...]


@dataclass(frozen=True, eq=False)
class BreakpointTable:
    """
    All breakpoints in (0, w_max], column-wise and sorted by location.

    jump may underflow to 0 far in the tails; log_jump stays finite.
    """

    n_total: int
    w_max: float
    num: np.ndarray
    den: np.ndarray
    loc: np.ndarray
    weight_sum: np.ndarray
    jump: np.ndarray
    log_jump: np.ndarray
    member_offsets: np.ndarray
    member_n: np.ndarray
    member_k: np.ndarray

    def __len__(self) -> int:
        return len(self.loc)

    @cached_property
    def cum_weight(self) -> np.ndarray:
        """cum_weight[i] = Σ weight_sum over the first i breakpoints."""
        return np.concatenate([[0.0], np.cumsum(self.weight_sum)])

    def breakpoint(self, i: int) -> ExpansionBreakpoint:
        lo, hi = int(self.member_offsets[i]), int(self.member_offsets[i + 1])
        members = tuple(
            (int(n), int(k)) for n, k in zip(self.member_n[lo:hi], self.member_k[lo:hi])
        )
        return ExpansionBreakpoint(
            w_loc=float(self.loc[i]),
            n=members[0][0],
            k=members[0][1],
            jump=float(self.jump[i]),
            log_jump=float(self.log_jump[i]),
            key=RationalKey(1, int(self.num[i]), int(self.den[i])),
            members=members,
        )

    def __iter__(self) -> Iterator[ExpansionBreakpoint]:
        for i in range(len(self)):
            yield self.breakpoint(i)


def _log_jump(
    N: int, loc: np.ndarray, group: np.ndarray, log_w: np.ndarray
) -> np.ndarray:
    """log of the merged jump, with a grouped log-sum-exp over members."""
    peak = np.full(len(loc), -np.inf)
    np.maximum.at(peak, group, log_w)
    scaled = np.bincount(group, weights=np.exp(log_w - peak[group]), minlength=len(loc))
    log_pdf = -0.5 * loc * loc - 0.5 * math.log(2.0 * math.pi)
    return 0.5 * math.log(3.0 / (2.0 * N)) + log_pdf + peak + np.log(scaled)


def breakpoint_table(
    N: int, w_max: float, weights: ThetaWeights | None = None
) -> BreakpointTable:
    """
    Enumerate and merge every breakpoint k/√(2n) <= w_max.

    Args:
        N: Sample size
        w_max: Right end of the scanned range
        weights: Theta weights for N (built if not provided)

    Raises:
        DomainError: If w_max <= 0 or N < 1
    """
    if w_max <= 0:
        raise DomainError(f"w_max must be > 0, got {w_max}")
    weights = weights or theta_weights(N)
    if weights.n_total != N:
        raise DomainError(f"weights built for N={weights.n_total}, not {N}")

    n = np.arange(1, N + 1, dtype=np.int64)
    counts = np.floor(w_max * np.sqrt(2.0 * n)).astype(np.int64) + 1
    starts = np.cumsum(counts) - counts
    n_rep = np.repeat(n, counts)
    k = 1 + np.arange(int(counts.sum()), dtype=np.int64) - np.repeat(starts, counts)

    sign, num, den = reduce_keys(np.ones_like(k), k * k, 2 * n_rep)
    inside = key_images(sign, num, den) <= w_max
    n_rep, k, num, den = n_rep[inside], k[inside], num[inside], den[inside]

    base = 2 * N + 1
    uniq, inverse = np.unique(num * base + den, return_inverse=True)
    inverse = inverse.reshape(-1)
    u_num, u_den = uniq // base, uniq % base
    loc = key_images(np.ones_like(u_num), u_num, u_den)
    order = np.argsort(loc, kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(len(order))
    inverse = rank[inverse]
    u_num, u_den, loc = u_num[order], u_den[order], loc[order]
    assert_strictly_increasing(np.ones_like(u_num), u_num, u_den)

    weight_sum = np.bincount(inverse, weights=weights.weights[n_rep], minlength=len(loc))
    jump = math.sqrt(3.0 / (2.0 * N)) * std_normal_pdf(loc) * weight_sum
    log_jump = _log_jump(N, loc, inverse, weights.log_weights[n_rep])

    perm = np.argsort(inverse, kind="stable")
    offsets = np.concatenate([[0], np.cumsum(np.bincount(inverse, minlength=len(loc)))])

    log_event(event="breakpoints_built", n=N, w_max=w_max, pairs=len(k), breakpoints=len(loc))
    return BreakpointTable(
        n_total=N,
        w_max=float(w_max),
        num=u_num,
        den=u_den,
        loc=loc,
        weight_sum=weight_sum,
        jump=jump,
        log_jump=log_jump,
        member_offsets=offsets.astype(np.int64),
        member_n=n_rep[perm],
        member_k=k[perm],
    )


def breakpoints(N: int, w_max: float) -> list[ExpansionBreakpoint]:
    """Sorted breakpoints in (0, w_max] as objects."""
    return list(breakpoint_table(N, w_max))
