"""Kostka-Shoji polynomials from the alternating Weyl-group sum.

    K_{lam,mu}(t_1..t_r) = sum over sigma in S_N^r of
        sign(sigma) * L^{sigma(lam + rho) - rho - mu}(t_1..t_r)

with ``rho = (N, ..., 1)`` in every component and the exponent read as an
alpha vector through interleaved prefix sums.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .multipartitions import AlphaVec, Multipartition, dominates, enumerate_multipartitions
from .polyring import TPoly, specialize_diagonal
from .pseudoroots import build_system, partition_function, partition_function_single


@dataclass
class KostkaStats:
    weyl_terms: int = 0
    l_lookups: int = 0
    elapsed: float = 0.0


@dataclass
class KostkaResult:
    lambda_: Multipartition
    mu: Multipartition
    poly: TPoly
    meta: KostkaStats = field(default_factory=KostkaStats)


def _check_pair(lam: Multipartition, mu: Multipartition) -> None:
    if (lam.r, lam.N) != (mu.r, mu.N):
        raise ValueError(f"shape mismatch: (r,N)={(lam.r, lam.N)} vs {(mu.r, mu.N)}")
    if lam.total != mu.total:
        raise ValueError(f"unequal totals {lam.total} and {mu.total}")


def weyl_alphas(lam: Multipartition, mu: Multipartition) -> Iterator[tuple[int, AlphaVec]]:
    """Yield ``(sign, alpha)`` for the Weyl terms whose alpha is nonnegative.

    Permutations are built position by position in interleaved order; a branch
    is abandoned as soon as a prefix sum of ``sigma(lam+rho) - rho - mu`` goes
    negative, since the partition function vanishes there anyway.
    """
    _check_pair(lam, mu)
    r, N = lam.r, lam.N
    shifted = [[lam.rows[s][j] + N - j for j in range(N)] for s in range(r)]
    target = [[mu.rows[s][j] + N - j for j in range(N)] for s in range(r)]
    used = [[False] * N for _ in range(r)]
    last = r * N - 1
    alpha = [0] * last

    def rec(pos: int, running: int, parity: int):
        j, s = divmod(pos, r)
        vals, flags, goal = shifted[s], used[s], target[s][j]
        smaller_unused = 0
        for i in range(N):
            if flags[i]:
                continue
            total = running + vals[i] - goal
            inv = smaller_unused
            smaller_unused += 1
            if pos == last:
                # totals agree, so the final prefix sum is zero automatically
                yield (-1 if (parity + inv) & 1 else 1), tuple(alpha)
                continue
            if total < 0:
                continue
            alpha[pos] = total
            flags[i] = True
            yield from rec(pos + 1, total, parity + inv)
            flags[i] = False

    yield from rec(0, 0, 0)


def _alternating_sum(lam, mu, evaluate: Callable[[AlphaVec], TPoly], r_out: int):
    stats = KostkaStats()
    start = time.perf_counter()
    acc: dict = {}
    for sign, alpha in weyl_alphas(lam, mu):
        stats.weyl_terms += 1
        stats.l_lookups += 1
        for e, c in evaluate(alpha).terms.items():
            acc[e] = acc.get(e, 0) + sign * c
    stats.elapsed = time.perf_counter() - start
    return TPoly._raw(r_out, {e: c for e, c in acc.items() if c}), stats


def kostka(lam: Multipartition, mu: Multipartition) -> KostkaResult:
    """Multivariable ``K_{lam,mu}(t_1, ..., t_r)``.

    >>> str(kostka(Multipartition.parse("2,0"), Multipartition.parse("1,1")).poly)
    't'
    """
    _check_pair(lam, mu)
    sys = build_system(lam.r, lam.N)
    poly, stats = _alternating_sum(lam, mu, lambda a: partition_function(sys, a), lam.r)
    return KostkaResult(lam, mu, poly, stats)


def kostka_single(lam: Multipartition, mu: Multipartition) -> TPoly:
    """Single-variable ``K_{lam,mu}(t)`` built on the uncolored partition function."""
    _check_pair(lam, mu)
    sys = build_system(lam.r, lam.N)
    poly, _ = _alternating_sum(lam, mu, lambda a: partition_function_single(sys, a), 1)
    return poly


def kostka_diagonal(lam: Multipartition, mu: Multipartition) -> TPoly:
    return specialize_diagonal(kostka(lam, mu).poly)


def _table_chunk(args):
    pairs = args
    return [(lam, mu, kostka(lam, mu).poly) for lam, mu in pairs]


def kostka_table(r: int, N: int, total: int, threads: int = 1,
                 include_all: bool = False) -> dict[tuple[Multipartition, Multipartition], TPoly]:
    """``K_{lam,mu}`` for every dominant pair of nonnegative multipartitions of ``total``.

    With ``include_all`` every ordered pair is computed, dominant or not.
    The returned dict is ordered by ``(lam, mu)``.
    """
    parts = enumerate_multipartitions(r, N, total)
    pairs = [(lam, mu) for lam in parts for mu in parts if include_all or dominates(lam, mu)]
    pairs.sort()
    if threads <= 1 or len(pairs) < 2:
        rows = _table_chunk(pairs)
    else:
        chunks = [pairs[i::threads] for i in range(threads)]
        rows = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_table_chunk, chunks):
                rows.extend(part)
    rows.sort(key=lambda row: (row[0], row[1]))
    return {(lam, mu): poly for lam, mu, poly in rows}
