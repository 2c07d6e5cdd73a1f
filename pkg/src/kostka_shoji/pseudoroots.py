"""Colored pseudoroots of the cyclic quiver and their partition functions.

For ``(r, N)`` the pseudoroots are the intervals ``alpha_mn = delta_m + ... +
delta_{n-1}`` with ``1 <= m < n <= rN`` and ``n - m = 1 (mod r)``.  The root
``alpha_mn`` carries the color ``((m - 1) mod r) + 1``, i.e. the residue of
``m`` written in ``{1, ..., r}``.  (The defining text says "``m = d_s mod r``";
the grading ``deg E_nm = m mod r`` makes clear that ``m = s mod r`` is meant.)

The multivariable partition function counts multisets of pseudoroots summing to
``alpha``, recording ``t_s^(number of roots of color s)``.
"""

from __future__ import annotations

import itertools
import os
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .multipartitions import AlphaVec
from .polyring import GradedLaurent, TPoly

CACHE_ENV = "KOSTKA_SHOJI_CACHE_SIZE"
CACHE_SIZE = int(os.environ.get(CACHE_ENV, 10**6))


@dataclass(frozen=True)
class Pseudoroot:
    m: int
    n: int
    alpha: AlphaVec
    color: int


@dataclass(frozen=True)
class PseudorootSystem:
    r: int
    N: int
    roots: tuple[Pseudoroot, ...]

    @property
    def rank(self) -> int:
        """Length of an alpha vector, ``rN - 1``."""
        return self.r * self.N - 1

    def __len__(self):
        return len(self.roots)


@lru_cache(maxsize=None)
def build_system(r: int, N: int) -> PseudorootSystem:
    if r < 1 or N < 1:
        raise ValueError("r and N must be positive")
    n_coords = r * N - 1
    roots = []
    for m in range(1, r * N):
        for n in range(m + 1, r * N + 1):
            if (n - m) % r == 1 % r:
                alpha = tuple(1 if m <= l <= n - 1 else 0 for l in range(1, n_coords + 1))
                roots.append(Pseudoroot(m, n, alpha, (m - 1) % r + 1))
    return PseudorootSystem(r, N, tuple(roots))


def _check_alpha(sys: PseudorootSystem, alpha: Sequence[int]) -> AlphaVec:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != sys.rank:
        raise ValueError(f"alpha has length {len(alpha)}, expected rN-1={sys.rank}")
    return alpha


def _leftmost_covers(alpha: tuple[int, ...], l: int, r: int):
    """Ways to place ``alpha[l]`` intervals starting at ``l`` under ``alpha``.

    Interval lengths are ``1, r+1, 2r+1, ...``.  Yields the remainder vectors.
    Lengths are chosen longest first; once the coverage of a coordinate is
    final it is checked against ``alpha``.
    """
    n = len(alpha)
    k = alpha[l]
    lengths = list(range(1, n - l + 1, r))[::-1]
    rem = list(alpha)

    def rec(idx: int, covered: int):
        L = lengths[idx]
        shorter = lengths[idx + 1] if idx + 1 < len(lengths) else 0
        last = idx == len(lengths) - 1
        counts = [k - covered] if last else range(k - covered + 1)
        for c in counts:
            total = covered + c
            span = range(l + shorter, l + L)
            if any(alpha[j] < total for j in span):
                break
            for j in span:
                rem[j] = alpha[j] - total
            if last:
                yield tuple(rem)
            else:
                yield from rec(idx + 1, total)

    yield from rec(0, 0)


@lru_cache(maxsize=CACHE_SIZE)
def _multi(r: int, alpha: tuple[int, ...]) -> dict:
    try:
        l = next(i for i, a in enumerate(alpha) if a)
    except StopIteration:
        return {(0,) * r: 1}
    k = alpha[l]
    color = l % r
    out: dict = defaultdict(int)
    for rem in _leftmost_covers(alpha, l, r):
        for texp, c in _multi(r, rem).items():
            out[texp[:color] + (texp[color] + k,) + texp[color + 1:]] += c
    return dict(out)


@lru_cache(maxsize=CACHE_SIZE)
def _single(r: int, alpha: tuple[int, ...]) -> dict:
    # Peel the rightmost nonzero coordinate: every root covering it must end there.
    n = len(alpha)
    l = n - 1
    while l >= 0 and not alpha[l]:
        l -= 1
    if l < 0:
        return {0: 1}
    k = alpha[l]
    lengths = range(1, l + 2, r)
    out: dict = defaultdict(int)
    for counts in _compositions(k, len(lengths)):
        rem = list(alpha)
        ok = True
        for L, c in zip(lengths, counts):
            for j in range(l - L + 1, l + 1):
                rem[j] -= c
        if any(rem[j] < 0 for j in range(l + 1)):
            ok = False
        if ok:
            for deg, c in _single(r, tuple(rem)).items():
                out[deg + k] += c
    return dict(out)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def partition_function(sys: PseudorootSystem, alpha: Sequence[int]) -> TPoly:
    """Multivariable partition function ``L^alpha(t_1, ..., t_r)``.

    Zero when any coordinate of ``alpha`` is negative.

    >>> str(partition_function(build_system(2, 2), (1, 1, 1)))
    't1+t1^2*t2'
    """
    alpha = _check_alpha(sys, alpha)
    if any(a < 0 for a in alpha):
        return TPoly.zero(sys.r)
    return TPoly._raw(sys.r, dict(_multi(sys.r, alpha)))


def partition_function_single(sys: PseudorootSystem, alpha: Sequence[int]) -> TPoly:
    """Single-variable ``L^alpha(t)``, counting roots without colors.

    Computed by an independent recursion (peeling from the right), so it can
    serve as a cross-check on the diagonal of :func:`partition_function`.
    """
    alpha = _check_alpha(sys, alpha)
    if any(a < 0 for a in alpha):
        return TPoly.zero(1)
    return TPoly._raw(1, {(d,): c for d, c in _single(sys.r, alpha).items()})


def cache_info() -> dict:
    return {"multi": _multi.cache_info()._asdict(), "single": _single.cache_info()._asdict()}


def clear_caches() -> None:
    _multi.cache_clear()
    _single.cache_clear()


def xexp_of_alpha(alpha: Sequence[int]) -> tuple[int, ...]:
    """Exponent vector of ``x^alpha`` under ``delta_l -> x_l^{-1} x_{l+1}``."""
    n = len(alpha) + 1
    out = [0] * n
    for l, a in enumerate(alpha):
        out[l] -= a
        out[l + 1] += a
    return tuple(out)


def alpha_of_xexp(xexp: Sequence[int]) -> AlphaVec:
    """Inverse of :func:`xexp_of_alpha`; raises on vectors outside its image."""
    if sum(xexp) != 0:
        raise ValueError(f"x-monomial {tuple(xexp)} is not in the root lattice")
    return tuple(-s for s in itertools.accumulate(xexp[:-1]))


def partition_function_series_oracle(sys: PseudorootSystem, box: int | Sequence[int],
                                     D: int) -> dict[AlphaVec, TPoly]:
    """Expand ``prod (1 - t_color x_m^{-1} x_n)^{-1}`` to t-degree ``D``.

    Returns the coefficient of ``x^alpha`` for every ``alpha`` with
    ``0 <= alpha <= box`` coordinatewise (zeros included).
    """
    if D < 0:
        raise ValueError("D must be nonnegative")
    bounds = (box,) * sys.rank if isinstance(box, int) else tuple(box)
    if len(bounds) != sys.rank:
        raise ValueError("box has the wrong number of coordinates")
    nx = sys.r * sys.N
    series = GradedLaurent.one(nx, sys.r, truncation=D)
    for root in sys.roots:
        series = series.geom_inverse_factor(xexp_of_alpha(root.alpha), root.color)
    found: dict = {}
    for xexp, coeff in series.by_xexp().items():
        alpha = alpha_of_xexp(xexp)
        if any(a < 0 for a in alpha):
            raise ValueError(f"monomial {xexp} is not a nonnegative root combination")
        if all(a <= b for a, b in zip(alpha, bounds)):
            found[alpha] = coeff
    out = {}
    for alpha in itertools.product(*(range(b + 1) for b in bounds)):
        out[alpha] = found.get(alpha, TPoly.zero(sys.r))
    return out


def brute_force_multisets(sys: PseudorootSystem, alpha: Sequence[int]) -> TPoly:
    """Count multisets of roots summing to ``alpha`` by plain coin-change search.

    Exponential; intended for small cross-checks only.
    """
    alpha = _check_alpha(sys, alpha)
    if any(a < 0 for a in alpha):
        return TPoly.zero(sys.r)
    out: dict = defaultdict(int)
    roots = sys.roots

    def rec(i: int, remaining: list, texp: list):
        if not any(remaining):
            out[tuple(texp)] += 1
            return
        if i == len(roots):
            return
        rec(i + 1, remaining, texp)
        a = roots[i].alpha
        used = 0
        rem = list(remaining)
        while True:
            rem = [x - y for x, y in zip(rem, a)]
            if any(x < 0 for x in rem):
                break
            used += 1
            te = list(texp)
            te[roots[i].color - 1] += used
            rec(i + 1, rem, te)

    rec(0, list(alpha), [0] * sys.r)
    return TPoly(sys.r, out)


def roots_table(sys: PseudorootSystem) -> list[dict]:
    return [{"m": p.m, "n": p.n, "color": p.color, "alpha": list(p.alpha)} for p in sys.roots]


def iter_alphas(bounds: Iterable[int]):
    return itertools.product(*(range(b + 1) for b in bounds))
