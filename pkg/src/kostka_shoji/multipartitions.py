"""Generalized r-multipartitions, interleaved dominance order, and the Weyl action.

A multipartition is stored as ``r`` rows of length ``N``.  The interleaved
vector lists entries row-index first: ``lam[0][0], lam[1][0], ..., lam[r-1][0],
lam[0][1], ...``, so 1-based position ``r(j-1)+s`` holds ``lam^(s)_j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

AlphaVec = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Multipartition:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("a multipartition needs at least one component")
        N = len(rows[0])
        if N < 1:
            raise ValueError("components must have length >= 1")
        for s, row in enumerate(rows, 1):
            if len(row) != N:
                raise ValueError(f"component {s} has length {len(row)}, expected {N}")
            if any(a < b for a, b in zip(row, row[1:])):
                raise ValueError(f"component {s} is not weakly decreasing: {row}")

    @classmethod
    def zero(cls, r: int, N: int) -> "Multipartition":
        return cls(((0,) * N,) * r)

    @classmethod
    def parse(cls, text: str, N: int | None = None) -> "Multipartition":
        """Parse ``"3,1,0|2,0,0"``; components shorter than ``N`` are zero-padded."""
        comps = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip()
            comps.append([int(x) for x in chunk.split(",")] if chunk else [])
        width = max(len(c) for c in comps)
        if N is None:
            N = max(width, 1)
        if width > N:
            raise ValueError(f"component longer than N={N}: {text!r}")
        return cls(tuple(tuple(c + [0] * (N - len(c))) for c in comps))

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def N(self) -> int:
        return len(self.rows[0])

    @property
    def total(self) -> int:
        return sum(map(sum, self.rows))

    def is_regular(self) -> bool:
        return all(a > b for row in self.rows for a, b in zip(row, row[1:]))

    def padded(self, N: int) -> "Multipartition":
        if N < self.N:
            raise ValueError("cannot shrink a multipartition")
        return Multipartition(tuple(row + (0,) * (N - self.N) for row in self.rows))

    def __add__(self, other: "Multipartition") -> "Multipartition":
        _check_shape(self, other)
        return Multipartition(tuple(tuple(a + b for a, b in zip(x, y))
                                    for x, y in zip(self.rows, other.rows)))

    def interleave(self) -> tuple[int, ...]:
        return interleave(self)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, row)) for row in self.rows)


@dataclass(frozen=True)
class SignedWeylElement:
    """An element of ``S_N^r`` with its sign."""
    perms: tuple[tuple[int, ...], ...]
    sign: int

    def __post_init__(self):
        expected = 1
        for p in self.perms:
            expected *= permutation_sign(p)
        if expected != self.sign:
            raise ValueError("sign does not match the permutations")


def _check_shape(a: Multipartition, b: Multipartition) -> None:
    if (a.r, a.N) != (b.r, b.N):
        raise ValueError(f"shape mismatch: (r,N)={(a.r, a.N)} vs {(b.r, b.N)}")


def permutation_sign(p: Sequence[int]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def interleave(m: Multipartition) -> tuple[int, ...]:
    return tuple(m.rows[s][j] for j in range(m.N) for s in range(m.r))


def deinterleave(v: Sequence[int], r: int) -> tuple[tuple[int, ...], ...]:
    if len(v) % r:
        raise ValueError("vector length is not a multiple of r")
    return tuple(tuple(v[s::r]) for s in range(r))


def partial_sums(m: Multipartition) -> tuple[int, ...]:
    return tuple(itertools.accumulate(interleave(m)))


def dominates(a: Multipartition, b: Multipartition) -> bool:
    """``a >= b`` in the interleaved dominance order."""
    _check_shape(a, b)
    sa, sb = partial_sums(a), partial_sums(b)
    return sa[-1] == sb[-1] and all(x >= y for x, y in zip(sa[:-1], sb[:-1]))


def diff_alpha(a: Multipartition, b: Multipartition) -> AlphaVec:
    """Differences of interleaved prefix sums, positions ``1..rN-1``.

    Coordinates may be negative when ``a`` does not dominate ``b``.
    """
    _check_shape(a, b)
    sa, sb = partial_sums(a), partial_sums(b)
    if sa[-1] != sb[-1]:
        raise ValueError(f"unequal totals {sa[-1]} and {sb[-1]}")
    return tuple(x - y for x, y in zip(sa[:-1], sb[:-1]))


def rho(r: int, N: int) -> Multipartition:
    return Multipartition((tuple(range(N, 0, -1)),) * r)


def weyl_elements(r: int, N: int) -> Iterator[SignedWeylElement]:
    """All of ``S_N^r`` in a fixed order (itertools product of lexicographic perms)."""
    perms = [(p, permutation_sign(p)) for p in itertools.permutations(range(N))]
    for combo in itertools.product(perms, repeat=r):
        sign = 1
        for _, sg in combo:
            sign *= sg
        yield SignedWeylElement(tuple(p for p, _ in combo), sign)


def signed_weyl_images(v: Sequence[int], r: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(sign, sigma(v))`` for every ``sigma`` in ``S_N^r``.

    ``v`` is an interleaved vector of length ``rN``; component ``s`` occupies
    the positions ``s, s+r, s+2r, ...`` (0-based).
    """
    if len(v) % r:
        raise ValueError("vector length is not a multiple of r")
    N = len(v) // r
    comps = deinterleave(v, r)
    for w in weyl_elements(r, N):
        image = [0] * (r * N)
        for s, p in enumerate(w.perms):
            for j in range(N):
                image[j * r + s] = comps[s][p[j]]
        yield w.sign, tuple(image)


def _partitions_into(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    # weakly decreasing nonneg sequences of given length, sum, and first entry <= cap
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions_into(total - first, parts - 1, first):
            yield (first,) + rest


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_multipartitions(r: int, N: int, total: int) -> list[Multipartition]:
    """All nonnegative r-multipartitions with N rows per component and given total.

    Order: component sizes in reverse-lexicographic order, then each component
    in reverse-lexicographic order.
    """
    if total < 0:
        raise ValueError("total must be nonnegative")
    out = []
    for sizes in _compositions(total, r):
        choices = [list(_partitions_into(n, N, n)) for n in sizes]
        for rows in itertools.product(*choices):
            out.append(Multipartition(rows))
    return out
