"""Affine symmetric group words for the convolution-diagram resolution.

Affine permutations are bijections ``w: Z -> Z`` with ``w(u + d) = w(u) + d``
and ``sum_{u=1}^{d} w(u) = d(d+1)/2``, stored by their window
``(w(1), ..., w(d))``.  Simple reflections ``s_0, ..., s_{d-1}`` are indexed by
residues mod ``d``; ``s_0`` swaps ``0`` and ``1`` (i.e. ``d`` and ``d+1``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .pseudoroots import build_system


@dataclass(frozen=True)
class AffinePermutation:
    d: int
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", window)
        if self.d < 1 or len(window) != self.d:
            raise ValueError(f"window {window} does not have length d={self.d}")
        if sorted(x % self.d for x in window) != list(range(self.d)):
            raise ValueError(f"window {window} is not a bijection mod {self.d}")
        if sum(window) != self.d * (self.d + 1) // 2:
            raise ValueError(f"window {window} is in the extended affine group, not the affine one")

    @classmethod
    def identity(cls, d: int) -> "AffinePermutation":
        return cls(d, tuple(range(1, d + 1)))

    @classmethod
    def simple(cls, d: int, i: int) -> "AffinePermutation":
        return cls.identity(d).apply_simple(i)

    @classmethod
    def from_word(cls, d: int, word: Sequence[int]) -> "AffinePermutation":
        """The product ``s_{u_1} s_{u_2} ... s_{u_k}``."""
        w = cls.identity(d)
        for i in reversed(word):
            w = w.apply_simple(i)
        return w

    def __call__(self, u: int) -> int:
        q, rem = divmod(u - 1, self.d)
        return self.window[rem] + q * self.d

    def apply_simple(self, i: int) -> "AffinePermutation":
        """Left multiplication ``s_i w``: swap the values ``i`` and ``i+1`` mod ``d``."""
        d = self.d
        i %= d
        if d == 1:
            raise ValueError("the affine group of period 1 has no simple reflections")
        out = []
        for v in self.window:
            if v % d == i:
                out.append(v + 1)
            elif v % d == (i + 1) % d:
                out.append(v - 1)
            else:
                out.append(v)
        return AffinePermutation(d, tuple(out))

    def compose(self, other: "AffinePermutation") -> "AffinePermutation":
        """``self o other``."""
        if other.d != self.d:
            raise ValueError("period mismatch")
        return AffinePermutation(self.d, tuple(self(other(u)) for u in range(1, self.d + 1)))

    def __mul__(self, other):
        return self.compose(other)

    def length(self) -> int:
        """Coxeter length, ``sum_{1<=i<j<=d} |floor((w(j) - w(i)) / d)|``."""
        w, d = self.window, self.d
        return sum(abs((w[j] - w[i]) // d) for i in range(d) for j in range(i + 1, d))


def length(w: AffinePermutation) -> int:
    return w.length()


def apply_simple(w: AffinePermutation, i: int) -> AffinePermutation:
    return w.apply_simple(i)


def compose(w: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    return w.compose(v)


def is_reduced(word: Sequence[int], d: int) -> bool:
    if d < 2:
        raise ValueError("need d >= 2")
    return AffinePermutation.from_word(d, word).length() == len(word)


def parabolic_longest_word(residues: Sequence[int], d: int) -> list[int]:
    """Staircase reduced word for the longest element generated by an arc of residues.

    ``residues`` must be ``k < d`` consecutive residues mod ``d``, listed in
    cyclic order (for example ``[6, 7, 0]`` when ``d = 8``).
    """
    arc = [x % d for x in residues]
    k = len(arc)
    if k >= d:
        raise ValueError(f"an arc of {k} residues mod {d} generates an infinite group")
    if len(set(arc)) != k or any((arc[j + 1] - arc[j]) % d != 1 for j in range(k - 1)):
        raise ValueError(f"residues {list(residues)} are not a consecutive arc mod {d}")
    # staircase 1; 2 1; 3 2 1; ... in the local numbering 1..k
    return [arc[i - 1] for top in range(1, k + 1) for i in range(top, 0, -1)]


@dataclass(frozen=True)
class FlagType:
    """Vertices ``i_seq`` (values in ``1..r``) with multiplicities ``a_seq``."""
    r: int
    i_seq: tuple[int, ...]
    a_seq: tuple[int, ...]
    dims: tuple[int, ...] = field(default=())

    def __post_init__(self):
        i_seq = tuple(self.i_seq)
        a_seq = tuple(self.a_seq)
        object.__setattr__(self, "i_seq", i_seq)
        object.__setattr__(self, "a_seq", a_seq)
        if len(i_seq) != len(a_seq):
            raise ValueError("i and a sequences differ in length")
        if any(not 1 <= s <= self.r for s in i_seq):
            raise ValueError(f"vertices must lie in 1..{self.r}")
        if any(a < 1 for a in a_seq):
            raise ValueError("multiplicities must be positive")
        sums = [0] * self.r
        for s, a in zip(i_seq, a_seq):
            sums[s - 1] += a
        if not self.dims:
            object.__setattr__(self, "dims", tuple(sums))
        elif tuple(self.dims) != tuple(sums):
            raise ValueError(f"dims {self.dims} do not match per-vertex sums {tuple(sums)}")

    @property
    def length(self) -> int:
        return len(self.i_seq)

    @property
    def d(self) -> int:
        return sum(self.dims)


def standard_flag_type(r: int, N: int) -> FlagType:
    """Vertices ``(r, r-1, ..., 1)`` repeated ``N`` times, all multiplicities 1."""
    return FlagType(r, tuple(range(r, 0, -1)) * N, (1,) * (r * N), (N,) * r)


class ArcError(ValueError):
    def __init__(self, n: int, lower: int, upper: int, d: int):
        super().__init__(f"block n={n}: interval [{lower}, {upper}] covers every residue mod {d}")
        self.n = n


@dataclass(frozen=True)
class WordBlock:
    n: int
    lower: int
    upper: int
    residues: tuple[int, ...]
    word: tuple[int, ...]
    reduced: bool

    @property
    def size(self) -> int:
        return len(self.residues)


def _cumulative(dims: Sequence[int], u: int) -> int:
    """``d_1 + ... + d_u`` for ``u`` in 0..r, extended by ``D(u + r) = D(u) + d``."""
    r = len(dims)
    q, rem = divmod(u, r)
    return q * sum(dims) + sum(dims[:rem])


def build_word_sequence(ft: FlagType) -> list[WordBlock]:
    """Blocks ``u_l, ..., u_1`` of parabolic longest words, one per step of the flag.

    Block ``n`` lives on the integer interval
    ``[D(s_n) + 1 + A_n(s_n), D(s_n + 1) - 1 + A_n(s_n + 1)]`` where ``A_n(v)``
    sums ``a_m`` over ``m < n`` with ``s_m = v`` (vertex ``r + 1`` read as 1).
    Letters are reduced mod ``d``.
    """
    d = ft.d
    if ft.length == 0:
        return []
    r = ft.r
    blocks = []
    for n in range(1, ft.length + 1):
        s = ft.i_seq[n - 1]
        nxt = s % r + 1
        before_s = sum(a for v, a in zip(ft.i_seq[:n - 1], ft.a_seq) if v == s)
        before_next = sum(a for v, a in zip(ft.i_seq[:n - 1], ft.a_seq) if v == nxt)
        lower = _cumulative(ft.dims, s) + 1 + before_s
        upper = _cumulative(ft.dims, s + 1) - 1 + before_next
        k = upper - lower + 1
        if k >= d:
            raise ArcError(n, lower, upper, d)
        residues = tuple(x % d for x in range(lower, upper + 1))
        if residues:
            word = tuple(parabolic_longest_word(residues, d))
            reduced = is_reduced(word, d)
        else:
            word, reduced = (), True
        blocks.append(WordBlock(n, lower, upper, residues, word, reduced))
    return blocks[::-1]


def concatenated_word(blocks: Sequence[WordBlock]) -> list[int]:
    return [x for b in blocks for x in b.word]


def random_flag_type(rng: random.Random, max_d: int = 8, max_len: int = 6) -> FlagType:
    """A random flag type with total dimension in ``2..max_d`` and length ``<= max_len``."""
    while True:
        r = rng.randint(1, 4)
        ell = rng.randint(1, max_len)
        i_seq = tuple(rng.randint(1, r) for _ in range(ell))
        a_seq = tuple(rng.randint(1, 3) for _ in range(ell))
        if 2 <= sum(a_seq) <= max_d:
            return FlagType(r, i_seq, a_seq)


@dataclass(frozen=True)
class DimsReport:
    r: int
    N: int
    root_count: int
    block_count: int
    flag_dim: int
    total_dim: int

    @property
    def ok(self) -> bool:
        return self.root_count == self.block_count


def dims_check(r: int, N: int) -> DimsReport:
    """Compare the pseudoroot count with the block description of ``n_r``.

    The block side counts ``r - 1`` upper triangular ``N x N`` blocks and one
    strictly upper triangular block (for ``r = 1`` only the latter).
    """
    roots = len(build_system(r, N).roots)
    blocks = (r - 1) * N * (N + 1) // 2 + N * (N - 1) // 2
    flag = r * N * (N - 1) // 2
    return DimsReport(r, N, roots, blocks, flag, flag + roots)
