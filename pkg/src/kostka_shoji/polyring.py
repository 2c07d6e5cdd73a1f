"""Sparse exact-integer polynomials.

Two containers live here:

* :class:`TPoly` -- polynomials in the grading variables ``t_1, ..., t_r``.
* :class:`GradedLaurent` -- Laurent polynomials in ``x_1, ..., x_{rN}`` whose
  coefficients are polynomials in ``t_1, ..., t_r``, optionally truncated at a
  maximum total ``t``-degree.

Coefficients are Python ints, so nothing ever overflows.  Values are treated as
immutable once built; arithmetic always returns fresh objects.
"""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Callable, Iterable, Mapping

Exp = tuple[int, ...]


def _pruned(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c != 0}


class TPoly:
    """Polynomial in ``r`` commuting variables with integer coefficients.

    >>> t1, t2 = TPoly.var(2, 1), TPoly.var(2, 2)
    >>> str((t1 + t2) ** 2)
    't1^2+2*t1*t2+t2^2'
    """

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: Mapping[Exp, int] | None = None):
        if r < 1:
            raise ValueError(f"need at least one variable, got r={r}")
        self.r = r
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != r:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {r}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp}")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        self.terms = _pruned(clean)

    @classmethod
    def _raw(cls, r: int, terms: dict) -> "TPoly":
        # trusted constructor for hot paths: terms already validated and pruned
        p = object.__new__(cls)
        p.r = r
        p.terms = terms
        return p

    @classmethod
    def zero(cls, r: int) -> "TPoly":
        return cls._raw(r, {})

    @classmethod
    def constant(cls, r: int, c: int) -> "TPoly":
        return cls._raw(r, {(0,) * r: int(c)} if c else {})

    @classmethod
    def one(cls, r: int) -> "TPoly":
        return cls.constant(r, 1)

    @classmethod
    def var(cls, r: int, s: int) -> "TPoly":
        """The variable ``t_s`` (1-based)."""
        if not 1 <= s <= r:
            raise ValueError(f"variable index {s} outside 1..{r}")
        exp = [0] * r
        exp[s - 1] = 1
        return cls._raw(r, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Iterable[int], c: int = 1) -> "TPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    def _check(self, other: "TPoly") -> None:
        if self.r != other.r:
            raise ValueError(f"variable-count mismatch: {self.r} vs {other.r}")

    def _coerce(self, other) -> "TPoly":
        if isinstance(other, TPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return TPoly.constant(self.r, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TPoly._raw(self.r, _pruned(out))

    __radd__ = __add__

    def __neg__(self):
        return TPoly._raw(self.r, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return TPoly._raw(self.r, _pruned(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = TPoly.one(self.r)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = TPoly.constant(self.r, other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.r == other.r and self.terms == other.terms

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self) -> list[tuple[Exp, int]]:
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self.terms.items())

    def coefficient(self, exp: Iterable[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def truncate(self, max_degree: int) -> "TPoly":
        return TPoly._raw(self.r, {e: c for e, c in self.terms.items() if sum(e) <= max_degree})

    def evaluate(self, values: Iterable[int]) -> int:
        values = tuple(values)
        if len(values) != self.r:
            raise ValueError("wrong number of values")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                term *= v**k
            total += term
        return total

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.r, 0)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def to_json(self) -> list[dict]:
        return [{"t": list(e), "c": c} for e, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict], r: int | None = None) -> "TPoly":
        if r is None:
            if not data:
                raise ValueError("cannot infer r from an empty term list")
            r = len(data[0]["t"])
        return cls(r, {tuple(d["t"]): d["c"] for d in data})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = ["t"] if self.r == 1 else [f"t{s}" for s in range(1, self.r + 1)]
        pieces = []
        # graded: by total degree, then t1-heavy monomials first
        order = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), [-k for k in kv[0]]))
        for exp, c in order:
            factors = []
            for name, k in zip(names, exp):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        out = pieces[0]
        for p in pieces[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self) -> str:
        return f"TPoly(r={self.r}, {self!s})"


def tpoly_add(a: TPoly, b: TPoly) -> TPoly:
    return a + b


def tpoly_mul(a: TPoly, b: TPoly) -> TPoly:
    return a * b


def specialize_diagonal(p: TPoly) -> TPoly:
    """Substitute ``t_s = t`` for every ``s``; the result is univariate."""
    out: dict = defaultdict(int)
    for e, c in p.terms.items():
        out[(sum(e),)] += c
    return TPoly._raw(1, _pruned(out))


class GradedLaurent:
    """Laurent polynomial in ``nx`` x-variables with ``t``-polynomial coefficients.

    Terms are keyed by ``(texp, xexp)``.  With ``truncation = D`` every stored
    term has total ``t``-degree at most ``D`` and products drop anything above.
    """

    __slots__ = ("nx", "r", "truncation", "terms")

    def __init__(self, nx: int, r: int, terms: Mapping[tuple[Exp, Exp], int] | None = None,
                 truncation: int | None = None):
        if truncation is not None and truncation < 0:
            raise ValueError("truncation degree must be nonnegative")
        self.nx = nx
        self.r = r
        self.truncation = truncation
        clean: dict = {}
        for (texp, xexp), c in (terms or {}).items():
            texp, xexp = tuple(texp), tuple(xexp)
            if len(texp) != r or len(xexp) != nx:
                raise ValueError(f"term {(texp, xexp)} does not fit nx={nx}, r={r}")
            if any(e < 0 for e in texp):
                raise ValueError(f"negative t-exponent {texp}")
            if truncation is not None and sum(texp) > truncation:
                continue
            if c:
                clean[(texp, xexp)] = clean.get((texp, xexp), 0) + int(c)
        self.terms = _pruned(clean)

    @classmethod
    def _raw(cls, nx, r, terms, truncation):
        f = object.__new__(cls)
        f.nx, f.r, f.truncation, f.terms = nx, r, truncation, terms
        return f

    @classmethod
    def monomial(cls, xexp: Iterable[int], r: int, texp: Iterable[int] | None = None,
                 c: int = 1, truncation: int | None = None) -> "GradedLaurent":
        xexp = tuple(xexp)
        texp = tuple(texp) if texp is not None else (0,) * r
        return cls(len(xexp), r, {(texp, xexp): c}, truncation)

    @classmethod
    def one(cls, nx: int, r: int, truncation: int | None = None) -> "GradedLaurent":
        return cls.monomial((0,) * nx, r, truncation=truncation)

    def _check(self, other: "GradedLaurent") -> None:
        if (self.nx, self.r) != (other.nx, other.r):
            raise ValueError(f"shape mismatch: {(self.nx, self.r)} vs {(other.nx, other.r)}")

    def _joint_truncation(self, other):
        ds = [d for d in (self.truncation, other.truncation) if d is not None]
        return min(ds) if ds else None

    def __add__(self, other: "GradedLaurent") -> "GradedLaurent":
        self._check(other)
        D = self._joint_truncation(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        if D is not None:
            out = {k: c for k, c in out.items() if sum(k[0]) <= D}
        return GradedLaurent._raw(self.nx, self.r, _pruned(out), D)

    def __neg__(self):
        return GradedLaurent._raw(self.nx, self.r, {k: -c for k, c in self.terms.items()},
                                  self.truncation)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedLaurent._raw(self.nx, self.r,
                                      _pruned({k: c * other for k, c in self.terms.items()}),
                                      self.truncation)
        if isinstance(other, TPoly):
            if other.r != self.r:
                raise ValueError("variable-count mismatch")
            other = GradedLaurent._raw(
                self.nx, self.r, {(e, (0,) * self.nx): c for e, c in other.terms.items()}, None)
        self._check(other)
        D = self._joint_truncation(other)
        out: dict = defaultdict(int)
        for (t1, x1), c1 in self.terms.items():
            d1 = sum(t1)
            for (t2, x2), c2 in other.terms.items():
                if D is not None and d1 + sum(t2) > D:
                    continue
                key = (tuple(a + b for a, b in zip(t1, t2)), tuple(a + b for a, b in zip(x1, x2)))
                out[key] += c1 * c2
        return GradedLaurent._raw(self.nx, self.r, _pruned(out), D)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedLaurent):
            return NotImplemented
        return (self.nx, self.r) == (other.nx, other.r) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self) -> list[tuple[tuple[Exp, Exp], int]]:
        """Terms in canonical order: lexicographic on ``(texp, xexp)``."""
        return sorted(self.terms.items())

    def truncated(self, D: int) -> "GradedLaurent":
        return GradedLaurent._raw(self.nx, self.r,
                                  {k: c for k, c in self.terms.items() if sum(k[0]) <= D}, D)

    def with_truncation(self, D: int | None) -> "GradedLaurent":
        return self.truncated(D) if D is not None else GradedLaurent._raw(
            self.nx, self.r, dict(self.terms), None)

    def map_x(self, fn: Callable[[Exp], Exp]) -> "GradedLaurent":
        """Apply a bijection on x-exponent vectors."""
        out: dict = defaultdict(int)
        for (t, x), c in self.terms.items():
            out[(t, tuple(fn(x)))] += c
        return GradedLaurent._raw(self.nx, self.r, _pruned(out), self.truncation)

    def inverted(self) -> "GradedLaurent":
        """Substitute ``x_i -> 1/x_i`` for every x-variable."""
        return self.map_x(lambda x: tuple(-e for e in x))

    def by_xexp(self) -> dict[Exp, TPoly]:
        """Collect coefficients as ``xexp -> TPoly``."""
        groups: dict = defaultdict(dict)
        for (t, x), c in self.terms.items():
            groups[x][t] = c
        return {x: TPoly._raw(self.r, g) for x, g in groups.items()}

    def geom_inverse_factor(self, xw: Iterable[int], color: int) -> "GradedLaurent":
        """Multiply by ``1/(1 - t_color * x^xw)``, truncated at the stored degree."""
        if self.truncation is None:
            raise ValueError("geometric series needs a truncation degree")
        xw = tuple(xw)
        if len(xw) != self.nx:
            raise ValueError("weight has wrong length")
        if not 1 <= color <= self.r:
            raise ValueError(f"color {color} outside 1..{self.r}")
        D = self.truncation
        ci = color - 1
        out: dict = defaultdict(int)
        for (t, x), c in self.terms.items():
            for k in range(D - sum(t) + 1):
                tk = t[:ci] + (t[ci] + k,) + t[ci + 1:]
                xk = tuple(a + k * w for a, w in zip(x, xw))
                out[(tk, xk)] += c
        return GradedLaurent._raw(self.nx, self.r, _pruned(out), D)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*t{t}*x{x}" for (t, x), c in self.items()[:8])
        more = "" if len(self.terms) <= 8 else f" + ...({len(self.terms)} terms)"
        return f"GradedLaurent(nx={self.nx}, r={self.r}, D={self.truncation}: {body or '0'}{more})"


def glaurent_mul(a: GradedLaurent, b: GradedLaurent) -> GradedLaurent:
    return a * b


def glaurent_geom_inverse_factor(f: GradedLaurent, xw: Iterable[int], color: int,
                                 D: int | None = None) -> GradedLaurent:
    """``f / (1 - t_color x^xw)`` expanded as a geometric series up to t-degree ``D``."""
    if D is not None:
        f = f.truncated(D) if f.truncation is None or f.truncation > D else f
    return f.geom_inverse_factor(xw, color)
