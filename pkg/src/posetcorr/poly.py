"""Sparse multivariate polynomials with integer coefficients.

A :class:`MultiPoly` is an immutable map from exponent tuples to nonzero
Python integers.  Terms are listed in graded-lexicographic order (total
degree first, then the exponent tuple), which fixes both the textual form
and the order in which dominance witnesses are searched.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from . import kernels

_DENSE_KEYSPACE = 1 << 23
_SMALL_PRODUCT = 256


class QPow(NamedTuple):
    """Substitution target ``q**exponent`` for :meth:`MultiPoly.substitute`."""

    exponent: int


def default_names(nvars: int, prefix: str = "q", start: int = 1) -> tuple[str, ...]:
    return tuple(f"{prefix}{i + start}" for i in range(nvars))


class MultiPoly:
    __slots__ = ("nvars", "_terms", "names", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = (), names: Sequence[str] | None = None):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], int] = {}
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if coeff:
                acc[exp] = acc.get(exp, 0) + int(coeff)
        self._terms = {e: c for e, c in acc.items() if c}
        if names is None:
            names = ("q",) if nvars == 1 else default_names(nvars)
        self.names = tuple(names)
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms, names):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj.names = names
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value: int, nvars: int = 0, names=None) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value}, names)

    @classmethod
    def variable(cls, index: int, nvars: int, names=None) -> "MultiPoly":
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1}, names)

    @classmethod
    def univariate(cls, coeffs: Sequence[int], name: str = "q") -> "MultiPoly":
        """``coeffs[d]`` is the coefficient of ``name**d``."""
        return cls(1, {(d,): c for d, c in enumerate(coeffs)}, (name,))

    def with_names(self, names: Sequence[str]) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, self._terms, tuple(names))

    # -- inspection -------------------------------------------------------

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def coefficient_list(self) -> list[int]:
        """Dense coefficients of a univariate polynomial, lowest degree first."""
        if self.nvars != 1:
            raise ValueError("coefficient_list needs a univariate polynomial")
        out = [0] * (self.degree() + 1)
        for (d,), c in self._terms.items():
            out[d] = c
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = MultiPoly.constant(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return MultiPoly.constant(other, self.nvars)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return MultiPoly._raw(self.nvars, acc, self.names)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()}, self.names)

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if not self._terms or not other._terms:
            return MultiPoly._raw(self.nvars, {}, self.names)
        if len(self._terms) * len(other._terms) <= _SMALL_PRODUCT or self.nvars == 0:
            return MultiPoly._raw(self.nvars, _mul_dict(self._terms, other._terms), self.names)
        return MultiPoly._raw(self.nvars, _mul_packed(self, other), self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = MultiPoly.constant(1, self.nvars, self.names)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, exp: Sequence[int]) -> "MultiPoly":
        """Multiply by the monomial with exponent ``exp``."""
        exp = tuple(exp)
        return MultiPoly._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()},
            self.names)

    def truncate(self, max_degree: int) -> "MultiPoly":
        return MultiPoly._raw(self.nvars,
                              {e: c for e, c in self._terms.items() if sum(e) <= max_degree},
                              self.names)

    # -- evaluation -------------------------------------------------------

    def evaluate(self, point: Sequence) -> int | Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        return sum(c * prod(p ** e for p, e in zip(point, exp)) for exp, c in self._terms.items())

    __call__ = evaluate

    def sum_coefficients(self) -> int:
        return sum(self._terms.values())

    def substitute(self, plan: Sequence, name: str = "q", univariate: bool | None = None) -> "MultiPoly":
        """Replace each variable by a constant integer or by ``QPow(c)``, i.e. ``q**c``.

        By default the result is univariate in ``q`` when the plan contains a
        ``QPow`` and a constant (zero-variable) polynomial otherwise; pass
        ``univariate`` to force the shape, e.g. for an empty plan.
        """
        if len(plan) != self.nvars:
            raise ValueError("plan must assign every variable")
        if univariate is None:
            univariate = any(isinstance(p, QPow) for p in plan)
        elif not univariate and any(isinstance(p, QPow) for p in plan):
            raise ValueError("a plan with powers of q has a univariate result")
        acc: dict[tuple[int, ...], int] = {}
        for exp, c in self._terms.items():
            deg = 0
            for p, e in zip(plan, exp):
                if isinstance(p, QPow):
                    deg += p.exponent * e
                else:
                    c *= p ** e
            if c:
                key = (deg,) if univariate else ()
                acc[key] = acc.get(key, 0) + c
        acc = {k: v for k, v in acc.items() if v}
        if univariate:
            return MultiPoly._raw(1, acc, (name,))
        return MultiPoly._raw(0, acc, ())

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.terms():
            factors = " ".join(f"{n}^{e}" for n, e in zip(self.names, exp) if e)
            parts.append(f"{c} * {factors}" if factors else str(c))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {str(self)!r})"

    @classmethod
    def parse(cls, text: str, names: Sequence[str]) -> "MultiPoly":
        """Inverse of ``str``: ``"c * q1^a1 q2^a2 + ..."`` over the given names."""
        index = {n: i for i, n in enumerate(names)}
        nvars = len(names)
        acc: dict[tuple[int, ...], int] = {}
        text = text.strip()
        if text == "0":
            return cls(nvars, {}, names)
        for term in text.split(" + "):
            coeff, _, rest = term.partition(" * ")
            exp = [0] * nvars
            for factor in rest.split():
                var, _, e = factor.partition("^")
                exp[index[var]] += int(e or 1)
            key = tuple(exp)
            acc[key] = acc.get(key, 0) + int(coeff)
        return cls(nvars, acc, names)


def _mul_dict(a: dict, b: dict) -> dict:
    acc: dict[tuple[int, ...], int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            acc[e] = acc.get(e, 0) + c1 * c2
    return {e: c for e, c in acc.items() if c}


def _mul_packed(f: MultiPoly, g: MultiPoly) -> dict:
    """Kronecker-pack exponents and multiply with the dense kernel when it fits."""
    if not f._terms or not g._terms or f.nvars == 0:
        return _mul_dict(f._terms, g._terms)
    ea = np.array(list(f._terms), dtype=np.int64)
    eb = np.array(list(g._terms), dtype=np.int64)
    ca = list(f._terms.values())
    cb = list(g._terms.values())
    radix = ea.max(axis=0) + eb.max(axis=0) + 1
    keyspace = prod(int(r) for r in radix)
    bound = max(abs(c) for c in ca) * max(abs(c) for c in cb) * min(len(ca), len(cb))
    if keyspace > _DENSE_KEYSPACE or bound >= 1 << 62:
        return _mul_dict(f._terms, g._terms)
    weights = np.ones(f.nvars, dtype=np.int64)
    for i in range(f.nvars - 2, -1, -1):
        weights[i] = weights[i + 1] * radix[i + 1]
    keys, coefs = kernels.poly_mul_dense(
        np.ascontiguousarray(ea @ weights), np.array(ca, dtype=np.int64),
        np.ascontiguousarray(eb @ weights), np.array(cb, dtype=np.int64), keyspace)
    digits = (keys[:, None] // weights[None, :]) % radix[None, :]
    return {tuple(row): int(c) for row, c in zip(digits.tolist(), coefs.tolist())}


@dataclass(frozen=True)
class Dominance:
    """Outcome of a coefficientwise comparison ``f >= g``.

    On failure ``witness`` is the lexicographically least exponent where
    ``f`` has the smaller coefficient.
    """

    holds: bool
    witness: tuple[int, ...] | None = None
    lhs_coeff: int | None = None
    rhs_coeff: int | None = None


def poly_geq_coeffwise(f: MultiPoly, g: MultiPoly) -> Dominance:
    if f.nvars != g.nvars:
        raise ValueError(f"arity mismatch: {f.nvars} vs {g.nvars}")
    bad = [e for e in set(f._terms) | set(g._terms) if f.coefficient(e) < g.coefficient(e)]
    if not bad:
        return Dominance(True)
    w = min(bad)
    return Dominance(False, w, f.coefficient(w), g.coefficient(w))


def poly_arith(op: str, f: MultiPoly, g: MultiPoly) -> MultiPoly:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def poly_substitute(f: MultiPoly, plan: Sequence, univariate: bool | None = None) -> MultiPoly:
    return f.substitute(plan, univariate=univariate)


def series_inverse_product(n: int, max_degree: int) -> list[int]:
    """Coefficients of ``1 / ((1-q)(1-q^2)...(1-q^n))`` up to ``q**max_degree``."""
    coeffs = [1] + [0] * max_degree
    for i in range(1, n + 1):
        # multiply by 1/(1 - q^i): running sum with stride i
        for d in range(i, max_degree + 1):
            coeffs[d] += coeffs[d - i]
    return coeffs
