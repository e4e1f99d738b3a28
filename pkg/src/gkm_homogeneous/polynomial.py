"""Sparse multivariate polynomials with exact rational coefficients.

Variable ``x_i`` is the linear form ``alpha_i`` on t, so a root with
coefficients ``(c_1, ..., c_n)`` is the linear polynomial ``sum c_i x_i``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Exponents = tuple[int, ...]


def _term_key(exps: Exponents):
    # graded lexicographic, highest first
    return (-sum(exps), tuple(-e for e in exps))


class Polynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponents, object] | None = None):
        self.nvars = nvars
        clean: dict[Exponents, Fraction] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[tuple(exps)] = clean.get(tuple(exps), 0) + c
        self.terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> Polynomial:
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> Polynomial:
        """The coordinate ``x_{i+1}`` (0-based ``i``)."""
        return cls(nvars, {tuple(int(j == i) for j in range(nvars)): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> Polynomial:
        n = len(coeffs)
        return cls(n, {tuple(int(j == i) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> Polynomial:
        return cls(len(exps), {tuple(exps): coeff})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: _term_key(kv[0]))

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return Polynomial(self.nvars, {k: v * other for k, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Rational)):
            return NotImplemented
        return self * (Fraction(1) / scalar)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- substitution ----------------------------------------------------------

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Replace ``x_i`` by ``images[i]`` (all in a common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        m = images[0].nvars if images else 0
        powers: list[list[Polynomial]] = [[Polynomial.one(m)] for _ in images]
        out = Polynomial.zero(m)
        for exps, c in self.terms.items():
            term = Polynomial.constant(c, m)
            for i, e in enumerate(exps):
                if e:
                    p = powers[i]
                    while len(p) <= e:
                        p.append(p[-1] * images[i])
                    term = term * p[e]
            out = out + term
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for exps, c in self.terms.items():
            t = c
            for x, e in zip(point, exps):
                if e:
                    t *= Fraction(x) ** e
            total += t
        return total

    # -- division ----------------------------------------------------------

    def divide_linear(self, coeffs: Sequence) -> Polynomial | None:
        """Exact quotient by the linear form ``sum coeffs[i] x_i``, or None.

        Eliminates the last variable with a nonzero coefficient: repeatedly
        cancels the term of highest degree in that variable.  What remains is
        free of the variable and must vanish for the division to be exact.
        """
        lam = Polynomial.linear(coeffs)
        if lam.nvars != self.nvars:
            raise ValueError("linear form lives in a different ring")
        k = max((i for i, c in enumerate(coeffs) if c), default=None)
        if k is None:
            raise ValueError("cannot divide by the zero linear form")
        ck = Fraction(coeffs[k])
        rest = {tuple(int(j == i) for j in range(self.nvars)): Fraction(c)
                for i, c in enumerate(coeffs) if c and i != k}
        rem = dict(self.terms)
        quot: dict[Exponents, Fraction] = {}
        while True:
            top = [e for e in rem if e[k] > 0]
            if not top:
                break
            exps = max(top, key=lambda e: (e[k], e))
            c = rem.pop(exps) / ck
            q = exps[:k] + (exps[k] - 1,) + exps[k + 1:]
            quot[q] = quot.get(q, 0) + c
            for r_exps, r_c in rest.items():
                t = tuple(a + b for a, b in zip(q, r_exps))
                v = rem.get(t, 0) - c * r_c
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        if any(rem.values()):
            return None
        return Polynomial(self.nvars, quot)

    # -- formatting ----------------------------------------------------------

    def term_strings(self) -> list[str]:
        out = []
        for exps, c in self.sorted_terms():
            mono = "*".join(f"x{i + 1}^{e}" for i, e in enumerate(exps) if e)
            out.append(f"{c} * {mono}" if mono else str(c))
        return out

    def __str__(self):
        return " + ".join(self.term_strings()) if self.terms else "0"

    def __repr__(self):
        return f"Polynomial({self})"


def linear_form(root: Iterable) -> Polynomial:
    return Polynomial.linear(list(root))
