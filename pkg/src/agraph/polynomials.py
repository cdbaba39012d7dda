"""Sparse multivariate polynomials over the rationals, with the group substitutions.

Coefficients are ``fractions.Fraction`` throughout; nothing here ever rounds.
The two substitutions of interest are the unipotent one-parameter action

    x_i  |->  x_i + a*x_{i+1} + (a^2/2!)*x_{i+2} + ... + (a^(n-i)/(n-i)!)*x_n

and the diagonal torus scaling x_i |-> s_i * x_i.  The unipotent action is
expanded symbolically in the parameter a, so fixedness questions reduce to
exact membership tests on the coefficient polynomials.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

from .errors import InvalidParameterError, LengthMismatchError
from .monomials import Monomial, mono_mul, mono_str


class Polynomial:
    """Immutable sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Monomial, Fraction] | None = None):
        if n < 1:
            raise InvalidParameterError("variable count must be >= 1")
        self.n = n
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != n:
                raise LengthMismatchError(f"term {m} has {len(m)} exponents, expected {n}")
            if any(e < 0 for e in m):
                raise InvalidParameterError(f"negative exponent in {m}")
            c = Fraction(c)
            if c != 0:
                clean[m] = clean.get(m, Fraction(0)) + c
                if clean[m] == 0:
                    del clean[m]
        self._terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "Polynomial":
        return Polynomial(n)

    @staticmethod
    def constant(n: int, c) -> "Polynomial":
        return Polynomial(n, {(0,) * n: Fraction(c)})

    @staticmethod
    def monomial(n: int, exps: Monomial, coeff=1) -> "Polynomial":
        return Polynomial(n, {tuple(exps): Fraction(coeff)})

    @staticmethod
    def variable(n: int, i: int) -> "Polynomial":
        """x_i with i 1-based."""
        if not 1 <= i <= n:
            raise InvalidParameterError(f"variable index {i} out of range 1..{n}")
        return Polynomial.monomial(n, tuple(1 if k == i - 1 else 0 for k in range(n)))

    # -- basic queries -------------------------------------------------------

    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise LengthMismatchError("polynomials over different variable counts")
            return other
        return Polynomial.constant(self.n, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Polynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return -self + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial.zero(self.n)
            return Polynomial(self.n, {m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise InvalidParameterError("negative power of a polynomial")
        out = Polynomial.constant(self.n, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def mul_monomial(self, exps: Monomial, coeff=1) -> "Polynomial":
        c = Fraction(coeff)
        return Polynomial(
            self.n, {mono_mul(m, tuple(exps)): v * c for m, v in self._terms.items()}
        )

    # -- rendering / serialization -------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms sorted lex-descending; the canonical order for output."""
        return sorted(self._terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            if sum(m) == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono_str(m))
            elif c == -1:
                parts.append("-" + mono_str(m))
            else:
                parts.append(f"{c}*{mono_str(m)}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {self!s})"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"m": list(m), "c": str(c)} for m, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_dict(data: dict) -> "Polynomial":
        return Polynomial(
            int(data["n"]),
            {tuple(t["m"]): Fraction(t["c"]) for t in data["terms"]},
        )

    @staticmethod
    def from_json(text: str) -> "Polynomial":
        return Polynomial.from_dict(json.loads(text))


# -- group substitutions ------------------------------------------------------


def _variable_images(n: int) -> list[list[Polynomial]]:
    """images[i-1][k] is the coefficient of a^k in the image of x_i."""
    images = []
    for i in range(1, n + 1):
        row = [
            Polynomial.monomial(n, tuple(1 if t == i - 1 + k else 0 for t in range(n)),
                                Fraction(1, factorial(k)))
            for k in range(n - i + 1)
        ]
        images.append(row)
    return images


def _graded_mul(A: list[Polynomial], B: list[Polynomial], n: int) -> list[Polynomial]:
    out = [Polynomial.zero(n) for _ in range(len(A) + len(B) - 1)]
    for i, p in enumerate(A):
        if p.is_zero():
            continue
        for j, q in enumerate(B):
            if q.is_zero():
                continue
            out[i + j] = out[i + j] + p * q
    return out


def ga_coefficients(p: Polynomial) -> list[Polynomial]:
    """Expansion of the unipotent substitution applied to p, in powers of a.

    Entry k is the exact coefficient of a^k; entry 0 equals p.  The list is
    finite and trimmed of trailing zeros (but always has at least one entry).
    """
    n = p.n
    images = _variable_images(n)
    total = [Polynomial.zero(n)]
    for m, c in p.sorted_terms():
        term = [Polynomial.constant(n, c)]
        for i, e in enumerate(m):
            for _ in range(e):
                term = _graded_mul(term, images[i], n)
        if len(term) > len(total):
            total.extend(Polynomial.zero(n) for _ in range(len(term) - len(total)))
        for k, q in enumerate(term):
            total[k] = total[k] + q
    while len(total) > 1 and total[-1].is_zero():
        total.pop()
    return total


def ga_apply(p: Polynomial, a) -> Polynomial:
    """Apply the unipotent substitution with the parameter specialized to a."""
    a = Fraction(a)
    out = Polynomial.zero(p.n)
    power = Fraction(1)
    for k, q in enumerate(ga_coefficients(p)):
        if k:
            power *= a
        out = out + q * power
    return out


def torus_apply(p: Polynomial, scales: Sequence) -> Polynomial:
    """Scale each variable: x_i |-> s_i * x_i, all s_i nonzero rationals."""
    s = [Fraction(v) for v in scales]
    if len(s) != p.n:
        raise LengthMismatchError(f"expected {p.n} scale factors, got {len(s)}")
    if any(v == 0 for v in s):
        raise InvalidParameterError("torus scale factors must be nonzero")
    out: dict[Monomial, Fraction] = {}
    for m, c in p._terms.items():
        f = c
        for e, v in zip(m, s):
            f *= v ** e
        out[m] = f
    return Polynomial(p.n, out)


def compatible_scales(n: int, c: int, p: int, t) -> tuple[Fraction, ...]:
    """Diagonal weights (t^c, t^(c-p), ..., t^(c-(n-1)p)) of an arithmetic 1-PS."""
    t = Fraction(t)
    if t == 0:
        raise InvalidParameterError("torus parameter must be nonzero")
    return tuple(t ** (c - i * p) for i in range(n))
