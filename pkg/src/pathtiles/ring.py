"""Exact scalar arithmetic: rationals and sparse polynomials in q and t.

Rationals are plain ``fractions.Fraction`` (always in lowest terms, positive
denominator).  Polynomials are stored sparsely as a map from exponent pairs
``(e_q, e_t)`` to nonzero rational coefficients; exponents must be
nonnegative.  Everything is immutable after construction, so values can be
shared freely.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

# Scalar = int | Fraction | QtPolynomial; kept loose on purpose so plain
# Python ints flow through matrix/graph code unchanged.


class QtPolynomial:
    """A polynomial in q and t with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (eq, et), coeff in dict(terms).items():
                if eq < 0 or et < 0:
                    raise ValueError(f"negative exponent in term q^{eq}*t^{et}")
                c = Fraction(coeff)
                if c:
                    clean[(int(eq), int(et))] = c
        self._terms = clean

    @classmethod
    def from_scalar(cls, value) -> "QtPolynomial":
        if isinstance(value, QtPolynomial):
            return value
        return cls({(0, 0): Fraction(value)})

    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def constant_value(self):
        """The value as a Fraction, if the polynomial is constant."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) == {(0, 0)}:
            return self._terms[(0, 0)]
        raise ValueError(f"not a constant polynomial: {self}")

    def coefficient(self, eq: int, et: int) -> Fraction:
        return self._terms.get((eq, et), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (aq, at), ac in self._terms.items():
            for (bq, bt), bc in other._terms.items():
                key = (aq + bq, at + bt)
                s = out.get(key, 0) + ac * bc
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = _raw({(0, 0): Fraction(1)})
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def substitute(self, q_image, t_image) -> "QtPolynomial":
        """Simultaneously substitute for q and t and expand exactly."""
        qi = QtPolynomial.from_scalar(q_image)
        ti = QtPolynomial.from_scalar(t_image)
        total = QtPolynomial()
        for (eq, et), coeff in sorted(self._terms.items()):
            total = total + coeff * (qi ** eq) * (ti ** et)
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (eq, et), coeff in sorted(self._terms.items()):
            if not pieces:
                pieces.append(_format_monomial(coeff, eq, et))
            else:
                pieces.append(" + " if coeff > 0 else " - ")
                pieces.append(_format_monomial(abs(coeff), eq, et))
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"QtPolynomial({self})"


def _raw(terms: dict) -> QtPolynomial:
    p = QtPolynomial()
    p._terms = terms
    return p


def _coerce(value):
    if isinstance(value, QtPolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return QtPolynomial.from_scalar(value)
    return NotImplemented


def _format_monomial(coeff: Fraction, eq: int, et: int) -> str:
    vars_part = []
    if eq:
        vars_part.append("q" if eq == 1 else f"q^{eq}")
    if et:
        vars_part.append("t" if et == 1 else f"t^{et}")
    if not vars_part:
        return str(coeff)
    if coeff == 1:
        return "*".join(vars_part)
    if coeff == -1:
        return "-" + "*".join(vars_part)
    return str(coeff) + "*" + "*".join(vars_part)


ZERO = QtPolynomial()
ONE = QtPolynomial({(0, 0): 1})
q = QtPolynomial({(1, 0): 1})
t = QtPolynomial({(0, 1): 1})


def qint(n: int) -> QtPolynomial:
    """q-analogue of n: 1 + q + ... + q^(n-1), with qint(0) = 0."""
    if n < 0:
        raise ValueError("qint requires n >= 0")
    return QtPolynomial({(i, 0): 1 for i in range(n)})


_QBINOMIAL_CACHE: dict[tuple[int, int], QtPolynomial] = {}


def qbinomial(n: int, k: int) -> QtPolynomial:
    """Gaussian binomial coefficient; 0 unless 0 <= k <= n.

    Computed division-free through the recurrence
    C(n, k) = C(n-1, k-1) + q^k * C(n-1, k).
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    key = (n, k)
    cached = _QBINOMIAL_CACHE.get(key)
    if cached is None:
        cached = qbinomial(n - 1, k - 1) + QtPolynomial({(k, 0): 1}) * qbinomial(n - 1, k)
        _QBINOMIAL_CACHE[key] = cached
    return cached


def substitute(p: QtPolynomial, q_image, t_image) -> QtPolynomial:
    return QtPolynomial.from_scalar(p).substitute(q_image, t_image)


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_MONOMIAL_RE = re.compile(r"^(?:(?P<coeff>\d+(?:/\d+)?)\*?)?(?P<vars>(?:[qt](?:\^\d+)?(?:\*)?)*)$")


def parse_polynomial(text: str) -> QtPolynomial:
    """Parse the canonical text form; inverse of str()."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return ZERO
    # Split into signed terms at top level (no parentheses in this form).
    chunks = re.split(r"\s*([+-])\s*", s)
    if chunks[0] == "":
        chunks = chunks[1:]
    else:
        chunks = ["+"] + chunks
    if len(chunks) % 2 != 0:
        raise ValueError(f"cannot parse polynomial: {text!r}")
    total: dict[tuple[int, int], Fraction] = {}
    for sign, term in zip(chunks[0::2], chunks[1::2]):
        coeff, eq, et = _parse_term(term)
        if sign == "-":
            coeff = -coeff
        key = (eq, et)
        c = total.get(key, Fraction(0)) + coeff
        if c:
            total[key] = c
        else:
            total.pop(key, None)
    return _raw(total)


def _parse_term(term: str) -> tuple[Fraction, int, int]:
    m = _MONOMIAL_RE.match(term.replace(" ", ""))
    if not m:
        raise ValueError(f"cannot parse polynomial term: {term!r}")
    coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
    eq = et = 0
    for factor in filter(None, m.group("vars").split("*")):
        name, _, exp = factor.partition("^")
        power = int(exp) if exp else 1
        if name == "q":
            eq += power
        else:
            et += power
    return coeff, eq, et


def parse_scalar(text: str):
    """Parse a canonical scalar string: a rational or a polynomial in q, t."""
    s = text.strip()
    if _RATIONAL_RE.match(s):
        value = Fraction(s)
        return int(value) if value.denominator == 1 else value
    return parse_polynomial(s)


def scalar_str(value) -> str:
    """Canonical text form of any ring element."""
    if isinstance(value, QtPolynomial):
        return str(value)
    return str(Fraction(value)) if not isinstance(value, int) else str(value)
