"""Exact arithmetic: rationals and integer Laurent polynomials in q."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DivisionFailure

Rational = Fraction


def rational(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(x: Fraction) -> str:
    x = rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class LaurentPoly:
    """Integer Laurent polynomial in q; immutable, zero terms never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        acc: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in items:
                if not isinstance(exp, int) or not isinstance(coeff, int):
                    raise TypeError("exponents and coefficients must be integers")
                acc[exp] = acc.get(exp, 0) + coeff
        self._terms = {k: v for k, v in sorted(acc.items()) if v}
        self._hash = None

    # constructors
    @classmethod
    def monomial(cls, exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = dict(sorted((k, v) for k, v in terms.items() if v))
        obj._hash = None
        return obj

    # inspection
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(iter(self._terms))

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(reversed(self._terms))

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._terms)

    def at(self, q) -> Fraction:
        """Evaluate at a nonzero rational q."""
        q = rational(q)
        return sum((Fraction(c) * q**k for k, c in self._terms.items()), Fraction(0))

    def at_one(self) -> int:
        return sum(self._terms.values())

    # arithmetic
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly._raw({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) == 1:
                (k, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly._raw({k * n: c ** (-n)})
            raise DivisionFailure("only unit monomials have negative powers")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; raises DivisionFailure otherwise."""
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionFailure("division by zero polynomial")
        if self.is_zero():
            return ZERO
        rem = dict(self._terms)
        top = other.max_exp()
        lead = other._terms[top]
        low = other.min_exp()
        quotient: dict[int, int] = {}
        floor = self.min_exp() - low
        while rem:
            e = max(rem)
            c = rem[e]
            if c % lead:
                raise DivisionFailure(f"{self} is not divisible by {other}")
            k = e - top
            if k < floor:
                raise DivisionFailure(f"{self} is not divisible by {other}")
            qc = c // lead
            quotient[k] = qc
            for oe, oc in other._terms.items():
                r = rem.get(oe + k, 0) - qc * oc
                if r:
                    rem[oe + k] = r
                else:
                    rem.pop(oe + k, None)
        return LaurentPoly._raw(quotient)

    # comparisons
    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = LaurentPoly._raw({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # involutions and helpers
    def bar(self) -> "LaurentPoly":
        return LaurentPoly._raw({-k: v for k, v in self._terms.items()})

    def positive_part(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: v for k, v in self._terms.items() if k > 0})

    def negative_part(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: v for k, v in self._terms.items() if k < 0})

    # serialization
    def to_json(self) -> dict[str, int]:
        return {str(k): v for k, v in self._terms.items()}

    @classmethod
    def from_json(cls, obj) -> "LaurentPoly":
        if isinstance(obj, int) and not isinstance(obj, bool):
            return cls.const(obj)
        if not isinstance(obj, Mapping):
            raise ValueError("Laurent polynomial must be a JSON object")
        terms = {}
        for k, v in obj.items():
            try:
                exp = int(k)
            except (TypeError, ValueError):
                raise ValueError(f"bad exponent key {k!r}") from None
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"coefficient for exponent {k} must be an integer")
            terms[exp] = v
        return cls(terms)

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self._terms.items():
            if k == 0:
                mono = str(abs(c))
            else:
                qk = "q" if k == 1 else f"q^{k}"
                mono = qk if abs(c) == 1 else f"{abs(c)}{qk}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})


def bar(f: LaurentPoly) -> LaurentPoly:
    return f.bar()


def q_int(n: int) -> LaurentPoly:
    """Balanced quantum integer [n] = (q^n - q^-n)/(q - q^-1)."""
    if n == 0:
        return ZERO
    if n < 0:
        return -q_int(-n)
    return LaurentPoly._raw({n - 1 - 2 * k: 1 for k in range(n)})


def q_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    out = ONE
    for m in range(2, n + 1):
        out = out * q_int(m)
    return out


def q_binomial(n: int, k: int) -> LaurentPoly:
    if n < 0 or k < 0:
        raise ValueError("q-binomial needs nonnegative arguments")
    if k > n:
        return ZERO
    return q_factorial(n).divide_exact(q_factorial(k) * q_factorial(n - k))


def bar_symmetrize_head(f: LaurentPoly) -> LaurentPoly:
    """The bar-invariant g with f - g supported in negative degrees."""
    pos = f.positive_part()
    return pos + pos.bar() + f.coeff(0)
