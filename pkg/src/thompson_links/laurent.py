"""Exact integer Laurent polynomials in a single variable ``A``."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPolynomial:
    """Immutable Laurent polynomial with integer coefficients.

    Stored as a sparse ``{exponent: coefficient}`` map with no zero
    coefficients.  Python integers give arbitrary precision for free.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree_span(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree span")
        keys = list(self._terms)
        return keys[0], keys[-1]

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __lt__(self, other: "LaurentPolynomial") -> bool:
        # arbitrary but total order, used only to sort multisets deterministically
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return tuple(sorted(self._terms.items(), reverse=True))

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other)
        raise TypeError(f"cannot combine LaurentPolynomial with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPolynomial({e * n: c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``A**k``."""
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> "LaurentPolynomial":
        """Substitute ``A -> A**-1``."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def divide_exact(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division; raises ``ValueError`` if ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        rem = dict(self._terms)
        olo, ohi = other.degree_span()
        floor = min(rem) - olo
        lead = other._terms[ohi]
        quot: dict[int, int] = {}
        while rem:
            hi = max(rem)
            shift = hi - ohi
            if shift < floor or rem[hi] % lead:
                raise ValueError("inexact division")
            q = rem[hi] // lead
            quot[shift] = q
            for e, oc in other._terms.items():
                k = e + shift
                rem[k] = rem.get(k, 0) - q * oc
                if rem[k] == 0:
                    del rem[k]
        return LaurentPolynomial(quot)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                coef = "" if mag == 1 else f"{mag}*"
                body = f"{coef}A" if e == 1 else f"{coef}A^{e}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_list(self) -> list[list[int]]:
        """Canonical signed monomial list, decreasing exponent order."""
        return [[e, c] for e, c in sorted(self._terms.items(), reverse=True)]

    @classmethod
    def from_list(cls, data: Iterable[Iterable[int]]) -> "LaurentPolynomial":
        return cls((int(e), int(c)) for e, c in data)


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)
A = LaurentPolynomial.monomial(1)
A_INV = LaurentPolynomial.monomial(-1)
#: loop value of the bracket, ``-A^2 - A^-2``
LOOP = LaurentPolynomial({2: -1, -2: -1})
