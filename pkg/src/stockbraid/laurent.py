"""Sparse Laurent polynomials with exact integer coefficients.

A polynomial is a map from integer exponents to nonzero integer
coefficients.  The variable is formal: the same type carries bracket
polynomials (variable ``A``) and Jones polynomials (variable ``t^{1/4}``,
where a stored exponent q stands for t^{q/4}).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class LaurentPoly:
    """An immutable Laurent polynomial over the integers.

    Zero coefficients are never stored; two polynomials are equal iff
    their term sets are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            c = acc.get(exp, 0) + coeff
            if c:
                acc[exp] = c
            else:
                acc.pop(exp, None)
        self._terms = acc

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient} if coefficient else {})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        merged = dict(self._terms)
        for exp, coeff in other._terms.items():
            c = merged.get(exp, 0) + coeff
            if c:
                merged[exp] = c
            else:
                del merged[exp]
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = merged
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            out = LaurentPoly.__new__(LaurentPoly)
            out._terms = {e: c * other for e, c in self._terms.items()} if other else {}
            return out
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                c = acc.get(e, 0) + c1 * c2
                if c:
                    acc[e] = c
                else:
                    del acc[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are defined only for monomials; use shifted()")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        """Multiply by the monomial coefficient * x^exponent (exponent may be negative)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {e + exponent: c * coefficient for e, c in self._terms.items()}
        return out

    def mirrored(self) -> "LaurentPoly":
        """Substitute x -> x^{-1} (negate every exponent)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {-e: c for e, c in self._terms.items()}
        return out

    def evaluate(self, x: complex) -> complex:
        """Value of the polynomial at a nonzero complex point."""
        return sum((c * x ** e for e, c in self._terms.items()), complex(0))

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._terms)

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "LaurentPoly(0)"
        parts = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                parts.append(f"{c}")
            else:
                parts.append(f"{c}*x^{e}" if c != 1 else f"x^{e}")
        return "LaurentPoly(" + " + ".join(parts).replace("+ -", "- ") + ")"


def neg_a_power(k: int) -> LaurentPoly:
    """The signed monomial (-x)^k for any integer k, as a Laurent polynomial."""
    return LaurentPoly.monomial(k, -1 if k % 2 else 1)


def poly_to_json(poly: LaurentPoly, variable: str, convention: str | None = None) -> dict:
    """Serialize to the interchange form: sorted [exponent, coefficient] pairs plus tags."""
    doc: dict = {"variable": variable}
    if convention is not None:
        doc["convention"] = convention
    doc["terms"] = [[e, c] for e, c in poly.items()]
    return doc


def poly_from_json(doc: dict) -> LaurentPoly:
    return LaurentPoly((int(e), int(c)) for e, c in doc["terms"])
