"""Exact Laurent polynomials in named variables over the rationals.

Coefficients of one-parameter subgroup factors live here: finitely many
monomials ``y1^2 * t^-1`` with ``Fraction`` coefficients.  All arithmetic is
exact; nothing in this package ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


@dataclass(frozen=True)
class Monomial:
    """Product of named variables with nonzero integer exponents."""

    powers: tuple[tuple[str, int], ...]

    @staticmethod
    def from_mapping(exponents: Mapping[str, int]) -> "Monomial":
        return Monomial(tuple(sorted((v, e) for v, e in exponents.items() if e != 0)))

    @staticmethod
    def of(**exponents: int) -> "Monomial":
        return Monomial.from_mapping(exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self.powers)
        for var, exp in other.powers:
            merged[var] = merged.get(var, 0) + exp
        return Monomial.from_mapping(merged)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple((v, e * k) for v, e in self.powers)) if k else ONE_MONOMIAL

    def exponent(self, var: str) -> int:
        return dict(self.powers).get(var, 0)

    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.powers)

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        value = Fraction(1)
        for var, exp in self.powers:
            base = Fraction(assignment[var])
            if exp < 0 and base == 0:
                raise ZeroDivisionError(f"variable {var} is 0 with exponent {exp}")
            value *= base ** exp
        return value

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        parts = [v if e == 1 else f"{v}^{e}" for v, e in self.powers]
        return "*".join(parts)


ONE_MONOMIAL = Monomial(())


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class LaurentPoly:
    """Immutable Laurent polynomial: a finite Monomial -> Fraction map."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = _coerce(coeff)
                if coeff:
                    clean[mono] = coeff
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def constant(value) -> "LaurentPoly":
        return LaurentPoly({ONE_MONOMIAL: _coerce(value)})

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly.constant(1)

    @staticmethod
    def variable(name: str, exp: int = 1, coeff=1) -> "LaurentPoly":
        return LaurentPoly({Monomial.of(**{name: exp}): _coerce(coeff)})

    @staticmethod
    def monomial(mono: Monomial, coeff=1) -> "LaurentPoly":
        return LaurentPoly({mono: _coerce(coeff)})

    # -- inspection --------------------------------------------------------

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in a deterministic order (sorted by monomial)."""
        return sorted(self._terms.items(), key=lambda item: item[0].powers)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == ONE_MONOMIAL for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    def single_term(self) -> tuple[Fraction, Monomial]:
        if len(self._terms) != 1:
            raise ValueError(f"{self} is not a single term")
        ((mono, coeff),) = self._terms.items()
        return coeff, mono

    def exponents_of(self, var: str) -> set[int]:
        return {mono.exponent(var) for mono in self._terms} if self._terms else set()

    def variables(self) -> set[str]:
        out: set[str] = set()
        for mono in self._terms:
            out.update(mono.variables())
        return out

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        result = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = result.get(mono, Fraction(0)) + coeff
            if total:
                result[mono] = total
            else:
                result.pop(mono, None)
        return LaurentPoly(result)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            scalar = _coerce(other)
            return LaurentPoly({m: c * scalar for m, c in self._terms.items()})
        result: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1 * m2
                total = result.get(mono, Fraction(0)) + c1 * c2
                if total:
                    result[mono] = total
                else:
                    result.pop(mono, None)
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers of general polynomials are not defined")
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            value = hash(tuple(sorted(((m.powers, c) for m, c in self._terms.items()))))
            object.__setattr__(self, "_hash", value)
        return self._hash

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- evaluation and slicing --------------------------------------------

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            total += coeff * mono.evaluate(assignment)
        return total

    def terms_with_exponent(self, var: str, exp: int) -> "LaurentPoly":
        """Sub-polynomial made of the terms whose exponent of ``var`` is ``exp``."""
        return LaurentPoly(
            {m: c for m, c in self._terms.items() if m.exponent(var) == exp}
        )

    def max_exponent(self, var: str) -> int:
        if not self._terms:
            return 0
        return max(m.exponent(var) for m in self._terms)

    # -- serialization -----------------------------------------------------

    def to_obj(self) -> list[dict]:
        out = []
        for mono, coeff in self.terms():
            out.append(
                {
                    "mono": {v: e for v, e in mono.powers},
                    "num": coeff.numerator,
                    "den": coeff.denominator,
                }
            )
        return out

    @staticmethod
    def from_obj(obj: Iterable[dict]) -> "LaurentPoly":
        terms: dict[Monomial, Fraction] = {}
        for item in obj:
            mono = Monomial.from_mapping({str(k): int(v) for k, v in item["mono"].items()})
            coeff = Fraction(int(item["num"]), int(item.get("den", 1)))
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return LaurentPoly(terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.terms():
            if mono == ONE_MONOMIAL:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(str(mono))
            elif coeff == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"
