"""Sparse Laurent-polynomial arithmetic in the similarity variable eta.

Every series stage, auxiliary multiplier and assembled solution in this
package is a finite combination of integer powers of eta, with at most a
second-order pole (C/eta and C/eta^2 tails; the deepest tail appears in
one auxiliary multiplier and always cancels before a stage is solved).
This module supplies the exact algebra those objects are built from:
addition, multiplication, differentiation, antidifferentiation,
evaluation and JSON round-tripping.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

__all__ = [
    "LaurentPoly",
    "PolynomialError",
    "EvalAtPole",
    "NonPolynomialAntiderivative",
    "PoleTooDeep",
    "MIN_EXPONENT",
]

# Auxiliary multipliers go at most to C/eta^2; anything deeper is a bug upstream.
MIN_EXPONENT = -2


class PolynomialError(ValueError):
    """Base class for Laurent-polynomial failures."""


class EvalAtPole(PolynomialError):
    """Evaluation at eta = 0 requested for a polynomial with a pole term."""


class NonPolynomialAntiderivative(PolynomialError):
    """Antiderivative of a 1/eta term is log(eta), which leaves the ring."""


class PoleTooDeep(PolynomialError):
    """An exponent below the supported minimum was produced or requested."""


TermsLike = Union[Mapping[int, float], Iterable[tuple[int, float]], None]


class LaurentPoly:
    """Immutable sparse polynomial with integer exponents >= -2.

    Terms are kept canonical: zero coefficients are dropped, so two equal
    polynomials compare equal coefficient-wise.

    >>> p = LaurentPoly({0: 1.0, 2: -1.0})      # 1 - eta^2
    >>> p.evaluate(0.5)
    0.75
    >>> p.differentiate().terms()
    ((1, -2.0),)
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsLike = None):
        acc: dict[int, float] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exponent, coefficient in items:
                exponent = int(exponent)
                if exponent < MIN_EXPONENT:
                    raise PoleTooDeep(
                        f"exponent {exponent} is below the supported minimum {MIN_EXPONENT}"
                    )
                coefficient = float(coefficient)
                if not math.isfinite(coefficient):
                    raise PolynomialError(f"non-finite coefficient for eta^{exponent}")
                acc[exponent] = acc.get(exponent, 0.0) + coefficient
        object.__setattr__(self, "_terms", {e: c for e, c in sorted(acc.items()) if c != 0.0})

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def constant(value: float) -> "LaurentPoly":
        return LaurentPoly({0: value})

    @staticmethod
    def monomial(exponent: int, coefficient: float = 1.0) -> "LaurentPoly":
        return LaurentPoly({exponent: coefficient})

    # -- inspection ---------------------------------------------------------

    def terms(self) -> tuple[tuple[int, float], ...]:
        """Canonical (exponent, coefficient) pairs in ascending exponent order."""
        return tuple(self._terms.items())

    def coefficient(self, exponent: int) -> float:
        return self._terms.get(int(exponent), 0.0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exponent(self) -> int:
        """Smallest exponent present; 0 for the zero polynomial."""
        return min(self._terms) if self._terms else 0

    @property
    def degree(self) -> int:
        """Largest exponent present; 0 for the zero polynomial."""
        return max(self._terms) if self._terms else 0

    def __iter__(self) -> Iterator[tuple[int, float]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        if self.is_zero:
            return "LaurentPoly(0)"
        bits = []
        for e, c in self._terms.items():
            if e == 0:
                bits.append(f"{c:g}")
            elif e == 1:
                bits.append(f"{c:g}*eta")
            else:
                bits.append(f"{c:g}*eta^{e}")
        return "LaurentPoly(" + " + ".join(bits) + ")"

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0.0) + c
        return LaurentPoly(acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", float, int]) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            acc: dict[int, float] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = e1 + e2
                    acc[e] = acc.get(e, 0.0) + c1 * c2
            return LaurentPoly(acc)
        if isinstance(other, (int, float)):
            return LaurentPoly({e: c * float(other) for e, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    # -- calculus -----------------------------------------------------------

    def differentiate(self, times: int = 1) -> "LaurentPoly":
        """Term-wise power rule; the derivative of a constant is zero."""
        if times < 0:
            raise ValueError("times must be >= 0")
        poly = self
        for _ in range(times):
            acc = {}
            for e, c in poly._terms.items():
                if e == 0:
                    continue
                if e - 1 < MIN_EXPONENT:
                    raise PoleTooDeep(
                        f"derivative of eta^{e} term needs exponent {e - 1}"
                    )
                acc[e - 1] = e * c
            poly = LaurentPoly(acc)
        return poly

    def antiderivative(self, times: int = 1) -> "LaurentPoly":
        """Term-wise antiderivative with zero integration constants."""
        if times < 0:
            raise ValueError("times must be >= 0")
        poly = self
        for _ in range(times):
            if poly._terms.get(-1, 0.0) != 0.0:
                raise NonPolynomialAntiderivative(
                    "antiderivative of a 1/eta term is logarithmic"
                )
            poly = LaurentPoly({e + 1: c / (e + 1) for e, c in poly._terms.items()})
        return poly

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, eta):
        """Evaluate at a point or an ndarray of points.

        Horner evaluation over the nonnegative exponents plus explicit
        C/eta and C/eta^2 contributions.  Evaluation at eta = 0 is
        rejected when a pole term is present.
        """
        pole1 = self._terms.get(-1, 0.0)
        pole2 = self._terms.get(-2, 0.0)
        arr = np.asarray(eta, dtype=float)
        if (pole1 != 0.0 or pole2 != 0.0) and np.any(arr == 0.0):
            raise EvalAtPole("polynomial has a pole term; eta = 0 is a pole")
        result = np.zeros_like(arr)
        if self._terms:
            top = self.degree
            if top >= 0:
                # Horner over a dense coefficient ladder, highest power first.
                coeffs = [self._terms.get(e, 0.0) for e in range(top, -1, -1)]
                for c in coeffs:
                    result = result * arr + c
        if pole1 != 0.0:
            result = result + pole1 / arr
        if pole2 != 0.0:
            result = result + pole2 / (arr * arr)
        if np.ndim(eta) == 0:
            return float(result)
        return result

    # -- serialization -------------------------------------------------------

    def to_pairs(self) -> list[list[float]]:
        """JSON-friendly [[exponent, coefficient], ...] in ascending order."""
        return [[e, c] for e, c in self._terms.items()]

    @staticmethod
    def from_pairs(pairs: Iterable[Iterable[float]]) -> "LaurentPoly":
        return LaurentPoly([(int(e), float(c)) for e, c in pairs])

    def to_json(self) -> str:
        return json.dumps({"terms": self.to_pairs()})

    @staticmethod
    def from_json(text: str) -> "LaurentPoly":
        data = json.loads(text)
        if not isinstance(data, dict) or "terms" not in data:
            raise PolynomialError("expected an object with a 'terms' field")
        return LaurentPoly.from_pairs(data["terms"])


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.constant(1.0)
