"""
Sparse exact-integer polynomials in one variable (``UniPoly``) and in the
pair ``(w, z)`` (``BiPoly``).

Coefficients are Python ints held to the signed 128-bit range; anything
outside raises :class:`CoefficientOverflow` instead of wrapping.  Values are
immutable and normalized: zero coefficients are never stored.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from types import MappingProxyType
from typing import Union

from apps.pdgp.core.errors import BadParameter, CoefficientOverflow

logger: logging.Logger = logging.getLogger(__name__)

COEFF_BITS: int = 127
_LIMIT: int = 1 << COEFF_BITS


def check_coefficient(value: int) -> int:
    """Return *value* unchanged, or raise if it leaves the 128-bit signed range."""
    if not -_LIMIT <= value < _LIMIT:
        raise CoefficientOverflow(value)
    return value


def _render_coeff(sign_first: bool, coeff: int, monomial: str) -> str:
    body = str(abs(coeff)) if not monomial else (
        monomial if abs(coeff) == 1 else f"{abs(coeff)}*{monomial}"
    )
    if sign_first:
        return f"-{body}" if coeff < 0 else body
    return f"- {body}" if coeff < 0 else f"+ {body}"


def _power(var: str, exp: int) -> str:
    if exp == 0:
        return ""
    return var if exp == 1 else f"{var}^{exp}"


# ---------------------------------------------------------------------------
# Univariate
# ---------------------------------------------------------------------------
class UniPoly:
    """Polynomial in a single variable (``z`` unless stated otherwise)."""

    __slots__ = ("_terms", "_var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "z") -> None:
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp, coeff = int(exp), int(coeff)
            if exp < 0:
                raise BadParameter(f"negative exponent {exp}")
            acc[exp] = acc.get(exp, 0) + coeff
        self._terms: Mapping[int, int] = MappingProxyType(
            {e: check_coefficient(c) for e, c in sorted(acc.items()) if c}
        )
        self._var = var

    # --- constructors ---
    @classmethod
    def constant(cls, value: int, var: str = "z") -> UniPoly:
        return cls({0: value}, var)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "z") -> UniPoly:
        return cls({exp: coeff}, var)

    @classmethod
    def from_counts(cls, counts: Iterable[int], var: str = "z") -> UniPoly:
        """Dense coefficient list (index = exponent) to a sparse polynomial."""
        return cls(((e, int(c)) for e, c in enumerate(counts) if c), var)

    # --- accessors ---
    @property
    def terms(self) -> Mapping[int, int]:
        return self._terms

    @property
    def var(self) -> str:
        return self._var

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def degree(self) -> int:
        """Highest exponent; ``-1`` for the zero polynomial."""
        return max(self._terms, default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    # --- ring operations ---
    def _merge_var(self, other: UniPoly) -> str:
        if self._var == other._var:
            return self._var
        if other.is_constant():
            return self._var
        if self.is_constant():
            return other._var
        raise BadParameter(f"cannot combine polynomials in {self._var} and {other._var}")

    def __add__(self, other: UniPoly) -> UniPoly:
        var = self._merge_var(other)
        return UniPoly(list(self._terms.items()) + list(other._terms.items()), var)

    def __neg__(self) -> UniPoly:
        return UniPoly({e: -c for e, c in self._terms.items()}, self._var)

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other: UniPoly | int) -> UniPoly:
        if isinstance(other, int):
            return self.scale(other)
        var = self._merge_var(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = check_coefficient(acc.get(e1 + e2, 0) + c1 * c2)
        return UniPoly(acc, var)

    __rmul__ = __mul__

    def scale(self, factor: int) -> UniPoly:
        return UniPoly({e: c * factor for e, c in self._terms.items()}, self._var)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self._terms != other._terms:
            return False
        return self._var == other._var or self.is_constant()

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r}, var={self._var!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = [
            _render_coeff(i == 0, c, _power(self._var, e))
            for i, (e, c) in enumerate(self._terms.items())
        ]
        return " ".join(parts)


# ---------------------------------------------------------------------------
# Bivariate
# ---------------------------------------------------------------------------
class BiPoly:
    """Polynomial in ``(w, z)``; keys are ``(w_exp, z_exp)``."""

    __slots__ = ("_terms",)

    VARS: tuple[str, str] = ("w", "z")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()) -> None:
        acc: dict[tuple[int, int], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (we, ze), coeff in items:
            key = (int(we), int(ze))
            if key[0] < 0 or key[1] < 0:
                raise BadParameter(f"negative exponent {key}")
            acc[key] = acc.get(key, 0) + int(coeff)
        self._terms: Mapping[tuple[int, int], int] = MappingProxyType(
            {k: check_coefficient(c) for k, c in sorted(acc.items()) if c}
        )

    @classmethod
    def constant(cls, value: int) -> BiPoly:
        return cls({(0, 0): value})

    @classmethod
    def from_counts(cls, counts: Iterable[Iterable[int]]) -> BiPoly:
        """Dense 2-D table ``counts[w_exp][z_exp]`` to a sparse polynomial."""
        return cls(
            ((we, ze), int(c))
            for we, row in enumerate(counts)
            for ze, c in enumerate(row)
            if c
        )

    @property
    def terms(self) -> Mapping[tuple[int, int], int]:
        return self._terms

    def coefficient(self, w_exp: int, z_exp: int) -> int:
        return self._terms.get((w_exp, z_exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(key == (0, 0) for key in self._terms)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self._terms.items())

    def __add__(self, other: BiPoly) -> BiPoly:
        return BiPoly(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def __mul__(self, other: BiPoly | int) -> BiPoly:
        if isinstance(other, int):
            return self.scale(other)
        acc: dict[tuple[int, int], int] = {}
        for (w1, z1), c1 in self._terms.items():
            for (w2, z2), c2 in other._terms.items():
                key = (w1 + w2, z1 + z2)
                acc[key] = check_coefficient(acc.get(key, 0) + c1 * c2)
        return BiPoly(acc)

    __rmul__ = __mul__

    def scale(self, factor: int) -> BiPoly:
        return BiPoly({k: c * factor for k, c in self._terms.items()})

    def z_slice(self, z_exp: int) -> UniPoly:
        """Coefficient of ``z^z_exp`` as a polynomial in ``w``."""
        return UniPoly({we: c for (we, ze), c in self._terms.items() if ze == z_exp}, var="w")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, ((we, ze), c) in enumerate(self._terms.items()):
            monomial = "*".join(p for p in (_power("w", we), _power("z", ze)) if p)
            parts.append(_render_coeff(i == 0, c, monomial))
        return " ".join(parts)


Poly = Union[UniPoly, BiPoly]


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------
def add(p: Poly, q: Poly) -> Poly:
    return p + q  # type: ignore[operator]


def mul(p: Poly, q: Poly) -> Poly:
    return p * q  # type: ignore[operator]


def scale(p: Poly, factor: int) -> Poly:
    return p.scale(factor)


def negate(p: Poly) -> Poly:
    return -p


def one_like(p: Poly) -> Poly:
    """Multiplicative unit of the same polynomial kind as *p*."""
    if isinstance(p, BiPoly):
        return BiPoly.constant(1)
    return UniPoly.constant(1, p.var)


def zero_like(p: Poly) -> Poly:
    if isinstance(p, BiPoly):
        return BiPoly()
    return UniPoly(var=p.var)


def eval_w_at_one(p: BiPoly) -> UniPoly:
    """Substitute ``w = 1``, summing coefficients per ``z`` exponent."""
    acc: dict[int, int] = {}
    for (_we, ze), c in p:
        acc[ze] = check_coefficient(acc.get(ze, 0) + c)
    return UniPoly(acc, var="z")


def coefficient_sum(p: Poly) -> int:
    """Sum of all coefficients, i.e. the value at ``1``."""
    return check_coefficient(sum(c for _k, c in p))
