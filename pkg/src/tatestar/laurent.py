"""Sparse Laurent polynomials over Q(zeta_p) in invertible formal variables.

Variables are either torsion points (the formal symbols g_T for T != O) or
plain strings such as "x" and "y".  Exponents are arbitrary integers, and a
monomial is the finite product of powers of distinct variables, kept sorted
so that equal monomials are literally equal objects.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .cyclotomic import CycNumber
from .errors import AmbientMismatchError, SubstitutionError
from .torsion import TorsionPoint

Variable = Union[TorsionPoint, str]
Coefficient = Union[CycNumber, int, Fraction]


def _var_sort_key(var: Variable):
    if isinstance(var, TorsionPoint):
        return (0, var.a, var.b, "")
    return (1, 0, 0, var)


def _check_variable(var: Variable) -> None:
    if isinstance(var, TorsionPoint):
        if var.is_zero:
            raise ValueError("the origin is not a formal variable")
    elif not isinstance(var, str):
        raise TypeError(f"variable must be a torsion point or a string, got {var!r}")


class Monomial:
    """A product of integer powers of distinct variables."""

    __slots__ = ("_pairs",)

    def __init__(self, pairs: Iterable[tuple[Variable, int]] = ()):
        merged: dict[Variable, int] = {}
        for var, exp in pairs:
            _check_variable(var)
            merged[var] = merged.get(var, 0) + exp
        items = [(v, e) for v, e in merged.items() if e != 0]
        items.sort(key=lambda item: _var_sort_key(item[0]))
        self._pairs = tuple(items)

    @classmethod
    def one(cls) -> Monomial:
        return cls()

    @classmethod
    def variable(cls, var: Variable, exp: int = 1) -> Monomial:
        return cls([(var, exp)])

    @property
    def pairs(self) -> tuple[tuple[Variable, int], ...]:
        return self._pairs

    @property
    def is_one(self) -> bool:
        return not self._pairs

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(self._pairs + other._pairs)

    def __pow__(self, n: int) -> Monomial:
        return Monomial([(v, e * n) for v, e in self._pairs])

    def inverse(self) -> Monomial:
        return self ** -1

    def sort_key(self):
        return tuple((_var_sort_key(v), e) for v, e in self._pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def to_json(self) -> list[dict]:
        out = []
        for var, exp in self._pairs:
            if isinstance(var, TorsionPoint):
                out.append({"point": str(var), "exp": exp})
            else:
                out.append({"var": var, "exp": exp})
        return out

    def __str__(self) -> str:
        if not self._pairs:
            return "1"
        bits = []
        for var, exp in self._pairs:
            name = f"g[{var}]" if isinstance(var, TorsionPoint) else var
            bits.append(name if exp == 1 else f"{name}^{exp}")
        return "*".join(bits)

    def __repr__(self) -> str:
        return f"Monomial({self!s})"


class LaurentPoly:
    """A finite Q(zeta_p)-linear combination of monomials."""

    __slots__ = ("p", "_terms")

    def __init__(self, p: int, terms: Iterable[tuple[Monomial, Coefficient]] = ()):
        self.p = p
        merged: dict[Monomial, CycNumber] = {}
        for mono, coeff in terms:
            c = self._coerce_coeff(p, coeff)
            if mono in merged:
                c = merged[mono] + c
            if c.is_zero:
                merged.pop(mono, None)
            else:
                merged[mono] = c
        self._terms = merged

    @staticmethod
    def _coerce_coeff(p: int, coeff: Coefficient) -> CycNumber:
        if isinstance(coeff, CycNumber):
            if coeff.p != p:
                raise AmbientMismatchError(
                    f"coefficient over prime {coeff.p} in a polynomial over {p}"
                )
            return coeff
        return CycNumber.rational(p, coeff)

    @classmethod
    def zero(cls, p: int) -> LaurentPoly:
        return cls(p)

    @classmethod
    def one(cls, p: int) -> LaurentPoly:
        return cls.constant(p, 1)

    @classmethod
    def constant(cls, p: int, value: Coefficient) -> LaurentPoly:
        return cls(p, [(Monomial.one(), value)])

    @classmethod
    def variable(cls, p: int, var: Variable, exp: int = 1) -> LaurentPoly:
        return cls(p, [(Monomial.variable(var, exp), 1)])

    def terms(self) -> list[tuple[Monomial, CycNumber]]:
        """Terms in the canonical order (lexicographic on variables, then exponents)."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def coefficient(self, mono: Monomial) -> CycNumber:
        return self._terms.get(mono, CycNumber.zero(self.p))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _require_same_ambient(self, other: LaurentPoly) -> None:
        if self.p != other.p:
            raise AmbientMismatchError(
                f"polynomials over different primes: {self.p} vs {other.p}"
            )

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        self._require_same_ambient(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono)
            s = c if s is None else s + c
            if s.is_zero:
                out.pop(mono, None)
            else:
                out[mono] = s
        return self._from_raw(self.p, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return self._from_raw(self.p, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return -(self - other)

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, (CycNumber, int, Fraction)):
            c0 = self._coerce_coeff(self.p, other)
            if c0.is_zero:
                return LaurentPoly.zero(self.p)
            return self._from_raw(self.p, {m: c * c0 for m, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._require_same_ambient(other)
        out: dict[Monomial, CycNumber] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1 * m2
                c = c1 * c2
                s = out.get(mono)
                s = c if s is None else s + c
                if s.is_zero:
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return self._from_raw(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = LaurentPoly.one(self.p)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> LaurentPoly:
        """Inverse of a unit, i.e. a single-term element."""
        if len(self._terms) != 1:
            raise ValueError(
                "only single-term Laurent polynomials are invertible; "
                f"this one has {len(self._terms)} terms"
            )
        (mono, coeff), = self._terms.items()
        return LaurentPoly(self.p, [(mono.inverse(), coeff.inverse())])

    def substitute(self, mapping: dict[Variable, Monomial]) -> LaurentPoly:
        """Replace every variable by a monomial (a multiplicative substitution)."""
        builder = PolyBuilder(self.p)
        for mono, coeff in self._terms.items():
            image = Monomial.one()
            for var, exp in mono.pairs:
                target = mapping.get(var)
                if target is None:
                    raise SubstitutionError(f"no substitution given for variable {var!r}")
                image = image * (target ** exp)
            builder.add(image, coeff)
        return builder.build()

    @classmethod
    def _from_raw(cls, p: int, terms: dict[Monomial, CycNumber]) -> LaurentPoly:
        self = object.__new__(cls)
        self.p = p
        self._terms = terms
        return self

    def _coerce_poly(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (CycNumber, int, Fraction)):
            return LaurentPoly.constant(self.p, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce_poly(other)
        if other is NotImplemented or not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.p == other.p and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.p, tuple(sorted(((m, c) for m, c in self._terms.items()),
                                          key=lambda item: item[0].sort_key()))))

    def to_json(self) -> list[dict]:
        return [{"coeff": c.to_json(), "monomial": m.to_json()} for m, c in self.terms()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in self.terms())

    def __repr__(self) -> str:
        return f"LaurentPoly({self.p}, {self!s})"


class PolyBuilder:
    """Mutable accumulator for building a polynomial term by term."""

    __slots__ = ("p", "_terms")

    def __init__(self, p: int):
        self.p = p
        self._terms: dict[Monomial, CycNumber] = {}

    def add(self, mono: Monomial, coeff: Coefficient) -> None:
        c = LaurentPoly._coerce_coeff(self.p, coeff)
        s = self._terms.get(mono)
        s = c if s is None else s + c
        if s.is_zero:
            self._terms.pop(mono, None)
        else:
            self._terms[mono] = s

    def add_poly(self, poly: LaurentPoly) -> None:
        if poly.p != self.p:
            raise AmbientMismatchError(
                f"polynomial over prime {poly.p} added to a builder over {self.p}"
            )
        for mono, coeff in poly._terms.items():
            self.add(mono, coeff)

    def build(self) -> LaurentPoly:
        return LaurentPoly._from_raw(self.p, dict(self._terms))
