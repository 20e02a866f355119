"""Exact Laurent polynomials over the rationals, in one or several variables.

A polynomial knows its variable count ``nvars``; exponent vectors are
integer tuples of that length and may be negative.  All arithmetic is
exact (``fractions.Fraction`` coefficients).  The univariate case is
simply ``nvars == 1``.

Monomial order: graded lexicographic with t0 < t1 < ... (total degree
first, then the exponent of the highest-indexed variable decides).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Mapping, Union

Exponents = tuple[int, ...]
Coeff = Fraction
Scalar = Union[int, Fraction]

#: multiplicity of a factor of the zero polynomial
INFINITY = float("inf")


def grlex_key(exps: Exponents) -> tuple:
    return (sum(exps), tuple(reversed(exps)))


class LaurentPoly:
    """Immutable-by-convention Laurent polynomial with exact coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int,
                 terms: Mapping[Exponents, Scalar] | Iterable[tuple[Exponents, Scalar]] = ()):
        if not isinstance(nvars, int) or nvars < 1:
            raise ValueError(f"nvars must be a positive integer, got {nvars!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, Fraction] = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} has length {len(exps)}, expected {nvars}")
            c = acc.get(exps, _ZERO_FRAC) + Fraction(coeff)
            if c:
                acc[exps] = c
            elif exps in acc:
                del acc[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", acc)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int = 1) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int = 1) -> "LaurentPoly":
        return cls.constant(1, nvars)

    @classmethod
    def constant(cls, value: Scalar, nvars: int = 1) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, index: int = 0, nvars: int = 1) -> "LaurentPoly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for nvars={nvars}")
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, coeff: Scalar, exps: Iterable[int]) -> "LaurentPoly":
        exps = tuple(int(e) for e in exps)
        return cls(len(exps), {exps: Fraction(coeff)})

    @classmethod
    def univariate(cls, coeffs: Mapping[int, Scalar]) -> "LaurentPoly":
        return cls(1, {(int(e),): Fraction(c) for e, c in coeffs.items()})

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_unit(self) -> bool:
        """Units of the Laurent ring: single-term polynomials."""
        return len(self.terms) == 1

    @property
    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), _ZERO_FRAC)

    def min_exponents(self) -> Exponents:
        if self.is_zero:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def max_exponents(self) -> Exponents:
        if self.is_zero:
            return (0,) * self.nvars
        return tuple(max(e[i] for e in self.terms) for i in range(self.nvars))

    def leading(self) -> tuple[Exponents, Fraction]:
        """Leading (exponents, coefficient) under graded lex; errors on zero."""
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def total_degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    # -- arithmetic ----------------------------------------------------

    def _require_same_ring(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        other = self._coerce(other)
        self._require_same_ring(other)
        acc = dict(self.terms)
        for exps, c in other.terms.items():
            s = acc.get(exps, _ZERO_FRAC) + c
            if s:
                acc[exps] = s
            elif exps in acc:
                del acc[exps]
        return _raw(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return _raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if not f:
                return LaurentPoly.zero(self.nvars)
            return _raw(self.nvars, {e: c * f for e, c in self.terms.items()})
        self._require_same_ring(other)
        if self.is_zero or other.is_zero:
            return LaurentPoly.zero(self.nvars)
        acc: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(e, _ZERO_FRAC) + c1 * c2
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
        return _raw(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            if not self.is_unit:
                raise ValueError("negative power of a non-unit")
            (exps, c), = self.terms.items()
            inv = LaurentPoly(self.nvars, {tuple(-e for e in exps): 1 / c})
            return inv ** (-n)
        result = LaurentPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _coerce(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other, self.nvars)
        raise TypeError(f"cannot coerce {type(other).__name__} to LaurentPoly")

    def shift(self, exps: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial t^exps (a unit)."""
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars:
            raise ValueError("shift exponent length mismatch")
        return _raw(self.nvars, {tuple(a + b for a, b in zip(e, exps)): c
                                 for e, c in self.terms.items()})

    # -- structural operations ------------------------------------------

    def substitute(self, exponents: Iterable[int]) -> "LaurentPoly":
        """Map t_i -> t^{e_i}; returns a univariate Laurent polynomial.

        Cancellation may occur (and the result may be zero).
        """
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exponents)}")
        acc: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            e = (sum(a * b for a, b in zip(exps, exponents)),)
            s = acc.get(e, _ZERO_FRAC) + c
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
        return _raw(1, acc)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        from .textfmt import poly_to_str
        return f"<LaurentPoly {poly_to_str(self)}>"

    def __str__(self) -> str:
        from .textfmt import poly_to_str
        return poly_to_str(self)


_ZERO_FRAC = Fraction(0)


def _raw(nvars: int, terms: dict[Exponents, Fraction]) -> LaurentPoly:
    """Internal fast constructor; `terms` must already be clean."""
    p = object.__new__(LaurentPoly)
    object.__setattr__(p, "nvars", nvars)
    object.__setattr__(p, "terms", terms)
    return p


# ---------------------------------------------------------------------------
# unit-normal form


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Canonical associate of ``p`` under multiplication by units.

    Result has integer coefficients with content 1, minimum exponent 0
    in every variable, and positive leading coefficient in graded lex
    order.  Zero normalizes to zero.  Idempotent.
    """
    if p.is_zero:
        return p
    shift = tuple(-e for e in p.min_exponents())
    shifted = p.shift(shift)
    denom_lcm = 1
    for c in shifted.terms.values():
        denom_lcm = denom_lcm * c.denominator // int_gcd(denom_lcm, c.denominator)
    content = 0
    for c in shifted.terms.values():
        content = int_gcd(content, c.numerator * (denom_lcm // c.denominator))
    scale = Fraction(denom_lcm, content)
    result = shifted * scale
    _, lead = result.leading()
    if lead < 0:
        result = -result
    return result


def equal_up_to_units(a: LaurentPoly, b: LaurentPoly) -> bool:
    if a.nvars != b.nvars:
        return False
    return normalize(a) == normalize(b)


# ---------------------------------------------------------------------------
# division

def _divide_ordinary(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly | None:
    """Quotient p/q for ordinary polynomials (min exponents 0), or None.

    Single-divisor graded-lex division.  If q divides p exactly the
    algorithm never meets a non-divisible lead term, so we abort early
    the moment one shows up.
    """
    if q.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    quot: dict[Exponents, Fraction] = {}
    r = p
    q_exps, q_lead = q.leading()
    while not r.is_zero:
        r_exps, r_lead = r.leading()
        d = tuple(a - b for a, b in zip(r_exps, q_exps))
        if any(e < 0 for e in d):
            return None
        c = r_lead / q_lead
        quot[d] = quot.get(d, _ZERO_FRAC) + c
        r = r - q.shift(d) * c
    return _raw(p.nvars, {e: c for e, c in quot.items() if c})


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly | None:
    """Return c with p = q*c, or None when q does not divide p.

    Laurent divisibility reduces to ordinary divisibility after shifting
    both arguments to minimum exponent 0 (monomials are units).
    """
    if p.nvars != q.nvars:
        raise ValueError("variable count mismatch")
    if q.is_zero:
        if p.is_zero:
            return LaurentPoly.one(p.nvars)
        return None
    if p.is_zero:
        return p
    p_min = p.min_exponents()
    q_min = q.min_exponents()
    c = _divide_ordinary(p.shift(tuple(-e for e in p_min)),
                         q.shift(tuple(-e for e in q_min)))
    if c is None:
        return None
    return c.shift(tuple(a - b for a, b in zip(p_min, q_min)))


def divides_up_to_units(a: LaurentPoly, b: LaurentPoly) -> bool:
    """True iff b = a*c for some c.  Everything divides 0; 0 divides only 0."""
    if b.is_zero:
        return True
    if a.is_zero:
        return False
    return exact_divide(b, a) is not None


def multiplicity(p: LaurentPoly, q: LaurentPoly):
    """Largest k with q^k | p; INFINITY when p = 0.

    q must be neither zero nor a unit, otherwise the count is undefined.
    """
    if q.is_zero or q.is_unit:
        raise ValueError("multiplicity requires a non-zero, non-unit factor")
    if p.nvars != q.nvars:
        raise ValueError("variable count mismatch")
    if p.is_zero:
        return INFINITY
    count = 0
    r = p
    while True:
        nxt = exact_divide(r, q)
        if nxt is None:
            return count
        r = nxt
        count += 1
