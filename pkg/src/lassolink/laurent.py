"""Exact one-variable Laurent polynomials with integer coefficients.

The same type carries Conway polynomials (in ``z``) and Alexander
polynomials (in ``t``); the variable name is only used for rendering.
"""

from __future__ import annotations

import re
from typing import Mapping


class LaurentPoly:
    """Immutable integer Laurent polynomial stored as ``{exponent: coeff}``.

    Zero coefficients are never stored, so the zero polynomial is the
    empty mapping.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        for exp, c in (coeffs or {}).items():
            if c:
                clean[int(exp)] = int(c)
        self._coeffs = clean
        self._hash = None

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def terms(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return add(self, -_coerce(other))

    def __rsub__(self, other):
        return add(_coerce(other), -self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = LaurentPoly.constant(1)
        for _ in range(n):
            out = mul(out, self)
        return out

    def __call__(self, value):
        """Evaluate at a number (exact for ints and Fractions)."""
        return sum(c * value**e for e, c in self._coeffs.items())

    def format(self, var: str = "z") -> str:
        return format_poly(self, var)

    def __str__(self):
        return format_poly(self, "z")

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self._coeffs.items()))})"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    out = dict(a._coeffs)
    for e, c in b._coeffs.items():
        out[e] = out.get(e, 0) + c
    return LaurentPoly(out)


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    out: dict[int, int] = {}
    for e1, c1 in a._coeffs.items():
        for e2, c2 in b._coeffs.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return LaurentPoly(out)


def scale_by_monomial(p: LaurentPoly, coeff: int, exp: int) -> LaurentPoly:
    """Multiply ``p`` by ``coeff * var**exp``."""
    if coeff == 0:
        raise ValueError("monomial coefficient must be nonzero")
    return LaurentPoly({e + exp: c * coeff for e, c in p._coeffs.items()})


def normalize_units(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of ``p`` modulo the units ``±t^i``.

    Lowest exponent becomes 0 and the top coefficient is made positive.
    """
    if p.is_zero():
        return p
    shift = -p.min_exp
    sign = 1 if p.coefficient(p.max_exp) > 0 else -1
    return scale_by_monomial(p, sign, shift)


def eq_up_to_units(a: LaurentPoly, b: LaurentPoly) -> bool:
    return normalize_units(a) == normalize_units(b)


def conway_to_alexander(p: LaurentPoly) -> LaurentPoly:
    """Substitute ``z -> t^(1/2) - t^(-1/2)`` and normalize up to units.

    Exponents are doubled internally so half-integer powers of ``t`` stay
    integral until the final unit normalization.
    """
    if p.is_zero():
        return p
    parities = {e % 2 for e in p._coeffs}
    if len(parities) != 1 or p.min_exp < 0:
        raise ValueError(
            f"{p.format('z')} is not a Conway polynomial: exponents must be "
            "non-negative and of a single parity"
        )
    half = LaurentPoly({1: 1, -1: -1})  # t^(1/2) - t^(-1/2), exponents doubled
    doubled = ZERO
    power = ONE
    for k in range(p.max_exp + 1):
        c = p.coefficient(k)
        if c:
            doubled = doubled + c * power
        power = mul(power, half)
    exps = doubled._coeffs
    if any((e - min(exps)) % 2 for e in exps):
        raise ValueError("substitution did not land in integer powers of t")
    base = min(exps)
    return normalize_units(LaurentPoly({(e - base) // 2: c for e, c in exps.items()}))


def format_poly(p: LaurentPoly, var: str = "z") -> str:
    """Render as e.g. ``1 + 2*z^2 - z^4`` (ascending exponents)."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (e, c) in enumerate(p.terms()):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)\s*(?:\*\s*(?P<v1>[A-Za-z])(?:\^(?P<e1>-?\d+))?)?
        | (?P<v2>[A-Za-z])(?:\^(?P<e2>-?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str, var: str | None = None) -> LaurentPoly:
    """Inverse of :func:`format_poly`.

    ``var`` pins the variable name; by default any single letter is
    accepted as long as it is used consistently.
    """
    s = text.strip()
    if s == "0":
        return ZERO
    if not s:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad polynomial term at position {pos}: {s!r}")
        if not first and not m.group("sign"):
            raise ValueError(f"missing operator at position {pos}: {s!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            c = int(m.group("coef"))
            v, e = m.group("v1"), m.group("e1")
            exp = 0 if v is None else (int(e) if e is not None else 1)
        else:
            c = 1
            v, e = m.group("v2"), m.group("e2")
            exp = int(e) if e is not None else 1
        if v is not None:
            if var is None:
                var = v
            elif v != var:
                raise ValueError(f"mixed variables {var!r} and {v!r} in {s!r}")
        coeffs[exp] = coeffs.get(exp, 0) + sign * c
        pos = m.end()
        first = False
    return LaurentPoly(coeffs)
