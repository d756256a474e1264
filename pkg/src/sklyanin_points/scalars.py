"""Exact arithmetic over Q(zeta), zeta a primitive cube root of unity.

Elements are stored as ``re + ze*zeta`` with rational parts; zeta**2 is always
rewritten as ``-1 - zeta`` so the pair (re, ze) is a canonical form and equality
is structural.

Also provides polynomials with Q(zeta) coefficients: :class:`ParamPoly` in one
formal parameter ``t`` (generic points on a line) and :class:`MPoly` in several
variables (cubic forms, multi-parameter expansions).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]

_SCALAR_RE = re.compile(
    r"(?P<re>[+-]?\d+(?:/\d+)?)?(?:(?P<signs>[+-]{0,2})(?P<ze>\d+(?:/\d+)?)\*z)?"
)


def _frac(value: Number | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def _frac_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class EisensteinScalar:
    """The element ``re + ze*zeta`` of Q(zeta)."""

    __slots__ = ("re", "ze")

    def __init__(self, re: Number | str = 0, ze: Number | str = 0):
        self.re = _frac(re)
        self.ze = _frac(ze)

    @classmethod
    def coerce(cls, value) -> "EisensteinScalar":
        if isinstance(value, EisensteinScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot coerce {value!r} to EisensteinScalar")

    @classmethod
    def parse(cls, text: str) -> "EisensteinScalar":
        """Parse ``"a/b+c/d*z"``; either part may be omitted."""
        s = text.replace(" ", "")
        m = _SCALAR_RE.fullmatch(s)
        if m is None or not s:
            raise ValueError(f"malformed scalar {text!r}")
        re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
        ze_part = Fraction(0)
        if m.group("ze") is not None:
            signs = m.group("signs") or ""
            ze_part = Fraction(m.group("ze")) * (-1) ** signs.count("-")
        return cls(re_part, ze_part)

    def __str__(self) -> str:
        ze = self.ze
        if ze < 0:
            return f"{_frac_str(self.re)}-{_frac_str(-ze)}*z"
        return f"{_frac_str(self.re)}+{_frac_str(ze)}*z"

    def __repr__(self) -> str:
        return f"EisensteinScalar({str(self)!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.ze == 0 and self.re == other
        if not isinstance(other, EisensteinScalar):
            return NotImplemented
        return self.re == other.re and self.ze == other.ze

    def __hash__(self) -> int:
        if self.ze == 0:
            return hash(self.re)
        return hash((self.re, self.ze))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.ze)

    def is_zero(self) -> bool:
        return not self

    def is_rational(self) -> bool:
        return self.ze == 0

    def __neg__(self) -> "EisensteinScalar":
        return EisensteinScalar(-self.re, -self.ze)

    def __add__(self, other) -> "EisensteinScalar":
        try:
            o = EisensteinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinScalar(self.re + o.re, self.ze + o.ze)

    __radd__ = __add__

    def __sub__(self, other) -> "EisensteinScalar":
        try:
            o = EisensteinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinScalar(self.re - o.re, self.ze - o.ze)

    def __rsub__(self, other) -> "EisensteinScalar":
        return EisensteinScalar.coerce(other) - self

    def __mul__(self, other) -> "EisensteinScalar":
        if isinstance(other, (int, Fraction)):
            return EisensteinScalar(self.re * other, self.ze * other)
        if not isinstance(other, EisensteinScalar):
            return NotImplemented
        a, b, c, d = self.re, self.ze, other.re, other.ze
        # zeta^2 = -1 - zeta
        return EisensteinScalar(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conjugate(self) -> "EisensteinScalar":
        """Image under the automorphism zeta -> zeta**2."""
        return EisensteinScalar(self.re - self.ze, -self.ze)

    def norm(self) -> Fraction:
        a, b = self.re, self.ze
        return a * a - a * b + b * b

    def inverse(self) -> "EisensteinScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(zeta)")
        c = self.conjugate()
        return EisensteinScalar(c.re / n, c.ze / n)

    def __truediv__(self, other) -> "EisensteinScalar":
        try:
            o = EisensteinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "EisensteinScalar":
        return EisensteinScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "EisensteinScalar":
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out


Eis = EisensteinScalar
ZERO = Eis(0)
ONE = Eis(1)
ZETA = Eis(0, 1)
ZETA2 = Eis(-1, -1)


def eis_arith(a: Eis, b: Eis, which: str) -> Eis:
    """Dispatch one of ``add``, ``sub``, ``mul``, ``div``.

    Division by zero raises :class:`ZeroDivisionError`.
    """
    if which == "add":
        return a + b
    if which == "sub":
        return a - b
    if which == "mul":
        return a * b
    if which == "div":
        return a / b
    raise ValueError(f"unknown operation {which!r}")


class ParamPoly:
    """Univariate polynomial in ``t`` with Q(zeta) coefficients (low degree first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Eis.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Eis, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> "ParamPoly":
        return cls([c])

    @classmethod
    def t(cls) -> "ParamPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Eis:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamPoly):
            other = ParamPoly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ParamPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"({c})" + ("" if k == 0 else "*t" if k == 1 else f"*t^{k}"))
        return " + ".join(terms)

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            other = ParamPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return ParamPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other) -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            other = ParamPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "ParamPoly":
        return ParamPoly.const(other) - self

    def __mul__(self, other) -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            c = Eis.coerce(other)
            return ParamPoly(x * c for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return ParamPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ParamPoly(out)

    __rmul__ = __mul__

    def __call__(self, t) -> Eis:
        t = Eis.coerce(t)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divmod(self, other: "ParamPoly") -> tuple["ParamPoly", "ParamPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [ZERO] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead_inv = other.leading().inverse()
        dg = other.degree
        while len(rem) - 1 >= dg and rem:
            k = len(rem) - 1 - dg
            c = rem[-1] * lead_inv
            q[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
            while rem and not rem[-1]:
                rem.pop()
        return ParamPoly(q), ParamPoly(rem)

    def monic(self) -> "ParamPoly":
        if self.is_zero():
            return self
        return self * self.leading().inverse()


def poly_arith(p: ParamPoly, q: ParamPoly, which: str) -> ParamPoly:
    if which == "add":
        return p + q
    if which == "mul":
        return p * q
    raise ValueError(f"unknown operation {which!r}")


def poly_is_zero(p: ParamPoly) -> bool:
    return p.is_zero()


def poly_gcd(polys: Iterable[ParamPoly]) -> ParamPoly:
    """Monic gcd of the given polynomials (zero if all are zero)."""
    g = ParamPoly()
    for p in polys:
        a, b = g, p
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        g = a
    return g.monic()


class MPoly:
    """Sparse multivariate polynomial: exponent tuple -> Q(zeta) coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], Eis] = {}
        for exp, c in (terms or {}).items():
            c = Eis.coerce(c)
            if c:
                self.terms[tuple(exp)] = c

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MPoly.const(self.nvars, other)

    def __add__(self, other) -> "MPoly":
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, ZERO) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._lift(other))

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            c = Eis.coerce(other)
            return MPoly(self.nvars, {e: v * c for e, v in self.terms.items()})
        o = self._lift(other)
        out: dict[tuple[int, ...], Eis] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def coefficient(self, exp: tuple[int, ...]) -> Eis:
        return self.terms.get(tuple(exp), ZERO)

    def __call__(self, *values) -> Eis:
        acc = ZERO
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * Eis.coerce(v) ** k
            acc = acc + term
        return acc

    def format(self, names: tuple[str, ...]) -> str:
        if not self.terms:
            return "0"
        out = ""
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            c = self.terms[e]
            if c.is_rational():
                sign = "-" if c.re < 0 else "+"
                mag = abs(c.re)
                coef = "" if mag == 1 and mono else str(mag)
            else:
                sign, coef = "+", f"({c})"
            term = coef + ("*" if coef and mono else "") + mono
            out += (f" {sign} " if out else ("-" if sign == "-" else "")) + term
        return out
