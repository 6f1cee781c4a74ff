"""Dense univariate polynomials over the integers.

Coefficients are stored constant term first with no trailing zeros.  The
zero polynomial has degree ``-inf`` so that ``deg(f*g) = deg f + deg g``
holds without special cases.
"""
from __future__ import annotations

import math
from typing import Iterable, Sequence

NEG_INF = float("-inf")


class PolynomialError(ArithmeticError):
    pass


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other) -> IntPolynomial:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise PolynomialError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> IntPolynomial:
        """Divide by content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def exact_div_scalar(self, d: int) -> IntPolynomial:
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise PolynomialError(f"coefficient {c} not divisible by {d}")
            out.append(q)
        return IntPolynomial(out)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> IntPolynomial:
        return cls(int(c) for c in data)


T = IntPolynomial((0, 1))
ONE = IntPolynomial((1,))
ZERO = IntPolynomial()


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial.constant(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


def poly_add(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return f + g


def poly_mul(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return f * g


def poly_divmod(f: IntPolynomial, g: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Division by a monic divisor; stays in Z[t]."""
    if not g.is_monic():
        raise PolynomialError(f"divisor must be monic, got leading coefficient {g.lc}")
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return ZERO, f
    q = [0] * (len(r) - dg)
    gc = g.coeffs
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            q[i - dg] = c
            for j in range(dg + 1):
                r[i - dg + j] -= c * gc[j]
    return IntPolynomial(q), IntPolynomial(r[:dg])


def poly_rem(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return poly_divmod(f, g)[1]


def pseudo_rem(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Remainder of ``lc(g)^(deg f - deg g + 1) * f`` by ``g``."""
    if g.is_zero():
        raise PolynomialError("pseudo-division by zero")
    dg = len(g.coeffs) - 1
    r = list(f.coeffs)
    if len(r) - 1 < dg:
        return f
    lc = g.lc
    gc = g.coeffs
    e = len(r) - 1 - dg + 1
    while r and len(r) - 1 >= dg:
        c = r[-1]
        shift = len(r) - 1 - dg
        r = [x * lc for x in r]
        for j in range(dg + 1):
            r[shift + j] -= c * gc[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    # pad with the unused powers of lc so the multiplier is exactly lc^(df-dg+1)
    m = lc**e
    return IntPolynomial(x * m for x in r)


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (subresultant PRS)."""
    if f.is_zero() and g.is_zero():
        raise PolynomialError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.primitive_part()
    if g.is_zero():
        return f.primitive_part()
    a, b = f.primitive_part(), g.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    gg, h = 1, 1
    while True:
        delta = int(a.degree - b.degree)
        r = pseudo_rem(a, b)
        if r.is_zero():
            return b.primitive_part()
        if r.degree == 0:
            return ONE
        a = b
        b = r.exact_div_scalar(gg * h**delta)
        gg = a.lc
        h = _next_h(h, gg, delta)


def _next_h(h: int, g: int, delta: int) -> int:
    if delta == 0:
        return h
    num = g**delta
    den = h ** (delta - 1)
    q, rem = divmod(num, den)
    if rem:
        raise PolynomialError("subresultant scaling not exact")
    return q


def squarefree_part(f: IntPolynomial) -> IntPolynomial:
    if f.is_zero():
        raise PolynomialError("squarefree part of the zero polynomial")
    if f.degree == 0:
        return ONE
    d = poly_gcd(f, f.derivative())
    # d divides f over Z up to content; use pseudo-division then strip content
    q = _exact_quotient(f.primitive_part(), d)
    return q.primitive_part()


def _exact_quotient(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Quotient of an exact division in Z[t]; raises if not exact."""
    r = list(f.coeffs)
    gc = g.coeffs
    dg = len(gc) - 1
    if len(r) - 1 < dg:
        raise PolynomialError("degree of divisor exceeds dividend")
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            qi, rem = divmod(c, gc[-1])
            if rem:
                raise PolynomialError("division not exact in Z[t]")
            q[i - dg] = qi
            for j in range(dg + 1):
                r[i - dg + j] -= qi * gc[j]
    if any(r[:dg]):
        raise PolynomialError("division leaves a remainder")
    return IntPolynomial(q)


def divides(g: IntPolynomial, f: IntPolynomial) -> bool:
    """True when ``g | f`` in Z[t]."""
    if g.is_zero():
        return f.is_zero()
    if f.is_zero():
        return True
    try:
        _exact_quotient(f, g)
    except PolynomialError:
        return False
    return True


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """``lc(f)^deg g * prod g(alpha)`` over the roots ``alpha`` of ``f``.

    Computed with the subresultant PRS; no rational arithmetic.
    """
    if f.is_zero() or g.is_zero():
        raise PolynomialError("resultant with the zero polynomial")
    a_cont, b_cont = f.content(), g.content()
    a, b = f.exact_div_scalar(a_cont), g.exact_div_scalar(b_cont)
    da, db = len(a.coeffs) - 1, len(b.coeffs) - 1
    scale = a_cont**db * b_cont**da
    sign = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da & 1 and db & 1:
            sign = -1
    if db == 0:
        return sign * scale * b.lc**da
    gg, h = 1, 1
    while True:
        delta = da - db
        if da & 1 and db & 1:
            sign = -sign
        r = pseudo_rem(a, b)
        if r.is_zero():
            return 0
        a = b
        b = r.exact_div_scalar(gg * h**delta)
        da, db = db, len(b.coeffs) - 1
        gg = a.lc
        h = _next_h(h, gg, delta)
        if db == 0:
            if da == 0:
                return sign * scale
            h_final, rem = divmod(b.lc**da, h ** (da - 1))
            if rem:
                raise PolynomialError("subresultant final step not exact")
            return sign * scale * h_final


def homogeneous_compose(chi: IntPolynomial, b: IntPolynomial, a: IntPolynomial) -> IntPolynomial:
    """``a^n * chi(b / a)`` for monic ``chi`` of degree ``n``.

    With ``chi = prod (x - lam_i)`` this is ``prod (b - lam_i * a)``.
    """
    if not chi.is_monic():
        raise PolynomialError("homogeneous composition needs a monic outer polynomial")
    n = len(chi.coeffs) - 1
    a_pows = [ONE]
    for _ in range(n):
        a_pows.append(a_pows[-1] * a)
    out = ZERO
    b_pow = ONE
    for j, c in enumerate(chi.coeffs):
        if c:
            out = out + b_pow * a_pows[n - j] * c
        b_pow = b_pow * b
    return out
