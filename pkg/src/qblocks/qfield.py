"""Exact arithmetic in Q[q, q^-1] and its fraction field Q(q).

Laurent polynomials are finite maps {exponent: Fraction}; the zero polynomial
is the empty map and no stored coefficient is ever zero.  Elements of Q(q) are
kept in a canonical num/den form so that equality and zero-testing are plain
structural comparisons:

* shift num and den to ordinary polynomials with nonzero constant term,
  divide out their polynomial gcd, and fold the leftover power of q into num;
* den is a primitive integer polynomial (content 1) whose lowest-degree
  coefficient is positive.

Numeric specialization substitutes q = exp(4*pi*i/kappa), under which the
q-integer [n] evaluates to sin(4*pi*n/kappa)/sin(4*pi/kappa).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterator, Mapping, Union

Scalar = Union[int, Fraction]

#: absolute tolerance below which a numeric denominator counts as a pole
POLE_TOLERANCE = 1e-12


class RatQDivisionError(ZeroDivisionError):
    """Division by the zero element of Q(q)."""


class PoleEvaluationError(ValueError):
    """Numeric evaluation hit a (near-)vanishing denominator at the given q."""


class LaurentPoly:
    """A Laurent polynomial over Q, i.e. an element of Q[q, q^-1]."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        data: dict[int, Fraction] = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = Fraction(c)
                if c:
                    data[int(exp)] = c
        self._coeffs = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._coeffs)

    def coeff(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Yield (exponent, coefficient) pairs with exponents ascending."""
        for exp in sorted(self._coeffs):
            yield exp, self._coeffs[exp]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            data[exp] = data.get(exp, Fraction(0)) + c
        return LaurentPoly(data)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly()
        out._coeffs = {e: -c for e, c in self._coeffs.items()}
        return out

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                data[e] = data.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(data)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers live in Q(q); use RatQ")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        out = LaurentPoly()
        out._coeffs = {e + k: c for e, c in self._coeffs.items()}
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    # -- evaluation --------------------------------------------------------

    def __call__(self, x):
        """Evaluate at x, exactly for Fraction x, numerically otherwise."""
        zero = Fraction(0) if isinstance(x, Fraction) else 0j
        total = zero
        for exp, c in self._coeffs.items():
            if isinstance(x, Fraction):
                total += c * x**exp
            else:
                total += complex(c) * x**exp
        return total

    # -- formatting and serialization ---------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for exp, c in sorted(self._coeffs.items(), reverse=True):
            if exp == 0:
                term = str(abs(c))
            else:
                mag = abs(c)
                head = "" if mag == 1 else f"{mag}*"
                term = f"{head}q^{exp}" if exp != 1 else f"{head}q"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._coeffs.items()))!r})"

    def to_json(self) -> list[list]:
        """[[exponent, "p/q"], ...] with exponents ascending; round-trips exactly."""
        return [[exp, str(c)] for exp, c in self.items()]

    @classmethod
    def from_json(cls, data: list) -> "LaurentPoly":
        return cls({int(exp): Fraction(c) for exp, c in data})


def q_integer(n: int) -> LaurentPoly:
    """The q-integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise ValueError(f"q-integer undefined for negative n = {n}")
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


# ---------------------------------------------------------------------------
# dense integer polynomial helpers for gcd-based canonicalization
# ---------------------------------------------------------------------------


def _dense(p: LaurentPoly) -> list[Fraction]:
    """Coefficient list (constant term first) of an ordinary polynomial."""
    assert not p.is_zero and p.min_exp >= 0
    out = [Fraction(0)] * (p.max_exp + 1)
    for e, c in p._coeffs.items():
        out[e] = c
    return out


def _primitive_int(coeffs: list[Fraction]) -> tuple[list[int], Fraction]:
    """Write the polynomial as scale * (primitive integer polynomial), scale > 0."""
    den_lcm = math.lcm(*(c.denominator for c in coeffs if c)) if any(coeffs) else 1
    ints = [int(c * den_lcm) for c in coeffs]
    num_gcd = math.gcd(*(abs(v) for v in ints if v))
    ints = [v // num_gcd for v in ints]
    return ints, Fraction(num_gcd, den_lcm)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b)."""
    a = list(a)
    lead = b[-1]
    while len(a) >= len(b) and a:
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        top = a[-1]
        a = [c * lead for c in a]
        for i, bc in enumerate(b):
            a[shift + i] -= top * bc
        _trim(a)
    return a


def _make_primitive(a: list[int]) -> list[int]:
    if not a:
        return a
    g = math.gcd(*(abs(v) for v in a if v))
    a = [v // g for v in a]
    if a[-1] < 0:
        a = [-v for v in a]
    return a


def _int_poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[q], positive leading coefficient (primitive PRS)."""
    a, b = _make_primitive(list(a)), _make_primitive(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _make_primitive(r)
    return a


def _div_exact(a: list[int], b: list[int]) -> list[int]:
    """Exact division a / b in Z[q] (b is a known divisor of a)."""
    rem = [Fraction(v) for v in a]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    while rem and rem[-1] == 0:
        rem.pop()
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        c = rem[-1] / Fraction(b[-1])
        out[shift] = c
        for i, bc in enumerate(b):
            rem[shift + i] -= c * bc
        while rem and rem[-1] == 0:
            rem.pop()
    assert not rem, "inexact polynomial division"
    assert all(c.denominator == 1 for c in out)
    return [int(c) for c in out]


def _canonical_pair(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero:
        raise RatQDivisionError("denominator is the zero polynomial")
    if num.is_zero:
        return LaurentPoly.zero(), LaurentPoly.one()
    sn, sd = num.min_exp, den.min_exp
    n_int, n_scale = _primitive_int(_dense(num.shift(-sn)))
    d_int, d_scale = _primitive_int(_dense(den.shift(-sd)))
    g = _int_poly_gcd(n_int, d_int)
    if len(g) > 1 or g[0] != 1:
        n_int = _div_exact(n_int, g)
        d_int = _div_exact(d_int, g)
    # den must have a positive lowest-degree (constant) coefficient
    if d_int[0] < 0:
        n_int = [-v for v in n_int]
        d_int = [-v for v in d_int]
    scale = n_scale / d_scale
    num_c = LaurentPoly({i + sn - sd: scale * c for i, c in enumerate(n_int) if c})
    den_c = LaurentPoly({i: c for i, c in enumerate(d_int) if c})
    return num_c, den_c


class RatQ:
    """An element of the field Q(q), stored as a canonical num/den pair."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        num = _as_poly(num)
        den = LaurentPoly.one() if den is None else _as_poly(den)
        self.num, self.den = _canonical_pair(num, den)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatQ":
        out = object.__new__(cls)
        out.num, out.den = _canonical_pair(num, den)
        return out

    @classmethod
    def zero(cls) -> "RatQ":
        return cls(0)

    @classmethod
    def one(cls) -> "RatQ":
        return cls(1)

    @classmethod
    def q_power(cls, k: int) -> "RatQ":
        return cls(LaurentPoly.monomial(k))

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other) -> bool:
        other = _as_ratq(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- field operations ---------------------------------------------------

    def __add__(self, other) -> "RatQ":
        other = _as_ratq(other)
        if other is None:
            return NotImplemented
        return RatQ._raw(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatQ":
        out = object.__new__(RatQ)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other) -> "RatQ":
        other = _as_ratq(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatQ":
        other = _as_ratq(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RatQ":
        other = _as_ratq(other)
        if other is None:
            return NotImplemented
        return RatQ._raw(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatQ":
        other = _as_ratq(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise RatQDivisionError("division by zero in Q(q)")
        return RatQ._raw(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatQ":
        other = _as_ratq(other)
        if other is None:
            return NotImplemented
        return other / self

    def inverse(self) -> "RatQ":
        if self.is_zero:
            raise RatQDivisionError("zero has no inverse in Q(q)")
        return RatQ._raw(self.den, self.num)

    def __pow__(self, n: int) -> "RatQ":
        if n < 0:
            return self.inverse() ** (-n)
        out = RatQ.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, q_value: complex, tol: float = POLE_TOLERANCE) -> complex:
        den_val = self.den(q_value)
        if abs(den_val) < tol:
            raise PoleEvaluationError(
                f"evaluation at a pole: |den({q_value})| = {abs(den_val):.3e} < {tol}"
            )
        return self.num(q_value) / den_val

    def at_one(self) -> Fraction:
        """Exact value at q = 1 (defined whenever den(1) != 0)."""
        den_val = self.den(Fraction(1))
        if den_val == 0:
            raise PoleEvaluationError("evaluation at a pole: den(1) = 0")
        return self.num(Fraction(1)) / den_val

    # -- formatting and serialization ----------------------------------------

    def __str__(self) -> str:
        if self.den == LaurentPoly.one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatQ({self.num!r}, {self.den!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RatQ":
        out = object.__new__(cls)
        out.num = LaurentPoly.from_json(data["num"])
        out.den = LaurentPoly.from_json(data["den"])
        return out


def _as_poly(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly({0: value})
    raise TypeError(f"cannot interpret {value!r} as a Laurent polynomial")


def _as_ratq(value) -> RatQ | None:
    if isinstance(value, RatQ):
        return value
    if isinstance(value, (int, Fraction, LaurentPoly)):
        return RatQ(value)
    return None


def q_ratio(n: int, m: int) -> RatQ:
    """The ratio of q-integers [n]/[m]."""
    return RatQ(q_integer(n), q_integer(m))


class QNumeric:
    """Numeric specialization context: q = exp(4*pi*i/kappa) on the unit circle."""

    __slots__ = ("kappa", "q_value")

    def __init__(self, kappa: float):
        if not kappa > 0:
            raise ValueError(f"kappa must be positive, got {kappa}")
        self.kappa = float(kappa)
        self.q_value = cmath.exp(4j * math.pi / self.kappa)

    def __repr__(self) -> str:
        return f"QNumeric(kappa={self.kappa})"


def eval_at_kappa(f: RatQ, ctx: QNumeric, tol: float = POLE_TOLERANCE) -> complex:
    """Value of f at q = exp(4*pi*i/kappa); raises PoleEvaluationError near poles."""
    return f.evaluate(ctx.q_value, tol=tol)
