"""Exact scalars closed under an involution: Q(i) and Z_m.

Rationals are plain ``fractions.Fraction`` values; ``GaussianRational`` pairs two of
them and ``ModularInt`` carries its modulus. All values are immutable.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Integral

from exceptions import InputError, ScalarDivisionError, UnsupportedContextError

GAUSSIAN = "gaussian_rational"
ZMOD = "zmod"


def normalize(num, den=1):
    """Reduce ``num/den`` to lowest terms with a positive denominator."""
    num, den = _as_integer(num, "numerator"), _as_integer(den, "denominator")
    if den == 0:
        raise InputError("zero denominator")
    return Fraction(num, den)


def _as_integer(value, what):
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return int(value)


@lru_cache(maxsize=None)
def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Integral):
        return Fraction(int(value))
    raise InputError(f"cannot use {value!r} as a rational component")


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (Integral, Fraction)):
            return GaussianRational(other)
        raise InputError(f"cannot combine a Gaussian rational with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def inverse(self):
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ScalarDivisionError("inversion of zero in Q(i)")
        return GaussianRational(self.re / norm, -self.im / norm)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __str__(self):
        return format_scalar(self)


@dataclass(frozen=True)
class ModularInt:
    value: int
    modulus: int

    def __post_init__(self):
        modulus = _as_integer(self.modulus, "modulus")
        if modulus < 2:
            raise InputError(f"modulus must be at least 2, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", _as_integer(self.value, "value") % modulus)

    def _coerce(self, other):
        if isinstance(other, ModularInt):
            if other.modulus != self.modulus:
                raise InputError(f"moduli differ: {self.modulus} and {other.modulus}")
            return other
        if isinstance(other, Integral):
            return ModularInt(int(other), self.modulus)
        raise InputError(f"cannot combine an integer mod {self.modulus} with {type(other).__name__}")

    def __add__(self, other):
        return ModularInt(self.value + self._coerce(other).value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return ModularInt(self.value - self._coerce(other).value, self.modulus)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return ModularInt(self.value * self._coerce(other).value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ModularInt(-self.value, self.modulus)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __bool__(self):
        return self.value != 0

    def inverse(self):
        if not is_prime(self.modulus):
            raise UnsupportedContextError(f"inversion needs a prime modulus, got {self.modulus}")
        if self.value == 0:
            raise ScalarDivisionError(f"inversion of zero mod {self.modulus}")
        return ModularInt(pow(self.value, -1, self.modulus), self.modulus)

    def conjugate(self):
        return self

    def __str__(self):
        return format_scalar(self)


def _kind(x):
    if isinstance(x, GaussianRational):
        return (GAUSSIAN, None)
    if isinstance(x, ModularInt):
        return (ZMOD, x.modulus)
    if isinstance(x, Fraction):
        return ("rational", None)
    raise InputError(f"not a scalar: {x!r}")


def scalar_op(x, y, op):
    """Apply ``add``, ``mul``, ``neg`` or ``inv``; ``y`` is ignored by the unary ones."""
    if op in ("add", "mul"):
        if _kind(x) != _kind(y):
            raise InputError(f"mixed scalar kinds: {_kind(x)} and {_kind(y)}")
        return x + y if op == "add" else x * y
    if op == "neg":
        _kind(x)
        return -x
    if op == "inv":
        if isinstance(x, Fraction):
            if x == 0:
                raise ScalarDivisionError("inversion of zero in Q")
            return 1 / x
        _kind(x)
        return x.inverse()
    raise InputError(f"unknown scalar operation '{op}'")


def conjugate(x):
    if isinstance(x, Fraction):
        return x
    return x.conjugate()


def _format_fraction(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x):
    if isinstance(x, ModularInt):
        return str(x.value)
    if isinstance(x, Fraction):
        return _format_fraction(x)
    if x.im == 0:
        return _format_fraction(x.re)
    magnitude = abs(x.im)
    im_text = "" if magnitude == 1 else _format_fraction(magnitude)
    if x.re == 0:
        return ("-" if x.im < 0 else "") + im_text + "i"
    return _format_fraction(x.re) + ("-" if x.im < 0 else "+") + im_text + "i"


def _parse_integer(text, offset, start, allow_sign):
    i = start
    if allow_sign and i < len(text) and text[i] in "+-":
        i += 1
    digits = i
    while i < len(text) and text[i].isdigit():
        i += 1
    if i == digits:
        raise InputError(f"expected a digit in '{text}'", position=offset + i)
    return int(text[start:i]), i


def _parse_rational(text, offset):
    num, i = _parse_integer(text, offset, 0, allow_sign=True)
    den = 1
    if i < len(text) and text[i] == "/":
        slash = i
        den, i = _parse_integer(text, offset, i + 1, allow_sign=False)
        if den == 0:
            raise InputError(f"zero denominator in '{text}'", position=offset + slash)
    if i != len(text):
        raise InputError(f"unexpected character '{text[i]}'", position=offset + i)
    return Fraction(num, den)


def _parse_gaussian(text):
    if not text:
        raise InputError("empty scalar literal", position=0)
    if not text.endswith("i"):
        return GaussianRational(_parse_rational(text, 0))
    body = text[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        re_text, im_text, im_offset = body[:split], body[split:], split
    else:
        re_text, im_text, im_offset = "", body, 0
    if im_text in ("", "+"):
        im = Fraction(1)
    elif im_text == "-":
        im = Fraction(-1)
    else:
        if im_text[-1] in "+-/":
            raise InputError(f"malformed imaginary part in '{text}'", position=len(body))
        im = _parse_rational(im_text, im_offset)
    re = _parse_rational(re_text, 0) if re_text else Fraction(0)
    return GaussianRational(re, im)


def parse_scalar(text, kind, modulus=None):
    text = text.strip()
    if kind == GAUSSIAN:
        return _parse_gaussian(text)
    if kind == ZMOD:
        if modulus is None:
            raise InputError("zmod scalars need a modulus")
        value, end = _parse_integer(text, 0, 0, allow_sign=True)
        if end != len(text):
            raise InputError(f"unexpected character '{text[end]}'", position=end)
        return ModularInt(value, modulus)
    raise InputError(f"unknown field kind '{kind}'")


@dataclass(frozen=True)
class ScalarField:
    """Field tag carried by matrices: Q(i) or Z_m."""
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == ZMOD:
            if self.modulus is None:
                raise InputError("zmod field needs a modulus")
            modulus = _as_integer(self.modulus, "modulus")
            if modulus < 2:
                raise InputError(f"zmod field needs a modulus >= 2, got {modulus}")
            object.__setattr__(self, "modulus", modulus)
        elif self.kind == GAUSSIAN:
            if self.modulus is not None:
                raise InputError("Gaussian rationals take no modulus")
        else:
            raise InputError(f"unknown field kind '{self.kind}'")

    @property
    def is_field(self):
        return self.kind == GAUSSIAN or is_prime(self.modulus)

    def from_int(self, n):
        if self.kind == GAUSSIAN:
            return GaussianRational(n)
        return ModularInt(n, self.modulus)

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def imaginary_unit(self):
        if self.kind != GAUSSIAN:
            raise UnsupportedContextError("Z_m has no imaginary unit")
        return GaussianRational(0, 1)

    def parse(self, text):
        return parse_scalar(text, self.kind, self.modulus)

    def contains(self, x):
        if self.kind == GAUSSIAN:
            return isinstance(x, GaussianRational)
        return isinstance(x, ModularInt) and x.modulus == self.modulus

    def elements(self):
        if self.kind != ZMOD:
            raise UnsupportedContextError("only Z_m is finite")
        return [ModularInt(v, self.modulus) for v in range(self.modulus)]

    def random(self, rng: random.Random, bound=3):
        if self.kind == ZMOD:
            return ModularInt(rng.randrange(self.modulus), self.modulus)
        return GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))

    def describe(self):
        return "Q(i)" if self.kind == GAUSSIAN else f"Z{self.modulus}"

    def to_json(self):
        data = {"field": self.kind}
        if self.kind == ZMOD:
            data["modulus"] = self.modulus
        return data


QI = ScalarField(GAUSSIAN)
