"""Capability interface of *-monoids and *-rings plus the equational checkers.

Every checker takes the context first and is total: ``False`` is an answer,
never an error signal.
"""
from __future__ import annotations

from abc import ABC, abstractmethod

import matrix as mx
from exceptions import CapabilityError, InputError, InvariantViolation

LEFT = "left"
RIGHT = "right"
MONOID = "monoid"
RING = "ring"


class StarMonoidContext(ABC):
    tier = MONOID

    @property
    @abstractmethod
    def one(self):
        ...

    @abstractmethod
    def mul(self, x, y):
        ...

    @abstractmethod
    def star(self, x):
        ...

    @abstractmethod
    def left_divides(self, u, v):
        """A witness s with s·u = v (v ∈ S·u), or None."""

    @abstractmethod
    def right_divides(self, u, v):
        """A witness s with u·s = v (v ∈ u·S), or None."""

    @abstractmethod
    def sandwich_divides(self, u, w, v):
        """A witness s with u·s·w = v (v ∈ u·S·w), or None."""

    @abstractmethod
    def describe(self):
        ...

    def left_witnesses(self, u, v):
        """Every s with s·u = v when the context can list them, else None."""
        return None

    def right_witnesses(self, u, v):
        return None

    def bc_candidates(self, a, b, c):
        """A superset of the elements that can be a (b,c)-inverse of a, or None."""
        return None

    def eq(self, x, y):
        return x == y

    def elements(self):
        """All elements in canonical order, or None when the context is not enumerable."""
        return None

    @property
    def enumerable(self):
        return self.elements() is not None

    def name(self, x):
        return str(x)

    def prod(self, *xs):
        result = xs[0]
        for x in xs[1:]:
            result = self.mul(result, x)
        return result

    def power(self, x, k):
        if k < 1:
            raise InputError(f"power needs k >= 1, got {k}")
        result = x
        for _ in range(k - 1):
            result = self.mul(result, x)
        return result

    def is_hermitian(self, x):
        return self.eq(self.star(x), x)

    def inner_inverse(self, x):
        """Some g with x·g·x = x, or None when x is not regular."""
        elements = self.elements()
        if elements is None:
            raise CapabilityError(f"{self.describe()} cannot search for inner inverses")
        for g in elements:
            if self.eq(self.prod(x, g, x), x):
                return g
        return None

    def require_ring(self, operation):
        if self.tier != RING:
            raise CapabilityError(f"{operation} needs a *-ring, {self.describe()} is only a *-monoid")


class StarRingContext(StarMonoidContext):
    tier = RING

    @property
    @abstractmethod
    def zero(self):
        ...

    @abstractmethod
    def add(self, x, y):
        ...

    @abstractmethod
    def neg(self, x):
        ...

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def left_invertible(self, e):
        """r with r·e = 1, or None."""
        return self.left_divides(e, self.one)

    def right_invertible(self, e):
        """r with e·r = 1, or None."""
        return self.right_divides(e, self.one)


class MatrixStarContext(StarRingContext):
    """M_n(F) with transpose or conjugate transpose as the involution."""

    def __init__(self, n, field, involution=mx.InvolutionKind.TRANSPOSE):
        self.n = n
        self.field = field
        self.involution = involution
        self._one = mx.identity(n, field)
        self._zero = mx.zero(n, field)

    @property
    def one(self):
        return self._one

    @property
    def zero(self):
        return self._zero

    def mul(self, x, y):
        return mx.mat_mul(x, y)

    def add(self, x, y):
        return mx.mat_add(x, y)

    def neg(self, x):
        return mx.mat_neg(x)

    def star(self, x):
        return mx.star(x, self.involution)

    def left_divides(self, u, v):
        return mx.solve_left(u, v)

    def right_divides(self, u, v):
        return mx.solve_right(u, v)

    def sandwich_divides(self, u, w, v):
        return mx.solve_sandwich(u, w, v)

    def inner_inverse(self, x):
        return mx.inner_inverse(x)

    def left_invertible(self, e):
        return mx.left_inverse_of_element(e)

    def right_invertible(self, e):
        return mx.right_inverse_of_element(e)

    def describe(self):
        return f"M{self.n}({self.field.describe()}) with {self.involution.value}"


# -- equational checkers ---------------------------------------------------

def check_inner(ctx, a, x):
    return ctx.eq(ctx.prod(a, x, a), a)


def check_outer(ctx, a, x):
    return ctx.eq(ctx.prod(x, a, x), x)


def check_mp(ctx, a, x):
    ax = ctx.mul(a, x)
    xa = ctx.mul(x, a)
    return (ctx.eq(ctx.mul(ax, a), a) and ctx.eq(ctx.mul(xa, x), x)
            and ctx.is_hermitian(ax) and ctx.is_hermitian(xa))


def closed_form_13(ctx, a, x):
    return ctx.eq(ctx.prod(ctx.star(x), ctx.star(a), a), a)


def closed_form_14(ctx, a, x):
    return ctx.eq(ctx.prod(a, ctx.star(a), ctx.star(x)), a)


def check_13(ctx, a, x):
    equational = check_inner(ctx, a, x) and ctx.is_hermitian(ctx.mul(a, x))
    if equational != closed_form_13(ctx, a, x):
        raise InvariantViolation(
            f"{{1,3}} forms disagree for a={ctx.name(a)}, x={ctx.name(x)}")
    return equational


def check_14(ctx, a, x):
    equational = check_inner(ctx, a, x) and ctx.is_hermitian(ctx.mul(x, a))
    if equational != closed_form_14(ctx, a, x):
        raise InvariantViolation(
            f"{{1,4}} forms disagree for a={ctx.name(a)}, x={ctx.name(x)}")
    return equational


def check_group(ctx, a, x):
    return (check_inner(ctx, a, x) and check_outer(ctx, a, x)
            and ctx.eq(ctx.mul(a, x), ctx.mul(x, a)))


def check_core(ctx, a, x):
    return (ctx.eq(ctx.prod(a, x, x), x) and ctx.eq(ctx.prod(x, a, a), a)
            and ctx.is_hermitian(ctx.mul(a, x)))


def check_dual_core(ctx, a, x):
    return (ctx.eq(ctx.prod(x, x, a), x) and ctx.eq(ctx.prod(a, a, x), a)
            and ctx.is_hermitian(ctx.mul(x, a)))


def check_left_bc(ctx, a, b, c, x):
    return ctx.left_divides(c, x) is not None and ctx.eq(ctx.prod(x, a, b), b)


def check_right_bc(ctx, a, b, c, z):
    return ctx.right_divides(b, z) is not None and ctx.eq(ctx.prod(c, a, z), c)


def ideal_eq(ctx, u, v, side):
    """Su = Sv (side=left) or uS = vS (side=right)."""
    divides = ctx.left_divides if side == LEFT else ctx.right_divides
    return divides(u, v) is not None and divides(v, u) is not None


def check_bc(ctx, a, b, c, y):
    """yay = y, yS = bS and Sy = Sc."""
    return (check_outer(ctx, a, y) and ideal_eq(ctx, y, b, RIGHT)
            and ideal_eq(ctx, y, c, LEFT))


def check_bc_definition(ctx, a, b, c, y):
    """y ∈ bSy ∩ ySc, yab = b and cay = c."""
    return (ctx.eq(ctx.prod(y, a, b), b) and ctx.eq(ctx.prod(c, a, y), c)
            and ctx.sandwich_divides(b, y, y) is not None
            and ctx.sandwich_divides(y, c, y) is not None)


def check_along(ctx, a, d, y):
    return check_left_along(ctx, a, d, y) and check_right_along(ctx, a, d, y)


def check_left_along(ctx, a, d, y):
    return ctx.eq(ctx.prod(y, a, d), d) and ctx.left_divides(d, y) is not None


def check_right_along(ctx, a, d, y):
    return ctx.eq(ctx.prod(d, a, y), d) and ctx.right_divides(d, y) is not None


def hyp_symmetric(ctx, a, b):
    return ctx.is_hermitian(ctx.mul(a, b))


# -- existence predicates (definitional, via ideal membership) ----------------

def is_left_bc(ctx, a, b, c):
    return ctx.left_divides(ctx.prod(c, a, b), b) is not None


def is_right_bc(ctx, a, b, c):
    return ctx.right_divides(ctx.prod(c, a, b), c) is not None


def is_bc(ctx, a, b, c):
    return is_left_bc(ctx, a, b, c) and is_right_bc(ctx, a, b, c)


def is_left_along(ctx, a, d):
    return is_left_bc(ctx, a, d, d)


def is_right_along(ctx, a, d):
    return is_right_bc(ctx, a, d, d)


def is_along(ctx, a, d):
    return is_bc(ctx, a, d, d)


def in_group(ctx, a):
    return is_bc(ctx, a, a, a)


def in_mp(ctx, a):
    s = ctx.star(a)
    return is_bc(ctx, a, s, s)


def is_core_invertible(ctx, a):
    return is_bc(ctx, a, a, ctx.star(a))


def is_dual_core_invertible(ctx, a):
    return is_bc(ctx, a, ctx.star(a), a)


def is_left_core(ctx, a):
    return is_left_bc(ctx, a, a, ctx.star(a))


def is_right_core(ctx, a):
    return is_right_bc(ctx, a, a, ctx.star(a))


def is_regular(ctx, a):
    return ctx.inner_inverse(a) is not None
