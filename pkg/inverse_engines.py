"""Constructive (b,c)-inverses, their specializations and the witness formulas.

Every construction re-runs the matching checker before returning; a mismatch is
an InvariantViolation rather than a silently wrong element.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Optional

import matrix as mx
from exceptions import InputError, InvariantViolation
from scalars import GAUSSIAN
from star_context import (
    LEFT,
    RIGHT,
    MatrixStarContext,
    check_13,
    check_14,
    check_along,
    check_bc,
    check_core,
    check_dual_core,
    check_group,
    check_inner,
    check_left_bc,
    check_mp,
    check_right_bc,
    hyp_symmetric,
    is_core_invertible,
    is_dual_core_invertible,
    in_mp,
)


class InverseTag(enum.Enum):
    MP = "mp"
    GROUP = "group"
    CORE = "core"
    DUAL_CORE = "dualcore"
    ALONG = "along"
    BC = "bc"
    ONE_THREE = "13"
    ONE_FOUR = "14"


@dataclass(frozen=True)
class InverseKind:
    tag: InverseTag
    b: Any = None
    c: Any = None

    @classmethod
    def along(cls, d):
        return cls(InverseTag.ALONG, d, d)

    @classmethod
    def bc(cls, b, c):
        return cls(InverseTag.BC, b, c)


@dataclass
class EpVerdict:
    is_ep: bool
    group: Optional[Any] = None
    mp: Optional[Any] = None
    core: Optional[Any] = None
    dual_core: Optional[Any] = None

    def witnesses(self):
        return {"group": self.group, "mp": self.mp, "core": self.core, "dual_core": self.dual_core}


@dataclass
class AlongResult:
    along: Any
    d_14: Any
    side: str = LEFT


def _fault(ctx, what, **elements):
    shown = ", ".join(f"{k}={ctx.name(v)}" for k, v in elements.items())
    raise InvariantViolation(f"{what} ({shown}) in {ctx.describe()}")


def _require(condition, message):
    if not condition:
        raise InputError(message)


# -- (b,c)-inverses -------------------------------------------------------------

def left_bc_inverse(ctx, a, b, c):
    """x = s·c where s·(cab) = b, or None when b ∉ S·cab."""
    s = ctx.left_divides(ctx.prod(c, a, b), b)
    if s is None:
        return None
    x = ctx.mul(s, c)
    if not check_left_bc(ctx, a, b, c, x):
        _fault(ctx, "left (b,c)-inverse failed its check", a=a, b=b, c=c, x=x)
    return x


def right_bc_inverse(ctx, a, b, c):
    """z = b·u where (cab)·u = c, or None when c ∉ cab·S."""
    u = ctx.right_divides(ctx.prod(c, a, b), c)
    if u is None:
        return None
    z = ctx.mul(b, u)
    if not check_right_bc(ctx, a, b, c, z):
        _fault(ctx, "right (b,c)-inverse failed its check", a=a, b=b, c=c, z=z)
    return z


def _all_one_sided_inverses(ctx, a, b, c):
    cab = ctx.prod(c, a, b)
    lefts = ctx.left_witnesses(cab, b)
    rights = ctx.right_witnesses(cab, c)
    if lefts is None or rights is None:
        return None
    found = {ctx.mul(s, c) for s in lefts}
    found.update(ctx.mul(b, u) for u in rights)
    return found


def bc_inverse(ctx, a, b, c):
    x = left_bc_inverse(ctx, a, b, c)
    if x is None:
        return None
    z = right_bc_inverse(ctx, a, b, c)
    if z is None:
        return None
    if not ctx.eq(x, z):
        _fault(ctx, "left and right (b,c)-inverses differ", a=a, b=b, c=c, x=x, z=z)
    everything = _all_one_sided_inverses(ctx, a, b, c)
    if everything is not None and everything != {x}:
        _fault(ctx, "one-sided (b,c)-inverses are not all equal", a=a, b=b, c=c)
    if not check_bc(ctx, a, b, c, x):
        _fault(ctx, "(b,c)-inverse failed its check", a=a, b=b, c=c, y=x)
    return x


_CHECKERS = {
    InverseTag.MP: check_mp,
    InverseTag.GROUP: check_group,
    InverseTag.CORE: check_core,
    InverseTag.DUAL_CORE: check_dual_core,
    InverseTag.ONE_THREE: check_13,
    InverseTag.ONE_FOUR: check_14,
}


def named_inverse(ctx, a, kind: InverseKind):
    tag = kind.tag
    s = ctx.star(a)
    if tag is InverseTag.ONE_THREE:
        # a = x*·a*·a  <=>  x* is a left witness of a ∈ S·a*a
        w = ctx.left_divides(ctx.mul(s, a), a)
        result = None if w is None else ctx.star(w)
    elif tag is InverseTag.ONE_FOUR:
        w = ctx.right_divides(ctx.mul(a, s), a)
        result = None if w is None else ctx.star(w)
    else:
        b, c = {
            InverseTag.MP: (s, s),
            InverseTag.GROUP: (a, a),
            InverseTag.CORE: (a, s),
            InverseTag.DUAL_CORE: (s, a),
            InverseTag.ALONG: (kind.b, kind.c),
            InverseTag.BC: (kind.b, kind.c),
        }[tag]
        if b is None or c is None:
            raise InputError(f"{tag.value} inverse needs its parameter elements")
        result = bc_inverse(ctx, a, b, c)
    if result is None:
        return None
    if tag is InverseTag.ALONG:
        passed = check_along(ctx, a, kind.b, result)
    elif tag is InverseTag.BC:
        passed = True
    else:
        passed = _CHECKERS[tag](ctx, a, result)
    if not passed:
        _fault(ctx, f"{tag.value} inverse failed its check", a=a, x=result)
    return result


def is_ep(ctx, a):
    """Definition: a† and a# both exist and coincide."""
    mp = named_inverse(ctx, a, InverseKind(InverseTag.MP))
    if mp is None:
        return False
    group = named_inverse(ctx, a, InverseKind(InverseTag.GROUP))
    return group is not None and ctx.eq(mp, group)


def ep_check(ctx, a):
    group = named_inverse(ctx, a, InverseKind(InverseTag.GROUP))
    has_mp_and_group = group is not None and in_mp(ctx, a)
    has_cores = is_core_invertible(ctx, a) and is_dual_core_invertible(ctx, a)
    if has_mp_and_group != has_cores:
        _fault(ctx, "S†∩S# and S⊕∩S_⊕ memberships disagree", a=a)
    if group is None:
        return EpVerdict(False)
    ag = ctx.mul(a, group)
    if not ctx.is_hermitian(ag):
        return EpVerdict(False, group=group)
    verdict = EpVerdict(
        True,
        group=group,
        mp=named_inverse(ctx, a, InverseKind(InverseTag.MP)),
        core=named_inverse(ctx, a, InverseKind(InverseTag.CORE)),
        dual_core=named_inverse(ctx, a, InverseKind(InverseTag.DUAL_CORE)),
    )
    for name, value in verdict.witnesses().items():
        if value is None or not ctx.eq(value, group):
            _fault(ctx, f"EP element has a missing or different {name} inverse", a=a)
    return verdict


# -- witnesses for symmetric (b,c) pairs and one-sided core inverses -----------

def thm36_left_construct(ctx, a, b, c, x, y):
    """(a^‖(b,c), a^‖(c,b)) = (x·c, y·b) from b = x·cab and c = y·bac."""
    _require(hyp_symmetric(ctx, a, b) and hyp_symmetric(ctx, a, c), "needs (ab)* = ab and (ac)* = ac")
    _require(ctx.eq(ctx.prod(x, c, a, b), b), "needs b = x·c·a·b")
    _require(ctx.eq(ctx.prod(y, b, a, c), c), "needs c = y·b·a·c")
    inv_bc = ctx.mul(x, c)
    inv_cb = ctx.mul(y, b)
    if not check_bc(ctx, a, b, c, inv_bc):
        _fault(ctx, "x·c is not the (b,c)-inverse", a=a, b=b, c=c, x=x)
    if not check_bc(ctx, a, c, b, inv_cb):
        _fault(ctx, "y·b is not the (c,b)-inverse", a=a, b=b, c=c, y=y)
    return inv_bc, inv_cb


def thm36_right_construct(ctx, a, b, c, x, y):
    """(a^‖(b,c), a^‖(c,b)) = (b·y, c·x) from b = bac·x and c = cab·y."""
    _require(hyp_symmetric(ctx, a, b) and hyp_symmetric(ctx, a, c), "needs (ab)* = ab and (ac)* = ac")
    _require(ctx.eq(ctx.prod(b, a, c, x), b), "needs b = b·a·c·x")
    _require(ctx.eq(ctx.prod(c, a, b, y), c), "needs c = c·a·b·y")
    inv_bc = ctx.mul(b, y)
    inv_cb = ctx.mul(c, x)
    # the left-handed expressions b·y*·x*·a·c and c·x*·y*·a·b must agree
    long_bc = ctx.prod(b, ctx.star(y), ctx.star(x), a, c)
    long_cb = ctx.prod(c, ctx.star(x), ctx.star(y), a, b)
    if not ctx.eq(long_bc, inv_bc) or not ctx.eq(long_cb, inv_cb):
        _fault(ctx, "b·y*·x*·a·c differs from b·y", a=a, b=b, c=c, x=x, y=y)
    if not check_bc(ctx, a, b, c, inv_bc):
        _fault(ctx, "b·y is not the (b,c)-inverse", a=a, b=b, c=c, y=y)
    if not check_bc(ctx, a, c, b, inv_cb):
        _fault(ctx, "c·x is not the (c,b)-inverse", a=a, b=b, c=c, x=x)
    return inv_bc, inv_cb


def cor37_along(ctx, a, d, side, x):
    _require(hyp_symmetric(ctx, a, d), "needs (ad)* = ad")
    if side == LEFT:
        _require(ctx.eq(ctx.prod(x, d, a, d), d), "needs d = x·d·a·d")
        along = ctx.mul(x, d)
        d_14 = ctx.mul(a, x)
    elif side == RIGHT:
        _require(ctx.eq(ctx.prod(d, a, d, x), d), "needs d = d·a·d·x")
        along = ctx.mul(d, x)
        d_14 = ctx.mul(ctx.star(x), a)
    else:
        raise InputError(f"unknown side '{side}'")
    if not check_bc(ctx, a, d, d, along):
        _fault(ctx, f"{side} witness does not give the inverse along d", a=a, d=d, x=x)
    if not check_14(ctx, d, d_14):
        _fault(ctx, f"{side} witness does not give a {{1,4}}-inverse of d", a=a, d=d, x=x)
    return AlongResult(along, d_14, side)


def _assert_ep_bundle(ctx, a, verdict):
    checks = (
        ("core", check_core), ("dual_core", check_dual_core),
        ("group", check_group), ("mp", check_mp),
    )
    for name, checker in checks:
        value = getattr(verdict, name)
        if not checker(ctx, a, value):
            _fault(ctx, f"{name} formula failed its check", a=a, value=value)
        if not ctx.eq(value, verdict.core):
            _fault(ctx, f"{name} formula differs from the core inverse", a=a)
    if not ctx.is_hermitian(ctx.mul(a, verdict.group)):
        _fault(ctx, "a·a# is not Hermitian", a=a)
    return verdict


def thm39_from_left_witness(ctx, a, x):
    """a = x·a*·a² gives a⊕ = x·a*, a_⊕ = (ax)²·a, a# = a·((ax)*)² = a†."""
    a2 = ctx.mul(a, a)
    s = ctx.star(a)
    _require(ctx.is_hermitian(a2), "needs (a²)* = a²")
    _require(ctx.eq(ctx.prod(x, s, a2), a), "needs a = x·a*·a²")
    ax = ctx.mul(a, x)
    axs = ctx.star(ax)
    group = ctx.prod(a, axs, axs)
    verdict = EpVerdict(True, group=group, mp=group, core=ctx.mul(x, s), dual_core=ctx.prod(ax, ax, a))
    return _assert_ep_bundle(ctx, a, verdict)


def thm39_from_right_witness(ctx, a, y):
    """a* = a*·a²·y gives a⊕ = a·y and a_⊕ = a# = a·(ya)² = a†."""
    a2 = ctx.mul(a, a)
    s = ctx.star(a)
    _require(ctx.is_hermitian(a2), "needs (a²)* = a²")
    _require(ctx.eq(ctx.prod(s, a2, y), s), "needs a* = a*·a²·y")
    ya = ctx.mul(y, a)
    group = ctx.prod(a, ya, ya)
    verdict = EpVerdict(True, group=group, mp=group, core=ctx.mul(a, y), dual_core=group)
    return _assert_ep_bundle(ctx, a, verdict)


# -- power witnesses -----------------------------------------------------------------

def cor45_witness(ctx, a, d, t, s, k, side=LEFT):
    """Left: d = t·dad and d = s·d² give d = (s·t^k)·d(ad)^k·d.
    Right: d = dad·t and d = d²·s give d = d(da)^k·d·(t^k·s)."""
    tk = ctx.power(t, k)
    if side == LEFT:
        _require(ctx.eq(ctx.prod(t, d, a, d), d) and ctx.eq(ctx.prod(s, d, d), d),
                 "needs d = t·d·a·d and d = s·d²")
        w = ctx.mul(s, tk)
        target = ctx.prod(w, d, ctx.power(ctx.mul(a, d), k), d)
    else:
        _require(ctx.eq(ctx.prod(d, a, d, t), d) and ctx.eq(ctx.prod(d, d, s), d),
                 "needs d = d·a·d·t and d = d²·s")
        w = ctx.mul(tk, s)
        target = ctx.prod(d, ctx.power(ctx.mul(d, a), k), d, w)
    if not ctx.eq(target, d):
        _fault(ctx, f"{side} power witness does not reproduce d", a=a, d=d, k_witness=w)
    return w


def thm53_witness(ctx, a, d, t, s, k):
    """d = t·dad and d = s·d² give d = (t^k·s)·d(da)^k·d."""
    _require(ctx.eq(ctx.prod(t, d, a, d), d) and ctx.eq(ctx.prod(s, d, d), d),
             "needs d = t·d·a·d and d = s·d²")
    w = ctx.mul(ctx.power(t, k), s)
    if not ctx.eq(ctx.prod(w, d, ctx.power(ctx.mul(d, a), k), d), d):
        _fault(ctx, "t^k·s does not reproduce d", a=a, d=d)
    return w


def thm54_witness(ctx, a, d, h, s, k):
    """d = dad·h and d = d²·s give d = d(ad)^k·d·(s·h^k)."""
    _require(ctx.eq(ctx.prod(d, a, d, h), d) and ctx.eq(ctx.prod(d, d, s), d),
             "needs d = d·a·d·h and d = d²·s")
    w = ctx.mul(s, ctx.power(h, k))
    if not ctx.eq(ctx.prod(d, ctx.power(ctx.mul(a, d), k), d, w), d):
        _fault(ctx, "s·h^k does not reproduce d", a=a, d=d)
    return w


# -- ring-tier constructions ------------------------------------------------------------

def _check_ring_args(ctx, m, m_inner, k, operation):
    ctx.require_ring(operation)
    _require(k >= 1, f"k must be at least 1, got {k}")
    _require(check_inner(ctx, m, m_inner), "m_inner is not an inner inverse of m")


def unit_u(ctx, a, m, m_inner, k):
    """u = (am)^k + 1 − m⁻m."""
    _check_ring_args(ctx, m, m_inner, k, "unit_u")
    return ctx.sub(ctx.add(ctx.power(ctx.mul(a, m), k), ctx.one), ctx.mul(m_inner, m))


def unit_v(ctx, a, m, m_inner, k):
    """v = (ma)^k + 1 − m·m⁻."""
    _check_ring_args(ctx, m, m_inner, k, "unit_v")
    return ctx.sub(ctx.add(ctx.power(ctx.mul(m, a), k), ctx.one), ctx.mul(m, m_inner))


def jacobson_transfer(ctx, x, y, r):
    """From r·(1 + xy) = 1 return r' = 1 − y·r·x with r'·(1 + yx) = 1."""
    ctx.require_ring("jacobson_transfer")
    one = ctx.one
    _require(ctx.eq(ctx.mul(r, ctx.add(one, ctx.mul(x, y))), one), "needs r·(1 + xy) = 1")
    transferred = ctx.sub(one, ctx.prod(y, r, x))
    if not ctx.eq(ctx.mul(transferred, ctx.add(one, ctx.mul(y, x))), one):
        _fault(ctx, "Jacobson transfer failed", x=x, y=y, r=r)
    return transferred


def factorization_holds(ctx, a, d, d_inner, k):
    """(d²d⁻ + 1 − dd⁻)·((da)^k + 1 − dd⁻) = d(da)^k + 1 − dd⁻."""
    ctx.require_ring("factorization_holds")
    one = ctx.one
    e = ctx.mul(d, d_inner)
    dak = ctx.power(ctx.mul(d, a), k)
    left = ctx.sub(ctx.add(ctx.prod(d, d, d_inner), one), e)
    right = ctx.sub(ctx.add(dak, one), e)
    target = ctx.sub(ctx.add(ctx.mul(d, dak), one), e)
    return ctx.eq(ctx.mul(left, right), target)


def thm53_left_chain(ctx, a, d, d_inner, k):
    """Ring route from "(da)^k left invertible along d" to d ∈ R·d².

    Returns r with r·(d + 1 − dd⁻) = 1 and d = r·d².
    """
    ctx.require_ring("thm53_left_chain")
    one = ctx.one
    if not factorization_holds(ctx, a, d, d_inner, k):
        _fault(ctx, "factorization identity fails", a=a, d=d)
    e = ctx.mul(d, d_inner)
    p = ctx.sub(ctx.add(ctx.prod(d, d, d_inner), one), e)
    r0 = ctx.left_invertible(p)
    if r0 is None:
        _fault(ctx, "d²d⁻ + 1 − dd⁻ is not left invertible", a=a, d=d)
    r = jacobson_transfer(ctx, ctx.sub(d, one), e, r0)
    if not ctx.eq(ctx.prod(r, d, d), d):
        _fault(ctx, "transferred inverse does not give d = r·d²", a=a, d=d)
    return r


# -- independent Moore–Penrose cross-check -------------------------------------------------

def mp_cross_check(ctx, a):
    """Compare bc_inverse(a, a*, a*) with the rank-factorization oracle.

    Returns None when no oracle applies (transpose involution or Z_p).
    """
    if not isinstance(ctx, MatrixStarContext):
        return None
    if ctx.field.kind != GAUSSIAN or ctx.involution is not mx.InvolutionKind.CONJUGATE_TRANSPOSE:
        return None
    s = ctx.star(a)
    computed = bc_inverse(ctx, a, s, s)
    oracle = mx.mp_oracle(a)
    return computed is not None and ctx.eq(computed, oracle)
