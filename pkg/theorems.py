"""Registry of the verifiable statements.

Each entry evaluates every numbered clause of its statement with the definitional
predicates of ``star_context`` and compares them; the constructive formulas the
statements attach are run afterwards as independent confirmations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import inverse_engines as ie
from exceptions import InputError, InvariantViolation
from star_context import (
    LEFT,
    MONOID,
    RIGHT,
    RING,
    check_bc,
    check_bc_definition,
    check_inner,
    closed_form_13,
    closed_form_14,
    hyp_symmetric,
    ideal_eq,
    in_group,
    in_mp,
    is_along,
    is_bc,
    is_core_invertible,
    is_dual_core_invertible,
    is_left_along,
    is_left_bc,
    is_left_core,
    is_regular,
    is_right_along,
    is_right_bc,
    is_right_core,
)

# linear constraints the seeded matrix generator can satisfy by construction
HYP_NONE = "none"
HYP_AD = "ad"
HYP_DA = "da"
HYP_AD_DA = "ad+da"
HYP_A2 = "a2"
HYP_AB_AC = "ab+ac"


@dataclass(frozen=True)
class Instance:
    elements: tuple
    k: Optional[int] = None

    @property
    def a(self):
        return self.elements[0]

    @property
    def d(self):
        return self.elements[1]

    @property
    def b(self):
        return self.elements[1]

    @property
    def c(self):
        return self.elements[2]


@dataclass(frozen=True)
class Clause:
    label: str
    holds: Callable


@dataclass(frozen=True)
class ClauseGroup:
    name: str
    clauses: tuple
    guard: Optional[Callable] = None


@dataclass(frozen=True)
class Formula:
    label: str
    run: Callable  # (ctx, inst, truth) -> number of checks performed


@dataclass(frozen=True)
class Theorem:
    tag: str
    title: str
    roles: tuple
    hypothesis: str
    groups: tuple
    formulas: tuple = ()
    tier: str = MONOID
    k_dependent: bool = False
    exploratory: bool = False

    @property
    def arity(self):
        return len(self.roles)

    def hypothesis_holds(self, ctx, inst):
        a = inst.a
        if self.hypothesis == HYP_AD and not hyp_symmetric(ctx, a, inst.d):
            return False
        if self.hypothesis == HYP_DA and not hyp_symmetric(ctx, inst.d, a):
            return False
        if self.hypothesis == HYP_AD_DA and not (
                hyp_symmetric(ctx, a, inst.d) and hyp_symmetric(ctx, inst.d, a)):
            return False
        if self.hypothesis == HYP_A2 and not ctx.is_hermitian(ctx.mul(a, a)):
            return False
        if self.hypothesis == HYP_AB_AC and not (
                hyp_symmetric(ctx, a, inst.b) and hyp_symmetric(ctx, a, inst.c)):
            return False
        return True


def _confirm(condition, message):
    if not condition:
        raise InvariantViolation(message)


# -- shared predicates ----------------------------------------------------------

def _sq_left(ctx, x):
    """Sx = Sx²."""
    return ideal_eq(ctx, x, ctx.mul(x, x), LEFT)


def _sq_right(ctx, x):
    return ideal_eq(ctx, x, ctx.mul(x, x), RIGHT)


def _bc_candidates(ctx, a, b, c):
    found = ctx.bc_candidates(a, b, c)
    if found is not None:
        return found
    if ctx.elements() is not None:
        return ctx.elements()
    # Non-enumerable contexts: this clause is engine-seeded. The left/right engine outputs and the
    # guesses 0, 1, b, c are only candidates; each is still judged by the definitional checkers.
    guesses = [ie.left_bc_inverse(ctx, a, b, c), ie.right_bc_inverse(ctx, a, b, c),
               ctx.zero, ctx.one, b, c]
    unique = []
    for g in guesses:
        if g is not None and not any(ctx.eq(g, u) for u in unique):
            unique.append(g)
    return unique


def _exists_by_definition(ctx, inst):
    a, b, c = inst.elements
    return any(check_bc_definition(ctx, a, b, c, y) for y in _bc_candidates(ctx, a, b, c))


def _exists_by_ideal_form(ctx, inst):
    a, b, c = inst.elements
    return any(check_bc(ctx, a, b, c, y) for y in _bc_candidates(ctx, a, b, c))


def _both_bc(ctx, a, b, c):
    return is_bc(ctx, a, b, c) and is_bc(ctx, a, c, b)


def _power_along(ctx, base, d, k, predicate):
    return predicate(ctx, ctx.power(base, k), d)


# -- formulas ------------------------------------------------------------------------

def _formula_bc_unique(ctx, inst, truth):
    if not truth.get("existence"):
        return 0
    a, b, c = inst.elements
    y = ie.bc_inverse(ctx, a, b, c)
    _confirm(y is not None and check_bc_definition(ctx, a, b, c, y),
             "(b,c)-inverse missing although both one-sided conditions hold")
    return 1


def _formula_bc_forms_agree(ctx, inst, truth):
    a, b, c = inst.elements
    checked = 0
    solutions = []
    for y in _bc_candidates(ctx, a, b, c):
        holds = check_bc_definition(ctx, a, b, c, y)
        _confirm(holds == check_bc(ctx, a, b, c, y),
                 f"defining and ideal forms disagree at y={ctx.name(y)}")
        if holds:
            solutions.append(y)
        checked += 1
    # the candidates hold every (b,c)-inverse, so at most one may pass
    _confirm(len(solutions) <= 1,
             f"{len(solutions)} (b,c)-inverses: {', '.join(ctx.name(y) for y in solutions)}")
    return checked


def _formula_engine_13_14(ctx, inst, truth):
    a = inst.a
    x13 = ie.named_inverse(ctx, a, ie.InverseKind(ie.InverseTag.ONE_THREE))
    x14 = ie.named_inverse(ctx, a, ie.InverseKind(ie.InverseTag.ONE_FOUR))
    _confirm((x13 is not None) == (ctx.left_divides(ctx.mul(ctx.star(a), a), a) is not None),
             "{1,3} engine and a ∈ S·a*a disagree")
    _confirm((x14 is not None) == (ctx.right_divides(ctx.mul(a, ctx.star(a)), a) is not None),
             "{1,4} engine and a ∈ a·a*S disagree")
    return 2


def _formula_ep_verdict(ctx, inst, truth):
    if truth.get("ep") is None:
        return 0
    verdict = ie.ep_check(ctx, inst.a)
    _confirm(verdict.is_ep == truth.get("ep"), "ep_check disagrees with the definition")
    return 1


def _formula_thm36_left(ctx, inst, truth):
    if not truth.get("left"):
        return 0
    a, b, c = inst.elements
    x = ctx.left_divides(ctx.prod(c, a, b), b)
    y = ctx.left_divides(ctx.prod(b, a, c), c)
    inv_bc, inv_cb = ie.thm36_left_construct(ctx, a, b, c, x, y)
    _confirm(ctx.eq(inv_bc, ie.bc_inverse(ctx, a, b, c)), "x·c differs from the (b,c)-inverse")
    _confirm(ctx.eq(inv_cb, ie.bc_inverse(ctx, a, c, b)), "y·b differs from the (c,b)-inverse")
    return 2


def _formula_thm36_right(ctx, inst, truth):
    if not truth.get("right"):
        return 0
    a, b, c = inst.elements
    x = ctx.right_divides(ctx.prod(b, a, c), b)
    y = ctx.right_divides(ctx.prod(c, a, b), c)
    ie.thm36_right_construct(ctx, a, b, c, x, y)
    return 2


def _formula_cor37(ctx, inst, truth):
    a, d = inst.elements
    checked = 0
    dad = ctx.prod(d, a, d)
    if truth.get("left"):
        ie.cor37_along(ctx, a, d, LEFT, ctx.left_divides(dad, d))
        checked += 1
    if truth.get("right"):
        ie.cor37_along(ctx, a, d, RIGHT, ctx.right_divides(dad, d))
        checked += 1
    return checked


def _formula_thm39(ctx, inst, truth):
    if not truth.get("core"):
        return 0
    a = inst.a
    s = ctx.star(a)
    sa2 = ctx.prod(s, a, a)
    left = ie.thm39_from_left_witness(ctx, a, ctx.left_divides(sa2, a))
    right = ie.thm39_from_right_witness(ctx, a, ctx.right_divides(sa2, s))
    _confirm(ctx.eq(left.core, right.core), "left and right witness bundles differ")
    return 2


def _formula_bc_of_products(ctx, inst, truth):
    if not truth.get("two-sided"):
        return 0
    a, b, c = inst.elements
    ba, ca = ctx.mul(b, a), ctx.mul(c, a)
    _confirm(ie.bc_inverse(ctx, ba, c, b) is not None, "ba has no (c,b)-inverse")
    _confirm(ie.bc_inverse(ctx, ca, b, c) is not None, "ca has no (b,c)-inverse")
    return 2


def _formula_cor45(ctx, inst, truth):
    a, d = inst.elements
    dad, dd = ctx.prod(d, a, d), ctx.mul(d, d)
    checked = 0
    if truth.get("left"):
        ie.cor45_witness(ctx, a, d, ctx.left_divides(dad, d), ctx.left_divides(dd, d), inst.k, LEFT)
        checked += 1
    if truth.get("right"):
        ie.cor45_witness(ctx, a, d, ctx.right_divides(dad, d), ctx.right_divides(dd, d), inst.k, RIGHT)
        checked += 1
    return checked


def _formula_along_of_da(ctx, inst, truth):
    if not truth.get("along"):
        return 0
    a, d = inst.elements
    da = ctx.power(ctx.mul(d, a), inst.k or 1)
    _confirm(ie.named_inverse(ctx, da, ie.InverseKind.along(d)) is not None,
             "power of da has no inverse along d")
    return 1


def _formula_unit_transfer(side):
    def run(ctx, inst, truth):
        if not truth.get("units"):
            return 0
        a, m = inst.elements
        m_inner = ctx.inner_inverse(m)
        finder = ctx.left_invertible if side == LEFT else ctx.right_invertible
        u = ie.unit_u(ctx, a, m, m_inner, inst.k)
        v = ie.unit_v(ctx, a, m, m_inner, inst.k)
        one = ctx.one
        r = finder(u)
        if r is not None:
            product = ctx.mul(r, u) if side == LEFT else ctx.mul(u, r)
            _confirm(ctx.eq(product, one), f"{side} inverse of u does not invert it")
        r = finder(v)
        if r is not None:
            product = ctx.mul(r, v) if side == LEFT else ctx.mul(v, r)
            _confirm(ctx.eq(product, one), f"{side} inverse of v does not invert it")
        return 2
    return run


def _formula_thm53(ctx, inst, truth):
    if not truth.get("main"):
        return 0
    a, d = inst.elements
    ie.thm53_witness(ctx, a, d, ctx.left_divides(ctx.prod(d, a, d), d),
                     ctx.left_divides(ctx.mul(d, d), d), inst.k)
    if ctx.tier != RING:
        return 1
    ie.thm53_left_chain(ctx, a, d, ctx.inner_inverse(d), inst.k)
    return 2


def _formula_thm54(ctx, inst, truth):
    if not truth.get("main"):
        return 0
    a, d = inst.elements
    ie.thm54_witness(ctx, a, d, ctx.right_divides(ctx.prod(d, a, d), d),
                     ctx.right_divides(ctx.mul(d, d), d), inst.k)
    return 1


def _formula_thm55(ctx, inst, truth):
    if not truth.get("main"):
        return 0
    a, d = inst.elements
    ie.thm53_witness(ctx, a, d, ctx.left_divides(ctx.prod(d, a, d), d),
                     ctx.left_divides(ctx.mul(d, d), d), inst.k)
    return 1


def _formula_ep_bundle(ctx, inst, truth):
    if not truth.get("ep"):
        return 0
    verdict = ie.ep_check(ctx, inst.a)
    _confirm(verdict.is_ep, "EP element rejected by ep_check")
    return 1


# -- registry --------------------------------------------------------------------------

def _c(label, holds):
    return Clause(label, holds)


def _build_registry():
    arity3 = ("a", "b", "c")
    ad = ("a", "d")
    return (
        Theorem(
            "L3.1", "existence of the (b,c)-inverse by its one-sided halves", arity3, HYP_NONE,
            (ClauseGroup("existence", (
                _c("some y satisfies the defining equations", _exists_by_definition),
                _c("left and right (b,c)-invertible", lambda ctx, i: is_bc(ctx, *i.elements)),
            )),),
            (Formula("one-sided inverses coincide with the (b,c)-inverse", _formula_bc_unique),),
        ),
        Theorem(
            "L3.2", "defining form versus ideal form of the (b,c)-inverse", arity3, HYP_NONE,
            (ClauseGroup("existence", (
                _c("some y satisfies the defining equations", _exists_by_definition),
                _c("some y has yay = y, yS = bS, Sy = Sc", _exists_by_ideal_form),
            )),),
            (Formula("both forms agree on every candidate", _formula_bc_forms_agree),),
        ),
        Theorem(
            "L3.3", "{1,3}- and {1,4}-inverses by one equation", ("a", "x"), HYP_NONE,
            (ClauseGroup("13", (
                _c("axa = a and (ax)* = ax",
                   lambda ctx, i: check_inner(ctx, i.a, i.d) and ctx.is_hermitian(ctx.mul(i.a, i.d))),
                _c("x*a*a = a", lambda ctx, i: closed_form_13(ctx, i.a, i.d)),
            )),
             ClauseGroup("14", (
                 _c("axa = a and (xa)* = xa",
                    lambda ctx, i: check_inner(ctx, i.a, i.d) and ctx.is_hermitian(ctx.mul(i.d, i.a))),
                 _c("aa*x* = a", lambda ctx, i: closed_form_14(ctx, i.a, i.d)),
             ))),
            (Formula("engine {1,3}/{1,4} inverses", _formula_engine_13_14),),
        ),
        Theorem(
            "L3.4", "EP through the group inverse", ("a",), HYP_NONE,
            (ClauseGroup("ep", (
                _c("a is EP", lambda ctx, i: ie.is_ep(ctx, i.a)),
                _c("a ∈ S# and aa# is Hermitian", _group_and_hermitian),
            )),),
            (Formula("ep_check verdict", _formula_ep_verdict),),
        ),
        Theorem(
            "L3.5", "Moore-Penrose and group inverses versus both core inverses", ("a",), HYP_NONE,
            (ClauseGroup("membership", (
                _c("a ∈ S† ∩ S#", lambda ctx, i: in_mp(ctx, i.a) and in_group(ctx, i.a)),
                _c("a is core and dual core invertible",
                   lambda ctx, i: is_core_invertible(ctx, i.a) and is_dual_core_invertible(ctx, i.a)),
            )),),
        ),
        Theorem(
            "T3.6-I", "left (b,c)- and (c,b)-invertibility under symmetric ab, ac", arity3, HYP_AB_AC,
            (ClauseGroup("left", (
                _c("left (b,c)- and left (c,b)-invertible",
                   lambda ctx, i: is_left_bc(ctx, i.a, i.b, i.c) and is_left_bc(ctx, i.a, i.c, i.b)),
                _c("(b,c)- and (c,b)-invertible", lambda ctx, i: _both_bc(ctx, i.a, i.b, i.c)),
            )),),
            (Formula("x·c and y·b are the inverses", _formula_thm36_left),),
        ),
        Theorem(
            "T3.6-II", "right (b,c)- and (c,b)-invertibility under symmetric ab, ac", arity3, HYP_AB_AC,
            (ClauseGroup("right", (
                _c("right (b,c)- and right (c,b)-invertible",
                   lambda ctx, i: is_right_bc(ctx, i.a, i.b, i.c) and is_right_bc(ctx, i.a, i.c, i.b)),
                _c("(b,c)- and (c,b)-invertible", lambda ctx, i: _both_bc(ctx, i.a, i.b, i.c)),
            )),),
            (Formula("b·y and c·x are the inverses", _formula_thm36_right),),
        ),
        Theorem(
            "C3.7", "one-sided inverses along d under symmetric ad", ad, HYP_AD,
            (ClauseGroup("left", (
                _c("a left invertible along d", lambda ctx, i: is_left_along(ctx, i.a, i.d)),
                _c("a invertible along d", lambda ctx, i: is_along(ctx, i.a, i.d)),
            )),
             ClauseGroup("right", (
                 _c("a right invertible along d", lambda ctx, i: is_right_along(ctx, i.a, i.d)),
                 _c("a invertible along d", lambda ctx, i: is_along(ctx, i.a, i.d)),
             ))),
            (Formula("x·d / d·x with the matching {1,4}-inverse of d", _formula_cor37),),
        ),
        Theorem(
            "T3.9", "one-sided core invertibility under symmetric a²", ("a",), HYP_A2,
            (ClauseGroup("core", (
                _c("a left core invertible", lambda ctx, i: is_left_core(ctx, i.a)),
                _c("a right core invertible", lambda ctx, i: is_right_core(ctx, i.a)),
                _c("a is EP", lambda ctx, i: ie.is_ep(ctx, i.a)),
            )),),
            (Formula("witness bundles coincide", _formula_thm39),),
        ),
        Theorem(
            "T4.1", "left invertibility of ba and ca", arity3, HYP_AB_AC,
            (ClauseGroup("main", (
                _c("(b,c)- and (c,b)-invertible, Sb = Sb², Sc = Sc²",
                   lambda ctx, i: _both_bc(ctx, i.a, i.b, i.c) and _sq_left(ctx, i.b) and _sq_left(ctx, i.c)),
                _c("ba left (c,b)-invertible and ca left (b,c)-invertible",
                   lambda ctx, i: is_left_bc(ctx, ctx.mul(i.b, i.a), i.c, i.b)
                   and is_left_bc(ctx, ctx.mul(i.c, i.a), i.b, i.c)),
            )),),
        ),
        Theorem(
            "C4.2", "da left invertible along d", ad, HYP_AD,
            (ClauseGroup("main", (
                _c("a^‖d exists and Sd = Sd²", lambda ctx, i: is_along(ctx, i.a, i.d) and _sq_left(ctx, i.d)),
                _c("da left invertible along d", lambda ctx, i: is_left_along(ctx, ctx.mul(i.d, i.a), i.d)),
            )),),
        ),
        Theorem(
            "P4.4", "principal ideal conditions through ab, ac and ba, ca", arity3, HYP_NONE,
            (ClauseGroup("left", (
                _c("Sb = Sb² and Sc = Sc²", lambda ctx, i: _sq_left(ctx, i.b) and _sq_left(ctx, i.c)),
                _c("ab left (b,c)-invertible and ac left (c,b)-invertible",
                   lambda ctx, i: is_left_bc(ctx, ctx.mul(i.a, i.b), i.b, i.c)
                   and is_left_bc(ctx, ctx.mul(i.a, i.c), i.c, i.b)),
            ), guard=lambda ctx, i: is_left_bc(ctx, i.a, i.b, i.c) and is_left_bc(ctx, i.a, i.c, i.b)),
             ClauseGroup("right", (
                 _c("bS = b²S and cS = c²S", lambda ctx, i: _sq_right(ctx, i.b) and _sq_right(ctx, i.c)),
                 _c("ba right (c,b)-invertible and ca right (b,c)-invertible",
                    lambda ctx, i: is_right_bc(ctx, ctx.mul(i.b, i.a), i.c, i.b)
                    and is_right_bc(ctx, ctx.mul(i.c, i.a), i.b, i.c)),
             ), guard=lambda ctx, i: is_right_bc(ctx, i.a, i.b, i.c) and is_right_bc(ctx, i.a, i.c, i.b))),
        ),
        Theorem(
            "C4.5", "powers of ad and da one-sided invertible along d", ad, HYP_NONE,
            (ClauseGroup("left", (
                _c("Sd = Sd²", lambda ctx, i: _sq_left(ctx, i.d)),
                _c("(ad)^k left invertible along d",
                   lambda ctx, i: _power_along(ctx, ctx.mul(i.a, i.d), i.d, i.k, is_left_along)),
            ), guard=lambda ctx, i: is_left_along(ctx, i.a, i.d)),
             ClauseGroup("right", (
                 _c("dS = d²S", lambda ctx, i: _sq_right(ctx, i.d)),
                 _c("(da)^k right invertible along d",
                    lambda ctx, i: _power_along(ctx, ctx.mul(i.d, i.a), i.d, i.k, is_right_along)),
             ), guard=lambda ctx, i: is_right_along(ctx, i.a, i.d))),
            (Formula("power witnesses reproduce d", _formula_cor45),),
            k_dependent=True,
        ),
        Theorem(
            "C4.6", "powers of a*a and aa* along a for Moore-Penrose invertible a", ("a",), HYP_NONE,
            (ClauseGroup("left", (
                _c("Sa = Sa²", lambda ctx, i: _sq_left(ctx, i.a)),
                _c("(a*a)^k left invertible along a",
                   lambda ctx, i: _power_along(ctx, ctx.mul(ctx.star(i.a), i.a), i.a, i.k, is_left_along)),
            ), guard=lambda ctx, i: in_mp(ctx, i.a)),
             ClauseGroup("right", (
                 _c("aS = a²S", lambda ctx, i: _sq_right(ctx, i.a)),
                 _c("(aa*)^k right invertible along a",
                    lambda ctx, i: _power_along(ctx, ctx.mul(i.a, ctx.star(i.a)), i.a, i.k, is_right_along)),
             ), guard=lambda ctx, i: in_mp(ctx, i.a))),
            k_dependent=True,
        ),
        Theorem(
            "T4.7", "two-sided invertibility of ba and ca", arity3, HYP_AB_AC,
            (ClauseGroup("two-sided", (
                _c("(b,c)- and (c,b)-invertible, b, c ∈ S#",
                   lambda ctx, i: _both_bc(ctx, i.a, i.b, i.c) and in_group(ctx, i.b) and in_group(ctx, i.c)),
                _c("ba (c,b)-invertible and ca (b,c)-invertible",
                   lambda ctx, i: is_bc(ctx, ctx.mul(i.b, i.a), i.c, i.b)
                   and is_bc(ctx, ctx.mul(i.c, i.a), i.b, i.c)),
            )),),
            (Formula("engine inverses of ba and ca", _formula_bc_of_products),),
        ),
        Theorem(
            "C4.8", "da invertible along d", ad, HYP_AD,
            (ClauseGroup("along", (
                _c("a^‖d exists and d ∈ S#", lambda ctx, i: is_along(ctx, i.a, i.d) and in_group(ctx, i.d)),
                _c("da invertible along d", lambda ctx, i: is_along(ctx, ctx.mul(i.d, i.a), i.d)),
            )),),
            (Formula("engine inverse of da along d", _formula_along_of_da),),
        ),
        Theorem(
            "C4.9", "EP through a² and a*a under symmetric a²", ("a",), HYP_A2,
            (ClauseGroup("ep", (
                _c("a is EP", lambda ctx, i: ie.is_ep(ctx, i.a)),
                _c("a² left (a*,a)-invertible and a*a left (a,a*)-invertible", _a2_left),
                _c("a² (a*,a)-invertible and a*a (a,a*)-invertible", _a2_two_sided),
            )),),
            (Formula("ep_check bundle", _formula_ep_bundle),),
        ),
        Theorem(
            "L5.1", "left invertibility along a regular m through units", ("a", "m"), HYP_NONE,
            (ClauseGroup("units", (
                _c("a left invertible along m", lambda ctx, i: is_left_along(ctx, i.a, i.d)),
                _c("u = (am)^k + 1 − m⁻m left invertible", lambda ctx, i: _unit_invertible(ctx, i, "u", LEFT)),
                _c("v = (ma)^k + 1 − mm⁻ left invertible", lambda ctx, i: _unit_invertible(ctx, i, "v", LEFT)),
            ), guard=lambda ctx, i: is_regular(ctx, i.d)),),
            (Formula("left inverses of u and v", _formula_unit_transfer(LEFT)),),
            tier=RING, k_dependent=True,
        ),
        Theorem(
            "L5.2", "right invertibility along a regular m through units", ("a", "m"), HYP_NONE,
            (ClauseGroup("units", (
                _c("a right invertible along m", lambda ctx, i: is_right_along(ctx, i.a, i.d)),
                _c("u = (am)^k + 1 − m⁻m right invertible", lambda ctx, i: _unit_invertible(ctx, i, "u", RIGHT)),
                _c("v = (ma)^k + 1 − mm⁻ right invertible", lambda ctx, i: _unit_invertible(ctx, i, "v", RIGHT)),
            ), guard=lambda ctx, i: is_regular(ctx, i.d)),),
            (Formula("right inverses of u and v", _formula_unit_transfer(RIGHT)),),
            tier=RING, k_dependent=True,
        ),
        Theorem(
            "T5.3", "(da)^k left invertible along d in a ring", ad, HYP_AD,
            (ClauseGroup("main", (
                _c("a^‖d exists and Rd = Rd²", lambda ctx, i: is_along(ctx, i.a, i.d) and _sq_left(ctx, i.d)),
                _c("(da)^k left invertible along d",
                   lambda ctx, i: _power_along(ctx, ctx.mul(i.d, i.a), i.d, i.k, is_left_along)),
            )),),
            (Formula("t^k·s witness and the unit route", _formula_thm53),),
            tier=RING, k_dependent=True, exploratory=True,
        ),
        Theorem(
            "T5.4", "(ad)^k right invertible along d", ad, HYP_AD,
            (ClauseGroup("main", (
                _c("a^‖d exists and dS = d²S", lambda ctx, i: is_along(ctx, i.a, i.d) and _sq_right(ctx, i.d)),
                _c("(ad)^k right invertible along d",
                   lambda ctx, i: _power_along(ctx, ctx.mul(i.a, i.d), i.d, i.k, is_right_along)),
            )),),
            (Formula("s·h^k witness", _formula_thm54),),
            k_dependent=True,
        ),
        Theorem(
            "T5.5", "(da)^k left invertible along d under symmetric da", ad, HYP_DA,
            (ClauseGroup("main", (
                _c("a^‖d exists and Sd = Sd²", lambda ctx, i: is_along(ctx, i.a, i.d) and _sq_left(ctx, i.d)),
                _c("(da)^k left invertible along d",
                   lambda ctx, i: _power_along(ctx, ctx.mul(i.d, i.a), i.d, i.k, is_left_along)),
            )),),
            (Formula("t^k·s witness", _formula_thm55),),
            k_dependent=True,
        ),
        Theorem(
            "T5.6", "powers of ad and da along d under symmetric ad and da", ad, HYP_AD_DA,
            (ClauseGroup("main", (
                _c("a^‖d exists and d ∈ S#", lambda ctx, i: is_along(ctx, i.a, i.d) and in_group(ctx, i.d)),
                _c("a^‖d exists and d ∈ S# ∩ S†",
                   lambda ctx, i: is_along(ctx, i.a, i.d) and in_group(ctx, i.d) and in_mp(ctx, i.d)),
                _c("(ad)^k right and (da)^k left invertible along d",
                   lambda ctx, i: _power_along(ctx, ctx.mul(i.a, i.d), i.d, i.k, is_right_along)
                   and _power_along(ctx, ctx.mul(i.d, i.a), i.d, i.k, is_left_along)),
                _c("(ad)^k invertible along d",
                   lambda ctx, i: _power_along(ctx, ctx.mul(i.a, i.d), i.d, i.k, is_along)),
                _c("(da)^k invertible along d",
                   lambda ctx, i: _power_along(ctx, ctx.mul(i.d, i.a), i.d, i.k, is_along)),
            )),),
            k_dependent=True,
        ),
        Theorem(
            "P5.7", "(da)^k invertible along d in a ring", ad, HYP_AD,
            (ClauseGroup("along", (
                _c("a^‖d exists and d ∈ R#", lambda ctx, i: is_along(ctx, i.a, i.d) and in_group(ctx, i.d)),
                _c("(da)^k invertible along d",
                   lambda ctx, i: _power_along(ctx, ctx.mul(i.d, i.a), i.d, i.k, is_along)),
            )),),
            (Formula("engine inverse of (da)^k along d", _formula_along_of_da),),
            tier=RING, k_dependent=True, exploratory=True,
        ),
        Theorem(
            "C5.8", "group, Moore-Penrose and EP under symmetric a²", ("a",), HYP_A2,
            (ClauseGroup("ep", (
                _c("a ∈ S#", lambda ctx, i: in_group(ctx, i.a)),
                _c("a ∈ S# ∩ S†", lambda ctx, i: in_group(ctx, i.a) and in_mp(ctx, i.a)),
                _c("a is EP", lambda ctx, i: ie.is_ep(ctx, i.a)),
            )),),
            (Formula("ep_check bundle", _formula_ep_bundle),),
        ),
    )


def _group_and_hermitian(ctx, inst):
    a = inst.a
    group = ie.named_inverse(ctx, a, ie.InverseKind(ie.InverseTag.GROUP))
    return group is not None and ctx.is_hermitian(ctx.mul(a, group))


def _a2_left(ctx, inst):
    a = inst.a
    s = ctx.star(a)
    return is_left_bc(ctx, ctx.mul(a, a), s, a) and is_left_bc(ctx, ctx.mul(s, a), a, s)


def _a2_two_sided(ctx, inst):
    a = inst.a
    s = ctx.star(a)
    return is_bc(ctx, ctx.mul(a, a), s, a) and is_bc(ctx, ctx.mul(s, a), a, s)


def _unit_invertible(ctx, inst, which, side):
    a, m = inst.elements
    m_inner = ctx.inner_inverse(m)
    build = ie.unit_u if which == "u" else ie.unit_v
    unit = build(ctx, a, m, m_inner, inst.k)
    finder = ctx.left_invertible if side == LEFT else ctx.right_invertible
    return finder(unit) is not None


@lru_cache(maxsize=1)
def theorem_registry():
    return _build_registry()


TAGS = tuple(t.tag for t in theorem_registry())


def get_theorem(tag):
    for theorem in theorem_registry():
        if theorem.tag.lower() == tag.strip().lower():
            return theorem
    raise InputError(f"unknown theorem '{tag}'; known: {', '.join(TAGS)}")
