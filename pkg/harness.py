"""Instance generation, biconditional verification and counterexample reproduction."""
from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import config
import inverse_engines as ie
import matrix as mx
from exceptions import CapabilityError, InputError, InvariantViolation
from scalars import GAUSSIAN, QI, GaussianRational
from star_context import (
    LEFT,
    RING,
    MatrixStarContext,
    check_14,
    check_along,
    check_bc,
    check_mp,
    hyp_symmetric,
    ideal_eq,
    is_left_along,
)
from theorems import (
    HYP_A2,
    HYP_AB_AC,
    HYP_AD,
    HYP_AD_DA,
    HYP_DA,
    Instance,
    get_theorem,
    theorem_registry,
)

EXHAUSTIVE = "exhaustive"
SEEDED = "seeded"

ALL_TRUE = "all_true"
ALL_FALSE = "all_false"
INACTIVE = "inactive"
DISAGREE = "disagree"


@dataclass(frozen=True)
class Strategy:
    kind: str = EXHAUSTIVE
    seed: int = config.DEFAULT_SEED
    count: int = config.DEFAULT_COUNT

    def __post_init__(self):
        if self.kind not in (EXHAUSTIVE, SEEDED):
            raise InputError(f"unknown strategy '{self.kind}'")
        if self.count < 1:
            raise InputError(f"count must be positive, got {self.count}")

    def describe(self):
        if self.kind == EXHAUSTIVE:
            return EXHAUSTIVE
        return f"{SEEDED}(seed={self.seed}, count={self.count})"


@dataclass
class VerificationReport:
    theorem: str
    context: str
    strategy: str
    k_values: list
    instances_examined: int = 0
    hypothesis_count: int = 0
    groups: dict = field(default_factory=dict)
    formula_checks: int = 0
    failures: list = field(default_factory=list)
    observations: list = field(default_factory=list)
    exploratory: bool = False
    elapsed: Optional[float] = None

    @property
    def passed(self):
        return not self.failures

    def to_dict(self, timings=False):
        data = {
            "theorem": self.theorem,
            "context": self.context,
            "strategy": self.strategy,
            "k_values": list(self.k_values),
            "instances_examined": self.instances_examined,
            "hypothesis_count": self.hypothesis_count,
            "groups": {name: dict(tally) for name, tally in self.groups.items()},
            "formula_checks": self.formula_checks,
            "failures": list(self.failures),
            "passed": self.passed,
        }
        if self.exploratory:
            data["exploratory"] = True
            data["observations"] = list(self.observations)
        if timings:
            data["elapsed"] = self.elapsed
        return data


@dataclass
class InstanceOutcome:
    in_hypothesis: bool = False
    states: dict = field(default_factory=dict)
    formula_checks: int = 0
    failures: list = field(default_factory=list)


@dataclass
class CounterexampleReport:
    name: str
    context: str
    assertions: list
    values: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(held for _, held in self.assertions)

    def to_dict(self):
        return {
            "name": self.name,
            "context": self.context,
            "assertions": {label: held for label, held in self.assertions},
            "values": dict(self.values),
            "passed": self.passed,
        }


# -- instance generation ---------------------------------------------------------

def _unit_matrices(ctx):
    field_ = ctx.field
    units = [field_.one()]
    if field_.kind == GAUSSIAN:
        units.append(field_.imaginary_unit())
    n = ctx.n
    basis = []
    for i in range(n):
        for j in range(n):
            for u in units:
                rows = [[u if (r, s) == (i, j) else field_.zero() for s in range(n)] for r in range(n)]
                basis.append(mx.Matrix(field_, rows))
    return basis


def _coordinates(m):
    coords = []
    for row in m.rows:
        for x in row:
            if isinstance(x, GaussianRational):
                coords.extend([GaussianRational(x.re), GaussianRational(x.im)])
            else:
                coords.append(x)
    return coords


def _constraint_solution(ctx, a, sides, rng):
    """A random X with (aX)* = aX (side "ad") and/or (Xa)* = Xa (side "da").

    The constraints are linear over the rationals (or Z_p), so X is drawn as a
    random integer combination of a nullspace basis.
    """
    basis = _unit_matrices(ctx)
    columns = []
    for e in basis:
        images = []
        for side in sides:
            product = ctx.mul(a, e) if side == "ad" else ctx.mul(e, a)
            images.extend(_coordinates(ctx.sub(ctx.star(product), product)))
        columns.append(images)
    rows = [list(r) for r in zip(*columns)]
    coeff_field = QI if ctx.field.kind == GAUSSIAN else ctx.field
    solutions = mx.nullspace(rows, len(basis), coeff_field)
    result = ctx.zero
    for vector in solutions:
        weight = ctx.field.from_int(rng.randint(-2, 2))
        if not weight:
            continue
        combination = ctx.zero
        for coefficient, e in zip(vector, basis):
            if coefficient:
                combination = ctx.add(combination, e.scale(coefficient))
        result = ctx.add(result, combination.scale(weight))
    return result


def _random_element(ctx, rng):
    return mx.random_matrix(ctx.n, ctx.field, rng, bound=config.RANDOM_ENTRY_BOUND,
                            zero_row_probability=0.3)


def _matrix_tuple(ctx, theorem, rng):
    a = _random_element(ctx, rng)
    if theorem.hypothesis == HYP_A2:
        a = ctx.add(a, ctx.star(a))
    if theorem.arity == 1:
        return (a,)
    if theorem.arity == 2:
        sides = {HYP_AD: ("ad",), HYP_DA: ("da",), HYP_AD_DA: ("ad", "da")}.get(theorem.hypothesis)
        d = _constraint_solution(ctx, a, sides, rng) if sides else _random_element(ctx, rng)
        return (a, d)
    if theorem.hypothesis == HYP_AB_AC:
        return (a, _constraint_solution(ctx, a, ("ad",), rng), _constraint_solution(ctx, a, ("ad",), rng))
    return (a, _random_element(ctx, rng), _random_element(ctx, rng))


def _tuples(ctx, theorem, strategy, logger=None):
    elements = ctx.elements()
    if strategy.kind == EXHAUSTIVE:
        if elements is None:
            raise CapabilityError(f"{ctx.describe()} cannot be enumerated; use a seeded strategy")
        if theorem.arity == 3 and len(elements) ** 3 > config.EXHAUSTIVE_TRIPLE_LIMIT:
            if logger:
                logger.info(f"{theorem.tag}: {len(elements) ** 3} triples exceed the exhaustive limit, "
                            f"sampling {config.SAMPLE_TRIPLES}")
            return _tuples(ctx, theorem, Strategy(SEEDED, strategy.seed, config.SAMPLE_TRIPLES))
        return list(itertools.product(elements, repeat=theorem.arity))
    rng = random.Random(strategy.seed)
    if elements is not None:
        return [tuple(rng.choice(elements) for _ in range(theorem.arity)) for _ in range(strategy.count)]
    if isinstance(ctx, MatrixStarContext):
        return [_matrix_tuple(ctx, theorem, rng) for _ in range(strategy.count)]
    raise CapabilityError(f"no seeded generator for {ctx.describe()}")


def generate_instances(ctx, theorem, strategy, k_range, logger=None):
    k_values = list(k_range) if theorem.k_dependent else [None]
    for elements in _tuples(ctx, theorem, strategy, logger):
        for k in k_values:
            yield Instance(tuple(elements), k)


# -- evaluation --------------------------------------------------------------------------

def _instance_record(ctx, inst):
    return {"instance": [ctx.name(x) for x in inst.elements], "k": inst.k}


def evaluate_instance(ctx, theorem, inst):
    outcome = InstanceOutcome()
    if not theorem.hypothesis_holds(ctx, inst):
        return outcome
    outcome.in_hypothesis = True
    truth = {}
    for group in theorem.groups:
        try:
            if group.guard is not None and not group.guard(ctx, inst):
                outcome.states[group.name] = INACTIVE
                truth[group.name] = None
                continue
            values = {clause.label: bool(clause.holds(ctx, inst)) for clause in group.clauses}
        except InvariantViolation as e:
            outcome.states[group.name] = DISAGREE
            truth[group.name] = None
            outcome.failures.append({**_instance_record(ctx, inst), "group": group.name, "error": str(e)})
            continue
        distinct = set(values.values())
        if len(distinct) == 1:
            value = distinct.pop()
            outcome.states[group.name] = ALL_TRUE if value else ALL_FALSE
            truth[group.name] = value
        else:
            outcome.states[group.name] = DISAGREE
            truth[group.name] = None
            outcome.failures.append({**_instance_record(ctx, inst), "group": group.name, "clauses": values})
    for formula in theorem.formulas:
        try:
            outcome.formula_checks += formula.run(ctx, inst, truth)
        except (InvariantViolation, InputError) as e:
            outcome.failures.append({**_instance_record(ctx, inst), "formula": formula.label, "error": str(e)})
    return outcome


def verify_theorem(ctx, theorem, strategy=None, k_range=(1, 2, 3), workers=None, logger=None,
                   exploratory=False):
    if isinstance(theorem, str):
        theorem = get_theorem(theorem)
    strategy = strategy or Strategy()
    workers = workers or config.WORKERS
    exploring = False
    if theorem.tier == RING and ctx.tier != RING:
        if not (exploratory and theorem.exploratory):
            raise CapabilityError(f"{theorem.tag} needs a *-ring, {ctx.describe()} is only a *-monoid")
        exploring = True
    k_values = list(k_range) if theorem.k_dependent else []
    tracking_id = logger.start_performance_tracking(f"verify_{theorem.tag}") if logger else None
    started = time.perf_counter()
    instances = list(generate_instances(ctx, theorem, strategy, k_range, logger))
    if logger:
        logger.add_performance_checkpoint(tracking_id, "instances generated")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda inst: evaluate_instance(ctx, theorem, inst), instances))
    else:
        outcomes = [evaluate_instance(ctx, theorem, inst) for inst in instances]
    report = VerificationReport(
        theorem=theorem.tag,
        context=ctx.describe(),
        strategy=strategy.describe(),
        k_values=k_values,
        instances_examined=len(instances),
        groups={g.name: {ALL_TRUE: 0, ALL_FALSE: 0, INACTIVE: 0, DISAGREE: 0} for g in theorem.groups},
        exploratory=exploring,
    )
    for outcome in outcomes:
        if not outcome.in_hypothesis:
            continue
        report.hypothesis_count += 1
        report.formula_checks += outcome.formula_checks
        for name, state in outcome.states.items():
            report.groups[name][state] += 1
        if exploring:
            report.observations.extend(outcome.failures)
        else:
            report.failures.extend(outcome.failures)
    report.elapsed = time.perf_counter() - started
    if logger:
        logger.end_performance_tracking(tracking_id, {"theorem": theorem.tag, "instances": len(instances)})
        logger.verification(report)
    return report


def applicable_theorems(ctx, tags=None, exploratory=False):
    """Registry entries runnable on ``ctx``; ring-tier entries drop out on monoids."""
    chosen = theorem_registry() if tags is None else [get_theorem(t) for t in tags]
    usable = []
    for theorem in chosen:
        if theorem.tier == RING and ctx.tier != RING and not (exploratory and theorem.exploratory):
            continue
        usable.append(theorem)
    return usable


def verify_many(ctx, tags=None, strategy=None, k_range=(1, 2, 3), workers=None, logger=None,
                exploratory=False):
    return [verify_theorem(ctx, theorem, strategy, k_range, workers, logger, exploratory)
            for theorem in applicable_theorems(ctx, tags, exploratory)]


# -- counterexamples ------------------------------------------------------------------------

def _remark_38():
    ctx = MatrixStarContext(2, QI, mx.InvolutionKind.TRANSPOSE)
    d = mx.from_rows([["1", "0"], ["i", "0"]], QI)
    a = mx.from_rows([["1", "0"], ["-i", "1"]], QI)
    along = ie.named_inverse(ctx, a, ie.InverseKind.along(d))
    witness = ctx.left_divides(ctx.prod(d, a, d), d)
    d_14 = ctx.mul(a, witness) if witness is not None else None
    dd = ctx.mul(ctx.star(d), d)
    no_13 = ie.named_inverse(ctx, d, ie.InverseKind(ie.InverseTag.ONE_THREE)) is None
    assertions = [
        ("(ad)* = ad", hyp_symmetric(ctx, a, d)),
        ("(da)* != da", not hyp_symmetric(ctx, d, a)),
        ("a^‖d exists", along is not None and check_bc(ctx, a, d, d, along)),
        ("a·x is a {1,4}-inverse of d", d_14 is not None and check_14(ctx, d, d_14)),
        ("d has no {1,3}-inverse (d*d = 0)", no_13 and dd.is_zero()),
    ]
    values = {"a": str(a), "d": str(d), "along": str(along), "d_14": str(d_14), "d*d": str(dd)}
    return CounterexampleReport("remark3.8", ctx.describe(), assertions, values)


def _remark_43():
    ctx = MatrixStarContext(2, QI, mx.InvolutionKind.CONJUGATE_TRANSPOSE)
    a = mx.from_rows([["1", "i"], ["i", "-1"]], QI)
    d = ctx.star(a)
    mp = ie.named_inverse(ctx, a, ie.InverseKind(ie.InverseTag.MP))
    quarter = d.scale(GaussianRational(1, 0) / 4)
    along = ie.named_inverse(ctx, a, ie.InverseKind.along(d))
    d2ad = ctx.prod(d, d, a, d)
    assertions = [
        ("a² = 0", ctx.mul(a, a).is_zero()),
        ("a† exists and equals a*/4", mp is not None and check_mp(ctx, a, mp) and ctx.eq(mp, quarter)),
        ("a^‖d exists", along is not None and check_along(ctx, a, d, along)),
        ("d²ad = 0", d2ad.is_zero()),
        ("da is not left invertible along d", not is_left_along(ctx, ctx.mul(d, a), d)),
        ("Sd != Sd²", not ideal_eq(ctx, d, ctx.mul(d, d), LEFT)),
    ]
    values = {"a": str(a), "d": str(d), "mp": str(mp), "along": str(along)}
    return CounterexampleReport("remark4.3", ctx.describe(), assertions, values)


_COUNTEREXAMPLES = {
    "remark3.8": _remark_38,
    "remark38": _remark_38,
    "remark4.3": _remark_43,
    "remark43": _remark_43,
}


def reproduce_counterexample(name, logger=None):
    try:
        build = _COUNTEREXAMPLES[name.strip().lower()]
    except KeyError:
        raise InputError(f"unknown counterexample '{name}'; known: remark3.8, remark4.3") from None
    report = build()
    if logger:
        logger.counterexample(report)
    failed = [label for label, held in report.assertions if not held]
    if failed:
        raise InvariantViolation(f"{report.name}: assertions failed: {', '.join(failed)}")
    return report
