"""Cayley-table *-monoids and *-rings used as brute-force oracles."""
from __future__ import annotations

import itertools
import json

import numpy as np

import config
import matrix as mx
from exceptions import InputError, ResourceError, StructureValidationError
from scalars import ScalarField, ZMOD, is_prime
from star_context import LEFT, StarMonoidContext, StarRingContext


def _first_index(mask):
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


def _divisor_maps(mul, axis):
    """For every u, a dict v -> first s with s·u = v (axis=0) or u·s = v (axis=1)."""
    maps = []
    for u in range(mul.shape[0]):
        line = mul[:, u] if axis == 0 else mul[u, :]
        values, first = np.unique(line, return_index=True)
        maps.append(dict(zip(values.tolist(), first.tolist())))
    return maps


class FiniteStarMonoid(StarMonoidContext):
    def __init__(self, mul, star, one, names=None, label=None):
        self.mul_table = np.asarray(mul, dtype=np.int64)
        self.star_table = np.asarray(star, dtype=np.int64)
        self.size = int(self.mul_table.shape[0])
        self._one = int(one)
        self.names = list(names) if names is not None else [str(i) for i in range(self.size)]
        self.label = label or f"table({self.size})"
        self._mul = self.mul_table.tolist()
        self._star = self.star_table.tolist()
        self._left = _divisor_maps(self.mul_table, axis=0)
        self._right = _divisor_maps(self.mul_table, axis=1)
        self._elements = list(range(self.size))

    @property
    def one(self):
        return self._one

    def mul(self, x, y):
        return self._mul[x][y]

    def star(self, x):
        return self._star[x]

    def left_divides(self, u, v):
        return self._left[u].get(v)

    def right_divides(self, u, v):
        return self._right[u].get(v)

    def left_witnesses(self, u, v):
        return np.flatnonzero(self.mul_table[:, u] == v).tolist()

    def right_witnesses(self, u, v):
        return np.flatnonzero(self.mul_table[u, :] == v).tolist()

    def bc_candidates(self, a, b, c):
        m = self.mul_table
        idx = np.arange(self.size)
        # yab = b and cay = c
        defining = (m[m[:, a], b] == b) & (m[m[c, a], :] == c)
        # yay = y with y in bS and in Sc
        outer = (m[m[:, a], idx] == idx) & np.isin(idx, m[b, :]) & np.isin(idx, m[:, c])
        return np.flatnonzero(defining | outer).tolist()

    def sandwich_divides(self, u, w, v):
        return _first_index(self.mul_table[self.mul_table[u, :], w] == v)

    def inner_inverse(self, x):
        return _first_index(self.mul_table[self.mul_table[x, :], x] == x)

    def elements(self):
        return self._elements

    def name(self, x):
        return self.names[x]

    def describe(self):
        return self.label


class FiniteStarRing(FiniteStarMonoid, StarRingContext):
    def __init__(self, mul, star, one, add, neg, zero, names=None, label=None):
        super().__init__(mul, star, one, names=names, label=label)
        self.add_table = np.asarray(add, dtype=np.int64)
        self.neg_table = np.asarray(neg, dtype=np.int64)
        self._zero = int(zero)
        self._add = self.add_table.tolist()
        self._neg = self.neg_table.tolist()

    @property
    def zero(self):
        return self._zero

    def add(self, x, y):
        return self._add[x][y]

    def neg(self, x):
        return self._neg[x]


class MatrixRingStructure(FiniteStarRing):
    """M_k(Z_p) enumerated; element i is the matrix whose base-p digits spell i."""

    def __init__(self, k, p, digits, **tables):
        super().__init__(**tables)
        self.k = k
        self.p = p
        self.field = ScalarField(ZMOD, p)
        self._digits = digits
        self._weights = p ** np.arange(k * k - 1, -1, -1, dtype=np.int64)

    def matrix_of(self, index):
        entries = self._digits[index].tolist()
        k = self.k
        return mx.from_rows([entries[i * k:(i + 1) * k] for i in range(k)], self.field)

    def index_of(self, m):
        flat = [x.value for row in m.rows for x in row]
        return int(np.dot(np.asarray(flat, dtype=np.int64), self._weights))


# -- validation ---------------------------------------------------------------

def _first_violation(mask):
    bad = np.argwhere(~mask)
    return tuple(int(i) for i in bad[0]) if bad.size else None


def _check_range(name, table, n):
    if table.size and (table.min() < 0 or table.max() >= n):
        raise InputError(f"table '{name}' has entries outside 0..{n - 1}")


def _validate_monoid_axioms(mul, star, one):
    n = mul.shape[0]
    idx = np.arange(n)
    for x in range(n):
        # (xy)z vs x(yz) for all y, z
        lhs = mul[mul[x, :], :]
        rhs = mul[x, mul]
        hit = _first_violation(lhs == rhs)
        if hit is not None:
            raise StructureValidationError("associativity", (x,) + hit)
    hit = _first_violation(mul[one, :] == idx)
    if hit is not None:
        raise StructureValidationError("left identity", (one,) + hit)
    hit = _first_violation(mul[:, one] == idx)
    if hit is not None:
        raise StructureValidationError("right identity", hit + (one,))
    hit = _first_violation(star[star] == idx)
    if hit is not None:
        raise StructureValidationError("star is an involution", hit)
    # star(xy) = star(y) star(x)
    hit = _first_violation(star[mul] == mul[np.ix_(star, star)].T)
    if hit is not None:
        raise StructureValidationError("star reverses products", hit)
    if star[one] != one:
        raise StructureValidationError("star fixes one", (one,))


def _validate_ring_axioms(mul, add, neg, star, zero):
    n = mul.shape[0]
    idx = np.arange(n)
    for x in range(n):
        hit = _first_violation(add[add[x, :], :] == add[x, add])
        if hit is not None:
            raise StructureValidationError("additive associativity", (x,) + hit)
    hit = _first_violation(add == add.T)
    if hit is not None:
        raise StructureValidationError("additive commutativity", hit)
    hit = _first_violation(add[zero, :] == idx)
    if hit is not None:
        raise StructureValidationError("additive identity", (zero,) + hit)
    hit = _first_violation(add[idx, neg] == zero)
    if hit is not None:
        raise StructureValidationError("additive inverse", hit)
    for x in range(n):
        # x(y+z) = xy + xz and (y+z)x = yx + zx
        hit = _first_violation(mul[x, add] == add[np.ix_(mul[x, :], mul[x, :])])
        if hit is not None:
            raise StructureValidationError("left distributivity", (x,) + hit)
        hit = _first_violation(mul[add, x] == add[np.ix_(mul[:, x], mul[:, x])])
        if hit is not None:
            raise StructureValidationError("right distributivity", (x,) + hit)
    hit = _first_violation(star[add] == add[np.ix_(star, star)])
    if hit is not None:
        raise StructureValidationError("star is additive", hit)


def validate(tables, label=None, budget=None, logger=None):
    """Check every axiom and return a FiniteStarMonoid or FiniteStarRing.

    ``tables`` uses the table JSON layout: size, one, mul, star and optionally
    zero, add, neg, names.
    """
    budget = budget or config.ENUMERATION_BUDGET
    try:
        n = int(tables["size"])
        mul = np.asarray(tables["mul"], dtype=np.int64)
        star = np.asarray(tables["star"], dtype=np.int64)
        one = int(tables["one"])
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"table is missing or has malformed fields: {e}") from e
    if n < 1:
        raise InputError("a structure needs at least one element")
    if n > budget:
        raise ResourceError(f"{n} elements exceed the enumeration budget of {budget}")
    if mul.shape != (n, n) or star.shape != (n,):
        raise InputError(f"table shapes do not match size {n}")
    _check_range("mul", mul, n)
    _check_range("star", star, n)
    if not 0 <= one < n:
        raise InputError(f"'one' index {one} is out of range")
    names = tables.get("names")
    if names is not None and len(names) != n:
        raise InputError("'names' must list every element")
    _validate_monoid_axioms(mul, star, one)
    is_ring = "add" in tables
    if is_ring:
        try:
            add = np.asarray(tables["add"], dtype=np.int64)
            neg = np.asarray(tables["neg"], dtype=np.int64)
            zero = int(tables["zero"])
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"ring tables need add, neg and zero: {e}") from e
        if add.shape != (n, n) or neg.shape != (n,):
            raise InputError(f"ring table shapes do not match size {n}")
        _check_range("add", add, n)
        _check_range("neg", neg, n)
        if not 0 <= zero < n:
            raise InputError(f"'zero' index {zero} is out of range")
        _validate_ring_axioms(mul, add, neg, star, zero)
    if logger:
        logger.debug(f"Validated {'*-ring' if is_ring else '*-monoid'} with {n} elements")
    if is_ring:
        return FiniteStarRing(mul, star, one, add, neg, zero, names=names, label=label)
    return FiniteStarMonoid(mul, star, one, names=names, label=label)


def load_table(path, budget=None, logger=None):
    try:
        with open(path, "r", encoding="utf-8") as f:
            tables = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read table file {path}: {e}") from e
    return validate(tables, label=f"table:{path}", budget=budget, logger=logger)


# -- builders -----------------------------------------------------------------

def build_matrix_structure(k, p, involution=mx.InvolutionKind.TRANSPOSE, budget=None, logger=None):
    """All k×k matrices over Z_p as a *-ring; conjugation is trivial so the star is transpose."""
    budget = budget or config.ENUMERATION_BUDGET
    if k < 1:
        raise InputError(f"dimension must be at least 1, got {k}")
    if not is_prime(p):
        raise InputError(f"M_k(Z_p) needs a prime p, got {p}")
    n = p ** (k * k)
    if n > budget:
        raise ResourceError(f"M{k}(Z{p}) has {n} elements, over the enumeration budget of {budget}")
    digits = np.array(list(itertools.product(range(p), repeat=k * k)), dtype=np.int64).reshape(n, k * k)
    mats = digits.reshape(n, k, k)
    weights = p ** np.arange(k * k - 1, -1, -1, dtype=np.int64)

    def encode(arr):
        return (arr.reshape(arr.shape[:-2] + (k * k,)) % p) @ weights

    products = np.einsum("aij,bjl->abil", mats, mats)
    sums = mats[:, None, :, :] + mats[None, :, :, :]
    eye = np.eye(k, dtype=np.int64)
    names = ["[" + ",".join("[" + ",".join(str(v) for v in row) + "]" for row in m) + "]"
             for m in mats.tolist()]
    tables = {
        "size": n,
        "mul": encode(products),
        "add": encode(sums),
        "neg": encode(-mats),
        "star": encode(mats.transpose(0, 2, 1)),
        "one": int(encode(eye)),
        "zero": 0,
        "names": names,
    }
    label = f"M{k}(Z{p})"
    validated = validate(tables, label=label, budget=budget, logger=logger)
    if logger:
        logger.info(f"Built {label} with {n} elements ({involution.value})")
    return MatrixRingStructure(
        k, p, digits,
        mul=validated.mul_table, star=validated.star_table, one=validated.one,
        add=validated.add_table, neg=validated.neg_table, zero=validated.zero,
        names=names, label=label)


def zmod_structure(n, logger=None):
    """Z_n with the identity involution (legitimate because Z_n is commutative)."""
    if n < 1:
        raise InputError(f"Z_n needs n >= 1, got {n}")
    idx = np.arange(n, dtype=np.int64)
    tables = {
        "size": n,
        "mul": np.outer(idx, idx) % n,
        "add": (idx[:, None] + idx[None, :]) % n,
        "neg": (-idx) % n,
        "star": idx,
        "one": 1 % n,
        "zero": 0,
    }
    return validate(tables, label=f"Z{n}", logger=logger)


def trivial_monoid():
    return validate({"size": 1, "one": 0, "mul": [[0]], "star": [0]}, label="trivial")


def divisibility_scan(structure, u, v, side):
    """Witness s with s·u = v (left) or u·s = v (right), or None."""
    if side == LEFT:
        return structure.left_divides(u, v)
    return structure.right_divides(u, v)
