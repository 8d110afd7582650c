"""Dense square matrices over Q(i) or Z_m with exact elimination.

Elimination picks the first nonzero entry in column order and never reorders
anything else, so every result below is deterministic.
"""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass

from exceptions import InputError, UnsupportedContextError
from scalars import GAUSSIAN, ZMOD, ScalarField, conjugate, format_scalar


class InvolutionKind(enum.Enum):
    TRANSPOSE = "transpose"
    CONJUGATE_TRANSPOSE = "conjugate"

    @classmethod
    def parse(cls, text):
        aliases = {"transpose": cls.TRANSPOSE, "t": cls.TRANSPOSE,
                   "conjugate": cls.CONJUGATE_TRANSPOSE, "conjugate_transpose": cls.CONJUGATE_TRANSPOSE,
                   "conj": cls.CONJUGATE_TRANSPOSE, "h": cls.CONJUGATE_TRANSPOSE}
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise InputError(f"unknown involution '{text}'") from None


@dataclass(frozen=True)
class Matrix:
    field: ScalarField
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        n = len(rows)
        if n == 0:
            raise InputError("matrices need dimension at least 1")
        for r in rows:
            if len(r) != n:
                raise InputError(f"matrix is not square: {n} rows, a row of length {len(r)}")
            for x in r:
                if not self.field.contains(x):
                    raise InputError(f"entry {x!r} is not in {self.field.describe()}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_add(self, mat_neg(other))

    def __neg__(self):
        return mat_neg(self)

    def scale(self, s):
        return Matrix(self.field, [[s * x for x in r] for r in self.rows])

    def is_zero(self):
        return not any(x for r in self.rows for x in r)

    def literal_rows(self):
        return [[format_scalar(x) for x in r] for r in self.rows]

    def to_json(self):
        data = self.field.to_json()
        data["rows"] = self.literal_rows()
        return data

    def __str__(self):
        return "[" + ",".join("[" + ",".join(r) + "]" for r in self.literal_rows()) + "]"


def from_rows(rows, field: ScalarField):
    """Build a matrix from literal strings, ints or scalars."""
    converted = []
    for r in rows:
        row = []
        for x in r:
            if isinstance(x, str):
                row.append(field.parse(x))
            elif isinstance(x, int):
                row.append(field.from_int(x))
            else:
                row.append(x)
        converted.append(row)
    return Matrix(field, converted)


def from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    try:
        kind = data["field"]
        rows = data["rows"]
    except (KeyError, TypeError):
        raise InputError("matrix JSON needs 'field' and 'rows'") from None
    field = ScalarField(kind, data.get("modulus")) if kind == ZMOD else ScalarField(kind)
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("'rows' must be a list of lists")
    return from_rows([[str(x) for x in r] for r in rows], field)


def load_matrix(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            return from_json(json.load(f))
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read matrix file {path}: {e}") from e


def _check_compatible(A, B):
    if A.field != B.field:
        raise InputError(f"field mismatch: {A.field.describe()} and {B.field.describe()}")
    if A.n != B.n:
        raise InputError(f"dimension mismatch: {A.n} and {B.n}")


def identity(n, field):
    one, zero = field.one(), field.zero()
    return Matrix(field, [[one if i == j else zero for j in range(n)] for i in range(n)])


def zero(n, field):
    return Matrix(field, [[field.zero()] * n for _ in range(n)])


def _mul_rows(A, B, zero_):
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        out_row = []
        for j in range(cols):
            acc = None
            for k in range(inner):
                a = row[k]
                if not a:
                    continue
                term = a * B[k][j]
                acc = term if acc is None else acc + term
            out_row.append(acc if acc is not None else zero_)
        out.append(out_row)
    return out


def mat_mul(A, B):
    _check_compatible(A, B)
    return Matrix(A.field, _mul_rows(A.rows, B.rows, A.field.zero()))


def mat_add(A, B):
    _check_compatible(A, B)
    return Matrix(A.field, [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)])


def mat_neg(A):
    return Matrix(A.field, [[-x for x in r] for r in A.rows])


def power(A, k):
    if k < 1:
        raise InputError(f"power needs k >= 1, got {k}")
    result = A
    for _ in range(k - 1):
        result = mat_mul(A, result)
    return result


def transpose(A):
    return Matrix(A.field, [list(col) for col in zip(*A.rows)])


def star(M, kind: InvolutionKind):
    if kind is InvolutionKind.CONJUGATE_TRANSPOSE:
        return Matrix(M.field, [[conjugate(x) for x in col] for col in zip(*M.rows)])
    return transpose(M)


def _require_field(field):
    if not field.is_field:
        raise UnsupportedContextError(f"elimination over Z{field.modulus} needs a prime modulus")


def _row_reduce(rows, pivot_cols, field):
    """Reduced row echelon form of ``rows`` pivoting only in the first ``pivot_cols`` columns.

    Returns the reduced rows (new lists) and the pivot columns in order.
    """
    rows = [list(r) for r in rows]
    pivots = []
    top = 0
    for col in range(pivot_cols):
        pivot_row = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[top], rows[pivot_row] = rows[pivot_row], rows[top]
        inv = rows[top][col].inverse()
        rows[top] = [x * inv for x in rows[top]]
        for i in range(len(rows)):
            if i != top and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[top])]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows, pivots


def _solve_rows(A, B, field):
    """Solve A·X = B for rectangular row lists; free variables are fixed to zero."""
    _require_field(field)
    ncols = len(A[0])
    reduced, pivots = _row_reduce([ra + rb for ra, rb in zip(A, B)], ncols, field)
    r = len(pivots)
    for row in reduced[r:]:
        if any(row[ncols:]):
            return None
    width = len(B[0])
    zero_ = field.zero()
    X = [[zero_] * width for _ in range(ncols)]
    for t, col in enumerate(pivots):
        X[col] = list(reduced[t][ncols:])
    return X


def rank(M):
    _require_field(M.field)
    return len(_row_reduce(M.rows, M.n, M.field)[1])


def solve_right(M, B):
    """One X with M·X = B, or None."""
    _check_compatible(M, B)
    X = _solve_rows([list(r) for r in M.rows], [list(r) for r in B.rows], M.field)
    return None if X is None else Matrix(M.field, X)


def solve_left(M, B):
    """One X with X·M = B, or None (solved as the transposed right system)."""
    X = solve_right(transpose(M), transpose(B))
    return None if X is None else transpose(X)


def solve_sandwich(U, W, V):
    """One S with U·S·W = V, or None, via the vectorized system (W^T kron U)·vec(S) = vec(V)."""
    _check_compatible(U, W)
    _check_compatible(U, V)
    n = U.n
    A = []
    rhs = []
    for i in range(n):
        for l in range(n):
            A.append([U.rows[i][j] * W.rows[k][l] for j in range(n) for k in range(n)])
            rhs.append([V.rows[i][l]])
    x = _solve_rows(A, rhs, U.field)
    if x is None:
        return None
    return Matrix(U.field, [[x[j * n + k][0] for k in range(n)] for j in range(n)])


def inner_inverse(M):
    """G with M·G·M = M from the recorded elimination E·M·P = [[I_r, *], [0, 0]]."""
    _require_field(M.field)
    n = M.n
    aug = [list(r) + list(e) for r, e in zip(M.rows, identity(n, M.field).rows)]
    reduced, pivots = _row_reduce(aug, n, M.field)
    zero_ = M.field.zero()
    G = [[zero_] * n for _ in range(n)]
    for t, col in enumerate(pivots):
        G[col] = reduced[t][n:]
    return Matrix(M.field, G)


def inverse(M):
    _require_field(M.field)
    n = M.n
    aug = [list(r) + list(e) for r, e in zip(M.rows, identity(n, M.field).rows)]
    reduced, pivots = _row_reduce(aug, n, M.field)
    if len(pivots) < n:
        return None
    return Matrix(M.field, [r[n:] for r in reduced])


def left_inverse_of_element(E):
    """Over a field a square matrix is left invertible iff it has full rank."""
    return inverse(E)


right_inverse_of_element = left_inverse_of_element


def determinant(M):
    _require_field(M.field)
    rows = [list(r) for r in M.rows]
    n = M.n
    det = M.field.one()
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot_row is None:
            return M.field.zero()
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        det = det * rows[col][col]
        inv = rows[col][col].inverse()
        for i in range(col + 1, n):
            if rows[i][col]:
                factor = rows[i][col] * inv
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[col])]
    return det


def nullspace(rows, ncols, field):
    """Basis of {v : rows·v = 0} as lists of scalars."""
    _require_field(field)
    if not rows:
        reduced, pivots = [], []
    else:
        reduced, pivots = _row_reduce(rows, ncols, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero()] * ncols
        v[free] = field.one()
        for t, col in enumerate(pivots):
            v[col] = -reduced[t][free]
        basis.append(v)
    return basis


def _conj_transpose_rows(A):
    return [[conjugate(x) for x in col] for col in zip(*A)]


def _inverse_rows(A, field):
    n = len(A)
    eye = [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]
    X = _solve_rows(A, eye, field)
    if X is None:
        raise UnsupportedContextError("rank factorization produced a singular Gram matrix")
    return X


def mp_oracle(M):
    """Moore–Penrose inverse over Q(i) with conjugate transpose by rank factorization.

    M = C·F with C the pivot columns and F the nonzero rows of the reduced echelon form;
    then M† = F*(F F*)⁻¹(C* C)⁻¹C*.
    """
    if M.field.kind != GAUSSIAN:
        raise UnsupportedContextError("the rank-factorization oracle needs Q(i)")
    n = M.n
    reduced, pivots = _row_reduce(M.rows, n, M.field)
    r = len(pivots)
    if r == 0:
        return zero(n, M.field)
    C = [[M.rows[i][j] for j in pivots] for i in range(n)]
    F = [list(reduced[t]) for t in range(r)]
    Fs = _conj_transpose_rows(F)
    Cs = _conj_transpose_rows(C)
    z = M.field.zero()
    left = _mul_rows(Fs, _inverse_rows(_mul_rows(F, Fs, z), M.field), z)
    right = _mul_rows(_inverse_rows(_mul_rows(Cs, C, z), M.field), Cs, z)
    return Matrix(M.field, _mul_rows(left, right, z))


def random_matrix(n, field, rng, bound=3, zero_row_probability=0.0):
    rows = []
    for _ in range(n):
        if zero_row_probability and rng.random() < zero_row_probability:
            rows.append([field.zero()] * n)
        else:
            rows.append([field.random(rng, bound) for _ in range(n)])
    return Matrix(field, rows)


def all_matrices(k, field):
    """Every k×k matrix over a finite Z_p, row-major with the last entry varying fastest."""
    if field.kind != ZMOD:
        raise UnsupportedContextError("only matrices over Z_m can be enumerated")
    values = field.elements()
    for entries in itertools.product(values, repeat=k * k):
        yield Matrix(field, [entries[i * k:(i + 1) * k] for i in range(k)])
