import json
import os

import pandas as pd

import config
import finite_structures as fs
import matrix as mx
from exceptions import InputError
from scalars import QI, ScalarField, ZMOD
from star_context import MatrixStarContext


def parse_k_range(text):
    """'1..3' -> [1, 2, 3]; '2' -> [2]; '1,3' -> [1, 3]."""
    text = (text or config.DEFAULT_K_RANGE).strip()
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
            values = list(range(low, high + 1))
        else:
            values = [int(part) for part in text.split(",")]
    except ValueError:
        raise InputError(f"malformed k range '{text}'") from None
    if not values or min(values) < 1:
        raise InputError(f"k range '{text}' must be non-empty with k >= 1")
    return values


def _parse_int(text, what):
    try:
        return int(text)
    except ValueError:
        raise InputError(f"{what} must be an integer, got '{text}'") from None


def _parse_matrix_field(text):
    if text == "gaussian":
        return QI
    if text.startswith("zmod"):
        field = ScalarField(ZMOD, _parse_int(text[4:], "modulus"))
        if not field.is_field:
            raise InputError(f"matrix contexts need a prime modulus, got {field.modulus}")
        return field
    raise InputError(f"unknown matrix field '{text}' (gaussian or zmod<p>)")


def parse_structure_spec(spec, budget=None, logger=None):
    """Build the context named by a structure specification string."""
    spec = spec.strip()
    shortcuts = {"m2z2": (2, 2), "m2z3": (2, 3), "m2z5": (2, 5)}
    if spec in shortcuts:
        k, p = shortcuts[spec]
        return fs.build_matrix_structure(k, p, budget=budget, logger=logger)
    if spec == "trivial":
        return fs.trivial_monoid()
    kind, _, rest = spec.partition(":")
    if kind == "table" and rest:
        return fs.load_table(rest, budget=budget, logger=logger)
    if kind == "zmod" and rest:
        return fs.zmod_structure(_parse_int(rest, "n"), logger=logger)
    if kind == "mat":
        parts = rest.split(":")
        if len(parts) != 2:
            raise InputError(f"expected mat:<k>:<p>, got '{spec}'")
        return fs.build_matrix_structure(_parse_int(parts[0], "k"), _parse_int(parts[1], "p"),
                                         budget=budget, logger=logger)
    if kind == "matrix":
        parts = rest.split(":")
        n = config.DEFAULT_MATRIX_DIM
        if parts[0].isdigit():
            n = _parse_int(parts.pop(0), "n")
        if len(parts) not in (1, 2):
            raise InputError(f"expected matrix:[<n>:]<field>[:<involution>], got '{spec}'")
        if n < 1:
            raise InputError(f"matrix dimension must be at least 1, got {n}")
        field = _parse_matrix_field(parts[0])
        involution = mx.InvolutionKind.parse(parts[1]) if len(parts) == 2 else (
            mx.InvolutionKind.CONJUGATE_TRANSPOSE if field is QI else mx.InvolutionKind.TRANSPOSE)
        return MatrixStarContext(n, field, involution)
    raise InputError(f"unknown structure '{spec}'")


def write_report_json(payload, path):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True, ensure_ascii=False)
        f.write("\n")


def summary_frame(reports):
    rows = [{
        "theorem": r.theorem,
        "context": r.context,
        "instances": r.instances_examined,
        "hypothesis_hits": r.hypothesis_count,
        "formula_checks": r.formula_checks,
        "failures": len(r.failures),
        "verdict": ("explored" if r.exploratory else "PASS" if r.passed else "FAIL"),
    } for r in reports]
    columns = ["theorem", "context", "instances", "hypothesis_hits", "formula_checks", "failures", "verdict"]
    return pd.DataFrame(rows, columns=columns)
