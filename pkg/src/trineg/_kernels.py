"""Array kernels shared by the grid audits and the truth-table enumerator.

Each kernel exists twice: a numba ``@njit`` version and a pure-numpy
version.  ``TRINEG_DISABLE_NUMBA=1`` (or numba being absent) selects the
numpy path.  Both paths are importable regardless so they can be tested
and benchmarked against each other.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

_DISABLED = os.environ.get("TRINEG_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}
HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not _DISABLED
BACKEND = "numba" if USE_NUMBA else "numpy"

# opcodes of the postfix programs produced by ``semantics.compile_formula``
OP_ATOM = 0
OP_OPP = 1
OP_INT = 2
OP_CON = 3
OP_AND = 4
OP_OR = 5
OP_IMP = 6


# ---------------------------------------------------------------------------
# intermediary negation over an array of degrees

def _int_neg_verbatim_py(d: float, lam: float) -> float:
    if lam >= 0.5:
        k = (2.0 * lam - 1.0) / (1.0 - lam)
        if lam < d <= 1.0:
            return lam - k * (d - lam)
        if 0.0 <= d <= 1.0 - lam:
            return lam - k * d
    if lam <= 0.5:
        k = (1.0 - 2.0 * lam) / lam
        if 0.0 <= d <= lam:
            return (1.0 - lam) - k * d
        if 1.0 - lam < d <= 1.0:
            return (1.0 - lam) - k * (d + lam - 1.0)
    return d


def int_neg_array_numpy(d: np.ndarray, lam: float, symmetric: bool) -> np.ndarray:
    d = np.asarray(d, dtype=np.float64)
    if symmetric:
        d = np.where(d >= 0.5, d, 1.0 - d)
    out = d.copy()
    done = np.zeros(d.shape, dtype=bool)
    if lam >= 0.5:
        k = (2.0 * lam - 1.0) / (1.0 - lam)
        m = (d > lam) & (d <= 1.0)
        out[m] = lam - k * (d[m] - lam)
        done |= m
        m = ~done & (d >= 0.0) & (d <= 1.0 - lam)
        out[m] = lam - k * d[m]
        done |= m
    if lam <= 0.5:
        k = (1.0 - 2.0 * lam) / lam
        m = ~done & (d >= 0.0) & (d <= lam)
        out[m] = (1.0 - lam) - k * d[m]
        done |= m
        m = ~done & (d > 1.0 - lam) & (d <= 1.0)
        out[m] = (1.0 - lam) - k * (d[m] + lam - 1.0)
    return out


# ---------------------------------------------------------------------------
# three-valued postfix programs over all 3**n assignments
#
# Values are coded 0, 1, 2 for 0, 1/2, 1.  ``imp`` is a 3x3 int8 table.

def eval_program_numpy(ops: np.ndarray, args: np.ndarray, n_atoms: int, imp: np.ndarray) -> np.ndarray:
    rows = 3 ** n_atoms
    idx = np.arange(rows, dtype=np.int64)
    stack: list[np.ndarray] = []
    for op, arg in zip(ops.tolist(), args.tolist()):
        if op == OP_ATOM:
            stack.append(((idx // 3 ** (n_atoms - 1 - arg)) % 3).astype(np.int8))
        elif op == OP_OPP:
            stack.append((2 - stack.pop()).astype(np.int8))
        elif op == OP_INT:
            stack.append(np.where(stack.pop() == 1, 2, 1).astype(np.int8))
        elif op == OP_CON:
            v = stack.pop()
            stack.append(np.maximum(2 - v, np.where(v == 1, 2, 1)).astype(np.int8))
        else:
            b = stack.pop()
            a = stack.pop()
            if op == OP_AND:
                stack.append(np.minimum(a, b))
            elif op == OP_OR:
                stack.append(np.maximum(a, b))
            else:
                stack.append(imp[a, b])
    (result,) = stack
    return np.ascontiguousarray(result, dtype=np.int8)


def _eval_program_loop(ops, args, n_atoms, imp):
    rows = 3 ** n_atoms
    out = np.empty(rows, dtype=np.int8)
    stack = np.empty(len(ops) + 1, dtype=np.int8)
    vals = np.empty(max(n_atoms, 1), dtype=np.int8)
    for r in range(rows):
        rem = r
        for j in range(n_atoms - 1, -1, -1):
            vals[j] = rem % 3
            rem //= 3
        sp = 0
        for i in range(len(ops)):
            op = ops[i]
            if op == 0:
                stack[sp] = vals[args[i]]
                sp += 1
            elif op == 1:
                stack[sp - 1] = 2 - stack[sp - 1]
            elif op == 2:
                stack[sp - 1] = 2 if stack[sp - 1] == 1 else 1
            elif op == 3:
                v = stack[sp - 1]
                o = 2 - v
                m = 2 if v == 1 else 1
                stack[sp - 1] = o if o > m else m
            else:
                b = stack[sp - 1]
                a = stack[sp - 2]
                sp -= 1
                if op == 4:
                    stack[sp - 1] = a if a < b else b
                elif op == 5:
                    stack[sp - 1] = a if a > b else b
                else:
                    stack[sp - 1] = imp[a, b]
        out[r] = stack[0]
    return out


def _int_neg_array_loop(d, lam, symmetric):
    out = np.empty(d.shape[0], dtype=np.float64)
    for i in range(d.shape[0]):
        x = d[i]
        if symmetric and x < 0.5:
            x = 1.0 - x
        out[i] = _int_neg_verbatim_jit(x, lam)
    return out


if HAVE_NUMBA:
    _int_neg_verbatim_jit = numba.njit(cache=True)(_int_neg_verbatim_py)
    _int_neg_array_numba = numba.njit(cache=True)(_int_neg_array_loop)
    _eval_program_numba = numba.njit(cache=True)(_eval_program_loop)

    def int_neg_array_numba(d: np.ndarray, lam: float, symmetric: bool) -> np.ndarray:
        d = np.ascontiguousarray(d, dtype=np.float64)
        return _int_neg_array_numba(d.ravel(), float(lam), bool(symmetric)).reshape(d.shape)

    def eval_program_numba(ops: np.ndarray, args: np.ndarray, n_atoms: int, imp: np.ndarray) -> np.ndarray:
        return _eval_program_numba(
            np.ascontiguousarray(ops, dtype=np.int64),
            np.ascontiguousarray(args, dtype=np.int64),
            int(n_atoms),
            np.ascontiguousarray(imp, dtype=np.int8),
        )
else:  # pragma: no cover
    int_neg_array_numba = int_neg_array_numpy
    eval_program_numba = eval_program_numpy


if USE_NUMBA:
    int_neg_array = int_neg_array_numba
    eval_program = eval_program_numba
else:
    int_neg_array = int_neg_array_numpy
    eval_program = eval_program_numpy
