"""Enumeration oracles for cross-checking the closed formulas.

``brute_count`` touches every coordinate tuple in the height box; it is
the ground truth the rest of the library is validated against, and it
refuses jobs above an evaluation budget.  ``convolution_count`` is the
big-box substitute: it convolves per-variable value histograms over the
additive group of truncated polynomials, exactly, in integer arithmetic
(no FFTs; exactness matters more than speed at this scale).

Both paths work with integer encodings of the value group
F_q[t] / t^(2P-1): a polynomial value maps to the base-q integer of its
coefficient digits, and digitwise F_q addition drives everything.
"""

from __future__ import annotations

import numpy as np

from .expsums import QuadForm
from .polyring import Poly, enumerate_below, poly_gcd

DEFAULT_BUDGET = 10**8

#: Hard cap on the value-group size q^(2P-1) for the convolution path.
CONVOLUTION_STATE_CAP = 2_000_000

#: Build the full subtraction table when the group is at most this large.
_SUB_TABLE_CAP = 4096


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed its evaluation budget."""


def _check_budget(f: QuadForm, P: int, budget: int) -> int:
    total = f.ctx.q ** (f.n * P)
    if total > budget:
        raise BudgetExceeded(
            f"enumeration needs {total} evaluations, budget is {budget}; "
            "raise the budget or use convolution_count"
        )
    if total >= 2**62:
        raise BudgetExceeded("count could overflow 64-bit accumulators")
    return total


def _box_values(f: QuadForm, P: int):
    """Per-variable encodings of a_i * x^2 over the box, plus shared tables.

    Returns (xs, vals_enc, vals_digits, fq_add, fq_neg, m).  Encodings
    index the value group F_q[t]/t^m with m = 2P - 1; digits are little
    endian base q.
    """
    ctx = f.ctx
    q = ctx.q
    m = 2 * P - 1
    xs = list(enumerate_below(ctx, P))
    fq_add = [[ctx.add(a, b) for b in range(q)] for a in range(q)]
    fq_neg = [ctx.neg(a) for a in range(q)]
    vals_enc = []
    vals_digits = []
    for ai in f.coeffs:
        encs = np.empty(len(xs), dtype=np.int64)
        digits = []
        for pos, x in enumerate(xs):
            v = (x * x).scale(ai)
            d = tuple(v.coeff(j) for j in range(m))
            digits.append(d)
            enc = 0
            for j in range(m - 1, -1, -1):
                enc = enc * q + d[j]
            encs[pos] = enc
        vals_enc.append(encs)
        vals_digits.append(digits)
    return xs, vals_enc, vals_digits, fq_add, fq_neg, m


def _pair_table(enc_a: np.ndarray, enc_b: np.ndarray, q: int, m: int, fq_add_np):
    """Encoded group sums of every (x_{n-1}, x_n) value pair, flattened."""
    out = np.zeros((enc_a.size, enc_b.size), dtype=np.int64)
    pw = 1
    for j in range(m):
        da = (enc_a // pw) % q
        db = (enc_b // pw) % q
        out += fq_add_np[da[:, None], db[None, :]] * pw
        pw *= q
    return out.ravel()


def brute_count(f: QuadForm, P: int, budget: int = DEFAULT_BUDGET) -> int:
    """N(P) by full enumeration of the q^(nP) coordinate tuples.

    The outer n-2 coordinates run through an explicit odometer; for each
    setting, the values of the final coordinate pair are compared against
    the required complement in one vectorized sweep.
    """
    if P < 0:
        raise ValueError("P must be >= 0")
    _check_budget(f, P, budget)
    if P == 0:
        return 1
    ctx = f.ctx
    q = ctx.q
    n = f.n
    _, vals_enc, vals_digits, fq_add, fq_neg, m = _box_values(f, P)
    if n == 1:
        return int(np.count_nonzero(vals_enc[0] == 0))
    fq_add_np = np.array(fq_add, dtype=np.int64)
    pair = _pair_table(vals_enc[n - 2], vals_enc[n - 1], q, m, fq_add_np)
    size = q**P
    acc = 0

    def rec(k: int, partial: tuple) -> None:
        nonlocal acc
        if k == n - 2:
            target = 0
            for j in range(m - 1, -1, -1):
                target = target * q + fq_neg[partial[j]]
            acc += int(np.count_nonzero(pair == target))
            return
        digits = vals_digits[k]
        for idx in range(size):
            d = digits[idx]
            rec(k + 1, tuple(fq_add[a][b] for a, b in zip(partial, d)))

    rec(0, (0,) * m)
    return acc


def _is_primitive(coords) -> bool:
    g = None
    for x in coords:
        if x.is_zero():
            continue
        g = x.monic() if g is None else poly_gcd(g, x)
        if g.deg == 0:
            return True
    return False


def brute_primitive_count(f: QuadForm, P: int, budget: int = DEFAULT_BUDGET) -> int:
    """Primitive solutions (unit gcd) in the box, divided by the q - 1 units."""
    if P < 0:
        raise ValueError("P must be >= 0")
    _check_budget(f, P, budget)
    if P == 0:
        return 0
    ctx = f.ctx
    q = ctx.q
    n = f.n
    xs, vals_enc, vals_digits, fq_add, fq_neg, m = _box_values(f, P)
    if n == 1:
        return 0  # the only solution of a x^2 = 0 is x = 0
    fq_add_np = np.array(fq_add, dtype=np.int64)
    pair = _pair_table(vals_enc[n - 2], vals_enc[n - 1], q, m, fq_add_np)
    size = q**P
    acc = 0

    def rec(k: int, partial: tuple, chosen: tuple) -> None:
        nonlocal acc
        if k == n - 2:
            target = 0
            for j in range(m - 1, -1, -1):
                target = target * q + fq_neg[partial[j]]
            for pos in np.nonzero(pair == target)[0]:
                i, j = divmod(int(pos), size)
                if _is_primitive(chosen + (xs[i], xs[j])):
                    acc += 1
            return
        digits = vals_digits[k]
        for idx in range(size):
            d = digits[idx]
            rec(k + 1, tuple(fq_add[a][b] for a, b in zip(partial, d)), chosen + (xs[idx],))

    rec(0, (0,) * m, ())
    assert acc % (q - 1) == 0, "unit orbits of primitive solutions tore"
    return acc // (q - 1)


def brute_morphism_count(f: QuadForm, P: int, budget: int = DEFAULT_BUDGET) -> int:
    """Degree-P morphism count as the increment of the primitive count.

    Needs the box at P + 1, so the budget must cover q^(n(P+1)).
    """
    if P < 1:
        raise ValueError("P must be >= 1")
    hi = brute_primitive_count(f, P + 1, budget)
    lo = brute_primitive_count(f, P, budget)
    out = hi - lo
    assert out >= 0, "primitive counts decreased with the box"
    return out


# ---------------------------------------------------------------------------
# histogram convolution


def convolution_count(f: QuadForm, P: int) -> int:
    """N(P) by exact histogram convolution over the value group.

    Builds, per variable, the histogram of a_i x^2 over F_q[t]/t^(2P-1)
    and convolves them with the group's addition; the count is the mass
    at 0.  Memory is ~q^(2P-1) counters, independent of n.
    """
    if P < 0:
        raise ValueError("P must be >= 0")
    if P == 0:
        return 1
    ctx = f.ctx
    q = ctx.q
    m = 2 * P - 1
    G = q**m
    if G > CONVOLUTION_STATE_CAP:
        raise BudgetExceeded(
            f"value group has {G} elements, above the cap {CONVOLUTION_STATE_CAP}"
        )
    if ctx.q ** (f.n * P) >= 2**62:
        raise BudgetExceeded("count could overflow 64-bit accumulators")
    _, vals_enc, _, fq_add, fq_neg, _ = _box_values(f, P)
    fq_add_np = np.array(fq_add, dtype=np.int64)
    fq_neg_np = np.array(fq_neg, dtype=np.int64)
    digits = np.empty((m, G), dtype=np.int64)
    pw = 1
    all_idx = np.arange(G, dtype=np.int64)
    for j in range(m):
        digits[j] = (all_idx // pw) % q
        pw *= q
    neg_digits = fq_neg_np[digits]

    sub_table = None
    if G <= _SUB_TABLE_CAP:
        sub_table = np.zeros((G, G), dtype=np.int64)
        pw = 1
        for j in range(m):
            sub_table += fq_add_np[digits[j][:, None], neg_digits[j][None, :]] * pw
            pw *= q

    def convolve(A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if sub_table is not None:
            return B[sub_table] @ A
        out = np.zeros(G, dtype=np.int64)
        powers = [q**j for j in range(m)]
        for g in np.nonzero(A)[0]:
            row = np.zeros(G, dtype=np.int64)
            for j in range(m):
                row += fq_add_np[digits[j], neg_digits[j][g]] * powers[j]
            out += A[int(g)] * B[row]
        return out

    conv = np.bincount(vals_enc[0], minlength=G).astype(np.int64)
    for i in range(1, f.n):
        hist = np.bincount(vals_enc[i], minlength=G).astype(np.int64)
        conv = convolve(conv, hist)
    return int(conv[0])
