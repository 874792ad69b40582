"""Exact Gaussian elimination and Fourier-Motzkin elimination over Fractions."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def solve_affine(A: Sequence[Sequence], b: Sequence):
    """Solve A x = b exactly.

    Returns None when inconsistent, otherwise (particular, kernel_basis)
    where kernel_basis spans the null space of A.
    """
    n = len(A[0])
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = m[i][n]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        basis.append(v)
    return x, basis


def rank(A: Sequence[Sequence]) -> int:
    return len(rref(A)[1])


def fm_feasible(ineqs: list[tuple[list[Fraction], Fraction]]) -> bool:
    """Decide whether {y : a.y <= b for every (a, b)} is nonempty.

    Plain Fourier-Motzkin elimination, one variable at a time. Meant for
    the two or three variables that arise here, not for large systems.
    """
    ineqs = [([Fraction(x) for x in a], Fraction(b)) for a, b in ineqs]
    if not ineqs:
        return True
    nvars = len(ineqs[0][0])
    for var in range(nvars):
        pos, neg, rest = [], [], []
        for a, b in ineqs:
            if a[var] > 0:
                pos.append((a, b))
            elif a[var] < 0:
                neg.append((a, b))
            else:
                rest.append((a, b))
        new = rest
        for ap, bp in pos:
            for an, bn in neg:
                lp, ln = ap[var], -an[var]
                a = [ln * x + lp * y for x, y in zip(ap, an)]
                new.append((a, ln * bp + lp * bn))
        ineqs = _dedupe(new)
    # all coefficients now vanish: constraints read 0 <= b
    return all(b >= 0 for _, b in ineqs)


def _dedupe(ineqs):
    seen = {}
    for a, b in ineqs:
        lead = next((abs(x) for x in a if x != 0), None)
        if lead is not None and lead != 1:
            a = [x / lead for x in a]
            b = b / lead
        key = tuple(a)
        if key not in seen or b < seen[key]:
            seen[key] = b
    return [(list(k), b) for k, b in seen.items()]
