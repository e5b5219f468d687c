"""Exact rational linear programming, just enough for cone questions.

A phase-I simplex over Fractions with Bland's anti-cycling rule decides
whether a target vector is a nonnegative combination of given generators.
The recession cone { v : <rho_i, v> >= 0 for all i } is trivial exactly when
the generators rho_i positively span the whole space, which reduces to 2n
such feasibility questions (one per signed coordinate direction).
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def feasible_nonneg_combination(columns, target) -> bool:
    """Whether target = sum_j lambda_j * columns[j] has a solution with all
    lambda_j >= 0.

    Solved as a phase-I problem: minimize the sum of artificial variables in
    [A | I] x = b, x >= 0.  Bland's rule (smallest eligible index enters,
    smallest basic index leaves on ratio ties) guarantees termination.
    """
    n = len(target)
    m = len(columns)
    if any(len(col) != n for col in columns):
        raise ValueError("column length mismatch")

    # Tableau rows: [A | I | b] with b >= 0 after row sign flips.
    tableau = []
    for i in range(n):
        coeffs = [Fraction(col[i]) for col in columns]
        b = Fraction(target[i])
        if b < 0:
            coeffs = [-c for c in coeffs]
            b = -b
        row = coeffs + [ZERO] * n + [b]
        tableau.append(row)
    for i in range(n):
        tableau[i][m + i] = ONE
    basis = list(range(m, m + n))
    width = m + n

    def reduced_cost(j):
        # cost 1 on artificials, 0 on originals
        r = ONE if j >= m else ZERO
        for i in range(n):
            if basis[i] >= m:
                r -= tableau[i][j]
        return r

    while True:
        entering = None
        for j in range(width):
            if j in basis:
                continue
            if reduced_cost(j) < 0:
                entering = j
                break
        if entering is None:
            break
        # ratio test; Bland tie-break on the leaving basic variable index
        leaving = None
        best = None
        for i in range(n):
            a = tableau[i][entering]
            if a > 0:
                ratio = tableau[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            # unbounded phase-I objective cannot happen (bounded below by 0)
            raise AssertionError("phase-I simplex detected unboundedness")
        pivot = tableau[leaving][entering]
        tableau[leaving] = [x / pivot for x in tableau[leaving]]
        for i in range(n):
            if i != leaving and tableau[i][entering] != 0:
                factor = tableau[i][entering]
                tableau[i] = [x - factor * y for x, y in zip(tableau[i], tableau[leaving])]
        basis[leaving] = entering

    value = sum(tableau[i][width] for i in range(n) if basis[i] >= m)
    return value == 0


def positively_spans(vectors, dim) -> bool:
    """Whether the conical hull of the given integer vectors is all of R^dim.

    A convex cone containing every signed coordinate direction is the whole
    space, so checking the 2*dim directions suffices.
    """
    for k in range(dim):
        for sign in (1, -1):
            target = [0] * dim
            target[k] = sign
            if not feasible_nonneg_combination(vectors, target):
                return False
    return True
