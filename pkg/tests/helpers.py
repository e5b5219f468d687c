"""Shared test utilities: independent oracles and random class generators.

The oracles here deliberately avoid the code paths they check: determinants
by cofactor expansion, elementary divisors by gcds of minors, recession
rays by brute-force search over facet subsets.
"""

import itertools
import math
from fractions import Fraction

from orbicoh.polynomial import Polynomial, monomials_up_to_degree


def det_cofactor(rows):
    """Determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [
            [rows[i][k] for k in range(n) if k != j] for i in range(1, n)
        ]
        total += (-1) ** j * rows[0][j] * det_cofactor(minor)
    return total


def gcd_of_minors(rows, k):
    """gcd of all k x k minors of an integer matrix (0 if all vanish)."""
    nrows, ncols = len(rows), len(rows[0])
    g = 0
    for rsel in itertools.combinations(range(nrows), k):
        for csel in itertools.combinations(range(ncols), k):
            sub = [[rows[i][j] for j in csel] for i in rsel]
            g = math.gcd(g, abs(det_cofactor(sub)))
    return g


def elementary_divisors_by_minors(rows):
    """Elementary divisors via determinantal divisors: d_k = g_k / g_{k-1}."""
    nrows, ncols = len(rows), len(rows[0])
    divisors = []
    prev = 1
    for k in range(1, min(nrows, ncols) + 1):
        g = gcd_of_minors(rows, k)
        if g == 0:
            break
        divisors.append(g // prev)
        prev = g
    return divisors


def recession_ray_brute_force(normals, dim):
    """A nonzero ray of { v : <rho_i, v> >= 0 }, or None if the cone is {0}.

    The cone is pointed whenever the normals span the space, and a pointed
    nontrivial cone has an extreme ray on dim-1 linearly independent tight
    constraints, so searching directions spanned by (dim-1)-subsets is
    exhaustive.  Rank-deficient normal sets are handled by the lineality
    check first.
    """
    for vec in _kernel_integer(normals, dim):
        return vec  # lineality direction: the cone contains a line
    if dim == 1:
        for cand in ((1,), (-1,)):
            if all(r[0] * cand[0] >= 0 for r in normals):
                return cand
        return None
    for subset in itertools.combinations(range(len(normals)), dim - 1):
        sub = [normals[i] for i in subset]
        for direction in _kernel_integer(sub, dim):
            for cand in (direction, tuple(-x for x in direction)):
                if all(sum(r[k] * cand[k] for k in range(dim)) >= 0 for r in normals):
                    return cand
    return None


def _kernel_integer(rows, dim):
    """Integer spanning vectors of the rational kernel of the row space."""
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    rank = 0
    for col in range(dim):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        work[rank] = [x / pv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        pivots.append(col)
        rank += 1
    out = []
    for free in (c for c in range(dim) if c not in pivots):
        vec = [Fraction(0)] * dim
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][free]
        lcm = 1
        for x in vec:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        out.append(tuple(int(x * lcm) for x in vec))
    return out


def random_class(ring, rng, max_degree=3, coeff_bound=9, max_terms=3):
    """A random class: 1-2 random sectors, small random polynomials."""
    monomials = monomials_up_to_degree(ring.num_vars, max_degree)
    parts = {}
    for _ in range(rng.randint(1, 2)):
        g = ring.sectors[rng.randrange(len(ring.sectors))]
        p = Polynomial.zero(ring.num_vars)
        for _ in range(rng.randint(1, max_terms)):
            exps = monomials[rng.randrange(len(monomials))]
            p = p + Polynomial.monomial(ring.num_vars, exps, rng.randint(-coeff_bound, coeff_bound))
        parts[g] = parts[g] + p if g in parts else p
    return ring.cr_class(parts)


def random_homogeneous_class(ring, rng, max_degree=3, coeff_bound=9):
    g = ring.sectors[rng.randrange(len(ring.sectors))]
    degree = rng.randint(0, max_degree)
    options = [e for e in monomials_up_to_degree(ring.num_vars, degree) if sum(e) == degree]
    p = Polynomial.zero(ring.num_vars)
    for _ in range(rng.randint(1, 3)):
        exps = options[rng.randrange(len(options))]
        p = p + Polynomial.monomial(ring.num_vars, exps, rng.randint(-coeff_bound, coeff_bound))
    return ring.cr_class({g: p})
