"""Brute-force oracles used to cross-check the library.

Everything here is deliberately dumb: exhaustive subset enumeration and
dense Gaussian elimination over Fraction.  None of it shares code with
the simplex kernel or the root-system machinery it checks.
"""

from fractions import Fraction
from itertools import combinations, permutations


def solve_unique(rows, rhs):
    """Solve a linear system with a unique solution, else return None.

    ``rows`` is an m x n Fraction matrix, ``rhs`` length m.  Returns the
    solution vector when the system is consistent with full column rank,
    None otherwise (inconsistent or underdetermined).
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None  # inconsistent
    if len(pivots) < n:
        return None  # underdetermined
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = aug[i][n]
    return sol


def hull_membership_caratheodory(points, target):
    """Exhaustive Caratheodory test: target in conv(points)?

    Tries every subset of at most dim+1 points; a subset certifies
    membership when the (unique) affine solution exists with nonnegative
    weights.  Caratheodory's theorem makes this complete: any hull member
    is a convex combination of an affinely independent subset, and those
    systems have unique solutions.
    """
    dim = len(target)
    npts = len(points)
    for size in range(1, min(npts, dim + 1) + 1):
        for subset in combinations(range(npts), size):
            rows = [[points[i][j] for i in subset] for j in range(dim)]
            rows.append([Fraction(1)] * size)
            sol = solve_unique(rows, list(target) + [Fraction(1)])
            if sol is not None and all(c >= 0 for c in sol):
                return True
    return False


def _matrix_rank(rows):
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])
    a = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    for c in range(n):
        pr = next((i for i in range(rank, m) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[rank], a[pr] = a[pr], a[rank]
        inv = 1 / a[rank][c]
        a[rank] = [v * inv for v in a[rank]]
        for i in range(m):
            if i != rank and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def _nullspace_vector(rows, dim):
    """One nonzero kernel vector of the row span, None if trivial."""
    a = [[Fraction(v) for v in row] for row in rows]
    m = len(a)
    pivots = {}
    rank = 0
    for c in range(dim):
        pr = next((i for i in range(rank, m) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[rank], a[pr] = a[pr], a[rank]
        inv = 1 / a[rank][c]
        a[rank] = [v * inv for v in a[rank]]
        for i in range(m):
            if i != rank and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        pivots[c] = rank
        rank += 1
    free = [c for c in range(dim) if c not in pivots]
    if not free:
        return None
    f0 = free[0]
    vec = [Fraction(0)] * dim
    vec[f0] = Fraction(1)
    for c, r in pivots.items():
        vec[c] = -a[r][f0]
    return vec


def supporting_functional_bruteforce(points):
    """Find a nonzero u with u.p >= 0 for all points, else None.

    The set of such u is a polyhedral cone; when the points span the
    ambient space it is pointed, so if nonzero it has an extreme ray cut
    out by dim-1 linearly independent active points.  Enumerating those
    subsets (plus the rank-deficient case) is complete.
    """
    dim = len(points[0])
    span_rank = _matrix_rank(points)
    if span_rank < dim:
        u = _nullspace_vector(points, dim)
        return u  # orthogonal to every point
    for subset in combinations(range(len(points)), dim - 1):
        rows = [points[i] for i in subset]
        if _matrix_rank(rows) != dim - 1:
            continue
        u = _nullspace_vector(rows, dim)
        if u is None:
            continue
        for cand in (u, [-c for c in u]):
            if all(sum(c * p[j] for j, c in enumerate(cand)) >= 0 for p in points):
                return cand
    return None


def interior_membership_bruteforce(points, target):
    """Facet-enumeration interior test: target interior to conv(points)?"""
    if not hull_membership_caratheodory(points, target):
        return False
    shifted = [tuple(c - t for c, t in zip(p, target)) for p in points]
    return supporting_functional_bruteforce(shifted) is None


# -- type-A character conditions via permutations -----------------------
#
# For sl(n+1) everything can be phrased on integer (n+1)-tuples summing
# to zero, with the symmetric group permuting coordinates.  This gives a
# check of the polarization conditions that never touches the Cartan
# matrix, Weyl matrices or the dominance machinery.

def type_a_eps(omega_coords):
    """(n+1) epsilon-coordinates (Fractions summing to 0) from omega ones."""
    n = len(omega_coords)
    partial = [Fraction(sum(omega_coords[i:])) for i in range(n)] + [Fraction(0)]
    shift = Fraction(sum((i + 1) * c for i, c in enumerate(omega_coords)), n + 1)
    return [p - shift for p in partial]


def type_a_alpha_from_eps(eps):
    """alpha-coordinates = prefix sums of epsilon-coordinates."""
    out = []
    acc = Fraction(0)
    for x in eps[:-1]:
        acc += x
        out.append(acc)
    return out


def type_a_character_conditions(omega_coords):
    """Evaluate the four polarization conditions for type A directly.

    Returns a dict of booleans keyed like the library's certificate:
    root-monoid membership, regular dominance, nonnegativity of all
    simple-reflection images, and nonvanishing of every pairing with a
    permuted fundamental one-parameter subgroup (checked by iterating
    the full symmetric group on epsilon-coordinates).
    """
    eps = type_a_eps(omega_coords)
    alpha = type_a_alpha_from_eps(eps)
    in_monoid = all(c.denominator == 1 and c >= 0 for c in alpha)
    regular = all(a > b for a, b in zip(eps, eps[1:]))
    reflections = True
    for i in range(len(eps) - 1):
        swapped = list(eps)
        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
        alpha_s = type_a_alpha_from_eps(swapped)
        if not all(c.denominator == 1 and c >= 0 for c in alpha_s):
            reflections = False
            break
    pairings = True
    for perm in permutations(range(len(eps))):
        acc = Fraction(0)
        for idx in perm[:-1]:
            acc += eps[idx]
            if acc == 0:
                pairings = False
                break
        if not pairings:
            break
    return {
        "in_root_monoid": in_monoid,
        "regular_dominant": regular,
        "reflections_nonneg": reflections,
        "pairings_nonzero": pairings,
    }
