"""Pure-Python exact phase-1 simplex kernel.

Decides feasibility of ``A x = b, x >= 0`` over the rationals, for integer
input data.  ``torusgit._simplex_cy`` is the compiled twin with identical
semantics; :mod:`torusgit.ratlp` selects whichever imports.

Tableau entries are kept as separate numerator/denominator integer pairs
rather than :class:`fractions.Fraction` instances: the pivot loop is the
hot path of every stability sweep, and Fraction allocation dominates its
runtime.  Denominators are kept positive, entries reduced after every
update, so intermediate integers stay small.  Bland's rule makes
termination unconditional and every pivot choice deterministic, hence
certificates are reproducible byte for byte.
"""

from fractions import Fraction
from math import gcd

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"

KERNEL_NAME = "python"


def solve_eq_nonneg(matrix, rhs):
    """Decide ``matrix . x = rhs`` with ``x >= 0``, all inputs integer.

    Returns ``(FEASIBLE, x)`` with ``x`` a list of Fraction of length
    ``len(matrix[0])``, or ``(INFEASIBLE, y)`` where ``y`` (list of
    Fraction, length ``len(rhs)``) is a Farkas certificate for the input
    orientation: ``y . column <= 0`` for every column and ``y . rhs > 0``.
    """
    m = len(matrix)
    if m != len(rhs):
        raise ValueError("matrix/rhs size mismatch")
    if m == 0:
        return FEASIBLE, []
    k = len(matrix[0])

    # Orient every row so the right-hand side is nonnegative, then append
    # the artificial identity block.  Phase 1 minimises the sum of the
    # artificial variables starting from the all-artificial basis.
    flipped = [False] * m
    tn = []
    td = []
    bn = [0] * m
    bd = [1] * m
    for i in range(m):
        row = matrix[i]
        if len(row) != k:
            raise ValueError("ragged matrix")
        b = rhs[i]
        if b < 0:
            flipped[i] = True
            row = [-a for a in row]
            b = -b
        else:
            row = list(row)
        art = [0] * m
        art[i] = 1
        tn.append(row + art)
        td.append([1] * (k + m))
        bn[i] = b
    width = k + m
    basis = list(range(k, k + m))

    # Reduced costs r_j = y.A_j - c_j with y = c_B B^{-1}; initially the
    # basis is all-artificial so y is the all-ones vector.
    rn = [0] * width
    rd = [1] * width
    for j in range(k):
        s = 0
        for i in range(m):
            s += tn[i][j]
        rn[j] = s
    vn = 0
    vd = 1
    for i in range(m):
        n = vn * bd[i] + bn[i] * vd
        d = vd * bd[i]
        g = gcd(n, d)
        vn, vd = (n // g, d // g) if g > 1 else (n, d)

    while vn != 0:
        # Bland: smallest-index real column with positive reduced cost.
        # Artificial columns never re-enter.
        enter = -1
        for j in range(k):
            if rn[j] > 0:
                enter = j
                break
        if enter < 0:
            break

        # Ratio test; ties resolved by smallest basic-variable index.
        leave = -1
        ln = 0
        ld = 1
        for i in range(m):
            pn = tn[i][enter]
            if pn > 0:
                pd = td[i][enter]
                cn = bn[i] * pd
                cd = bd[i] * pn
                if leave < 0:
                    better = True
                else:
                    diff = cn * ld - ln * cd
                    better = diff < 0 or (diff == 0 and basis[i] < basis[leave])
                if better:
                    leave = i
                    ln = cn
                    ld = cd
        if leave < 0:
            raise AssertionError("unbounded phase-1 objective; tableau corrupt")

        # Pivot on (leave, enter): normalise the pivot row, then eliminate
        # the entering column from every other row and the cost row.
        pn = tn[leave][enter]
        pd = td[leave][enter]
        prow_n = tn[leave]
        prow_d = td[leave]
        for j in range(width):
            n = prow_n[j]
            if n:
                n *= pd
                d = prow_d[j] * pn
                g = gcd(n, d)
                if g > 1:
                    n //= g
                    d //= g
                prow_n[j] = n
                prow_d[j] = d
        n = bn[leave] * pd
        d = bd[leave] * pn
        g = gcd(n, d)
        bn[leave], bd[leave] = (n // g, d // g) if g > 1 else (n, d)

        for i in range(m):
            if i == leave:
                continue
            fn = tn[i][enter]
            if fn == 0:
                continue
            fd = td[i][enter]
            row_n = tn[i]
            row_d = td[i]
            for j in range(width):
                cn = prow_n[j]
                if cn == 0:
                    continue
                n1 = fn * cn
                d1 = fd * prow_d[j]
                n = row_n[j] * d1 - n1 * row_d[j]
                d = row_d[j] * d1
                g = gcd(n, d)
                if g > 1:
                    n //= g
                    d //= g
                row_n[j] = n
                row_d[j] = d
            n1 = fn * bn[leave]
            d1 = fd * bd[leave]
            n = bn[i] * d1 - n1 * bd[i]
            d = bd[i] * d1
            g = gcd(n, d)
            bn[i], bd[i] = (n // g, d // g) if g > 1 else (n, d)

        fn = rn[enter]
        if fn != 0:
            fd = rd[enter]
            for j in range(width):
                cn = prow_n[j]
                if cn == 0:
                    continue
                n1 = fn * cn
                d1 = fd * prow_d[j]
                n = rn[j] * d1 - n1 * rd[j]
                d = rd[j] * d1
                g = gcd(n, d)
                if g > 1:
                    n //= g
                    d //= g
                rn[j] = n
                rd[j] = d
            n1 = fn * bn[leave]
            d1 = fd * bd[leave]
            n = vn * d1 - n1 * vd
            d = vd * d1
            g = gcd(n, d)
            vn, vd = (n // g, d // g) if g > 1 else (n, d)

        basis[leave] = enter

    if vn == 0:
        x = [Fraction(0)] * k
        for i in range(m):
            if basis[i] < k:
                x[basis[i]] = Fraction(bn[i], bd[i])
        return FEASIBLE, x

    # Farkas: y_i = r_{artificial i} + 1, undoing the row orientation.
    y = []
    for i in range(m):
        yi = Fraction(rn[k + i], rd[k + i]) + 1
        if flipped[i]:
            yi = -yi
        y.append(yi)
    return INFEASIBLE, y
