# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled exact phase-1 simplex kernel.

Same algorithm, pivot rule and certificate layout as
``torusgit._simplex_py`` (the docstrings there are authoritative); the
speedup comes from typed loop counters and direct list indexing, while
the arithmetic itself stays on arbitrary-precision Python integers.
"""

from fractions import Fraction
from math import gcd

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"

KERNEL_NAME = "cython"


def solve_eq_nonneg(matrix, rhs):
    """Decide ``matrix . x = rhs`` with ``x >= 0``, all inputs integer.

    Returns ``(FEASIBLE, x)`` or ``(INFEASIBLE, farkas)`` exactly as the
    pure-Python kernel does.
    """
    cdef Py_ssize_t m = len(matrix)
    if m != len(rhs):
        raise ValueError("matrix/rhs size mismatch")
    if m == 0:
        return FEASIBLE, []
    cdef Py_ssize_t k = len(matrix[0])
    cdef Py_ssize_t width = k + m
    cdef Py_ssize_t i, j, enter, leave
    cdef list tn = [], td = [], flipped = []
    cdef list bn = [0] * m, bd = [1] * m
    cdef list basis = list(range(k, k + m))
    cdef list row, art, rn, rd, prow_n, prow_d, row_n, row_d

    for i in range(m):
        row = list(matrix[i])
        if len(row) != k:
            raise ValueError("ragged matrix")
        b = rhs[i]
        if b < 0:
            flipped.append(True)
            row = [-a for a in row]
            b = -b
        else:
            flipped.append(False)
        art = [0] * m
        art[i] = 1
        tn.append(row + art)
        td.append([1] * width)
        bn[i] = b

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
        if g > 1:
            n //= g
            d //= g
        vn = n
        vd = d

    while vn != 0:
        enter = -1
        for j in range(k):
            if rn[j] > 0:
                enter = j
                break
        if enter < 0:
            break

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

        pn = tn[leave][enter]
        pd = td[leave][enter]
        prow_n = tn[leave]
        prow_d = td[leave]
        for j in range(width):
            n = prow_n[j]
            if n:
                n = n * pd
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
        if g > 1:
            n //= g
            d //= g
        bn[leave] = n
        bd[leave] = d

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
            if g > 1:
                n //= g
                d //= g
            bn[i] = n
            bd[i] = d

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
            if g > 1:
                n //= g
                d //= g
            vn = n
            vd = d

        basis[leave] = enter

    if vn == 0:
        x = [Fraction(0)] * k
        for i in range(m):
            if basis[i] < k:
                x[basis[i]] = Fraction(bn[i], bd[i])
        return FEASIBLE, x

    y = []
    for i in range(m):
        yi = Fraction(rn[k + i], rd[k + i]) + 1
        if flipped[i]:
            yi = -yi
        y.append(yi)
    return INFEASIBLE, y
