"""Exact Weyl groups: enumeration, lengths, actions on both lattices.

Elements are integer matrices acting on omega-coordinates, canonicalised
by the matrix itself (reduced words are not unique; matrices are).  The
stored word is shortest because enumeration is a breadth-first closure
under right multiplication by the simple reflections, so BFS depth equals
Coxeter length.

Full enumeration is guarded: the group order is known from the type
ahead of time, and anything larger than the bound (default 10**6,
overridable through the ``TORUS_GIT_MAX_WEYL`` environment variable) is
refused with the offending order in the message.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from torusgit.ratlp import invert_matrix
from torusgit.rootsys import Coweight, RootDatum, Weight, weight_orbit

DEFAULT_MAX_WEYL = 10 ** 6

Matrix = tuple[tuple[int, ...], ...]


class WeylBoundExceededError(RuntimeError):
    """Requested enumeration is larger than the configured guard."""


@dataclass(frozen=True, eq=False)
class WeylElement:
    """One Weyl group element: action matrix, shortest word, length."""
    matrix: Matrix
    word: tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        name = "e" if not self.word else "s" + ".s".join(map(str, self.word))
        return f"WeylElement({name})"


def group_order(datum: RootDatum) -> int:
    """Order of the Weyl group, from the classification tables."""
    n = datum.rank
    label = datum.type_label
    if label == "A":
        return math.factorial(n + 1)
    if label in ("B", "C"):
        return 2 ** n * math.factorial(n)
    if label == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if label == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    return 1152 if label == "F" else 12


def max_enumerable() -> int:
    value = os.environ.get("TORUS_GIT_MAX_WEYL")
    return int(value) if value else DEFAULT_MAX_WEYL


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def identity_element(datum: RootDatum) -> WeylElement:
    return WeylElement(_identity_matrix(datum.rank), ())


def simple_reflection(datum: RootDatum, i: int) -> WeylElement:
    """Reflection in the i-th simple root (1-based) on omega-coordinates."""
    if not 1 <= i <= datum.rank:
        raise IndexError(f"simple-reflection index {i} out of range")
    n = datum.rank
    col = i - 1
    mat = tuple(tuple(int(r == c) - (datum.cartan[r][col] if c == col else 0)
                      for c in range(n)) for r in range(n))
    return WeylElement(mat, (i,))


@lru_cache(maxsize=None)
def enumerate_weyl(datum: RootDatum) -> tuple[WeylElement, ...]:
    """All elements, sorted by (length, word); each word is shortest."""
    order = group_order(datum)
    bound = max_enumerable()
    if order > bound:
        raise WeylBoundExceededError(
            f"Weyl group of {datum!r} has order {order}, above the bound {bound}")
    n = datum.rank
    gens = [simple_reflection(datum, i) for i in range(1, n + 1)]
    start = identity_element(datum)
    seen: dict[Matrix, WeylElement] = {start.matrix: start}
    frontier = [start]
    while frontier:
        new = []
        for w in frontier:
            for i, s in enumerate(gens, start=1):
                mat = _matmul(w.matrix, s.matrix)
                if mat not in seen:
                    elem = WeylElement(mat, w.word + (i,))
                    seen[mat] = elem
                    new.append(elem)
        frontier = new
    assert len(seen) == order
    return tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))


def longest_element(datum: RootDatum) -> WeylElement:
    """The unique element of maximal length l = number of positive roots."""
    elements = enumerate_weyl(datum)
    w0 = elements[-1]
    assert w0.length == len(datum.positive_roots)
    assert elements[-2].length < w0.length
    return w0


def act_on_weight(w: WeylElement, psi: Weight) -> Weight:
    n = len(psi)
    return tuple(sum(w.matrix[r][c] * psi[c] for c in range(n)) for r in range(n))


@lru_cache(maxsize=None)
def _alpha_action(datum: RootDatum, matrix: Matrix) -> Matrix:
    """Action on alpha-coordinates: C^{-1} M C; integral because the
    element permutes the (integer) roots."""
    n = datum.rank
    inv = datum.inverse_cartan
    c = datum.cartan
    mc = tuple(tuple(sum(matrix[i][k] * c[k][j] for k in range(n)) for j in range(n))
               for i in range(n))
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = sum(inv[i][k] * mc[k][j] for k in range(n))
            assert v.denominator == 1
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


def alpha_action(datum: RootDatum, w: WeylElement) -> Matrix:
    return _alpha_action(datum, w.matrix)


@lru_cache(maxsize=None)
def _integer_inverse(matrix: Matrix) -> Matrix:
    inv = invert_matrix([[Fraction(v) for v in row] for row in matrix])
    out = []
    for row in inv:
        assert all(v.denominator == 1 for v in row)
        out.append(tuple(int(v) for v in row))
    return tuple(out)


def inverse_element(datum: RootDatum, w: WeylElement) -> WeylElement:
    """Inverse, with the reversed (still shortest) word."""
    return WeylElement(_integer_inverse(w.matrix), tuple(reversed(w.word)))


def act_on_coweight(datum: RootDatum, w: WeylElement, lam: Coweight) -> Coweight:
    """Contragredient action: <psi, w(lam)> = <w^{-1}(psi), lam> for all psi.

    In coordinates this is the transpose of the alpha-action of the
    inverse element.
    """
    a = _alpha_action(datum, _integer_inverse(w.matrix))
    n = len(lam)
    return tuple(sum(a[r][c] * lam[r] for r in range(n)) for c in range(n))


def length_by_inversions(datum: RootDatum, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots; equals the
    stored word length (checked in the test suite, not here)."""
    a = alpha_action(datum, w)
    n = datum.rank
    count = 0
    for root in datum.positive_roots:
        image = [sum(a[i][j] * root[j] for j in range(n)) for i in range(n)]
        if any(v < 0 for v in image):
            count += 1
    return count


def weyl_orbit(datum: RootDatum, psi: Weight) -> frozenset[Weight]:
    """Orbit of a weight; delegated to reflection closure, which never
    needs the full group."""
    return weight_orbit(datum, psi)


def length_distribution(datum: RootDatum) -> dict[int, int]:
    """Number of elements of each length (the Poincare-polynomial
    coefficients)."""
    dist: dict[int, int] = {}
    for w in enumerate_weyl(datum):
        dist[w.length] = dist.get(w.length, 0) + 1
    return dist
