"""Root-system data for the simple types, with exact basis conversions.

Conventions, fixed once for the whole package:

* ``cartan[i][j]`` is the pairing of the j-th simple root against the
  i-th simple coroot, so a weight's fundamental-weight coordinates are
  ``cartan . alpha_coords`` exactly, with no inner product anywhere.
* Weights are integer tuples of fundamental-weight ("omega")
  coordinates.  Coweights are integer tuples in the basis dual to the
  simple roots, so the natural pairing is the dot product of a weight's
  alpha-coordinates with a coweight's coordinates.
* Simple-root indices in the public API are 1-based, as in the usual
  Dynkin-diagram labelling.

Characters of an adjoint torus live in the root lattice; operations that
need integrality (dominance enumeration, support computation) say so and
refuse anything else.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from torusgit.ratlp import invert_matrix

Weight = tuple[int, ...]       # omega-coordinates
Coweight = tuple[int, ...]     # fundamental one-parameter-subgroup coordinates

EXPECTED_DETERMINANT = {"A": lambda n: n + 1, "B": lambda n: 2, "C": lambda n: 2,
                        "D": lambda n: 4, "E": lambda n: {6: 3, 7: 2, 8: 1}[n],
                        "F": lambda n: 1, "G": lambda n: 1}

EXPECTED_POSITIVE_ROOTS = {"A": lambda n: n * (n + 1) // 2,
                           "B": lambda n: n * n, "C": lambda n: n * n,
                           "D": lambda n: n * (n - 1),
                           "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
                           "F": lambda n: 24, "G": lambda n: 6}

_VALID_RANKS = {"A": lambda n: n >= 1, "B": lambda n: n >= 2,
                "C": lambda n: n >= 2, "D": lambda n: n >= 3,
                "E": lambda n: n in (6, 7, 8), "F": lambda n: n == 4,
                "G": lambda n: n == 2}


class InvalidTypeError(ValueError):
    """Not a simple type/rank combination handled here."""


class Dominance(enum.Enum):
    """Outcome of the dominance-order comparison.

    NON_INTEGRAL flags differences with nonnegative but fractional
    simple-root coefficients, where the order (defined with integer
    coefficients) does not apply.
    """
    TRUE = "true"
    FALSE = "false"
    NON_INTEGRAL = "non_integral"


@dataclass(frozen=True)
class RootDatum:
    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]   # alpha-coordinates
    inverse_cartan: tuple[tuple[Fraction, ...], ...]

    def __repr__(self) -> str:
        return f"RootDatum({self.type_label}{self.rank})"


def _cartan_matrix(label: str, rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i, j, vij=-1, vji=-1):
        a[i][j] = vij
        a[j][i] = vji

    if label in ("A", "B", "C"):
        for i in range(rank - 1):
            edge(i, i + 1)
        if label == "B" and rank >= 2:
            a[rank - 1][rank - 2] = -2   # last simple root short
        if label == "C" and rank >= 2:
            a[rank - 2][rank - 1] = -2   # last simple root long
    elif label == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 3, rank - 1)
    elif label == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for i, j in zip(chain, chain[1:]):
            edge(i, j)
        edge(1, 3)
    elif label == "F":
        for i in range(3):
            edge(i, i + 1)
        a[2][1] = -2
    elif label == "G":
        edge(0, 1, -1, -3)
    return a


def _det_int(matrix: list[list[int]]) -> int:
    n = len(matrix)
    m = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    assert det.denominator == 1
    return int(det)


def _generate_positive_roots(cartan: list[list[int]], rank: int) -> list[tuple[int, ...]]:
    """Closure of the simple roots under simple reflections, keeping the
    images with nonnegative alpha-coordinates."""
    simples = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    found = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for root in frontier:
            for i in range(rank):
                c = sum(cartan[i][j] * root[j] for j in range(rank))
                image = list(root)
                image[i] -= c
                timage = tuple(image)
                if timage not in found and all(v >= 0 for v in timage):
                    found.add(timage)
                    new.append(timage)
        frontier = new
    return sorted(found, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_datum(type_label: str, rank: int) -> RootDatum:
    """Root datum for one simple type; results are cached and shared."""
    label = type_label.upper()
    if label not in _VALID_RANKS or not isinstance(rank, int) or not _VALID_RANKS[label](rank):
        raise InvalidTypeError(f"no simple root system of type {type_label}{rank}")
    cartan = _cartan_matrix(label, rank)
    det = _det_int(cartan)
    if det != EXPECTED_DETERMINANT[label](rank):
        raise AssertionError(f"Cartan determinant {det} off-table for {label}{rank}")
    roots = _generate_positive_roots(cartan, rank)
    if len(roots) != EXPECTED_POSITIVE_ROOTS[label](rank):
        raise AssertionError(f"positive-root count {len(roots)} off-table for {label}{rank}")
    inv = invert_matrix([[Fraction(v) for v in row] for row in cartan])
    return RootDatum(label, rank,
                     tuple(tuple(row) for row in cartan),
                     tuple(roots),
                     tuple(tuple(row) for row in inv))


def cartan_determinant(datum: RootDatum) -> int:
    return _det_int([list(r) for r in datum.cartan])


def simple_root(datum: RootDatum, i: int) -> Weight:
    """The i-th simple root (1-based) in omega-coordinates."""
    if not 1 <= i <= datum.rank:
        raise IndexError(f"simple-root index {i} out of range")
    return tuple(datum.cartan[r][i - 1] for r in range(datum.rank))


def fundamental_weight(datum: RootDatum, i: int) -> Weight:
    if not 1 <= i <= datum.rank:
        raise IndexError(f"fundamental-weight index {i} out of range")
    return tuple(int(j == i - 1) for j in range(datum.rank))


def fundamental_coweight(datum: RootDatum, i: int) -> Coweight:
    if not 1 <= i <= datum.rank:
        raise IndexError(f"coweight index {i} out of range")
    return tuple(int(j == i - 1) for j in range(datum.rank))


def zero_weight(datum: RootDatum) -> Weight:
    return (0,) * datum.rank


def alpha_coords(datum: RootDatum, w: Weight) -> tuple[Fraction, ...]:
    """Coefficients of a weight over the simple roots, exact rationals."""
    inv = datum.inverse_cartan
    n = datum.rank
    return tuple(sum(inv[i][j] * w[j] for j in range(n)) for i in range(n))


def alpha_coords_int(datum: RootDatum, w: Weight) -> tuple[int, ...]:
    """Alpha-coordinates of a root-lattice weight as plain integers."""
    coords = alpha_coords(datum, w)
    if any(c.denominator != 1 for c in coords):
        raise ValueError(f"weight {w} is not in the root lattice")
    return tuple(int(c) for c in coords)


def weight_from_alpha(datum: RootDatum, coeffs) -> Weight:
    """Weight with the given simple-root coefficients (omega = cartan . m)."""
    n = datum.rank
    c = datum.cartan
    out = []
    for i in range(n):
        v = sum(c[i][j] * coeffs[j] for j in range(n))
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ValueError("alpha-coordinates give a non-integral character")
            v = int(v)
        out.append(v)
    return tuple(out)


def in_root_lattice(datum: RootDatum, w: Weight) -> bool:
    return all(c.denominator == 1 for c in alpha_coords(datum, w))


def pairing(datum: RootDatum, w: Weight, cw: Coweight) -> Fraction:
    """Natural pairing; the dual bases make it a plain dot product."""
    return sum(a * c for a, c in zip(alpha_coords(datum, w), cw))


def dominance_leq(datum: RootDatum, w1: Weight, w2: Weight) -> Dominance:
    """Is w2 - w1 a nonnegative-integer combination of simple roots?"""
    diff = tuple(b - a for a, b in zip(w1, w2))
    coords = alpha_coords(datum, diff)
    if any(c < 0 for c in coords):
        return Dominance.FALSE
    if any(c.denominator != 1 for c in coords):
        return Dominance.NON_INTEGRAL
    return Dominance.TRUE


def two_rho(datum: RootDatum) -> Weight:
    """Sum of the positive roots; its omega-coordinates are all 2."""
    n = datum.rank
    total = [0] * n
    for root in datum.positive_roots:
        for j in range(n):
            total[j] += root[j]
    w = weight_from_alpha(datum, total)
    assert w == (2,) * n
    return w


def is_dominant(datum: RootDatum, w: Weight) -> bool:
    return all(c >= 0 for c in w)


def is_regular_dominant(datum: RootDatum, w: Weight) -> bool:
    """Strictly positive pairing against every simple coroot."""
    return all(c > 0 for c in w)


def dominant_weights_leq(datum: RootDatum, chi: Weight) -> list[Weight]:
    """All dominant nu below chi in the dominance order.

    Requires chi dominant and in the root lattice; then every such nu is
    chi minus a vector from the box [0, m_i] of simple-root coefficients
    (dominant weights have nonnegative alpha-coordinates because the
    inverse Cartan matrix is entrywise positive), so a bounded lattice
    sweep is exhaustive.  chi itself and the zero weight always appear.
    """
    if not is_dominant(datum, chi):
        raise ValueError(f"{chi} is not dominant")
    m = alpha_coords_int(datum, chi)
    n = datum.rank
    cartan = datum.cartan
    out = []
    for k in product(*(range(mi + 1) for mi in m)):
        nu = tuple(chi[i] - sum(cartan[i][j] * k[j] for j in range(n))
                   for i in range(n))
        if all(c >= 0 for c in nu):
            out.append((sum(k), k, nu))
    out.sort(key=lambda t: (t[0], t[1]))
    return [nu for _, _, nu in out]


def simple_reflection_on_weight(datum: RootDatum, i: int, w: Weight) -> Weight:
    """Reflect in the i-th simple root (1-based): w - <w, coroot_i> alpha_i."""
    c = w[i - 1]
    alpha = simple_root(datum, i)
    return tuple(wj - c * aj for wj, aj in zip(w, alpha))


def weight_orbit(datum: RootDatum, w: Weight) -> frozenset[Weight]:
    """Full reflection-group orbit of a weight, by closure under the
    simple reflections (no group enumeration needed)."""
    seen = {w}
    frontier = [w]
    while frontier:
        new = []
        for v in frontier:
            for i in range(1, datum.rank + 1):
                image = simple_reflection_on_weight(datum, i, v)
                if image not in seen:
                    seen.add(image)
                    new.append(image)
        frontier = new
    return frozenset(seen)


def weight_support(datum: RootDatum, chi: Weight) -> frozenset[Weight]:
    """Weight support of the irreducible representation with highest
    weight chi: the orbit saturation of the dominant weights below chi."""
    support: set[Weight] = set()
    for nu in dominant_weights_leq(datum, chi):
        support.update(weight_orbit(datum, nu))
    return frozenset(support)
