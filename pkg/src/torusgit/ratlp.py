"""Exact rational linear algebra and certified convex membership.

Everything downstream (stability classification, identity-state checks)
reduces to two questions about a finite point set ``S`` and a target
``t`` in rational affine space:

* hull membership     -- is ``t`` a convex combination of ``S``?
* interior membership -- is ``t`` in the topological interior of
  ``conv(S)`` relative to the full ambient space?

Both answers come with certificates that re-verify by exact arithmetic:
convex coefficients for "inside", a strictly separating functional for
"outside", and, for the interior test, either conic decompositions of a
spanning probe set or a nonzero supporting functional.

Rationals are :class:`fractions.Fraction` throughout.  The simplex
feasibility core lives in a compiled extension when available
(``torusgit._simplex_cy``) with a pure-Python fallback of identical
semantics; see ``bench/bench_simplex.py`` for a comparison.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

if os.environ.get("TORUS_GIT_FORCE_PURE"):
    from torusgit import _simplex_py as _kernel
else:
    try:
        from torusgit import _simplex_cy as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from torusgit import _simplex_py as _kernel

Rational = Fraction
RatVector = tuple[Fraction, ...]

INSIDE = "inside"
OUTSIDE = "outside"


class DimensionMismatchError(ValueError):
    """Input vectors do not share a common dimension."""


class SingularMatrixError(ValueError):
    """Exact elimination hit a zero pivot in every remaining row."""


def kernel_name() -> str:
    """Identify the simplex kernel selected at import time."""
    return _kernel.KERNEL_NAME


def ratvec(entries) -> RatVector:
    """Build a RatVector, coercing ints and strings like ``"3/4"``."""
    return tuple(Fraction(e) for e in entries)


# -- rational scalar ops ------------------------------------------------
#
# Fraction already maintains the canonical form (positive denominator,
# reduced, zero as 0/1); these wrappers fix the call surface and the
# error behaviour relied on elsewhere.

def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return a / b


def rat_cmp(a: Fraction, b: Fraction) -> int:
    """Total order: -1, 0 or 1."""
    if a < b:
        return -1
    return 1 if a > b else 0


def invert_matrix(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a square rational matrix by Gauss-Jordan.

    Raises :class:`SingularMatrixError` when no inverse exists.
    """
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise DimensionMismatchError("matrix is not square")
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"matrix is singular (column {col})")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class MembershipCertificate:
    """Re-verifiable outcome of a hull-membership query.

    ``coefficients`` (inside): convex weights aligned with the input
    point order.  ``separator`` (outside): functional with
    ``separator . (p - target) > 0`` for every input point.
    """
    verdict: str
    coefficients: Optional[tuple[Fraction, ...]] = None
    separator: Optional[RatVector] = None

    @property
    def inside(self) -> bool:
        return self.verdict == INSIDE


@dataclass(frozen=True)
class InteriorCertificate:
    """Outcome of an interior-membership query.

    ``hull`` is the plain membership certificate for the same query.
    When the target is interior, ``probe_combos`` maps each probe label
    to sparse conic coefficients (point index -> weight) writing the
    probe as a nonnegative combination of ``points - target``; the
    probes positively span the ambient space, which certifies that the
    supporting cone is trivial.  When the target is on the boundary of
    the hull, ``supporting`` is a nonzero functional with
    ``supporting . (p - target) >= 0`` for all points.
    """
    is_interior: bool
    hull: MembershipCertificate
    probe_combos: Optional[dict[str, dict[int, Fraction]]] = None
    supporting: Optional[RatVector] = None


def _check_points(points: Sequence[RatVector], target: RatVector) -> int:
    if not points:
        raise ValueError("empty point set")
    dim = len(target)
    for p in points:
        if len(p) != dim:
            raise DimensionMismatchError(
                f"point of dimension {len(p)} against target of dimension {dim}")
    return dim


def _integer_rows(columns: Sequence[RatVector], rhs: RatVector,
                  extra_row: bool) -> tuple[list[list[int]], list[int]]:
    """Assemble the equality system "nonneg combo of columns = rhs".

    One row per coordinate, optionally one more forcing the coefficients
    to sum to 1.  Each row is scaled by the lcm of its denominators so
    the kernel sees integers only.
    """
    dim = len(rhs)
    ncols = len(columns)
    mat: list[list[int]] = []
    vec: list[int] = []
    for j in range(dim):
        scale = lcm(rhs[j].denominator, *(c[j].denominator for c in columns))
        mat.append([int(c[j] * scale) for c in columns])
        vec.append(int(rhs[j] * scale))
    if extra_row:
        mat.append([1] * ncols)
        vec.append(1)
    return mat, vec


def convex_membership(points: Sequence[RatVector],
                      target: RatVector) -> MembershipCertificate:
    """Decide ``target in conv(points)`` with an exact certificate."""
    dim = _check_points(points, target)

    # Fast path: the target is one of the points.
    for idx, p in enumerate(points):
        if p == target:
            coeffs = [Fraction(0)] * len(points)
            coeffs[idx] = Fraction(1)
            return MembershipCertificate(INSIDE, coefficients=tuple(coeffs))

    # Fast path: some coordinate already separates strictly.
    for j in range(dim):
        tj = target[j]
        if all(p[j] > tj for p in points):
            sep = [Fraction(0)] * dim
            sep[j] = Fraction(1)
            return MembershipCertificate(OUTSIDE, separator=tuple(sep))
        if all(p[j] < tj for p in points):
            sep = [Fraction(0)] * dim
            sep[j] = Fraction(-1)
            return MembershipCertificate(OUTSIDE, separator=tuple(sep))

    mat, vec = _integer_rows(points, target, extra_row=True)
    status, payload = _kernel.solve_eq_nonneg(mat, vec)
    if status == _kernel.FEASIBLE:
        return MembershipCertificate(INSIDE, coefficients=tuple(payload))
    # Farkas vector y = (u, v): u.p + v <= 0 per point, u.target + v > 0,
    # hence -u strictly separates.  Rows were scaled by positive factors,
    # which only rescales y's components and preserves both inequalities.
    u = payload[:dim]
    return MembershipCertificate(OUTSIDE, separator=tuple(-c for c in u))


@dataclass(frozen=True)
class ConeCertificate:
    """Re-verifiable outcome of a conic-membership query.

    ``coefficients`` (in the cone): sparse nonnegative weights, generator
    index -> weight, with the weighted generator sum equal to the target.
    ``functional`` (not in the cone): a vector nonpositive against every
    generator and strictly positive against the target.
    """
    in_cone: bool
    coefficients: Optional[dict[int, Fraction]] = None
    functional: Optional[RatVector] = None


def cone_membership(generators: Sequence[RatVector],
                    target: RatVector) -> ConeCertificate:
    """Decide whether target is a nonnegative combination of generators."""
    _check_points(generators, target)
    mat, vec = _integer_rows(generators, target, extra_row=False)
    status, payload = _kernel.solve_eq_nonneg(mat, vec)
    if status == _kernel.FEASIBLE:
        return ConeCertificate(True, coefficients={
            i: c for i, c in enumerate(payload) if c != 0})
    return ConeCertificate(False, functional=tuple(payload))


def verify_cone(generators: Sequence[RatVector], target: RatVector,
                cert: ConeCertificate) -> bool:
    """Re-evaluate a conic-membership certificate from scratch."""
    dim = _check_points(generators, target)
    if cert.in_cone:
        combo = cert.coefficients
        if combo is None or any(c < 0 for c in combo.values()):
            return False
        return all(sum(c * generators[i][j] for i, c in combo.items()) == target[j]
                   for j in range(dim))
    y = cert.functional
    if y is None or len(y) != dim:
        return False
    if sum(yj * tj for yj, tj in zip(y, target)) <= 0:
        return False
    return all(sum(yj * g[j] for j, yj in enumerate(y)) <= 0 for g in generators)


def interior_probes(dim: int) -> list[tuple[str, list[int]]]:
    """Probe directions that positively span the ambient space."""
    probes = []
    for j in range(dim):
        e = [0] * dim
        e[j] = 1
        probes.append((f"e{j + 1}", e))
    probes.append(("neg_total", [-1] * dim))
    return probes


def interior_membership(points: Sequence[RatVector],
                        target: RatVector) -> InteriorCertificate:
    """Decide whether ``target`` is interior to ``conv(points)``.

    The target is interior iff the supporting cone
    ``{lam : lam . (p - target) >= 0 for all p}`` is trivial, iff the
    cone generated by ``points - target`` is the whole space, iff every
    probe from a positively spanning set is a nonnegative combination of
    ``points - target``.  Each probe is one small feasibility LP; an
    infeasible probe's Farkas vector is exactly the nonzero supporting
    functional demanded by the contract.
    """
    dim = _check_points(points, target)
    hull = convex_membership(points, target)
    if not hull.inside:
        # Outside the hull; the strict separator supports a fortiori.
        sep = hull.separator
        assert sep is not None
        return InteriorCertificate(False, hull, supporting=sep)
    if dim == 0:
        return InteriorCertificate(True, hull, probe_combos={})

    shifted = [tuple(c - t for c, t in zip(p, target)) for p in points]
    combos: dict[str, dict[int, Fraction]] = {}
    for label, probe in interior_probes(dim):
        cert = cone_membership(shifted, ratvec(probe))
        if not cert.in_cone:
            assert cert.functional is not None
            lam = tuple(-y for y in cert.functional)
            return InteriorCertificate(False, hull, supporting=lam)
        assert cert.coefficients is not None
        combos[label] = cert.coefficients
    return InteriorCertificate(True, hull, probe_combos=combos)


# -- exact re-verification of certificates ------------------------------

def verify_membership(points: Sequence[RatVector], target: RatVector,
                      cert: MembershipCertificate) -> bool:
    """Re-evaluate a membership certificate from scratch."""
    dim = _check_points(points, target)
    if cert.inside:
        if cert.coefficients is None or len(cert.coefficients) != len(points):
            return False
        if any(c < 0 for c in cert.coefficients):
            return False
        if sum(cert.coefficients) != 1:
            return False
        for j in range(dim):
            if sum(c * p[j] for c, p in zip(cert.coefficients, points)) != target[j]:
                return False
        return True
    sep = cert.separator
    if sep is None or len(sep) != dim:
        return False
    return all(sum(s * (p[j] - target[j]) for j, s in enumerate(sep)) > 0
               for p in points)


def verify_interior(points: Sequence[RatVector], target: RatVector,
                    cert: InteriorCertificate) -> bool:
    """Re-evaluate an interior certificate from scratch."""
    dim = _check_points(points, target)
    if not verify_membership(points, target, cert.hull):
        return False
    if cert.is_interior:
        if not cert.hull.inside or cert.probe_combos is None:
            return False
        if dim == 0:
            return True
        shifted = [tuple(c - t for c, t in zip(p, target)) for p in points]
        for label, probe in interior_probes(dim):
            combo = cert.probe_combos.get(label)
            if combo is None or any(c < 0 for c in combo.values()):
                return False
            for j in range(dim):
                acc = sum(c * shifted[i][j] for i, c in combo.items())
                if acc != probe[j]:
                    return False
        return True
    lam = cert.supporting
    if lam is None or len(lam) != dim or all(c == 0 for c in lam):
        return False
    return all(sum(l * (p[j] - target[j]) for j, l in enumerate(lam)) >= 0
               for p in points)


def primitive_integer_vector(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, keeping direction."""
    if all(c == 0 for c in vec):
        raise ValueError("zero vector has no primitive representative")
    scale = lcm(*(c.denominator for c in vec))
    ints = [int(c * scale) for c in vec]
    g = gcd(*ints)
    return tuple(c // g for c in ints)
