"""Polarization characters: the four admissibility conditions and searches.

A character chi of the adjoint torus is *admissible* as a polarization
when

1. chi is a nonnegative-integer combination of simple roots,
2. chi is regular dominant,
3. every simple-reflection image of chi still has nonnegative
   integer simple-root coefficients, and
4. no pairing of chi against a Weyl translate of a fundamental
   one-parameter subgroup vanishes.

Condition 4 is checked through the identity <chi, w(lam_i)> = i-th
alpha-coordinate of w^{-1}(chi), so the sweep stays entirely on the
weight side; the coweight-action contract is cross-checked in the test
suite.  Type A2 admits no such character at all: conditions 1-3 force
the two simple-root coefficients to agree and then some Weyl image has
a vanishing coordinate, which the bounded searches below confirm
exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from torusgit.rootsys import (
    RootDatum,
    Weight,
    alpha_coords,
    cartan_determinant,
    two_rho,
    weight_from_alpha,
)
from torusgit.weyl import (
    WeylElement,
    alpha_action,
    enumerate_weyl,
    inverse_element,
)

CONDITION_NAMES = ("in_root_monoid", "regular_dominant",
                   "reflections_nonneg", "pairings_nonzero")


class ExcludedByHypothesisError(ValueError):
    """The requested type/rank is excluded by hypothesis."""


class SearchExhaustedError(RuntimeError):
    """No candidate passed within the configured search bounds."""


@dataclass(frozen=True)
class ChiCertificate:
    """Machine-checkable evidence for the four admissibility conditions.

    ``failure_witness`` names the first failing condition together with
    the data needed to reproduce the failure: a coordinate index for the
    first three conditions, a (word, index) pair locating the vanishing
    pairing for the fourth.
    """
    chi: Weight
    in_root_monoid: bool
    regular_dominant: bool
    reflections_nonneg: bool
    pairings_nonzero: bool
    failure_witness: Optional[tuple[str, dict]] = None

    @property
    def passes(self) -> bool:
        return (self.in_root_monoid and self.regular_dominant
                and self.reflections_nonneg and self.pairings_nonzero)

    def as_dict(self) -> dict:
        out = {name: getattr(self, name) for name in CONDITION_NAMES}
        out["passes"] = self.passes
        if self.failure_witness is not None:
            out["failure_witness"] = {"condition": self.failure_witness[0],
                                      **self.failure_witness[1]}
        return out


def _alpha_sweep_matrices(datum: RootDatum) -> tuple[tuple[WeylElement, tuple], ...]:
    """(element, alpha-action matrix) pairs for the whole group."""
    return tuple((w, alpha_action(datum, w)) for w in enumerate_weyl(datum))


def certify_character(datum: RootDatum, chi: Weight) -> ChiCertificate:
    """Evaluate all four admissibility conditions, with a witness for the
    first failure (conditions are checked in their numbered order)."""
    n = datum.rank
    m = alpha_coords(datum, chi)
    witness: Optional[tuple[str, dict]] = None

    in_monoid = True
    for i, c in enumerate(m):
        if c < 0 or c.denominator != 1:
            in_monoid = False
            witness = witness or ("in_root_monoid", {"alpha_index": i + 1})
            break

    regular = True
    for i, c in enumerate(chi):
        if c <= 0:
            regular = False
            witness = witness or ("regular_dominant", {"omega_index": i + 1})
            break

    reflections = True
    for i in range(n):
        # s_i only changes the i-th alpha-coordinate, to m_i - <chi, coroot_i>.
        c = m[i] - chi[i]
        if c < 0 or c.denominator != 1:
            reflections = False
            witness = witness or ("reflections_nonneg", {"reflection_index": i + 1})
            break

    pairings = True
    for u, mat in _alpha_sweep_matrices(datum):
        coords = [sum(mat[i][j] * m[j] for j in range(n)) for i in range(n)]
        for i, c in enumerate(coords):
            if c == 0:
                pairings = False
                w = inverse_element(datum, u)
                witness = witness or ("pairings_nonzero",
                                      {"weyl_word": list(w.word),
                                       "coweight_index": i + 1})
                break
        if not pairings:
            break

    return ChiCertificate(chi, in_monoid, regular, reflections, pairings, witness)


def _graded_compositions(total: int, parts: int):
    """All nonnegative integer vectors with the given coordinate sum,
    in ascending lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _graded_compositions(total - first, parts - 1):
            yield (first,) + rest


def search_characters(datum: RootDatum, height_bound: int) -> list[Weight]:
    """All admissible characters with simple-root coefficient sum up to
    the bound, in graded-lexicographic order of those coefficients.

    An empty list is a valid outcome (and the guaranteed one for A2).
    """
    n = datum.rank
    cartan = datum.cartan
    sweep = [mat for _, mat in _alpha_sweep_matrices(datum)]
    found: list[Weight] = []
    for total in range(height_bound + 1):
        for m in _graded_compositions(total, n):
            omega = [sum(cartan[i][j] * m[j] for j in range(n)) for i in range(n)]
            if any(c <= 0 for c in omega):
                continue
            if any(m[i] < omega[i] for i in range(n)):
                continue
            ok = True
            for mat in sweep:
                for i in range(n):
                    acc = 0
                    row = mat[i]
                    for j in range(n):
                        acc += row[j] * m[j]
                    if acc == 0:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found.append(tuple(omega))
    return found


@dataclass(frozen=True)
class ConstructionResult:
    """Outcome of the constructive candidate search.

    The candidate family is ``m * (sum of positive roots) + det * (k-th
    nonnegative combination of fundamental weights)``; ``shift_claims``
    records, per simple root, the verified nonnegativity of
    ``m*s_i(two_rho) - det*alpha_i`` for the chosen multiplier.
    """
    chi: Weight
    multiplier: int
    omega_shift: tuple[int, ...]
    shift_claims: tuple[bool, ...]
    certificate: ChiCertificate


def construct_character(datum: RootDatum, max_extra_multiplier: int = 3,
                        max_shift_total: int = 3) -> ConstructionResult:
    """First admissible character of the shape 2m*rho + N*sum(k_i omega_i),
    ordered by the multiplier m and then graded-lex in the shift k.

    Refuses rank < 2 and type A2, where no multiplier works.
    """
    if datum.rank < 2 or (datum.type_label, datum.rank) == ("A", 2):
        raise ExcludedByHypothesisError(
            f"{datum!r} excluded by hypothesis (rank >= 2 and not A2)")
    n = datum.rank
    det = cartan_determinant(datum)
    r = [int(c) for c in alpha_coords(datum, two_rho(datum))]
    if any(ri <= 2 for ri in r):
        raise ExcludedByHypothesisError(
            "no multiplier makes every reflected candidate land in the "
            "positive root monoid")
    m_min = max(-(-det // (ri - 2)) for ri in r)

    for mult in range(m_min, m_min + max_extra_multiplier + 1):
        claims = tuple(mult * (ri - 2) - det >= 0 for ri in r)
        assert all(claims)
        for total in range(max_shift_total + 1):
            for k in _graded_compositions(total, n):
                chi = tuple(2 * mult + det * k[i] for i in range(n))
                cert = certify_character(datum, chi)
                if cert.passes:
                    return ConstructionResult(chi, mult, k, claims, cert)
    raise SearchExhaustedError(
        f"no candidate passed for {datum!r} with multiplier <= "
        f"{m_min + max_extra_multiplier} and shift total <= {max_shift_total}")
