"""Hilbert-Mumford classification of torus states on the flag variety.

A *state* is the finite set of torus characters acting on the nonzero
coordinates of a projective point.  Numerical stability is decided by
``mu(state, lam) = -min_{psi in state} <psi, lam>`` over one-parameter
subgroups lam:

* unstable            <=> some mu < 0  <=> 0 outside conv(state),
* semistable          <=> all mu >= 0  <=> 0 in conv(state),
* stable              <=> mu > 0 for lam != 0 <=> 0 interior.

All three verdicts come with exact certificates in the coweight lattice.
The geometry happens in alpha-coordinates, where the pairing against a
coweight is a plain dot product, so LP separators *are* coweights.

The flag-variety sweep walks the Schubert cells.  The generic state of
the cell indexed by w is the full dominance-upper set of w(chi) inside
the weight support of chi; its extremal weight w(chi) alone decides mu
against dominant coweights, and the cell is unstable precisely when
w(chi) has a positive simple-root coefficient.  Interior (stability)
tests on large upper sets are preconditioned with the Weyl orbit of chi:
conic probes certified on the orbit subset are valid for the superset,
and only failures fall back to the full LP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from torusgit import ratlp
from torusgit.polarization import ChiCertificate, certify_character
from torusgit.rootsys import (
    Coweight,
    RootDatum,
    Weight,
    alpha_coords,
    alpha_coords_int,
    pairing,
    weight_orbit,
    weight_support,
    zero_weight,
)
from torusgit.weyl import WeylElement, act_on_weight, enumerate_weyl, longest_element

State = frozenset[Weight]

UNSTABLE = "unstable"
SEMISTABLE_NOT_STABLE = "semistable_not_stable"
STABLE = "stable"

# Interior LPs first try the state's intersection with the Weyl orbit of
# chi; only when the state is small anyway is the preconditioner skipped.
_ORBIT_PRECONDITION_MIN = 32


@dataclass(frozen=True)
class Verdict:
    """Stability verdict with its re-verifiable certificate.

    unstable: ``destabilizing`` is an integer coweight with negative mu.
    semistable_not_stable: ``hull_coefficients`` writes 0 as a convex
    combination of the state and ``supporting`` is a nonzero integer
    coweight with mu exactly 0.
    stable: hull coefficients plus, per probe label, a conic combination
    of the state certifying that the supporting cone is trivial.
    """
    kind: str
    destabilizing: Optional[Coweight] = None
    supporting: Optional[Coweight] = None
    hull_coefficients: Optional[tuple[tuple[Weight, Fraction], ...]] = None
    interior_combos: Optional[tuple[tuple[str, tuple[tuple[Weight, Fraction], ...]], ...]] = None


@dataclass(frozen=True)
class CellReport:
    """Generic-point analysis of one Schubert cell."""
    w: WeylElement
    length: int
    codim: int
    w_chi: Weight
    w_chi_leq_zero: bool
    generic_verdict: Verdict


@dataclass(frozen=True)
class CheckLine:
    """One verification line; ``witness`` is JSON-ready data."""
    name: str
    status: str          # machine_checked_pass / machine_checked_fail / paper_asserted
    detail: str = ""
    witness: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.status != "machine_checked_fail"


@dataclass(frozen=True)
class FlagStabilityReport:
    """Outcome of the full Schubert-cell sweep for one polarization."""
    datum: RootDatum
    chi: Weight
    certificate: ChiCertificate
    hypotheses_met: bool
    checks: tuple[CheckLine, ...]
    cell_reports: tuple[CellReport, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def mu(datum: RootDatum, state: State, lam: Coweight) -> Fraction:
    """Hilbert-Mumford value: minus the minimal pairing over the state."""
    if not state:
        raise ValueError("empty state")
    return -min(pairing(datum, psi, lam) for psi in state)


def _sorted_state(state: State) -> list[Weight]:
    return sorted(state)


def _verdict_from_parts(weights: Sequence[Weight],
                        hull: ratlp.MembershipCertificate,
                        interior: Optional[bool],
                        combos: Optional[dict[str, dict[int, Fraction]]],
                        supporting: Optional[ratlp.RatVector]) -> Verdict:
    if not hull.inside:
        assert hull.separator is not None
        lam = ratlp.primitive_integer_vector(hull.separator)
        return Verdict(UNSTABLE, destabilizing=lam)
    assert hull.coefficients is not None
    coeffs = tuple((weights[i], c) for i, c in enumerate(hull.coefficients) if c != 0)
    if interior:
        assert combos is not None
        packed = tuple(
            (label, tuple(sorted((weights[i], c) for i, c in combo.items())))
            for label, combo in sorted(combos.items()))
        return Verdict(STABLE, hull_coefficients=coeffs, interior_combos=packed)
    assert supporting is not None
    lam = ratlp.primitive_integer_vector(supporting)
    return Verdict(SEMISTABLE_NOT_STABLE, supporting=lam, hull_coefficients=coeffs)


def _classify_points(weights: list[Weight],
                     points: list[ratlp.RatVector],
                     orbit_subset: Optional[list[int]] = None) -> Verdict:
    """Classify a state given its alpha-coordinate points.

    ``orbit_subset`` lists indices whose points may already certify the
    interior probes; a conic combination over a subset is a conic
    combination over the whole state, so a hit short-circuits the large
    LP and a miss falls back to it.
    """
    dim = len(points[0])
    zero = ratlp.ratvec([0] * dim)
    hull = ratlp.convex_membership(points, zero)
    if not hull.inside:
        return _verdict_from_parts(weights, hull, None, None, None)

    if orbit_subset and len(points) >= _ORBIT_PRECONDITION_MIN:
        sub_points = [points[i] for i in orbit_subset]
        combos: Optional[dict[str, dict[int, Fraction]]] = {}
        for label, probe in ratlp.interior_probes(dim):
            cert = ratlp.cone_membership(sub_points, ratlp.ratvec(probe))
            if not cert.in_cone:
                combos = None
                break
            assert cert.coefficients is not None
            combos[label] = {orbit_subset[i]: c
                             for i, c in cert.coefficients.items()}
        if combos is not None:
            return _verdict_from_parts(weights, hull, True, combos, None)

    interior = ratlp.interior_membership(points, zero)
    return _verdict_from_parts(weights, hull, interior.is_interior,
                               interior.probe_combos, interior.supporting)


def classify_state(datum: RootDatum, state: State,
                   orbit_hint: Optional[Weight] = None) -> Verdict:
    """Exact stability verdict for an arbitrary finite state.

    ``orbit_hint`` names a weight whose Weyl orbit is expected to carry
    the interior certificates; states containing a full regular orbit
    (supports, cell upper sets) classify much faster with it.  The
    verdict itself never depends on the hint.
    """
    weights = _sorted_state(state)
    points = [alpha_coords(datum, w) for w in weights]
    subset = None
    if orbit_hint is not None:
        orbit = weight_orbit(datum, orbit_hint)
        subset = [i for i, w in enumerate(weights) if w in orbit]
    return _classify_points(weights, points, subset)


def verify_verdict(datum: RootDatum, state: State, verdict: Verdict) -> bool:
    """Re-evaluate a verdict's certificate by exact arithmetic only."""
    weights = _sorted_state(state)
    if verdict.kind == UNSTABLE:
        lam = verdict.destabilizing
        return lam is not None and mu(datum, state, lam) < 0

    coeffs = dict(verdict.hull_coefficients or ())
    if (any(c < 0 for c in coeffs.values())
            or sum(coeffs.values()) != 1
            or any(w not in state for w in coeffs)):
        return False
    n = datum.rank
    for j in range(n):
        if sum(c * alpha_coords(datum, w)[j] for w, c in coeffs.items()) != 0:
            return False

    if verdict.kind == SEMISTABLE_NOT_STABLE:
        lam = verdict.supporting
        if lam is None or all(c == 0 for c in lam):
            return False
        return mu(datum, state, lam) == 0

    if verdict.kind != STABLE or verdict.interior_combos is None:
        return False
    combos = dict(verdict.interior_combos)
    for label, probe in ratlp.interior_probes(n):
        combo = combos.get(label)
        if combo is None or any(c < 0 for _, c in combo):
            return False
        for j in range(n):
            acc = sum(c * alpha_coords(datum, w)[j] for w, c in combo)
            if acc != probe[j]:
                return False
    return True


@lru_cache(maxsize=None)
def _support_alpha(datum: RootDatum, chi: Weight):
    """Support of chi with integer alpha-coordinates, sorted once."""
    support = sorted(weight_support(datum, chi))
    return support, [alpha_coords_int(datum, w) for w in support]


def schubert_cell_state(datum: RootDatum, chi: Weight, w: WeylElement) -> State:
    """Generic torus state of the cell indexed by w: the dominance-upper
    set of w(chi) inside the weight support of chi."""
    cert = certify_character(datum, chi)
    if not (cert.in_root_monoid and cert.regular_dominant):
        raise ValueError(
            "cell states need a regular dominant character in the root monoid")
    support, alphas = _support_alpha(datum, chi)
    base = alpha_coords_int(datum, act_on_weight(w, chi))
    return frozenset(wt for wt, a in zip(support, alphas)
                     if all(x >= b for x, b in zip(a, base)))


@lru_cache(maxsize=None)
def classify_cells(datum: RootDatum, chi: Weight) -> tuple[CellReport, ...]:
    """One generic-point verdict per Weyl group element, in (length, word)
    order.  Runs even when the admissibility hypotheses fail; callers see
    that through the certificate embedded in verify_flag reports."""
    cert = certify_character(datum, chi)
    if not (cert.in_root_monoid and cert.regular_dominant):
        raise ValueError(
            "cell sweeps need a regular dominant character in the root monoid")
    support, alphas = _support_alpha(datum, chi)
    orbit = weight_orbit(datum, chi)
    l0 = longest_element(datum).length
    zero = zero_weight(datum)
    reports = []
    for w in enumerate_weyl(datum):
        w_chi = act_on_weight(w, chi)
        base = alpha_coords_int(datum, w_chi)
        weights = []
        points = []
        orbit_subset = []
        for wt, a in zip(support, alphas):
            if all(x >= b for x, b in zip(a, base)):
                if wt in orbit:
                    orbit_subset.append(len(weights))
                weights.append(wt)
                points.append(ratlp.ratvec(a))
        verdict = _classify_points(weights, points, orbit_subset)
        reports.append(CellReport(
            w=w,
            length=w.length,
            codim=l0 - w.length,
            w_chi=w_chi,
            w_chi_leq_zero=all(b <= 0 for b in base),
            generic_verdict=verdict,
        ))
    return tuple(reports)


def _word_witness(w: WeylElement) -> dict:
    return {"weyl_word": list(w.word), "length": w.length}


def verify_flag(datum: RootDatum, chi: Weight) -> FlagStabilityReport:
    """Full flag-variety verification for one polarization character.

    Three machine checks over the cell sweep: (a) every cell whose
    extremal weight is not dominance-below zero has codimension at least
    two, (b) no generic verdict is strictly semistable, (c) every cell of
    codimension at most one is stable.
    """
    cert = certify_character(datum, chi)
    reports = classify_cells(datum, chi)

    bad_codim = next((r for r in reports
                      if not r.w_chi_leq_zero and r.codim < 2), None)
    bad_mixed = next((r for r in reports
                      if r.generic_verdict.kind == SEMISTABLE_NOT_STABLE), None)
    bad_low = next((r for r in reports
                    if r.codim <= 1 and r.generic_verdict.kind != STABLE), None)

    checks = (
        CheckLine(
            name="non_antidominant_cells_have_codim_ge_2",
            status="machine_checked_pass" if bad_codim is None else "machine_checked_fail",
            detail="w(chi) not below zero forces codimension >= 2",
            witness=None if bad_codim is None else _word_witness(bad_codim.w)),
        CheckLine(
            name="no_strictly_semistable_cell",
            status="machine_checked_pass" if bad_mixed is None else "machine_checked_fail",
            detail="semistable and stable loci agree at the generic-state level",
            witness=None if bad_mixed is None else _word_witness(bad_mixed.w)),
        CheckLine(
            name="low_codimension_cells_stable",
            status="machine_checked_pass" if bad_low is None else "machine_checked_fail",
            detail="every cell of codimension <= 1 classifies stable",
            witness=None if bad_low is None else _word_witness(bad_low.w)),
    )
    return FlagStabilityReport(
        datum=datum,
        chi=chi,
        certificate=cert,
        hypotheses_met=cert.passes,
        checks=checks,
        cell_reports=reports,
    )


def min_unstable_codim(reports: Sequence[CellReport]) -> Optional[int]:
    """Smallest Schubert-cell codimension carrying an unstable generic
    verdict; None when every cell is semistable."""
    codims = [r.codim for r in reports if r.generic_verdict.kind == UNSTABLE]
    return min(codims) if codims else None
