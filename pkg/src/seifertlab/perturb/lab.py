"""Newton continuation, Morse indices, leading terms, and localisation runs."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fields import PerturbationFamily, ScalarField
from .linalg import inertia_counts, kernel_basis, pinv_solve
from .scenarios import Scenario, Z1Site

__all__ = [
    "NewtonResult",
    "newton_critical_point",
    "DegenerateCriticalPointError",
    "MultiplierError",
    "morse_index",
    "morse_bott_index",
    "lagrange_multiplier",
    "leading_term",
    "leading_term_kernel_drift",
    "PredictedPoint",
    "predicted_critical_points",
    "predicted_spectrum",
    "FoundPoint",
    "ExperimentReport",
    "run_localisation",
    "ConvergenceReport",
    "convergence_filter",
]

DIVERGENCE_NORM = 1e6
RANK_RTOL = 1e-8  # pseudo-inverse cutoff, relative to the largest |eigenvalue|
RESTRICTED_GAP = 1e-6  # inertia gap for finite-difference chart Hessians


class DegenerateCriticalPointError(RuntimeError):
    """A Hessian eigenvalue sits inside the declared spectral gap."""


class MultiplierError(RuntimeError):
    """The Lagrange-multiplier system is inconsistent at the given point."""


@dataclass
class NewtonResult:
    point: np.ndarray
    grad_norm: float
    value: float
    iterations: int
    converged: bool
    message: str = ""


def newton_critical_point(
    S: ScalarField,
    seed,
    tol: float = 1e-10,
    max_iter: int = 100,
) -> NewtonResult:
    """Damped Newton iteration on grad S from the given seed.

    Steps solve Hess * d = -grad, falling back to the spectral pseudo-inverse
    when the Hessian is singular (which happens exactly on the unperturbed
    critical manifold, where seeds usually start).  Each step is backtracked
    until the gradient norm decreases.  Fails on divergence (iterate norm
    above 1e6), on a step that cannot make progress, or after max_iter.
    """
    x = np.asarray(seed, dtype=float).copy()
    if not np.all(np.isfinite(x)):
        raise ValueError("seed must be finite")
    g = S.gradient(x)
    gnorm = float(np.linalg.norm(g))
    for it in range(max_iter):
        if gnorm <= tol:
            x, g, gnorm = _polish(S, x, g, gnorm)
            return NewtonResult(x, gnorm, S.value(x), it, True)
        if float(np.linalg.norm(x)) > DIVERGENCE_NORM:
            return NewtonResult(x, gnorm, S.value(x), it, False, "diverged")
        H = S.hessian(x)
        try:
            step = np.linalg.solve(H, -g)
            if not np.all(np.isfinite(step)):
                raise np.linalg.LinAlgError
        except np.linalg.LinAlgError:
            step = -pinv_solve(H, g, rtol=1e-12)
        if float(np.linalg.norm(step)) == 0.0:
            step = -g  # kernel-only gradient: descend directly
        t = 1.0
        moved = False
        while t >= 2.0**-30:
            xn = x + t * step
            gn = S.gradient(xn)
            gn_norm = float(np.linalg.norm(gn))
            if np.isfinite(gn_norm) and gn_norm < gnorm:
                x, g, gnorm = xn, gn, gn_norm
                moved = True
                break
            t *= 0.5
        if not moved:
            return NewtonResult(x, gnorm, S.value(x), it + 1, False, "no progress")
    return NewtonResult(x, gnorm, S.value(x), max_iter, gnorm <= tol, "max iterations")


def _polish(S: ScalarField, x, g, gnorm, rounds: int = 2):
    """Extra full Newton steps once converged, keeping only strict improvements."""
    for _ in range(rounds):
        try:
            step = np.linalg.solve(S.hessian(x), -g)
        except np.linalg.LinAlgError:
            break
        xn = x + step
        gn = S.gradient(xn)
        gn_norm = float(np.linalg.norm(gn))
        if not np.isfinite(gn_norm) or gn_norm >= gnorm:
            break
        x, g, gnorm = xn, gn, gn_norm
    return x, g, gnorm


def morse_index(S: ScalarField, x, gap: float = 1e-8) -> int:
    """Number of Hessian eigenvalues below -gap at a nondegenerate point.

    Any eigenvalue of magnitude <= gap raises: a spectral gap is a
    precondition here, and a value inside the band means the point is
    degenerate at this resolution.
    """
    evals = np.linalg.eigvalsh(S.hessian(x))
    neg, null, _ = inertia_counts(evals, gap)
    if null:
        raise DegenerateCriticalPointError(
            f"Hessian eigenvalue within gap {gap:g}: spectrum {evals.tolist()}"
        )
    return neg


def morse_bott_index(S: ScalarField, x, gap: float = 1e-8) -> int:
    """Negative-eigenvalue count, tolerating the near-zero band as tangent
    directions of the critical manifold."""
    evals = np.linalg.eigvalsh(S.hessian(x))
    neg, _, _ = inertia_counts(evals, gap)
    return neg


def lagrange_multiplier(
    s0: ScalarField,
    s1: ScalarField,
    x,
    rank_rtol: float = RANK_RTOL,
    residual_tol: float = 1e-8,
) -> np.ndarray:
    """Minimal-norm solution lambda of Hess S0(x) * lambda = -grad S1(x).

    Solved through the spectral pseudo-inverse with rank cutoff
    rank_rtol * max|eigenvalue|.  The system is consistent exactly when the
    part of grad S1 tangent to Crit(S0) vanishes, i.e. when x lies on Z1; a
    residual at or above residual_tol is reported as an error.
    """
    x = np.asarray(x, dtype=float)
    H = s0.hessian(x)
    g = s1.gradient(x)
    lam = -pinv_solve(H, g, rtol=rank_rtol)
    residual = float(np.linalg.norm(H @ lam + g))
    if residual >= residual_tol:
        raise MultiplierError(
            f"multiplier residual {residual:.3e} >= {residual_tol:g}; "
            "the point does not lie on Z1 of a Morse-Bott pair"
        )
    return lam


def leading_term(family: PerturbationFamily, x) -> float:
    """The localisation leading term (1/2) <grad S1, lambda> + S2 at x on Z1."""
    x = np.asarray(x, dtype=float)
    lam = lagrange_multiplier(family.s0, family.s1, x)
    return 0.5 * float(family.s1.gradient(x) @ lam) + family.s2.value(x)


def leading_term_kernel_drift(family: PerturbationFamily, x) -> float:
    """Largest change of the leading term under unit kernel shifts of lambda.

    The multiplier is only defined up to Ker(Hess S0); the leading term must
    not see that ambiguity.  Returns max_k |(1/2) <grad S1, k>| over an
    orthonormal kernel basis.
    """
    x = np.asarray(x, dtype=float)
    H = family.s0.hessian(x)
    g1 = family.s1.gradient(x)
    basis = kernel_basis(H, rtol=RANK_RTOL)
    if basis.size == 0:
        return 0.0
    return float(np.max(np.abs(0.5 * (basis.T @ g1))))


@dataclass
class PredictedPoint:
    """A critical point of the leading term, tagged with its Z1 site."""

    point: np.ndarray
    site: Z1Site
    chart_params: np.ndarray
    f_index: int


def _f_chart_field(family: PerturbationFamily, site: Z1Site) -> ScalarField:
    return ScalarField(
        site.z0_dim,
        f=lambda t: leading_term(family, site.z0_chart(np.asarray(t, dtype=float))),
        name="f|chart",
    )


def predicted_critical_points(
    scenario: Scenario,
    newton_tol: float = 1e-8,
    gap: float = RESTRICTED_GAP,
    dedupe_radius: float = 1e-6,
) -> list[PredictedPoint]:
    """Critical points of the leading term over Z1.

    Isolated Z1 points are critical outright (a function on a finite set),
    with index 0.  On a flat, the leading term is minimized in chart
    coordinates by Newton from the declared seeds and the index read from
    the chartwise Hessian inertia.
    """
    out: list[PredictedPoint] = []
    for site in scenario.z1_sites:
        if not site.flat:
            out.append(
                PredictedPoint(
                    point=site.point.copy(),
                    site=site,
                    chart_params=np.zeros(site.z0_dim),
                    f_index=0,
                )
            )
            continue
        f_chart = _f_chart_field(scenario.family, site)
        found_params: list[np.ndarray] = []
        for seed in site.flat_seeds:
            res = newton_critical_point(f_chart, np.asarray(seed, dtype=float), tol=newton_tol)
            if not res.converged:
                continue
            if all(np.linalg.norm(res.point - p) > dedupe_radius for p in found_params):
                found_params.append(res.point)
        for params in found_params:
            evals = np.linalg.eigvalsh(f_chart.fd_hessian(params))
            neg, null, _ = inertia_counts(evals, gap)
            if null:
                raise DegenerateCriticalPointError(
                    f"leading term degenerate along flat at params {params.tolist()}"
                )
            out.append(
                PredictedPoint(
                    point=np.asarray(site.z0_chart(params), dtype=float),
                    site=site,
                    chart_params=params,
                    f_index=neg,
                )
            )
    return out


def _restricted_s1_index(
    family: PerturbationFamily, site: Z1Site, params: np.ndarray, sign: int, gap: float
) -> int:
    """Morse-Bott index of sign*S1 restricted to Z0, at chart coordinates params."""
    if site.z0_dim == 0:
        return 0
    restricted = family.s1.restrict(site.z0_chart, site.z0_dim)
    H = sign * restricted.fd_hessian(np.asarray(params, dtype=float))
    neg, _, _ = inertia_counts(np.linalg.eigvalsh(H), gap)
    return neg


def predicted_spectrum(
    scenario: Scenario,
    predicted: PredictedPoint,
    eps_sign: int,
    gap: float = RESTRICTED_GAP,
) -> int:
    """Index prediction ind(S0) + ind(+-S1|Z0) + ind(f) at a leading-term point.

    The S1 term uses +S1 for eps > 0 and -S1 for eps < 0; the S0 term comes
    from the component metadata the point is tagged with.
    """
    if not isinstance(predicted, PredictedPoint) or predicted.site is None:
        raise ValueError("point carries no component metadata")
    if eps_sign not in (1, -1):
        raise ValueError("eps_sign must be +1 or -1")
    site = predicted.site
    s1_index = _restricted_s1_index(
        scenario.family, site, predicted.chart_params, eps_sign, gap
    )
    return site.component.morse_bott_index + s1_index + predicted.f_index


@dataclass
class FoundPoint:
    point: np.ndarray
    value: float
    grad_residual: float
    index: int | None
    predicted_index: int | None
    matched_prediction: int | None  # position in the predicted list
    min_abs_hessian_eig: float
    outside_basin: bool = False

    def as_dict(self) -> dict:
        return {
            "point": [float(v) for v in self.point],
            "value": self.value,
            "grad_residual": self.grad_residual,
            "index": self.index,
            "predicted_index": self.predicted_index,
            "matched_prediction": self.matched_prediction,
            "min_abs_hessian_eig": self.min_abs_hessian_eig,
            "outside_basin": self.outside_basin,
        }


@dataclass
class ExperimentReport:
    scenario: str
    epsilon: float
    degenerate_abstained: bool
    found: list[FoundPoint] = field(default_factory=list)
    predicted_count: int = 0
    bijection_ok: bool | None = None
    indices_ok: bool | None = None
    signed_count: int | None = None
    expected_signed_count: int | None = None
    signed_count_ok: bool | None = None
    messages: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        if self.degenerate_abstained:
            return False
        checks = [self.bijection_ok, self.indices_ok]
        if self.signed_count_ok is not None:
            checks.append(self.signed_count_ok)
        return all(c is True for c in checks)

    def as_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "epsilon": self.epsilon,
            "degenerate_abstained": self.degenerate_abstained,
            "found": [f.as_dict() for f in self.found],
            "predicted_count": self.predicted_count,
            "checks": {
                "bijection": self.bijection_ok,
                "indices": self.indices_ok,
                "signed_count": self.signed_count_ok,
            },
            "signed_count": self.signed_count,
            "expected_signed_count": self.expected_signed_count,
            "ok": self.ok,
            "messages": list(self.messages),
        }


def _expected_signed_count(scenario: Scenario, eps_sign: int) -> int:
    total = 0
    for comp in scenario.components:
        weight = comp.chi if eps_sign > 0 else comp.chi_c
        total += (-1) ** comp.morse_bott_index * weight
    return total


def run_localisation(
    scenario: Scenario,
    epsilons,
    basin_radius: float = 0.5,
    c_bound: float = 1e3,
    tol: float = 1e-10,
    gap: float = 1e-8,
) -> list[ExperimentReport]:
    """Localise Crit(S_eps) near Z1 for each eps and verify the predictions.

    For each eps: Newton from every leading-term critical point, deduplicate
    (radius 10*tol), then check (a) found points biject onto the predictions
    within basin_radius, (b) each Morse index matches the three-term index
    sum, (c) the signed count equals the chi-weighted component formula
    (chi_c-weighted for eps < 0; skipped when the scenario declares the
    properness hypothesis unavailable).  Points with psi above c_bound are
    flagged as outside the localisation neighborhood and excluded from (a).
    """
    preds = predicted_critical_points(scenario)
    family = scenario.family
    reports: list[ExperimentReport] = []
    for eps in epsilons:
        eps = float(eps)
        if eps == 0.0:
            raise ValueError("epsilon must be nonzero")
        if family.s1.is_zero and family.s2.is_zero:
            reports.append(
                ExperimentReport(
                    scenario=scenario.name,
                    epsilon=eps,
                    degenerate_abstained=True,
                    messages=[
                        "S1 = S2 = 0: Z1 = Z0 is not finite, localisation undefined"
                    ],
                )
            )
            continue
        sign = 1 if eps > 0 else -1
        S_eps = family.at(eps)
        report = ExperimentReport(
            scenario=scenario.name,
            epsilon=eps,
            degenerate_abstained=False,
            predicted_count=len(preds),
        )
        points: list[np.ndarray] = []
        for i, pred in enumerate(preds):
            res = newton_critical_point(S_eps, pred.point, tol=tol)
            if not res.converged:
                report.messages.append(
                    f"newton failed from prediction {i}: {res.message}"
                )
                continue
            if all(np.linalg.norm(res.point - p) >= 10 * tol for p in points):
                points.append(res.point)

        # nearest-prediction assignment; a basin miss or a collision breaks it
        used: set[int] = set()
        bijection = True
        for x in points:
            outside = scenario.psi(x) > c_bound
            dists = [float(np.linalg.norm(x - p.point)) for p in preds]
            j = int(np.argmin(dists)) if dists else None
            matched = j if (j is not None and dists[j] <= basin_radius) else None
            if matched is None or matched in used:
                if not outside:
                    bijection = False
                matched = None
            else:
                used.add(matched)
            evals = np.linalg.eigvalsh(S_eps.hessian(x))
            min_abs = float(np.min(np.abs(evals)))
            index: int | None
            try:
                index = morse_index(S_eps, x, gap=gap)
            except DegenerateCriticalPointError as exc:
                index = None
                report.messages.append(str(exc))
            predicted_index = (
                predicted_spectrum(scenario, preds[matched], sign)
                if matched is not None
                else None
            )
            report.found.append(
                FoundPoint(
                    point=x,
                    value=S_eps.value(x),
                    grad_residual=float(np.linalg.norm(S_eps.gradient(x))),
                    index=index,
                    predicted_index=predicted_index,
                    matched_prediction=matched,
                    min_abs_hessian_eig=min_abs,
                    outside_basin=outside,
                )
            )
        inside = [f for f in report.found if not f.outside_basin]
        report.bijection_ok = bijection and len(used) == len(preds) == len(inside)
        report.indices_ok = bool(inside) and all(
            f.index is not None and f.index == f.predicted_index for f in inside
        )
        report.signed_count = sum(
            (-1) ** f.index for f in inside if f.index is not None
        )
        report.expected_signed_count = _expected_signed_count(scenario, sign)
        if sign > 0 or scenario.chi_c_count_valid:
            report.signed_count_ok = (
                report.signed_count == report.expected_signed_count
            )
        else:
            report.signed_count_ok = None
            report.messages.append(
                "eps < 0 signed-count check skipped: S1|Z0 not declared proper"
            )
        reports.append(report)
    return reports


def _extrapolate_to_zero(seq) -> np.ndarray:
    """Lagrange extrapolation of x(eps) to eps = 0 from the last <= 3 points.

    ``seq`` is sorted by decreasing |eps|; duplicate eps values collapse to
    the latest point.  One point: returned as is.  Two or three points with
    distinct eps: polynomial extrapolation, which kills the O(eps) (and
    O(eps^2)) drift of a continued critical branch.
    """
    tail: list[tuple[float, np.ndarray]] = []
    for e, x in seq:
        tail = [(ee, xx) for ee, xx in tail if ee != e]
        tail.append((e, x))
    tail = tail[-3:]
    limit = np.zeros_like(tail[0][1])
    for i, (ei, xi) in enumerate(tail):
        weight = 1.0
        for j, (ej, _) in enumerate(tail):
            if j != i:
                weight *= (0.0 - ej) / (ei - ej)
        limit = limit + weight * xi
    return limit


@dataclass
class ConvergenceReport:
    classification: str  # "localises" | "escapes" | "inconclusive"
    limit_point: np.ndarray
    grad_s0_residual: float
    tangential_s1_residual: float
    message: str = ""

    def as_dict(self) -> dict:
        return {
            "classification": self.classification,
            "limit_point": [float(v) for v in self.limit_point],
            "grad_s0_residual": self.grad_s0_residual,
            "tangential_s1_residual": self.tangential_s1_residual,
            "message": self.message,
        }


def convergence_filter(
    scenario: Scenario,
    pairs,
    c_bound: float = 1e3,
    crit_tol: float = 1e-8,
    residual_lo: float = 1e-6,
    residual_hi: float = 1e-3,
) -> ConvergenceReport:
    """Classify the limit of a sequence of perturbed critical points.

    ``pairs`` is a sequence of (eps_n, x_n) with eps_n -> 0, each x_n a
    verified critical point of S_{eps_n} (re-verified here).  If the
    sequence leaves {psi <= c_bound} it escapes.  Otherwise the limit is
    extrapolated to eps = 0 (polynomially through the last points) and
    tested for Z1 membership through the residuals |grad S0| and
    |tangential grad S1|: both below residual_lo means the limit localises
    to Z1; residuals between the thresholds are reported as inconclusive.
    """
    if not pairs:
        raise ValueError("need at least one (eps, point) pair")
    family = scenario.family
    seq = [(float(e), np.asarray(x, dtype=float)) for e, x in pairs]
    seq.sort(key=lambda p: -abs(p[0]))
    for e, x in seq:
        gnorm = float(np.linalg.norm(family.gradient(x, e)))
        if gnorm > crit_tol:
            raise ValueError(
                f"({e}, {x.tolist()}) is not a critical point: |grad S_eps| = {gnorm:.3e}"
            )
    if scenario.psi(seq[-1][1]) > c_bound:
        return ConvergenceReport(
            classification="escapes",
            limit_point=seq[-1][1],
            grad_s0_residual=float("nan"),
            tangential_s1_residual=float("nan"),
            message=f"psi = {scenario.psi(seq[-1][1]):.3e} exceeds bound {c_bound:g}",
        )
    limit = _extrapolate_to_zero(seq)
    if scenario.psi(limit) > c_bound:
        return ConvergenceReport(
            classification="escapes",
            limit_point=limit,
            grad_s0_residual=float("nan"),
            tangential_s1_residual=float("nan"),
            message="extrapolated limit leaves the bounded region",
        )
    r0 = float(np.linalg.norm(family.s0.gradient(limit)))
    basis = kernel_basis(family.s0.hessian(limit), rtol=RANK_RTOL)
    g1 = family.s1.gradient(limit)
    r1 = float(np.linalg.norm(basis.T @ g1)) if basis.size else 0.0
    if r0 < residual_lo and r1 < residual_lo:
        return ConvergenceReport("localises", limit, r0, r1)
    if r0 > residual_hi or r1 > residual_hi:
        return ConvergenceReport(
            "inconclusive",
            limit,
            r0,
            r1,
            message="residuals above the upper threshold; limit not resolved",
        )
    return ConvergenceReport(
        "inconclusive", limit, r0, r1, message="residuals between thresholds"
    )
