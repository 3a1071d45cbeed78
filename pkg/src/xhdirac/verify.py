"""Verification suites.

Every analytic claim the package encodes is re-checked here against an
independent numerical oracle, and the handful of places where the published
closed forms disagree with what the construction actually forces are
measured and reported rather than silently patched. Check statuses:

    pass    hard check succeeded
    fail    hard check failed (verification exit code 1)
    defect  measured, documented discrepancy in the source model; reported,
            not fatal, so a correct build still verifies clean
    info    measurement with no pass/fail semantics
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, asdict

import numpy as np

from .polycore import ExactPoly, hermite_classical, wronskian
from .xhermite import (
    Partition,
    XHermiteFamily,
    ode_residual_polynomial,
    orthogonality_integral,
    weighted_product_residual,
    zero_free_check,
)
from .numerics import Grid, fd_schrodinger_spectrum, sturm_real_root_count
from . import dirac
from .dirac import (
    ModelParams,
    NoRealEnergyError,
    RadialSolution,
    SymmetryKind,
    build_solution,
    dual_path_ratio,
    effective_bracket,
    effective_potential_f,
    effective_potential_g,
    energy_levels,
    energy_offset,
    f_from_g_spin,
    first_order_residual,
    second_order_residual,
    u_tensor,
    v_scalar,
    v_scalar_prime,
)

TOL = {
    "orthogonality_rel": 1e-10,
    "quadrature_convergence": 1e-12,
    "residual": 1e-6,
    "spectral_abs": 1e-3,
    "energy_rel": 1e-12,
    "product_identity": 1e-10,
    "product_identity_teeth": 1e-2,
    "dual_path_rel": 1e-8,
    "normalization": 1e-6,
}

RESIDUAL_GRID = Grid.from_bounds(1e-3, 8.0, 6001)
RESIDUAL_EXCLUSION_RADIUS = 0.35


@dataclass
class CheckResult:
    check_id: str
    suite: str
    status: str
    measured: float | None = None
    threshold: float | None = None
    detail: str = ""

    def line(self) -> str:
        state = {"pass": "PASS", "fail": "FAIL", "defect": "DEFECT", "info": "INFO"}[self.status]
        parts = [f"[{state:6s}] {self.suite}/{self.check_id}"]
        if self.measured is not None:
            parts.append(f"measured={self.measured:.3e}")
        if self.threshold is not None:
            parts.append(f"threshold={self.threshold:.3e}")
        if self.detail:
            parts.append(self.detail)
        return "  ".join(parts)


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    def extend(self, more) -> None:
        self.checks.extend(more)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def defects(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "defect"]

    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def to_json_dict(self) -> dict:
        return {
            "checks": [asdict(c) for c in self.checks],
            "n_pass": sum(1 for c in self.checks if c.status == "pass"),
            "n_fail": len(self.failures),
            "n_defect": len(self.defects),
            "n_info": sum(1 for c in self.checks if c.status == "info"),
        }

    def render(self) -> str:
        lines = [c.line() for c in self.checks]
        lines.append(
            f"summary: {sum(1 for c in self.checks if c.status == 'pass')} pass, "
            f"{len(self.failures)} fail, {len(self.defects)} documented defects, "
            f"{sum(1 for c in self.checks if c.status == 'info')} info"
        )
        return "\n".join(lines)


def _check(check_id, suite, ok, measured=None, threshold=None, detail=""):
    return CheckResult(check_id, suite, "pass" if ok else "fail", measured, threshold, detail)


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def suite_wronskian() -> list[CheckResult]:
    out = []
    h11 = wronskian([hermite_classical(1), hermite_classical(2)])
    out.append(
        _check(
            "gauge-polynomial-coefficients", "wronskian",
            h11.coeffs == (4, 0, 8),
            detail=f"coeffs={list(h11.coeffs)} expected [4, 0, 8]",
        )
    )
    single = wronskian([hermite_classical(1)])
    out.append(_check("single-entry", "wronskian", single.coeffs == (0, 2)))
    repeated = wronskian([hermite_classical(1), hermite_classical(2), hermite_classical(2)])
    out.append(_check("repeated-column-vanishes", "wronskian", repeated.is_zero()))
    const = wronskian([hermite_classical(1), hermite_classical(2), hermite_classical(0)])
    out.append(_check("constant-member", "wronskian", const.coeffs == (16,)))
    a, b = hermite_classical(3), hermite_classical(5)
    out.append(
        _check(
            "alternating", "wronskian",
            wronskian([a, b]) == -wronskian([b, a]),
        )
    )
    return out


def suite_ode() -> list[CheckResult]:
    out = []
    for parts, nmax in (((1, 1), 12), ((2, 2), 10)):
        fam = XHermiteFamily(Partition(parts), n_max=nmax)
        bad = [n for n in sorted(fam.admissible) if not ode_residual_polynomial(fam, n).is_zero()]
        out.append(
            _check(
                f"family-equation-exact-{parts[0]}{parts[1]}", "ode",
                not bad,
                detail=f"admissible n={sorted(fam.admissible)}; nonzero residuals at {bad}",
            )
        )
    fam = XHermiteFamily(Partition((1, 1)), n_max=4)
    wrong = ode_residual_polynomial(fam, 3, eigenvalue_term=2 * (3 - 2) + 1)
    out.append(
        _check(
            "wrong-eigenvalue-detected", "ode",
            not wrong.is_zero(),
            detail="shifting the eigenvalue term by 1 must break the identity",
        )
    )
    return out


def suite_orthogonality() -> list[CheckResult]:
    out = []
    fam = XHermiteFamily(Partition((1, 1)), n_max=10)
    adm = sorted(fam.admissible)
    diag = {n: orthogonality_integral(fam, n, n) for n in adm}
    out.append(
        _check(
            "diagonal-positive", "orthogonality",
            all(v > 0 for v in diag.values()),
        )
    )
    worst = 0.0
    worst_pair = None
    for i, n in enumerate(adm):
        for m in adm[i + 1:]:
            rel = abs(orthogonality_integral(fam, n, m)) / math.sqrt(diag[n] * diag[m])
            if rel > worst:
                worst, worst_pair = rel, (n, m)
    out.append(
        _check(
            "pairwise", "orthogonality",
            worst < TOL["orthogonality_rel"],
            measured=worst, threshold=TOL["orthogonality_rel"],
            detail=f"worst pair {worst_pair}, all admissible n != m <= 10, "
            "order-doubling convergence check enforced inside the integral",
        )
    )
    return out


def suite_zerofree() -> list[CheckResult]:
    out = []
    for parts in ((1, 1), (2, 2)):
        fam = XHermiteFamily(Partition(parts), n_max=2)
        count = sturm_real_root_count(fam.h)
        out.append(
            _check(
                f"gauge-zero-free-{parts[0]}{parts[1]}", "zerofree",
                count == 0, measured=float(count), threshold=0.0,
            )
        )
    count2 = sturm_real_root_count(hermite_classical(2))
    out.append(
        _check(
            "control-two-roots", "zerofree",
            count2 == 2, measured=float(count2), threshold=2.0,
            detail="the degree-2 Hermite polynomial must show exactly 2 real roots",
        )
    )
    return out


def _fd_levels(alpha: float, printed_alpha2: bool = False) -> np.ndarray:
    eps_max = energy_offset(alpha, 5)
    half_width = max(10.0, math.sqrt(2 * abs(eps_max)) / alpha**2 + 5.0)
    return fd_schrodinger_spectrum(
        lambda z: effective_potential_g(alpha, z, printed_alpha2_variant=printed_alpha2),
        half_width, 3000, 4,
    )


def suite_spectral() -> list[CheckResult]:
    out = []
    family_n = (0, 3, 4, 5)
    for alpha in (1.0, 0.5):
        levels = _fd_levels(alpha)
        stated = np.array([energy_offset(alpha, n) for n in family_n])
        lit = float(np.max(np.abs(levels - stated)))
        corrected = float(np.max(np.abs(levels - (stated + alpha**2))))
        out.append(
            CheckResult(
                f"fd-matches-stated-offsets-alpha-{alpha:g}", "spectral",
                "pass" if lit < TOL["spectral_abs"] else "defect",
                measured=lit, threshold=TOL["spectral_abs"],
                detail=(
                    f"fd={np.round(levels, 5).tolist()} stated={stated.tolist()}; "
                    "the stated eigenvalue offsets omit the oscillator zero point "
                    "alpha^2 contributed by the reduction to normal form"
                ),
            )
        )
        out.append(
            _check(
                f"fd-matches-offsets-plus-zero-point-alpha-{alpha:g}", "spectral",
                corrected < TOL["spectral_abs"],
                measured=corrected, threshold=TOL["spectral_abs"],
                detail="fd eigenvalues equal 2 alpha^2 (n - 2) + alpha^2 for n in (0,3,4,5)",
            )
        )
    levels_printed = _fd_levels(0.5, printed_alpha2=True)
    stated = np.array([energy_offset(0.5, n) for n in family_n])
    mismatch = float(np.max(np.abs(levels_printed - (stated + 0.25))))
    out.append(
        _check(
            "alpha4-coefficient-adjudication", "spectral",
            mismatch > 10 * TOL["spectral_abs"],
            measured=mismatch, threshold=10 * TOL["spectral_abs"],
            detail=(
                "the alpha^2 variant of the 32-term misses the corrected spectrum "
                "at alpha=0.5, so the coordinate-map alpha^4 coefficient stands"
            ),
        )
    )
    return out


def _constructed(kind: SymmetryKind, n: int, family=None) -> RadialSolution:
    params = ModelParams(mass=1.0, alpha=1.0, k=1, n=n, branch=1)
    return build_solution(params, kind, RESIDUAL_GRID, family=family)


def suite_residuals() -> list[CheckResult]:
    out = []
    fam = XHermiteFamily(Partition((1, 1)), n_max=12)
    worst = {"spin-second": 0.0, "spin-first": 0.0, "pseudo-second": 0.0, "pseudo-first": 0.0}
    for kind, tag in ((SymmetryKind.SPIN, "spin"), (SymmetryKind.PSEUDOSPIN, "pseudo")):
        for n in (3, 4, 5):
            sol = _constructed(kind, n, fam)
            for comp in ("F", "G"):
                r2 = second_order_residual(
                    kind, comp, sol, exclusion_radius=RESIDUAL_EXCLUSION_RADIUS
                )
                worst[f"{tag}-second"] = max(worst[f"{tag}-second"], r2)
            r1 = first_order_residual(sol, exclusion_radius=RESIDUAL_EXCLUSION_RADIUS)
            worst[f"{tag}-first"] = max(worst[f"{tag}-first"], *r1)
    for key, val in worst.items():
        out.append(
            _check(
                f"constructed-{key}-order", "residuals",
                val < TOL["residual"], measured=val, threshold=TOL["residual"],
                detail="n in (3,4,5), alpha=1, M=1, k=1, + branch, away from reported poles",
            )
        )
    out.append(
        CheckResult(
            "ground-state-energy", "residuals", "defect",
            measured=-3.0,
            detail=(
                "n=0 at M=1, alpha=1 has E^2 = M^2 + 2(0-2) = -3 < 0: no real "
                "energy exists, so the n=0 residual case cannot be constructed"
            ),
        )
    )
    sol = _constructed(SymmetryKind.SPIN, 3, fam)
    pert = second_order_residual(
        SymmetryKind.SPIN, "G", sol,
        exclusion_radius=RESIDUAL_EXCLUSION_RADIUS,
        energy_override=sol.energy.value + 0.1,
    )
    out.append(
        _check(
            "teeth-energy-perturbation", "residuals",
            pert > 1e-3, measured=pert, threshold=1e-3,
            detail="shifting E by 0.1 must push the second-order residual above 1e-3",
        )
    )
    f_pert, poles = f_from_g_spin(
        sol.energy.params, sol.energy.value, sol.G, RESIDUAL_GRID, v_shift=0.1
    )
    pert_sol = RadialSolution(
        kind=SymmetryKind.SPIN, grid=RESIDUAL_GRID, F=f_pert, G=sol.G,
        energy=sol.energy,
        pole_indices=tuple(sorted(set(sol.pole_indices + poles))),
        pole_positions=sol.pole_positions, mode="constructed",
    )
    r1 = first_order_residual(pert_sol, exclusion_radius=RESIDUAL_EXCLUSION_RADIUS)
    out.append(
        _check(
            "teeth-potential-perturbation", "residuals",
            max(r1) > TOL["product_identity_teeth"],
            measured=max(r1), threshold=TOL["product_identity_teeth"],
            detail="deriving the partner with V shifted by 0.1 must break the pair",
        )
    )
    flipped = first_order_residual(
        sol, exclusion_radius=RESIDUAL_EXCLUSION_RADIUS, k_override=-1
    )
    out.append(
        _check(
            "teeth-k-sign-flip", "residuals",
            min(flipped) > 1e-3, measured=min(flipped), threshold=1e-3,
        )
    )
    return out


def suite_product_identity(inject_literal: bool = False) -> list[CheckResult]:
    out = []
    fam = XHermiteFamily(Partition((1, 1)), n_max=4)
    grid = Grid.from_bounds(-4.0, 4.0, 801)
    corrected = weighted_product_residual(fam, 0, 3, grid, weight_inside=not inject_literal)
    if inject_literal:
        out.append(
            _check(
                "injected-literal-form", "product-identity",
                corrected < TOL["product_identity"],
                measured=corrected, threshold=TOL["product_identity"],
                detail="literal variant injected on purpose; this check is expected to fail",
            )
        )
        return out
    out.append(
        _check(
            "weight-inside-derivative", "product-identity",
            corrected < TOL["product_identity"],
            measured=corrected, threshold=TOL["product_identity"],
        )
    )
    literal = weighted_product_residual(fam, 0, 3, grid, weight_inside=False)
    out.append(
        _check(
            "literal-form-fails", "product-identity",
            literal >= TOL["product_identity_teeth"],
            measured=literal, threshold=TOL["product_identity_teeth"],
            detail="the variant differentiating the bare bracket misses the weight factor",
        )
    )
    classical = XHermiteFamily(Partition(()), n_max=2)
    corr0 = weighted_product_residual(classical, 1, 0, grid, weight_inside=True)
    lit0 = weighted_product_residual(classical, 1, 0, grid, weight_inside=False)
    out.append(
        _check(
            "classical-limit", "product-identity",
            corr0 < 1e-12 and lit0 > TOL["product_identity_teeth"],
            measured=corr0,
            detail=f"empty partition reduces to the Hermite pair identity; literal misses by {lit0:.2e}",
        )
    )
    return out


def suite_energy(seed: int = 20240801) -> list[CheckResult]:
    out = []
    rng = np.random.default_rng(seed)
    worst = 0.0
    anti_ok = True
    checked = 0
    while checked < 50:
        mass = float(rng.uniform(0.0, 5.0))
        alpha = float(rng.uniform(0.1, 3.0))
        n = int(rng.integers(0, 13))
        disc = mass**2 + 2 * alpha**2 * (n - 2)
        if disc < 0:
            continue
        checked += 1
        plus = energy_levels(ModelParams(mass=mass, alpha=alpha, n=n, branch=1)).value
        minus = energy_levels(ModelParams(mass=mass, alpha=alpha, n=n, branch=-1)).value
        anti_ok = anti_ok and (plus == -minus)
        target = 2 * alpha**2 * (n - 2)
        scale = max(abs(target), mass**2, 1e-30)
        worst = max(worst, abs((plus**2 - mass**2) - target) / scale)
    out.append(
        _check(
            "square-relation", "energy",
            worst < TOL["energy_rel"], measured=worst, threshold=TOL["energy_rel"],
            detail="E^2 - M^2 = 2 alpha^2 (n - 2) over 50 random parameter draws",
        )
    )
    out.append(_check("branch-antisymmetry", "energy", anti_ok))
    try:
        energy_levels(ModelParams(mass=0.0, alpha=1.0, n=0))
        out.append(_check("negative-discriminant-raises", "energy", False))
    except NoRealEnergyError:
        out.append(_check("negative-discriminant-raises", "energy", True))
    return out


def suite_dual_path() -> list[CheckResult]:
    out = []
    ratios, spread = dual_path_ratio(ModelParams(mass=1.0, alpha=1.0, n=0))
    out.append(
        _check(
            "ground-state-constant-ratio", "dual-path",
            spread < TOL["dual_path_rel"] and abs(ratios[0] - 1 / 16) < 1e-12,
            measured=spread, threshold=TOL["dual_path_rel"],
            detail="published closed form / Wronskian path = 1/16 for n = 0",
        )
    )
    spreads = {}
    for n in (3, 4, 5):
        _, spread = dual_path_ratio(ModelParams(mass=1.0, alpha=1.0, n=n))
        spreads[n] = spread
    out.append(
        CheckResult(
            "closed-form-mismatch", "dual-path",
            "defect" if max(spreads.values()) > TOL["dual_path_rel"] else "pass",
            measured=max(spreads.values()), threshold=TOL["dual_path_rel"],
            detail=(
                f"ratio spreads {spreads}: for n >= 3 the published Hermite "
                "combination is not proportional to the Wronskian member P_n "
                "(the sqrt(n+1) factors are garbled); the Wronskian path is "
                "ground truth since it satisfies the exactly verified family equation"
            ),
        )
    )
    return out


def suite_adjudications() -> list[CheckResult]:
    out = []
    fam = XHermiteFamily(Partition((1, 1)), n_max=12)
    params = ModelParams(mass=1.0, alpha=1.0, k=1, n=3, branch=1)

    sol_sq = build_solution(params, SymmetryKind.PSEUDOSPIN, RESIDUAL_GRID, family=fam)
    res_sq = second_order_residual(
        SymmetryKind.PSEUDOSPIN, "F", sol_sq, exclusion_radius=RESIDUAL_EXCLUSION_RADIUS
    )
    sol_un = build_solution(
        params, SymmetryKind.PSEUDOSPIN, RESIDUAL_GRID, family=fam, squared_denominator=False
    )
    res_un = second_order_residual(
        SymmetryKind.PSEUDOSPIN, "F", sol_un,
        exclusion_radius=RESIDUAL_EXCLUSION_RADIUS, squared_denominator=False,
    )
    out.append(
        _check(
            "pseudospin-denominator-power", "adjudications",
            res_sq < TOL["residual"] and res_un > 1e-3,
            measured=res_sq, threshold=TOL["residual"],
            detail=(
                f"squared (1+2r^2)^2 denominator residual {res_sq:.2e} vs "
                f"unsquared {res_un:.2e}: the squared form wins and the "
                "unsquared one stays available behind a flag"
            ),
        )
    )

    e = energy_levels(params).value
    m = params.mass
    r_probe = 1.0
    printed = u_tensor(SymmetryKind.PSEUDOSPIN, 1, e, m, r_probe)
    vprime = v_scalar_prime(SymmetryKind.PSEUDOSPIN, e, m, r_probe)
    den = e + m - 2.0 * v_scalar(SymmetryKind.PSEUDOSPIN, e, m, r_probe)
    minus_form = 1.0 / r_probe - vprime / den
    plus_form = 1.0 / r_probe + vprime / den
    out.append(
        _check(
            "pseudospin-tensor-reconstruction", "adjudications",
            abs(printed - minus_form) < 1e-12,
            measured=abs(printed - minus_form), threshold=1e-12,
            detail=(
                f"published closed form equals k/r - V'/(E+M-2V) at r=1 "
                f"(plus-sign variant differs by {abs(printed - plus_form):.3e})"
            ),
        )
    )

    findings = {}
    for scale_name, scale in (("r", 1.0), ("alpha-r", 2.0)):
        p2 = ModelParams(mass=1.0, alpha=2.0, k=1, n=3, branch=1)
        sol = build_solution(
            p2, SymmetryKind.PSEUDOSPIN, RESIDUAL_GRID, mode="literal",
            literal_argument_scale=scale,
        )
        res = second_order_residual(
            SymmetryKind.PSEUDOSPIN, "F", sol, exclusion_radius=RESIDUAL_EXCLUSION_RADIUS
        )
        findings[scale_name] = res
    out.append(
        CheckResult(
            "closed-form-argument-scaling", "adjudications", "defect",
            measured=min(findings.values()),
            detail=(
                f"alpha=2 second-order residuals: argument r -> {findings['r']:.2e}, "
                f"argument alpha*r -> {findings['alpha-r']:.2e}; neither choice "
                "satisfies the equations because the closed-form potentials carry "
                "alpha only through E, so consistency holds at alpha=1 (or via the "
                "rescaled coordinate map, as the spectral suite confirms)"
            ),
        )
    )

    e3 = energy_levels(ModelParams(mass=1.0, alpha=1.0, n=3)).value
    rr = np.linspace(0.2, 4.0, 40)
    lit = np.asarray(effective_potential_f(e3, 1.0, rr, c_term_denominator_power=2))
    bracket, _ = effective_bracket(SymmetryKind.SPIN, "F", 1, e3, 1.0, rr)
    diff = float(np.max(np.abs(lit - bracket)) / np.max(np.abs(bracket)))
    lit1 = np.asarray(effective_potential_f(e3, 1.0, rr, c_term_denominator_power=1))
    diff1 = float(np.max(np.abs(lit1 - bracket)) / np.max(np.abs(bracket)))
    out.append(
        _check(
            "f-channel-literal-potential", "adjudications",
            diff < 1e-10,
            measured=diff, threshold=1e-10,
            detail=(
                "the printed decoupled F potential matches the constructed one "
                "exactly when its coefficient-polynomial term is read over D^2 "
                f"(the printed denominator drops a parenthesis); D^1 reading is off by {diff1:.2e}"
            ),
        )
    )

    fam_local = fam
    sol = build_solution(params, SymmetryKind.SPIN, RESIDUAL_GRID, family=fam_local)
    comp = sol.F
    from .numerics import central_second_derivative
    d2 = central_second_derivative(comp, RESIDUAL_GRID)
    rgrid = RESIDUAL_GRID.points
    litv = np.asarray(effective_potential_f(e3, 1.0, rgrid, c_term_denominator_power=2))
    res = -d2 + litv * comp - (e3**2 - 1.0) * comp
    keep = dirac.pole_exclusion_mask(
        RESIDUAL_GRID, sol.pole_indices, exclusion_radius=RESIDUAL_EXCLUSION_RADIUS
    )
    keep[:2] = keep[-2:] = False
    measured = float(np.max(np.abs(res[keep])) / np.max(np.abs(comp[keep])))
    out.append(
        CheckResult(
            "f-channel-second-order-residual", "adjudications",
            "pass" if measured < 1e-4 else "info",
            measured=measured, threshold=1e-4,
            detail="derived lower component against the printed decoupled F equation",
        )
    )
    return out


def suite_figures() -> list[CheckResult]:
    # imported lazily: cli pulls in this module for cmd_verify
    from . import cli

    out = []
    for fig_id in range(1, 7):
        cfg = cli.RunConfig(command="figure", figure=fig_id)
        table = cli.figure_table(cfg)
        finite = all(
            math.isfinite(v) for row in table.rows for v in row if isinstance(v, float)
        )
        out.append(
            _check(
                f"figure-{fig_id}-finite", "figures", finite,
                detail=f"{len(table.rows)} rows, columns {table.header}",
            )
        )
        if fig_id in (1, 4):
            rho_cols = [j for j, name in enumerate(table.header) if name.startswith("rho")]
            nonneg = all(row[j] >= 0 for row in table.rows for j in rho_cols)
            out.append(_check(f"figure-{fig_id}-density-nonnegative", "figures", nonneg))
            worst = max(abs(v - 1.0) for k, v in table.meta.items() if k.startswith("integral_"))
            out.append(
                _check(
                    f"figure-{fig_id}-density-normalized", "figures",
                    worst < TOL["normalization"],
                    measured=worst, threshold=TOL["normalization"],
                )
            )
        if fig_id in (3, 6):
            k = 1 if fig_id == 3 else 2
            r0, u0 = table.rows[0][0], table.rows[0][1]
            out.append(
                _check(
                    f"figure-{fig_id}-tensor-centrifugal-limit", "figures",
                    abs(u0 * r0 - k) < 1e-4,
                    measured=abs(u0 * r0 - k), threshold=1e-4,
                    detail=f"U(r) * r -> k={k} at the inner grid edge",
                )
            )
    return out


SUITES = {
    "wronskian": suite_wronskian,
    "ode": suite_ode,
    "orthogonality": suite_orthogonality,
    "zerofree": suite_zerofree,
    "spectral": suite_spectral,
    "residuals": suite_residuals,
    "product-identity": suite_product_identity,
    "energy": suite_energy,
    "dual-path": suite_dual_path,
    "adjudications": suite_adjudications,
    "figures": suite_figures,
}


def run_verification(
    suites: list[str] | None = None, inject_product_literal: bool = False
) -> VerificationReport:
    report = VerificationReport()
    names = suites or list(SUITES)
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; available: {sorted(SUITES)}")
        if name == "product-identity":
            report.extend(suite_product_identity(inject_literal=inject_product_literal))
        else:
            report.extend(SUITES[name]())
    return report
