"""Built-in perturbation scenarios with exactly known critical structure.

Each scenario packages a family (S0, S1, S2), the components of
Z0 = Crit(S0) that the localisation neighborhood covers (with their Euler
characteristics and Morse-Bott indices as declared metadata), and the
critical set Z1 of S1 restricted to Z0, each point carrying a local chart of
Z0 for restricted-index computations.

  circle: S0 = (x^2 + y^2 - 1)^2 + z^2, S1 = x, S2 = 0.  Z0 contains the
      unit circle in the z = 0 plane (chi = 0, index 0); S1 restricts to
      cos(theta) with Z1 = {(1,0,0), (-1,0,0)}.  S0 also has an isolated
      critical point at the origin, outside every basin used here.

  sphere: S0 = (|x|^2 - 1)^2, S1 = z, S2 = 0.  Z0 contains the unit sphere
      (chi = 2, index 0); Z1 = {north, south pole}.  Same remark about the
      origin.

  linear: S0 = u1^2 + 2*u2^2 on coordinates (u1, u2, w), so the normal
      Hessian is the constant diagonal (2, 4); S1 = (1+w)*u1 + w*u2 vanishes
      on Z0 = the w-axis, so Z1 = Z0 is a one-dimensional flat and the
      leading term -((1+w)^2/4 + w^2/8) + w^2 has a unique nondegenerate
      minimum at w = 2/5.  The w-axis is noncompact and S1|Z0 = 0 is not
      proper, so the signed-count identity is only declared for eps > 0.

  escape (not exposed on the command line): S0 = -log(1 + x^2)/2, S1 = x on
      the real line.  S_eps has a near root ~eps and a far root ~1/eps; the
      far branch leaves every bounded set as eps -> 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .fields import PerturbationFamily, ScalarField
from .linalg import kernel_basis

__all__ = [
    "Z0Component",
    "Z1Site",
    "Scenario",
    "circle_scenario",
    "sphere_scenario",
    "linear_scenario",
    "escape_scenario",
    "scenario_names",
    "scenario_by_name",
]


@dataclass(frozen=True)
class Z0Component:
    """Declared metadata for one connected component of Crit(S0)."""

    name: str
    chi: int
    chi_c: int
    morse_bott_index: int


@dataclass
class Z1Site:
    """One charted piece of Z1 = Crit(S1|Z0).

    ``z0_chart`` parametrizes Z0 near ``point`` (chart(0) = point) and is
    used to compute the index of S1 restricted to Z0.  When ``flat`` is set,
    S1|Z0 is constant along the chart, Z1 fills the whole chart, and the
    leading-term function is minimized over it starting from ``flat_seeds``.
    """

    point: np.ndarray
    component: Z0Component
    z0_chart: Callable[[np.ndarray], np.ndarray]
    z0_dim: int
    flat: bool = False
    flat_seeds: tuple = ()

    def __post_init__(self):
        self.point = np.asarray(self.point, dtype=float)


@dataclass
class Scenario:
    name: str
    family: PerturbationFamily
    components: tuple[Z0Component, ...]
    z1_sites: tuple[Z1Site, ...]
    z0_sampler: Callable[[np.random.Generator, int], np.ndarray]
    psi: Callable[[np.ndarray], float] = field(
        default=lambda x: float(np.linalg.norm(x))
    )
    chi_c_count_valid: bool = True  # S1|Z0 proper and bounded below, author-declared

    @property
    def dim(self) -> int:
        return self.family.dim

    def validate(self, tol: float = 1e-8, samples: int = 32, seed: int = 0) -> list[str]:
        """Residual checks on the declared structure; empty list means valid.

        Every Z1 point must kill grad S0 and the component of grad S1
        tangent to Z0; sampled Z0 points must kill grad S0.
        """
        problems = []
        for site in self.z1_sites:
            g0 = self.family.s0.gradient(site.point)
            if np.linalg.norm(g0) >= tol:
                problems.append(
                    f"site {site.point.tolist()}: |grad S0| = {np.linalg.norm(g0):.3e}"
                )
            H0 = self.family.s0.hessian(site.point)
            tangent = kernel_basis(H0)
            g1 = self.family.s1.gradient(site.point)
            tang_part = tangent.T @ g1 if tangent.size else np.zeros(0)
            if np.linalg.norm(tang_part) >= tol:
                problems.append(
                    f"site {site.point.tolist()}: tangential |grad S1| = "
                    f"{np.linalg.norm(tang_part):.3e}"
                )
        rng = np.random.default_rng(seed)
        for x in self.z0_sampler(rng, samples):
            g0 = self.family.s0.gradient(x)
            if np.linalg.norm(g0) >= tol:
                problems.append(f"sampled {np.asarray(x).tolist()}: |grad S0| = {np.linalg.norm(g0):.3e}")
        return problems


def circle_scenario() -> Scenario:
    def s0_f(x):
        u = x[0] ** 2 + x[1] ** 2 - 1.0
        return u * u + x[2] ** 2

    def s0_grad(x):
        u = x[0] ** 2 + x[1] ** 2 - 1.0
        return np.array([4 * x[0] * u, 4 * x[1] * u, 2 * x[2]])

    def s0_hess(x):
        u = x[0] ** 2 + x[1] ** 2 - 1.0
        return np.array(
            [
                [4 * u + 8 * x[0] ** 2, 8 * x[0] * x[1], 0.0],
                [8 * x[0] * x[1], 4 * u + 8 * x[1] ** 2, 0.0],
                [0.0, 0.0, 2.0],
            ]
        )

    s0 = ScalarField(3, s0_f, s0_grad, s0_hess, name="(x^2+y^2-1)^2 + z^2")
    s1 = ScalarField(
        3,
        lambda x: x[0],
        lambda x: np.array([1.0, 0.0, 0.0]),
        lambda x: np.zeros((3, 3)),
        name="x",
    )
    family = PerturbationFamily(s0, s1, ScalarField.zero(3), name="circle")
    comp = Z0Component(name="unit-circle", chi=0, chi_c=0, morse_bott_index=0)

    def chart_at(theta0):
        return lambda t: np.array([np.cos(theta0 + t[0]), np.sin(theta0 + t[0]), 0.0])

    sites = (
        Z1Site(np.array([1.0, 0.0, 0.0]), comp, chart_at(0.0), z0_dim=1),
        Z1Site(np.array([-1.0, 0.0, 0.0]), comp, chart_at(np.pi), z0_dim=1),
    )

    def sampler(rng, n):
        thetas = rng.uniform(0.0, 2 * np.pi, n)
        return np.stack([np.cos(thetas), np.sin(thetas), np.zeros(n)], axis=1)

    return Scenario("circle", family, (comp,), sites, sampler)


def sphere_scenario() -> Scenario:
    def s0_f(x):
        u = float(x @ x) - 1.0
        return u * u

    def s0_grad(x):
        u = float(x @ x) - 1.0
        return 4.0 * u * x

    def s0_hess(x):
        u = float(x @ x) - 1.0
        return 4.0 * u * np.eye(3) + 8.0 * np.outer(x, x)

    s0 = ScalarField(3, s0_f, s0_grad, s0_hess, name="(|x|^2-1)^2")
    s1 = ScalarField(
        3,
        lambda x: x[2],
        lambda x: np.array([0.0, 0.0, 1.0]),
        lambda x: np.zeros((3, 3)),
        name="z",
    )
    family = PerturbationFamily(s0, s1, ScalarField.zero(3), name="sphere")
    comp = Z0Component(name="unit-sphere", chi=2, chi_c=2, morse_bott_index=0)

    def chart_pole(sign):
        # orthographic chart; fine for the small steps used in differencing
        return lambda t: np.array(
            [t[0], t[1], sign * np.sqrt(max(0.0, 1.0 - t[0] ** 2 - t[1] ** 2))]
        )

    sites = (
        Z1Site(np.array([0.0, 0.0, 1.0]), comp, chart_pole(1.0), z0_dim=2),
        Z1Site(np.array([0.0, 0.0, -1.0]), comp, chart_pole(-1.0), z0_dim=2),
    )

    def sampler(rng, n):
        pts = rng.normal(size=(n, 3))
        return pts / np.linalg.norm(pts, axis=1, keepdims=True)

    return Scenario("sphere", family, (comp,), sites, sampler)


def linear_scenario() -> Scenario:
    s0 = ScalarField(
        3,
        lambda x: x[0] ** 2 + 2.0 * x[1] ** 2,
        lambda x: np.array([2.0 * x[0], 4.0 * x[1], 0.0]),
        lambda x: np.diag([2.0, 4.0, 0.0]),
        name="u1^2 + 2*u2^2",
    )
    s1 = ScalarField(
        3,
        lambda x: (1.0 + x[2]) * x[0] + x[2] * x[1],
        lambda x: np.array([1.0 + x[2], x[2], x[0] + x[1]]),
        lambda x: np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 1.0], [1.0, 1.0, 0.0]]),
        name="(1+w)u1 + w*u2",
    )
    s2 = ScalarField(
        3,
        lambda x: x[2] ** 2,
        lambda x: np.array([0.0, 0.0, 2.0 * x[2]]),
        lambda x: np.diag([0.0, 0.0, 2.0]),
        name="w^2",
    )
    family = PerturbationFamily(s0, s1, s2, name="linear")
    comp = Z0Component(name="w-axis", chi=1, chi_c=-1, morse_bott_index=0)
    chart = lambda t: np.array([0.0, 0.0, t[0]])
    sites = (
        Z1Site(
            np.array([0.0, 0.0, 0.0]),
            comp,
            chart,
            z0_dim=1,
            flat=True,
            flat_seeds=(np.zeros(1),),
        ),
    )

    def sampler(rng, n):
        ws = rng.uniform(-2.0, 2.0, n)
        return np.stack([np.zeros(n), np.zeros(n), ws], axis=1)

    return Scenario(
        "linear",
        family,
        (comp,),
        sites,
        sampler,
        chi_c_count_valid=False,
    )


def escape_scenario() -> Scenario:
    s0 = ScalarField(
        1,
        lambda x: -0.5 * np.log1p(x[0] ** 2),
        lambda x: np.array([-x[0] / (1.0 + x[0] ** 2)]),
        lambda x: np.array([[(x[0] ** 2 - 1.0) / (1.0 + x[0] ** 2) ** 2]]),
        name="-log(1+x^2)/2",
    )
    s1 = ScalarField(
        1,
        lambda x: x[0],
        lambda x: np.array([1.0]),
        lambda x: np.zeros((1, 1)),
        name="x",
    )
    family = PerturbationFamily(s0, s1, ScalarField.zero(1), name="escape")
    comp = Z0Component(name="origin", chi=1, chi_c=1, morse_bott_index=1)
    sites = (
        Z1Site(np.zeros(1), comp, lambda t: np.zeros(1), z0_dim=0),
    )

    def sampler(rng, n):
        return np.zeros((n, 1))

    return Scenario("escape", family, (comp,), sites, sampler)


_REGISTRY: dict[str, Callable[[], Scenario]] = {
    "circle": circle_scenario,
    "sphere": sphere_scenario,
    "linear": linear_scenario,
}


def scenario_names() -> list[str]:
    return sorted(_REGISTRY)


def scenario_by_name(name: str) -> Scenario:
    try:
        builder = _REGISTRY[name]
    except KeyError:
        raise ValueError(
            f"unknown scenario {name!r}; available: {', '.join(scenario_names())}"
        ) from None
    return builder()
