"""Scalar fields on R^d with analytic or finite-difference derivatives."""

from __future__ import annotations

from typing import Callable

import numpy as np

__all__ = ["ScalarField", "PerturbationFamily"]

GRAD_STEP = 1e-5
HESS_STEP = 1e-4


class ScalarField:
    """A smooth function R^d -> R with optional analytic gradient/Hessian.

    When an analytic evaluator is absent, central finite differences stand in
    (step ``GRAD_STEP`` for gradients, ``HESS_STEP`` for Hessians).  Where
    both exist they must agree within finite-difference accuracy; the test
    suite checks this on every built-in scenario.
    """

    def __init__(
        self,
        dim: int,
        f: Callable[[np.ndarray], float],
        grad: Callable[[np.ndarray], np.ndarray] | None = None,
        hess: Callable[[np.ndarray], np.ndarray] | None = None,
        name: str = "",
        is_zero: bool = False,
    ):
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        self.dim = dim
        self._f = f
        self._grad = grad
        self._hess = hess
        self.name = name
        self.is_zero = is_zero

    @classmethod
    def zero(cls, dim: int) -> "ScalarField":
        return cls(
            dim,
            f=lambda x: 0.0,
            grad=lambda x: np.zeros(dim),
            hess=lambda x: np.zeros((dim, dim)),
            name="0",
            is_zero=True,
        )

    def value(self, x) -> float:
        return float(self._f(np.asarray(x, dtype=float)))

    def gradient(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self._grad is not None:
            return np.asarray(self._grad(x), dtype=float)
        return self.fd_gradient(x)

    def hessian(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self._hess is not None:
            return np.asarray(self._hess(x), dtype=float)
        return self.fd_hessian(x)

    def fd_gradient(self, x, step: float = GRAD_STEP) -> np.ndarray:
        """Central-difference gradient, independent of any analytic evaluator."""
        x = np.asarray(x, dtype=float)
        out = np.zeros(self.dim)
        for i in range(self.dim):
            e = np.zeros(self.dim)
            e[i] = step
            out[i] = (self._f(x + e) - self._f(x - e)) / (2 * step)
        return out

    def fd_hessian(self, x, step: float = HESS_STEP) -> np.ndarray:
        """Central-difference Hessian, symmetrized."""
        x = np.asarray(x, dtype=float)
        n = self.dim
        out = np.zeros((n, n))
        f0 = self._f(x)
        for i in range(n):
            ei = np.zeros(n)
            ei[i] = step
            out[i, i] = (self._f(x + ei) - 2 * f0 + self._f(x - ei)) / step**2
            for j in range(i + 1, n):
                ej = np.zeros(n)
                ej[j] = step
                mixed = (
                    self._f(x + ei + ej)
                    - self._f(x + ei - ej)
                    - self._f(x - ei + ej)
                    + self._f(x - ei - ej)
                ) / (4 * step**2)
                out[i, j] = mixed
                out[j, i] = mixed
        return out

    def restrict(self, chart: Callable[[np.ndarray], np.ndarray], dim: int, name: str = "") -> "ScalarField":
        """The composition with a chart t -> x(t); derivatives via differences."""
        return ScalarField(
            dim,
            f=lambda t: self._f(np.asarray(chart(np.asarray(t, dtype=float)), dtype=float)),
            name=name or f"{self.name}|chart",
            is_zero=self.is_zero,
        )


class PerturbationFamily:
    """The truncated family S_eps = s0 + eps*s1 + eps^2*s2 on a common R^d.

    Truncation at second order is not a loss: the localisation statements
    depend only on s0, s1, s2.
    """

    def __init__(self, s0: ScalarField, s1: ScalarField, s2: ScalarField, name: str = ""):
        if not (s0.dim == s1.dim == s2.dim):
            raise ValueError("family members must share one dimension")
        self.s0 = s0
        self.s1 = s1
        self.s2 = s2
        self.name = name

    @property
    def dim(self) -> int:
        return self.s0.dim

    def value(self, x, eps: float) -> float:
        return self.s0.value(x) + eps * self.s1.value(x) + eps**2 * self.s2.value(x)

    def gradient(self, x, eps: float) -> np.ndarray:
        return (
            self.s0.gradient(x)
            + eps * self.s1.gradient(x)
            + eps**2 * self.s2.gradient(x)
        )

    def hessian(self, x, eps: float) -> np.ndarray:
        return (
            self.s0.hessian(x)
            + eps * self.s1.hessian(x)
            + eps**2 * self.s2.hessian(x)
        )

    def at(self, eps: float) -> ScalarField:
        """S_eps as a single field; derivatives stay analytic if the parts are."""
        grad = None
        hess = None
        if all(s._grad is not None for s in (self.s0, self.s1, self.s2)):
            grad = lambda x: self.gradient(x, eps)
        if all(s._hess is not None for s in (self.s0, self.s1, self.s2)):
            hess = lambda x: self.hessian(x, eps)
        return ScalarField(
            self.dim,
            f=lambda x: self.value(x, eps),
            grad=grad,
            hess=hess,
            name=f"{self.name or 'S'}[eps={eps}]",
        )
