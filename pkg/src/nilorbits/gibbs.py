"""Floating-point checks of orbit geometry: the conical flow generated by h,
homogeneity of the KKS form and its Liouville power, volume growth of the
sl(2,R) nilpotent cone, and the convexity bound behind divergence of the
partition function.

The Killing-type pairing is the trace form (constant 1); all checks are
ratios and do not depend on the constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import integrate
from scipy.linalg import expm

from .exactla import ExactMatrix

Pairing = Callable[[np.ndarray, np.ndarray], float]

RANK_TOL = 1e-9


def trace_form(a: np.ndarray, b: np.ndarray) -> float:
    # tr(ab) is real on every real form handled here, su(p,q) included
    return float(np.real(np.trace(a @ b)))


def _arr(m) -> np.ndarray:
    if isinstance(m, ExactMatrix):
        return m.to_numpy()
    return np.asarray(m)


def _bracket(a, b):
    return a @ b - b @ a


def kks_value(x, X, Y, killing: Pairing = trace_form) -> float:
    """omega_x(X*, Y*) = kappa(x, [X, Y])."""
    x, X, Y = _arr(x), _arr(X), _arr(Y)
    shapes = {x.shape, X.shape, Y.shape}
    if len(shapes) != 1 or x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError(f"size mismatch: {sorted(shapes)}")
    return killing(x, _bracket(X, Y))


def _flat(m: np.ndarray) -> np.ndarray:
    v = np.asarray(m, dtype=complex).reshape(-1)
    return np.concatenate([v.real, v.imag])


@dataclass
class OrbitChart:
    """Base point x with algebra elements whose fundamental fields
    X*|_x = [X, x] form a frame of the orbit's tangent space."""

    base: np.ndarray
    generators: list
    killing: Pairing = trace_form
    dim: int = field(init=False)

    def __post_init__(self):
        self.base = _arr(self.base)
        self.generators = [_arr(g) for g in self.generators]
        tang = np.array([_flat(_bracket(g, self.base)) for g in self.generators])
        rank = np.linalg.matrix_rank(tang, tol=RANK_TOL) if len(tang) else 0
        if rank != len(self.generators):
            raise ValueError("generators are not independent on the tangent space")
        self.dim = rank

    @classmethod
    def from_basis(cls, x, basis: Sequence, killing: Pairing = trace_form) -> "OrbitChart":
        """Greedy choice of basis elements with independent fields at x; the
        count is the orbit dimension."""
        x = _arr(x)
        chosen, rows = [], []
        for z in basis:
            z = _arr(z)
            cand = rows + [_flat(_bracket(z, x))]
            if np.linalg.matrix_rank(np.array(cand), tol=RANK_TOL) == len(cand):
                rows = cand
                chosen.append(z)
        return cls(x, chosen, killing)

    @classmethod
    def from_triple(cls, t, killing: Pairing = trace_form) -> "OrbitChart":
        from .matrixlab import algebra_basis

        return cls.from_basis(t.x, algebra_basis(t.ambient), killing)

    def omega_matrix(self, point: np.ndarray | None = None) -> np.ndarray:
        x = self.base if point is None else point
        g = self.generators
        k = len(g)
        out = np.zeros((k, k))
        for i in range(k):
            for j in range(i + 1, k):
                v = kks_value(x, g[i], g[j], self.killing)
                out[i, j], out[j, i] = v, -v
        return out


def pfaffian(a: np.ndarray) -> float:
    """Pfaffian of a real antisymmetric matrix by pivoted elimination."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n % 2:
        return 0.0
    pf = 1.0
    for k in range(0, n - 1, 2):
        piv = k + 1 + int(np.argmax(np.abs(a[k, k + 1:])))
        if piv != k + 1:
            a[[k + 1, piv]] = a[[piv, k + 1]]
            a[:, [k + 1, piv]] = a[:, [piv, k + 1]]
            pf = -pf
        if a[k, k + 1] == 0.0:
            return 0.0
        pf *= a[k, k + 1]
        if k + 2 < n:
            tau = a[k, k + 2:] / a[k, k + 1]
            # eliminate row/col k using row/col k+1 (congruence)
            a[k + 2:, k + 2:] += np.outer(a[k + 1, k + 2:], tau) - np.outer(tau, a[k + 1, k + 2:])
    return pf


def ad_matrix(h: np.ndarray) -> np.ndarray:
    """ad_h on gl(n) in column-stacked coordinates."""
    n = h.shape[0]
    eye = np.eye(n)
    return np.kron(eye, h) - np.kron(h.T, eye)


def check_conical_flow(t, time: float) -> float:
    """max |exp(time ad_h) x - e^(2 time) x|."""
    x, h = _arr(t.x), _arr(t.h)
    flowed = expm(time * ad_matrix(h)) @ x.reshape(-1, order="F")
    target = np.exp(2 * time) * x.reshape(-1, order="F")
    return float(np.max(np.abs(flowed - target)))


@dataclass
class HomogeneityReport:
    omega_ratio_error: float
    liouville_ratio: float
    liouville_error: float

    @property
    def max_error(self) -> float:
        return max(self.omega_ratio_error, self.liouville_error)


def homogeneity_report(chart: OrbitChart, t: float, samples: int = 50,
                       seed: int | None = 0) -> HomogeneityReport:
    if t == 0:
        raise ValueError("t must be nonzero")
    rng = np.random.default_rng(seed)
    x, gens = chart.base, chart.generators
    worst = 0.0
    for _ in range(samples):
        a, b = rng.normal(size=(2, len(gens)))
        X = sum(c * g for c, g in zip(a, gens))
        Y = sum(c * g for c, g in zip(b, gens))
        w1 = kks_value(x, X, Y, chart.killing)
        if abs(w1) < 1e-12:
            continue
        wt = kks_value(t * x, X, Y, chart.killing)
        worst = max(worst, abs(wt / w1 - t) / abs(t))
    d = chart.dim // 2
    pf1 = pfaffian(chart.omega_matrix())
    if abs(pf1) < 1e-12:
        raise ValueError("degenerate frame: omega vanishes on the chosen generators")
    ratio = pfaffian(chart.omega_matrix(t * x)) / pf1
    err = abs(ratio - t ** d) / abs(t ** d)
    return HomogeneityReport(worst, ratio, err)


def check_homogeneity(chart: OrbitChart, t: float, samples: int = 50, seed: int | None = 0) -> float:
    """Largest relative deviation of omega_{tx}/omega_x from t and of the
    Liouville ratio from t^d."""
    return homogeneity_report(chart, t, samples, seed).max_error


def divergence_bound_values(beta, ys, killing: Pairing = trace_form) -> np.ndarray:
    """e^{-<beta,y>} + e^{<beta,y>} for each y, with <beta,y> = kappa(beta, y)."""
    beta = _arr(beta)
    s = np.array([killing(beta, _arr(y)) for y in ys])
    with np.errstate(over="ignore"):
        return np.exp(-s) + np.exp(s)


def check_divergence_bound(beta, ys, killing: Pairing = trace_form) -> bool:
    vals = divergence_bound_values(beta, ys, killing)
    return bool(np.all(vals >= 2.0 - 4 * np.finfo(float).eps))


# the sl(2,R) nilpotent cone in closed form

def cone_point(p: float, r: float) -> np.ndarray:
    """(p, r) != 0 covers the cone through [[0,1],[0,0]] twice; |y|_F = p^2 + r^2."""
    return np.array([[-p * r, p * p], [-r * r, p * r]])


def _cone_jacobian(p, r):
    dp = np.array([[-r, 2 * p], [0.0, r]])
    dr = np.array([[-p, 0.0], [-2 * r, p]])
    return np.column_stack([dp.reshape(-1), dr.reshape(-1)])


_SL2_PAIR = (np.array([[1.0, 0.0], [0.0, -1.0]]), np.array([[0.0, 1.0], [1.0, 0.0]]))


def liouville_density(p: float, r: float, killing: Pairing = trace_form) -> float:
    """|omega(d/dp, d/dr)| at cone_point(p, r)."""
    y = cone_point(p, r)
    jac = _cone_jacobian(p, r)
    X, Y = _SL2_PAIR
    coords = [np.linalg.lstsq(jac, _bracket(Z, y).reshape(-1), rcond=None)[0] for Z in (X, Y)]
    det = np.linalg.det(np.column_stack(coords))
    return abs(kks_value(y, X, Y, killing) / det)


def truncated_cone_volume(radius: float, killing: Pairing = trace_form) -> float:
    """Liouville volume of {y in cone : |y|_F <= radius}, in polar coordinates
    on the (p, r) double cover."""
    def f(rho, theta):
        return liouville_density(rho * np.cos(theta), rho * np.sin(theta), killing) * rho

    val, _ = integrate.dblquad(f, 0.0, 2 * np.pi, 1e-9, np.sqrt(radius), epsabs=1e-10, epsrel=1e-8)
    return val / 2.0


def volume_scaling(radii: Sequence[float] = (1, 2, 4, 8), d: int = 1) -> dict[float, float]:
    """Relative deviation of vol(R)/vol(R_0) from (R/R_0)^d for each R."""
    base = radii[0]
    v0 = truncated_cone_volume(base)
    return {R: abs(truncated_cone_volume(R) / v0 - (R / base) ** d) / (R / base) ** d for R in radii}


__all__ = [
    "HomogeneityReport",
    "OrbitChart",
    "ad_matrix",
    "check_conical_flow",
    "check_divergence_bound",
    "check_homogeneity",
    "cone_point",
    "divergence_bound_values",
    "homogeneity_report",
    "kks_value",
    "liouville_density",
    "pfaffian",
    "trace_form",
    "truncated_cone_volume",
    "volume_scaling",
]
