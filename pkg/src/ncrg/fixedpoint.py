"""Numeric fixed points of β-systems and their critical exponents.

A :class:`BetaSystem` is compiled to floating-point polynomials in the
couplings and ``eta`` with ``h_k`` replaced by their closed forms.  ``η`` is
eliminated by solving its defining equation at every evaluation, so the
unknowns are the couplings only.  Systems with two anomalous-dimension
equations (signatures without duality) keep the second one as an extra
residual ``η_b(g, η) − η``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import qmc

from .frge import ETA_SYMBOL, BetaSystem, h_symbol
from .regulator import ORDERS, h_eta_coefficients

RESIDUAL_TOL = 1e-10
DEDUP_TOL = 1e-6
ETA_TOL = 1e-13
MAX_HALVINGS = 30
MAX_ITER = 100


class SolverError(RuntimeError):
    pass


class _Compiled:
    """Polynomials ``Σ c x^e`` over a fixed variable list, stored term-wise."""

    def __init__(self, polys: list, variables: list):
        index = {v: i for i, v in enumerate(variables)}
        rows, coefs, exps = [], [], []
        for r, p in enumerate(polys):
            for m, c in p.terms.items():
                e = np.zeros(len(variables), dtype=np.int64)
                for s, k in m:
                    if s not in index:
                        raise ValueError(f"unknown symbol {s!r}")
                    if k < 0:
                        raise ValueError(f"negative power of {s!r}")
                    e[index[s]] = k
                rows.append(r)
                coefs.append(float(c))
                exps.append(e)
        self.n_out = len(polys)
        self.n_var = len(variables)
        self.rows = np.array(rows, dtype=np.int64)
        self.coefs = np.array(coefs, dtype=float)
        self.exps = np.array(exps, dtype=np.int64).reshape(len(coefs), len(variables))
        # per-variable derivative data (terms with positive exponent only)
        self._deriv = []
        for j in range(self.n_var):
            sel = np.nonzero(self.exps[:, j] > 0)[0]
            e = self.exps[sel].copy()
            c = self.coefs[sel] * e[:, j]
            e[:, j] -= 1
            self._deriv.append((self.rows[sel], c, e))

    @staticmethod
    def _mono(x: np.ndarray, e: np.ndarray) -> np.ndarray:
        return np.prod(x[None, :] ** e, axis=1) if len(e) else np.zeros(0)

    def value(self, x: np.ndarray) -> np.ndarray:
        v = self.coefs * self._mono(x, self.exps)
        return np.bincount(self.rows, weights=v, minlength=self.n_out)

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        out = np.zeros((self.n_out, self.n_var))
        for j, (rows, c, e) in enumerate(self._deriv):
            if len(c):
                out[:, j] = np.bincount(rows, weights=c * self._mono(x, e), minlength=self.n_out)
        return out


@dataclass
class PolySystem:
    """Residuals ``β_I(g, η(g))`` with ``η`` eliminated.

    The stability matrix is ``∂β_I/∂g_J`` at fixed ``η = η*`` by default;
    ``eta_fixed=False`` includes ``dη/dg``.
    """

    name: str
    variables: list
    betas: _Compiled
    eta_eqs: _Compiled
    n_eta: int
    connected: set = field(default_factory=set)

    # layout of the compiled variable vector: couplings, eta, h1..h3
    @classmethod
    def compile(cls, system: BetaSystem) -> "PolySystem":
        variables = list(system.couplings)
        full = variables + [ETA_SYMBOL] + [h_symbol(k) for k in ORDERS]
        betas = _Compiled([system.betas[k] for k in variables], full)
        eta_names = sorted(system.eta)
        eta_eqs = _Compiled([system.eta[k] for k in eta_names], full)
        connected = {k for k in variables if "_" not in k}
        return cls(system.name, variables, betas, eta_eqs, len(eta_names), connected)

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def n_residuals(self) -> int:
        return self.n + self.n_eta - 1

    def _full(self, g: np.ndarray, eta: float) -> np.ndarray:
        h = [c0 + c1 * eta for c0, c1 in map(h_eta_coefficients, ORDERS)]
        return np.concatenate([g, [eta], h])

    def _chain(self, jac: np.ndarray) -> np.ndarray:
        """Fold ``∂/∂h_k`` into ``∂/∂η``; returns columns ``[g..., η]``."""
        out = jac[:, :self.n + 1].copy()
        for i, k in enumerate(ORDERS):
            out[:, self.n] += jac[:, self.n + 1 + i] * h_eta_coefficients(k)[1]
        return out

    def eta_of(self, g: np.ndarray, eta0: float = 0.0) -> float:
        """Solve ``η = E(g, η)`` of the first η-equation by scalar Newton."""
        eta = eta0
        for _ in range(50):
            x = self._full(g, eta)
            f = self.eta_eqs.value(x)[0] - eta
            df = self._chain(self.eta_eqs.jacobian(x))[0, self.n] - 1.0
            if df == 0:
                raise SolverError("η-equation degenerate")
            step = f / df
            eta -= step
            if abs(step) <= ETA_TOL * max(1.0, abs(eta)):
                return eta
        raise SolverError("η inner solve did not converge")

    def residual(self, g) -> np.ndarray:
        g = np.asarray(g, dtype=float)
        eta = self.eta_of(g)
        x = self._full(g, eta)
        r = self.betas.value(x)
        if self.n_eta > 1:
            r = np.concatenate([r, self.eta_eqs.value(x)[1:] - eta])
        return r

    def partials(self, g, eta: float | None = None):
        """``(∂R/∂g, ∂R/∂η, ∂E/∂g, ∂E/∂η)`` at fixed ``η``."""
        g = np.asarray(g, dtype=float)
        eta = self.eta_of(g) if eta is None else eta
        x = self._full(g, eta)
        jb = self._chain(self.betas.jacobian(x))
        je = self._chain(self.eta_eqs.jacobian(x))
        jr = jb
        if self.n_eta > 1:
            extra = je[1:].copy()
            extra[:, self.n] -= 1.0
            jr = np.vstack([jb, extra])
        return jr[:, :self.n], jr[:, self.n], je[0, :self.n], je[0, self.n]

    def jacobian(self, g) -> np.ndarray:
        """Total derivative of :meth:`residual` including ``dη/dg``."""
        rg, reta, eg, eeta = self.partials(g)
        deta = eg / (1.0 - eeta)
        return rg + np.outer(reta, deta)

    def stability_matrix(self, g, eta_fixed: bool = True) -> np.ndarray:
        """``∂β_I/∂g_J`` at the point (rows restricted to the β's)."""
        if eta_fixed:
            m = self.partials(g)[0]
        else:
            m = self.jacobian(g)
        return m[:self.n]


@dataclass
class FixedPoint:
    couplings: dict
    eta: float
    residual: float
    seed: int | None = None

    def vector(self, variables: list) -> np.ndarray:
        return np.array([self.couplings[v] for v in variables])

    def to_json(self) -> dict:
        return {"couplings": dict(self.couplings), "eta": self.eta,
                "residual": self.residual, "seed": self.seed}


def newton_solve(system: PolySystem, seed, tol: float = RESIDUAL_TOL,
                 max_iter: int = MAX_ITER, seed_index: int | None = None) -> FixedPoint:
    """Damped Newton with backtracking on ``‖R‖₂``; raises :class:`SolverError`."""
    g = np.array(seed, dtype=float)
    if g.shape != (system.n,) or not np.all(np.isfinite(g)):
        raise SolverError("seed must be a finite vector of the right length")
    r = system.residual(g)
    norm = np.linalg.norm(r)
    for _ in range(max_iter):
        if np.max(np.abs(r)) <= tol:
            break
        jac = system.jacobian(g)
        if not np.all(np.isfinite(jac)):
            raise SolverError("non-finite Jacobian")
        if jac.shape[0] == jac.shape[1]:
            try:
                step = np.linalg.solve(jac, r)
            except np.linalg.LinAlgError as exc:
                raise SolverError(f"singular Jacobian: {exc}") from None
        else:
            step, *_ = np.linalg.lstsq(jac, r, rcond=None)
        t = 1.0
        for _ in range(MAX_HALVINGS + 1):
            trial = g - t * step
            try:
                rt = system.residual(trial)
            except SolverError:
                rt = None
            if rt is not None and np.all(np.isfinite(rt)) and np.linalg.norm(rt) < norm:
                break
            t *= 0.5
        else:
            raise SolverError("line search failed")
        g, r, norm = trial, rt, np.linalg.norm(rt)
    res = float(np.max(np.abs(r)))
    if not res <= tol:
        raise SolverError(f"no convergence (residual {res:.3e})")
    return FixedPoint(dict(zip(system.variables, g.tolist())), system.eta_of(g), res, seed_index)


def sobol_seeds(dim: int, n: int, rng_seed: int = 0, box: float = 1.0) -> np.ndarray:
    sampler = qmc.Sobol(dim, scramble=True, seed=rng_seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # non-power-of-two sample sizes
        pts = sampler.random(n)
    return box * (2 * pts - 1)


def dedup(points: list, variables: list, tol: float = DEDUP_TOL) -> list:
    out = []
    for p in points:
        v = p.vector(variables)
        if all(np.max(np.abs(v - q.vector(variables))) > tol or abs(p.eta - q.eta) > tol
               for q in out):
            out.append(p)
    return out


def multistart_scan(system: PolySystem, n_seeds: int, rng_seed: int = 0, box: float = 1.0,
                    extra_seeds=(), tol: float = RESIDUAL_TOL) -> list:
    """Newton from the Gaussian point, ``extra_seeds`` and Sobol points in the box."""
    if n_seeds < 1:
        raise ValueError("n_seeds must be at least 1")
    seeds = [np.zeros(system.n)] + [np.asarray(s, dtype=float) for s in extra_seeds]
    seeds += list(sobol_seeds(system.n, n_seeds, rng_seed, box))
    found = []
    with np.errstate(all="ignore"):
        for i, s in enumerate(seeds):
            try:
                found.append(newton_solve(system, s, tol, seed_index=i))
            except SolverError:
                continue
    return dedup(found, system.variables)


@dataclass
class StabilityReport:
    matrix: np.ndarray
    eigenvalues: np.ndarray
    backward_error: float

    @property
    def theta(self) -> np.ndarray:
        return -self.eigenvalues

    @property
    def relevant(self) -> int:
        return int(np.sum(self.theta.real > 0))

    @property
    def all_real(self) -> bool:
        ev = self.eigenvalues
        return bool(np.all(np.abs(ev.imag) <= 1e-8 * np.maximum(1.0, np.abs(ev))))

    def sorted_theta(self) -> list:
        th = self.theta
        th = th[np.lexsort((-th.imag, -th.real))]
        return [complex(t) if abs(t.imag) > 1e-12 else float(t.real) for t in th]


def stability(system: PolySystem, point: FixedPoint, eta_fixed: bool = True) -> StabilityReport:
    """Eigen-decomposition of the stability matrix (LAPACK ``geev``)."""
    m = system.stability_matrix(point.vector(system.variables), eta_fixed)
    try:
        ev, vecs = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"eigenvalue solver failed: {exc}") from None
    scale = max(np.linalg.norm(m, 2), 1e-300)
    err = float(np.linalg.norm(m @ vecs - vecs * ev, 2) / (scale * max(np.linalg.norm(vecs, 2), 1e-300)))
    return StabilityReport(m, ev, err)


@dataclass
class Criteria:
    exclude_gaussian: bool = True
    require_connected: bool = True
    require_real: bool = True
    box: float | None = 1.0
    relevant: int | None = None
    zero_tol: float = 1e-9
    # exclude points with some |θ| below this (non-isolated solution families)
    marginal_tol: float | None = None


def classify(system: PolySystem, points: list, criteria: Criteria | None = None,
             eta_fixed: bool = True) -> list:
    """``[(point, report)]`` for the points passing ``criteria``."""
    c = criteria or Criteria()
    out = []
    for p in points:
        g = p.vector(system.variables)
        nonzero = np.abs(g) > c.zero_tol
        if c.exclude_gaussian and not nonzero.any():
            continue
        if c.require_connected and not any(nonzero[i] for i, v in enumerate(system.variables)
                                           if v in system.connected):
            continue
        if c.box is not None and np.max(np.abs(g), initial=0.0) > c.box:
            continue
        rep = stability(system, p, eta_fixed)
        if c.require_real and not rep.all_real:
            continue
        if c.marginal_tol is not None and np.min(np.abs(rep.theta)) < c.marginal_tol:
            continue
        if c.relevant is not None and rep.relevant != c.relevant:
            continue
        out.append((p, rep))
    return out


def gaussian_theta(system: BetaSystem) -> dict:
    """Critical exponents at ``g = 0``: minus the canonical scaling ``b_I``."""
    return {k: -system.scales[k][1] for k in system.couplings}


def is_finite_point(p: FixedPoint) -> bool:
    return all(math.isfinite(v) for v in p.couplings.values()) and math.isfinite(p.eta)
