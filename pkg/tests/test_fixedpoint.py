from functools import lru_cache

import numpy as np
import pytest
from conftest import beta_system, poly_system, reduced_system

from ncrg import fixedpoint as fp
from ncrg.frge import BetaSystem
from ncrg.goldens import (
    FUZZY02_POINT,
    FUZZY20_POINT,
    HERMITIAN1_POINT,
    REFERENCE_THETA,
    TWO_RELEVANT_COLUMN_THETA,
    TWO_RELEVANT_POINTS,
    TWO_RELEVANT_THETA,
    reference_points,
    seed_vector,
)

MARGINAL = 1e-4


@lru_cache(maxsize=None)
def scan(p, q, n_seeds=64, reference=True):
    ps = poly_system("fuzzy2d", p, q)
    extra = []
    if reference:
        red = reduced_system(p, q)
        extra = [seed_vector(x, ps.variables, red.dual_of) for x in reference_points("fuzzy2d", (p, q))]
    return tuple(fp.multistart_scan(ps, n_seeds, 0, extra_seeds=extra))


def solve_from(ps, point, dual_of=None):
    return fp.newton_solve(ps, seed_vector(point, ps.variables, dual_of))


def assert_matches(found: fp.FixedPoint, ref: dict, dual_of=None, tol=1e-3):
    partner = {rep: k for k, rep in (dual_of or {}).items()}
    assert found.eta == pytest.approx(ref["eta"], abs=tol)
    for k, v in found.couplings.items():
        assert v == pytest.approx(ref.get(k, ref.get(partner.get(k, ""), 0.0)), abs=tol), k


# Jacobian and basic structure


@pytest.mark.parametrize("model,p,q", [("hermitian1", 1, 0), ("fuzzy2d", 0, 2), ("fuzzy2d", 2, 0),
                                        ("fuzzy2d", 1, 1)])
def test_jacobian_against_central_differences(model, p, q):
    ps = poly_system(model, p, q)
    rng = np.random.default_rng(1)
    h = 1e-6
    for _ in range(100 if model == "hermitian1" else 25):
        g = rng.uniform(-0.05, 0.05, ps.n)
        jac = ps.jacobian(g)
        fd = np.empty_like(jac)
        for j in range(ps.n):
            e = np.zeros(ps.n)
            e[j] = h
            fd[:, j] = (ps.residual(g + e) - ps.residual(g - e)) / (2 * h)
        assert np.max(np.abs(jac - fd)) <= 1e-5 * max(1.0, np.max(np.abs(jac)))


@pytest.mark.parametrize("model,p,q", [("hermitian1", 1, 0), ("fuzzy2d", 0, 2), ("fuzzy2d", 2, 0),
                                        ("fuzzy2d", 1, 1)])
def test_gaussian_point(model, p, q):
    ps = poly_system(model, p, q, duality=False)
    assert np.max(np.abs(ps.residual(np.zeros(ps.n)))) == 0.0
    system = beta_system(model, p, q)
    rep = fp.stability(ps, fp.FixedPoint({k: 0.0 for k in ps.variables}, 0.0, 0.0))
    assert sorted(rep.theta.real) == pytest.approx(sorted(fp.gaussian_theta(system).values()))


def test_seed_shape_rejected():
    ps = poly_system("hermitian1")
    with pytest.raises(fp.SolverError):
        fp.newton_solve(ps, np.zeros(ps.n + 1))
    with pytest.raises(fp.SolverError):
        fp.newton_solve(ps, np.full(ps.n, np.nan))


def test_sobol_seeds_in_box():
    s = fp.sobol_seeds(5, 32, 3, box=0.5)
    assert s.shape == (32, 5)
    assert np.all(np.abs(s) <= 0.5)
    np.testing.assert_array_equal(s, fp.sobol_seeds(5, 32, 3, box=0.5))


def test_dedup():
    a = fp.FixedPoint({"x": 1.0}, 0.0, 0.0)
    b = fp.FixedPoint({"x": 1.0 + 1e-8}, 0.0, 0.0)
    c = fp.FixedPoint({"x": 1.1}, 0.0, 0.0)
    assert len(fp.dedup([a, b, c], ["x"])) == 2


# reported points


def test_hermitian1_from_perturbed_seed():
    ps = poly_system("hermitian1")
    rng = np.random.default_rng(0)
    for _ in range(10):
        seed = {k: v * rng.uniform(0.9, 1.1) for k, v in HERMITIAN1_POINT.items()}
        found = solve_from(ps, seed)
        assert found.residual <= 1e-10
        assert_matches(found, HERMITIAN1_POINT)


def test_fuzzy02_point():
    ps = poly_system("fuzzy2d", 0, 2)
    found = solve_from(ps, FUZZY02_POINT)
    assert_matches(found, FUZZY02_POINT)
    rep = fp.stability(ps, found)
    assert rep.relevant == 1
    assert rep.sorted_theta()[0] == pytest.approx(REFERENCE_THETA, abs=1e-3)


def test_fuzzy20_point():
    ps, red = poly_system("fuzzy2d", 2, 0), reduced_system(2, 0)
    found = solve_from(ps, FUZZY20_POINT, red.dual_of)
    assert_matches(found, FUZZY20_POINT, red.dual_of)
    a4 = found.couplings["a4"]
    assert a4 / (-1 / (4 * np.pi)) == pytest.approx(1.00179, abs=2e-3)
    assert found.couplings["c22"] == pytest.approx(-0.03986, abs=1e-4)
    assert fp.stability(ps, found).sorted_theta()[0] == pytest.approx(REFERENCE_THETA, abs=1e-3)


def test_fuzzy20_point_solves_unreduced_system():
    ps, red = poly_system("fuzzy2d", 2, 0), reduced_system(2, 0)
    found = solve_from(ps, FUZZY20_POINT, red.dual_of)
    full = poly_system("fuzzy2d", 2, 0, duality=False)
    vals = {**found.couplings, **{k: found.couplings[r] for k, r in red.dual_of.items() if k in full.variables}}
    g = np.array([vals[v] for v in full.variables])
    assert np.max(np.abs(full.residual(g))) <= 1e-9
    assert full.eta_of(g) == pytest.approx(found.eta, abs=1e-12)


@pytest.mark.parametrize("pq,col", [(pq, c) for pq in [(0, 2), (2, 0)] for c in range(len(TWO_RELEVANT_POINTS[pq]))])
def test_two_relevant_seeds(pq, col):
    ps, red = poly_system("fuzzy2d", *pq), reduced_system(*pq)
    found = solve_from(ps, TWO_RELEVANT_POINTS[pq][col], red.dual_of)
    assert found.residual <= 1e-10
    rep = fp.stability(ps, found)
    th = rep.sorted_theta()
    assert rep.relevant == 2
    assert th[:2] == pytest.approx(TWO_RELEVANT_COLUMN_THETA[pq][col], abs=1e-2)
    if col < 2:
        assert th[:2] == pytest.approx(TWO_RELEVANT_THETA, abs=1e-2)


# scans and classification


def test_seeded_run_has_unique_relevant_survivor():
    ps = poly_system("fuzzy2d", 0, 2)
    survivors = fp.classify(ps, scan(0, 2, 1), fp.Criteria(relevant=1))
    assert len(survivors) == 1
    point, rep = survivors[0]
    assert_matches(point, FUZZY02_POINT)
    assert rep.sorted_theta()[0] == pytest.approx(REFERENCE_THETA, abs=1e-3)


@pytest.mark.parametrize("pq", [(0, 2), (2, 0)])
def test_marginal_family_is_filtered(pq):
    ps = poly_system("fuzzy2d", *pq)
    points = scan(*pq)
    loose = fp.classify(ps, points, fp.Criteria(relevant=1))
    marginal = [(p, r) for p, r in loose if np.min(np.abs(r.theta)) < MARGINAL]
    assert marginal
    assert all(p.eta == pytest.approx(-0.3407, abs=1e-3) for p, _ in marginal)
    strict = fp.classify(ps, points, fp.Criteria(relevant=1, marginal_tol=MARGINAL))
    assert len(strict) == 1
    assert strict[0][1].sorted_theta()[0] == pytest.approx(REFERENCE_THETA, abs=1e-3)


def test_scan_is_deterministic():
    ps = poly_system("fuzzy2d", 0, 2)
    a = fp.multistart_scan(ps, 16, 5)
    b = fp.multistart_scan(ps, 16, 5)
    assert [p.to_json() for p in a] == [p.to_json() for p in b]


def test_scan_rejects_no_seeds():
    with pytest.raises(ValueError):
        fp.multistart_scan(poly_system("hermitian1"), 0)


def test_classification_exclusions():
    ps = poly_system("fuzzy2d", 0, 2)
    points = scan(0, 2)
    kept = {id(p) for p, _ in fp.classify(ps, points)}
    for p in points:
        g = p.vector(ps.variables)
        if not np.any(np.abs(g) > 1e-9):
            assert id(p) not in kept  # Gaussian
        elif all(abs(p.couplings[k]) <= 1e-9 for k in ps.connected):
            assert id(p) not in kept  # only disconnected couplings
        elif not fp.stability(ps, p).all_real:
            assert id(p) not in kept
    kinds = [fp.stability(ps, p).all_real for p in points]
    assert not all(kinds)
    assert any(all(abs(p.couplings[k]) <= 1e-9 for k in ps.connected) and np.any(p.vector(ps.variables))
               for p in points)


def test_box_criterion():
    ps = poly_system("fuzzy2d", 0, 2)
    found = solve_from(ps, FUZZY02_POINT)
    assert fp.classify(ps, [found], fp.Criteria(box=0.01)) == []
    assert len(fp.classify(ps, [found], fp.Criteria(box=1.0))) == 1


def test_eigenvalues_invariant_under_coupling_order():
    red = reduced_system(0, 2)
    ps = poly_system("fuzzy2d", 0, 2)
    found = solve_from(ps, FUZZY02_POINT)
    order = list(np.random.default_rng(4).permutation(red.couplings))
    perm = fp.PolySystem.compile(BetaSystem(red.name, red.signature, order, red.eta, red.betas, red.scales,
                                            red.dual_of))
    pt = fp.FixedPoint(found.couplings, found.eta, found.residual)
    a, b = fp.stability(ps, pt).sorted_theta(), fp.stability(perm, pt).sorted_theta()
    np.testing.assert_allclose(np.array(a, dtype=complex), np.array(b, dtype=complex), atol=1e-10)


def test_stability_backward_error_small():
    ps = poly_system("fuzzy2d", 0, 2)
    rep = fp.stability(ps, solve_from(ps, FUZZY02_POINT))
    assert rep.backward_error <= 1e-12
    assert rep.all_real


def test_eta_free_stability_differs():
    ps = poly_system("fuzzy2d", 0, 2)
    found = solve_from(ps, FUZZY02_POINT)
    fixed = fp.stability(ps, found, eta_fixed=True).sorted_theta()[0]
    free = fp.stability(ps, found, eta_fixed=False).sorted_theta()[0]
    assert fixed == pytest.approx(0.274913, abs=1e-6)
    assert abs(free - fixed) > 1e-3


def test_point_json_roundtrip():
    p = fp.FixedPoint({"a": 1.0}, -0.1, 1e-12, 3)
    assert p.to_json() == {"couplings": {"a": 1.0}, "eta": -0.1, "residual": 1e-12, "seed": 3}
    assert fp.is_finite_point(p)
    assert not fp.is_finite_point(fp.FixedPoint({"a": float("nan")}, 0.0, 0.0))
