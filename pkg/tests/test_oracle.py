import numpy as np
import pytest

from aafre import DomainError, FitError, SizeError, feasibility, solve, tnorm_residual
from aafre.oracle import (
    GeneratorConfig,
    brute_force_solve,
    direct_membership,
    fit_lambda,
    generate_feasible,
    greatest_solution,
    preimage,
)
from aafre.tnorm import tnorm_eval

from conftest import generated_instances

EXAMPLE1_TRIPLES = [(0.8606, 0.4505, 0.4513), (0.9200, 0.5723, 0.5726), (0.8505, 0.5325, 0.5344)]


class TestGenerator:
    def test_one_by_one(self):
        inst = generate_feasible(GeneratorConfig(1, 1, density=1.0, lam=2.0, seed=3))
        assert feasibility(inst)[0]
        a = inst.A[0, 0]
        assert 0.0 <= inst.b[0] <= a

    def test_unit_witness(self):
        inst = generate_feasible(GeneratorConfig(3, 4, lam=2.0, seed=1), witness=np.ones(4))
        np.testing.assert_array_equal(inst.b, inst.A.max(axis=1))

    def test_deterministic(self):
        cfg = GeneratorConfig(4, 5, density=0.6, lam=1.7, seed=42)
        a, b = generate_feasible(cfg), generate_feasible(cfg)
        np.testing.assert_array_equal(a.A, b.A)
        np.testing.assert_array_equal(a.b, b.b)
        np.testing.assert_array_equal(a.c, b.c)

    def test_bounds(self):
        with pytest.raises(DomainError):
            GeneratorConfig(7, 3)
        with pytest.raises(DomainError):
            GeneratorConfig(2, 3, density=0.0)

    def test_always_feasible(self):
        for inst in generated_instances(100, seed=3):
            assert feasibility(inst)[0]


class TestPrimitives:
    def test_preimage_matches_closed_form(self):
        for a, b, lam in [(0.8, 0.5, 2.0), (0.95, 0.1, 0.5), (0.6, 0.59, 7.0)]:
            assert preimage(a, b, lam) == pytest.approx(tnorm_residual(a, b, lam), abs=1e-12)

    def test_preimage_edges(self):
        assert preimage(0.3, 0.5, 2.0) == 1.0
        assert preimage(0.5, 0.5, 2.0) == 1.0
        assert preimage(0.5, 0.0, 2.0) == 0.0

    def test_greatest_solution_matches(self, example1):
        np.testing.assert_allclose(greatest_solution(example1), feasibility(example1)[1],
                                   atol=1e-12)

    def test_direct_membership(self, example1):
        assert direct_membership(example1, feasibility(example1)[1])[0]


class TestBruteForce:
    def test_example1(self, example1):
        oracle = brute_force_solve(example1)
        r = solve(example1)
        assert oracle.feasible and oracle.selections == 2400
        assert oracle.z_star == pytest.approx(r.z_star, abs=1e-9)
        np.testing.assert_allclose(oracle.x_star, r.x_star, atol=1e-9)

    def test_infeasible(self):
        from aafre import Instance
        feasible, x, z = brute_force_solve(Instance([[0.2]], [0.9], [1.0], lam=2))
        assert not feasible and x is None and z is None

    def test_single_interval(self):
        from aafre import Instance
        inst = Instance([[0.1, 0.8, 0.2]], [0.5], [2.0, 1.0, -3.0], lam=2.0)
        feasible, x, z = brute_force_solve(inst)
        r = tnorm_residual(0.8, 0.5, 2.0)
        # only column 2 can reach b; x_2 = r; the others go to 0 or to their bound 1
        np.testing.assert_allclose(x, [0.0, r, 1.0], atol=1e-12)
        assert z == pytest.approx(r - 3.0, abs=1e-12)

    def test_size_limit(self, example1):
        with pytest.raises(SizeError):
            brute_force_solve(example1, limit=1000)


class TestFitLambda:
    def test_example1(self):
        assert 2.95 <= fit_lambda(EXAMPLE1_TRIPLES) <= 3.05

    def test_self_consistent(self):
        triples = [(a, b, tnorm_residual(a, b, 1.0)) for a, b in [(0.9, 0.3), (0.7, 0.5), (0.4, 0.1)]]
        assert fit_lambda(triples) == pytest.approx(1.0, abs=1e-4)

    def test_degenerate(self):
        with pytest.raises(FitError):
            fit_lambda([(0.6, 0.6, 1.0)])

    def test_inconsistent(self):
        with pytest.raises(FitError):
            fit_lambda([(0.9, 0.5, 0.1), (0.9, 0.5, 0.9)])

    def test_fitted_exponent_reproduces_kernel(self):
        lam = fit_lambda(EXAMPLE1_TRIPLES)
        assert tnorm_eval(0.8606, 0.4513, lam) == pytest.approx(0.4505, abs=1e-4)
