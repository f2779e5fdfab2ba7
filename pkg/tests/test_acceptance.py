"""Exit criteria, one test each; a PASS/FAIL line per criterion is printed in
the terminal summary."""

import time

import numpy as np
import pytest

from aafre import (
    Instance,
    candidate,
    enumerate_selections,
    feasibility,
    feasible_candidates,
    global_max,
    index_sets,
    membership,
    minimize_z1,
    solve,
    tnorm_eval,
    tnorm_residual,
)
from aafre.oracle import brute_force_solve, direct_membership, fit_lambda
from aafre.resolution import count_selections

from conftest import (
    ACCEPTANCE_LINES,
    EXAMPLE1_A,
    EXAMPLE1_B,
    EXAMPLE1_C,
    EXAMPLE1_XBAR,
    generated_instances,
)

EXAMPLE1_TRIPLES = [(0.8606, 0.4505, 0.4513), (0.9200, 0.5723, 0.5726), (0.8505, 0.5325, 0.5344)]
SAMPLES = 1000


def record(number, title, checks):
    failed = [name for name, ok in checks.items() if not ok]
    status = "PASS" if not failed else "FAIL"
    detail = "" if not failed else f"  (failed: {', '.join(failed)})"
    ACCEPTANCE_LINES.append(f"[{number:2d}] {status} {title}{detail}")
    assert not failed, failed


def per_sample(fn, *args):
    """Apply a kernel function elementwise with a per-sample exponent (last arg)."""
    return np.array([fn(*vals) for vals in zip(*args)])


def best_time(fn, repeat=50):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


@pytest.fixture(scope="module")
def lam():
    return fit_lambda(EXAMPLE1_TRIPLES)


@pytest.fixture(scope="module")
def inst(lam):
    return Instance(EXAMPLE1_A, EXAMPLE1_B, EXAMPLE1_C, lam)


@pytest.fixture(scope="module")
def oracle_instances():
    out = [inst for inst in generated_instances(220, seed=2024, max_m=4, max_n=5,
                                                lam_range=(0.3, 8.0))
           if count_selections(inst) <= 10**4]
    assert len(out) >= 200
    return out


def test_01_index_sets(inst):
    published = [{1, 5}, {1, 4, 5, 8}, {4, 5, 6, 7, 8}, {1, 2, 3}, {1, 4, 5, 6}, {1, 2, 4, 6, 8}]
    J = index_sets(inst)
    record(1, "Example 1 index sets", {
        "exact match": [set(j + 1 for j in Ji) for Ji in J] == published,
        "runtime < 1 ms": best_time(lambda: index_sets(inst)) < 1e-3,
    })


def test_02_maximum_solution(inst, lam):
    Xbar = global_max(inst)
    record(2, "Example 1 maximum solution", {
        "fitted lambda in [2.95, 3.05]": 2.95 <= lam <= 3.05,
        "Xbar within 1e-3": np.max(np.abs(Xbar - EXAMPLE1_XBAR)) <= 1e-3,
        "runtime < 1 ms": best_time(lambda: global_max(inst)) < 1e-3,
    })


def test_03_feasibility(inst):
    loose = inst.replace(tol=1e-6)
    ok, Xbar = feasibility(loose)
    record(3, "Example 1 feasibility", {
        "membership(Xbar) at tol 1e-6": membership(loose, Xbar),
        "feasibility verdict": ok,
    })


def test_04_enumeration(inst):
    reduced = list(enumerate_selections(inst))
    full = list(enumerate_selections(inst, reduce=False))
    P = np.array([candidate(inst, e) for e in reduced])
    Q = np.array([candidate(inst, e) for e in full])

    def covered(X, Y):
        return all(np.any(np.all(np.abs(Y - x) <= 1e-9, axis=1)) for x in X)

    record(4, "Example 1 enumeration", {
        "|E| = 2400": count_selections(inst) == 2400 and len(full) == 2400,
        "reduced count < 2400": len(reduced) < 2400,
        "same point sets": covered(P, Q) and covered(Q, P),
    })


def test_05_optimum(inst):
    start = time.perf_counter()
    r = solve(inst)
    elapsed = time.perf_counter() - start
    record(5, "Example 1 optimum", {
        "e* = [1,1,7,1,1,1]": tuple(j + 1 for j in r.e_star) == (1, 1, 7, 1, 1, 1),
        "x* within 1e-3": np.max(np.abs(r.x_star - [1, 0, 0, 0, 0.1347, 0, 0.6413, 0.4729])) <= 1e-3,
        "z* within 5e-3": abs(r.z_star - (-12.4057)) <= 5e-3,
        "runtime < 1 s": elapsed < 1.0,
    })


def test_06_kernel_properties():
    rng = np.random.default_rng(6)
    a, x, y = rng.uniform(0.0, 1.0, (3, SAMPLES))
    lams = rng.uniform(0.2, 20.0, SAMPLES)
    a[:20], x[20:40] = 0.0, 1.0
    T = per_sample(tnorm_eval, a, x, lams)
    lo, hi = np.minimum(a, y), np.maximum(a, y)
    p, q, r = rng.uniform(0.01, 0.99, (3, SAMPLES))
    pq = per_sample(tnorm_eval, p, q, lams)
    qr = per_sample(tnorm_eval, q, r, lams)
    assoc = np.abs(per_sample(tnorm_eval, pq, r, lams) - per_sample(tnorm_eval, p, qr, lams))
    u, v = rng.uniform(0.1, 0.9, (2, SAMPLES))
    record(6, "kernel properties", {
        "commutativity": np.array_equal(T, per_sample(tnorm_eval, x, a, lams)),
        "neutral element": np.array_equal(per_sample(tnorm_eval, a, np.ones(SAMPLES), lams), a),
        "annihilator": np.all(per_sample(tnorm_eval, a, np.zeros(SAMPLES), lams) == 0.0),
        "bounded by min": np.all(T <= np.minimum(a, x)) and np.all(T >= 0.0),
        "monotone": np.all(per_sample(tnorm_eval, lo, x, lams)
                           <= per_sample(tnorm_eval, hi, x, lams)),
        "associative <= 1e-12": np.max(assoc) <= 1e-12,
        "lambda=1 product <= 1e-12": np.max(np.abs(tnorm_eval(u, v, 1.0) - u * v)) <= 1e-12,
        "lambda=200 minimum <= 1e-2": np.max(np.abs(tnorm_eval(u, v, 200.0) - np.minimum(u, v))) <= 1e-2,
    })


def test_07_residual_inversion():
    rng = np.random.default_rng(7)
    a = rng.uniform(0.0, 1.0, SAMPLES)
    b = a * rng.uniform(0.0, 1.0, SAMPLES)
    lams = rng.uniform(0.2, 20.0, SAMPLES)
    ok = b > 0.0
    a, b, lams = a[ok], b[ok], lams[ok]
    x = per_sample(tnorm_residual, a, b, lams)
    err = np.abs(per_sample(tnorm_eval, a, x, lams) - b)

    sa = 10 ** rng.uniform(-6, -3, SAMPLES)
    sb = np.maximum(10 ** rng.uniform(-6, -3, SAMPLES), 1e-6)
    sa, sb = np.maximum(sa, sb), np.minimum(sa, sb)
    slams = rng.uniform(10.0, 20.0, SAMPLES)
    sx = per_sample(tnorm_residual, sa, sb, slams)
    stress = np.abs(per_sample(tnorm_eval, sa, sx, slams) - sb)
    record(7, "residual inversion", {
        f"general ({len(a)} triples) <= 1e-9": np.max(err) <= 1e-9,
        f"stress ({SAMPLES} triples) <= 1e-9": np.max(stress) <= 1e-9,
    })


def test_08_oracle_equivalence(oracle_instances):
    start = time.perf_counter()
    agree = kept_ok = covered = certified = True
    for k, inst in enumerate(oracle_instances):
        r = solve(inst)
        oracle = brute_force_solve(inst, n_samples=32, seed=k)
        agree &= r.feasible == oracle.feasible
        agree &= abs(r.z_star - oracle.z_star) <= 1e-9
        report = feasible_candidates(inst)
        kept_ok &= bool(np.all(direct_membership(inst, feasible_candidates(inst, minimal=False).kept_points)))
        minimal = report.kept_points
        for x in oracle.samples:
            covered &= bool(np.any(np.all(minimal <= x + inst.tol, axis=1)))
        certified &= bool(np.all(oracle.samples @ inst.c >= r.z_star - 1e-9))
    elapsed = time.perf_counter() - start
    record(8, f"oracle equivalence over {len(oracle_instances)} instances", {
        "feasibility and z* agree to 1e-9": agree,
        "kept candidates pass direct membership": kept_ok,
        "sampled solutions dominate a minimal candidate": covered,
        "c.x* <= c.x on samples": certified,
        "runtime < 60 s": elapsed < 60.0,
    })


def test_09_first_feasibility_condition(oracle_instances):
    rng = np.random.default_rng(9)
    forward = all(feasibility(inst)[0] for inst in oracle_instances)
    mutants = 0
    backward = True
    for inst in oracle_instances[:150]:
        b = inst.b.copy()
        i = rng.integers(inst.m)
        row_max = inst.A[i].max()
        if row_max >= 1.0:
            continue
        b[i] = rng.uniform(row_max, 1.0)
        if b[i] <= row_max:
            continue
        mutant = inst.replace(b=b)
        mutants += 1
        report = feasible_candidates(mutant)
        backward &= not report.feasible and i in report.empty_equations
        backward &= not solve(mutant).feasible
    record(9, "feasibility iff Xbar solves", {
        "generated instances feasible": forward,
        ">= 100 inflated mutants": mutants >= 100,
        "mutants infeasible via empty index set": backward,
    })


def test_10_pruned_matches_exhaustive(oracle_instances):
    same = True
    for inst in oracle_instances:
        report = feasible_candidates(inst, minimal=False)
        e1, _, z1, _ = minimize_z1(inst, report)
        e2, _, z2, _ = minimize_z1(inst, report, prune=True)
        same &= e1 == e2 and z1 == z2
    record(10, "pruned and exhaustive Z1 modes agree", {"identical (e*, Z1)": same})
