"""Smoke tests for the python module: a thin pass over the main operations."""

import json
import math

import _probkit as pk


def test_distribution_basics():
    bern = pk.Distribution.bernoulli(0.3)
    assert abs(bern.cdf(0.0) - 0.3) < 1e-15
    assert abs(bern.jump(1.0) - 0.7) < 1e-15
    assert bern.support_and_mass() == [(0.0, 0.3), (1.0, 0.7)]

    exp1 = pk.Distribution.exponential1()
    assert abs(exp1.median() - math.log(2.0)) < 1e-9
    assert abs(exp1.prob_interval(pk.Bracket.OPEN, 0.0, float("inf")) - 1.0) < 1e-12


def test_distribution_from_json_spec():
    spec = {"family": "binomial", "n": 10, "p": 0.3}
    law = pk.Distribution.from_json(json.dumps(spec))
    assert abs(pk.expect_closed_form(law) - 3.0) < 1e-12
    assert json.loads(law.to_json())["family"] == "binomial"


def test_interval_algebra():
    b = pk.IntervalUnion.from_json('[[0, 1], [1, 2]]')
    assert json.loads(b.to_json()) == [[0.0, 2.0]]
    assert pk.lebesgue_length(b) == 2.0
    comp = pk.complement(b)
    assert comp.contains(5.0) and not comp.contains(1.5)
    assert abs(pk.length_under(pk.Distribution.normal01(),
                               pk.IntervalUnion.from_json('[["-inf", 0]]')) - 0.5) < 1e-12


def test_integrate_paths():
    # polynomial against identity length: closed form
    r = pk.integrate([0.0, 1.0], None, 0.0, 1.0)
    assert r["converged"] and abs(r["value"] - 0.5) < 1e-12

    # python callable against a discrete law: exact weighted sum
    bern = pk.Distribution.bernoulli(0.3)
    r2 = pk.integrate(lambda x: x * x, bern, -1.0, 2.0)
    assert abs(r2["value"] - 0.7) < 1e-12

    assert pk.finite_sum_as_integral([1.0, 2.0, 3.0]) == 6.0
    assert abs(pk.euler_summation([0.0, 0.0, 1.0], 0.0, 20.0) - 2870.0) < 1e-9


def test_expectation():
    m = pk.expect(pk.Distribution.binomial(10, 0.3))
    assert m["method"] == "enumeration"
    assert abs(m["value"] - 3.0) < 1e-12
    v = pk.variance(pk.Distribution.bernoulli(0.25))
    assert abs(v["value"] - 0.1875) < 1e-12
    n = pk.lp_norm(pk.Distribution.point_mass(-2.0), 3.0)
    assert abs(n["value"] - 2.0) < 1e-12


def test_sampling_determinism():
    law = pk.Distribution.normal01()
    assert law.sample(16, 7) == law.sample(16, 7)
    assert law.sample(16, 7) != law.sample(16, 8)


def test_inequality_case():
    report = pk.run_case(json.dumps({
        "id": "markov", "dist": {"family": "exponential1"}, "a": 2.0,
    }))
    assert report["pass"]
    assert abs(report["analytic_bound"] - 0.5) < 1e-3
    assert abs(report["reference"] - math.exp(-2.0)) < 1e-9
