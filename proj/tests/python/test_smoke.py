"""Smoke tests for the python bindings.

Each check exercises one operation end to end against small frozen values;
the heavy numerical validation lives in the C++ unit and acceptance suites.
Runs standalone (python3 test_smoke.py) or under pytest.
"""

import math

import eigenflow


def test_eigenset_shape():
    es = eigenflow.build_eigenset("fibonacci", 40)
    assert es.family == "fibonacci"
    assert es.n_max == 40
    assert len(es) == 40 * 41 // 2 - 1
    rec = es.records[0]
    assert rec.k == 2 and rec.index == 0
    # Smallest root of x^2 - x - 1 is 1 - phi; its reciprocal is -phi.
    assert abs(rec.reciprocal - (-(1 + math.sqrt(5)) / 2)) < 1e-12
    assert rec.residual <= 1e-12


def test_reference_table_counts():
    es = eigenflow.build_eigenset("fibonacci", 40)
    rows = eigenflow.unit_circle_table(es, 0.01, [10, 20, 40])
    within = {row.n: row.within for row in rows}
    assert within[10] == 0 and within[20] == 10
    hist = eigenflow.bin_histogram(es, 20)
    assert hist.counts[0] == 16 and hist.counts[25] == 10
    assert hist.total() + hist.out_of_range == 20 * 21 // 2 - 1


def test_fits():
    xs = [float(x) for x in range(10, 201, 10)]
    ys = [100.0 / (1.0 + math.exp(-0.05 * (x - 80.0))) for x in xs]
    fit = eigenflow.fit_logistic(xs, ys)
    assert abs(fit.L - 100.0) < 1e-4 * 100.0
    assert abs(fit.k - 0.05) < 1e-4
    assert abs(fit.x0 - 80.0) < 1e-3
    decay = [(100.0 - 5.0) * math.exp(-0.03 * (x - 10.0)) + 5.0 for x in xs]
    efit = eigenflow.fit_exp_decay_constrained(xs, decay)
    assert abs(efit.b - 0.03) < 1e-6 and abs(efit.c - 5.0) < 1e-3


def test_classification():
    assert eigenflow.classify_point(0.5 + 0j) == "hyperbolic"
    assert eigenflow.classify_point(1.5 + 0j) == "misiurewicz_proxy"
    assert eigenflow.classify_point(1.0 + 0j) == "parabolic"
    es = eigenflow.build_eigenset("fibonacci", 20)
    rows = eigenflow.classification_table(es, [10, 20])
    assert rows[0].hyperbolic == 9 and rows[1].hyperbolic == 19
    assert rows[1].grand_total == 209


def test_jungreis():
    num, den, approx = eigenflow.jungreis_coefficient(1)
    assert (num, den) == ("-1", "2") and approx == -0.5
    assert eigenflow.psi_truncated(10 + 0j, 1) == 9.5 + 0j
    assert abs(eigenflow.psi_truncated(10 + 0j, 4) - 9.5101171875) < 1e-13
    try:
        eigenflow.jungreis_coefficient(66)
    except eigenflow.RangeError:
        pass
    else:
        raise AssertionError("expected RangeError for k = 66")


def test_dynamics_membership():
    assert eigenflow.in_main_cardioid(0j)
    assert not eigenflow.in_main_cardioid(0.3 + 0j)
    assert eigenflow.in_period2_bulb(-1 + 0j)
    assert eigenflow.mandelbrot_escape(1 + 0j).escaped
    assert not eigenflow.mandelbrot_escape(0j).escaped


def test_homotopies():
    z = 1.25 + 0.5j
    for kind in ("linear", "cardioid", "jungreis", "tuned_cardioid", "radial_bulb", "scale"):
        assert eigenflow.apply_homotopy(kind, z, 0.0) == z
    landed = eigenflow.apply_homotopy("cardioid", z, 1.0)
    mu = 1 - (1 - 4 * landed) ** 0.5
    assert abs(abs(mu) - 1.0) < 1e-9
    assert eigenflow.tuning_map(-0.75 + 0j) == -0.1575 + 1.0325j
    assert eigenflow.boundary_map(1 + 0j) == eigenflow.cardioid_param(0.0)
    try:
        eigenflow.apply_homotopy("cardioid", z, 1.5)
    except eigenflow.RangeError:
        pass
    else:
        raise AssertionError("expected RangeError for t outside [0, 1]")


def test_density_probe():
    es = eigenflow.build_eigenset("fibonacci", 30)
    dist = eigenflow.density_probe(es, [0.0, math.pi / 3])
    assert len(dist) == 2 and all(d >= 0.0 for d in dist)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")
