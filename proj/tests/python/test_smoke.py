import math

import pytest

import hiersearch as hs


def sphere(params):
    return sum(v * v for v in params.values())


def test_registry():
    keys = hs.benchmark_keys()
    assert len(keys) == 12
    assert "rastrigin-6d" in keys
    info = hs.benchmark_info("rastrigin-6d")
    assert info["dims"] == 6
    assert info["known_optimum"] == 0.0
    assert hs.benchmark_eval("rastrigin-6d", info["argmin"]) == 0.0


def test_tune_matched_budget():
    space = hs.make_space(
        [{"name": f"x{i}", "lo": -1.0, "hi": 1.0} for i in range(3)]
    )
    report = hs.tune(space, sphere, iterations=4, budget=2, seed=1)
    assert report["evaluations"] == 3 * 2 * 4
    assert report["setup_evaluations"] == 1
    assert len(report["trace"]) == 4
    assert set(report["best"]) == {"x0", "x1", "x2"}
    assert math.isfinite(report["best_psi"])
    bests = [row["best_psi"] for row in report["trace"]]
    assert bests == sorted(bests, reverse=True)


def test_baselines_parity():
    space = hs.make_space(
        [{"name": f"x{i}", "lo": -1.0, "hi": 1.0} for i in range(3)]
    )
    for method in (hs.random_search, hs.latin_hypercube):
        report = method(space, sphere, iterations=4, budget=2, seed=1)
        assert report["evaluations"] == 3 * 2 * 4
        assert report["setup_evaluations"] == 0


def test_run_benchmark_paths():
    for method in ("hiersearch", "random", "lhs"):
        report = hs.run_benchmark(
            "rastrigin-6d", method=method, iterations=3, budget=2, seed=5
        )
        assert report["evaluations"] == 6 * 2 * 3


def test_fixed_and_categorical():
    space = hs.make_space(
        [
            {"name": "x", "lo": 0.0, "hi": 1.0},
            {"name": "kind", "labels": ["a", "b", "c"]},
            {"name": "lr", "lo": 1e-4, "hi": 1e-1, "scale": "log10"},
        ],
        fixed={"lr": 1e-2},
    )
    assert space.objective_names == ["x", "kind"]

    def objective(params):
        assert params["lr"] == pytest.approx(1e-2)
        assert params["kind"] in ("a", "b", "c")
        return params["x"]

    report = hs.tune(space, objective, iterations=3, budget=2, seed=2)
    assert report["best"]["kind"] in ("a", "b", "c")


def test_hierarchy_info():
    space = hs.make_space(
        [{"name": f"x{i}", "lo": 0.0, "hi": 1.0} for i in range(6)]
    )
    info = hs.hierarchy_info(space, connections=2)
    assert info["node_count"] == 11
    assert info["depth"] == 3
    assert info["terminal_count"] == 6
    assert "[0]" in info["tree"]


def test_errors_surface():
    with pytest.raises(ValueError):
        hs.benchmark_info("rosenbrock-3d")
    with pytest.raises(ValueError):
        hs.make_space([{"name": "x", "lo": 1.0, "hi": 0.0}])
