import json

import gjesolve


def two_site_config():
    return json.dumps(
        {
            "family": "quadratic_ot",
            "domain": {"rect": [0, 0, 1, 1], "density": "uniform"},
            "sites": [[0.25, 0.5], [0.75, 0.5]],
            "target": [0.25, 0.75],
            "solver": {"epsilon": 1e-10, "max_iterations": 20},
        }
    )


def test_solve_two_site():
    out = gjesolve.solve_config(two_site_config())
    assert out["status"] == "converged"
    assert out["iterations"] <= 10
    assert abs(out["psi"][1] + 0.125) <= 1e-8
    assert out["res_l2"] <= 1e-10


def test_validate_flags_collinear_sites():
    cfg = json.dumps(
        {"family": "reflector", "sites": [[0.2, 0.5], [0.5, 0.5], [0.8, 0.5]]}
    )
    violations = gjesolve.validate_config(cfg)
    assert any("collinear" in v for v in violations)


def test_masses_match_the_analytic_split():
    cfg = two_site_config()
    masses = gjesolve.cell_masses(cfg, [0.0, -0.125])
    assert abs(masses[0] - 0.25) <= 1e-12
    assert abs(masses[1] - 0.75) <= 1e-12

    est, err = gjesolve.mc_masses(cfg, [0.0, -0.125], n_samples=200000, seed=7)
    assert abs(est[0] - 0.25) <= 3 * err[0] + 1e-12

    grid = gjesolve.grid_masses(cfg, [0.0, -0.125], resolution=128)
    assert abs(grid[0] - 0.25) <= 4 / 128


def test_bad_psi_length_raises():
    try:
        gjesolve.cell_masses(two_site_config(), [0.0])
    except ValueError:
        return
    raise AssertionError("expected a ValueError for a short psi vector")
