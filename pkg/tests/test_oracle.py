"""Reference-solution checks: RK4 accuracy, shooting, superposition, interpolation."""

import math

import numpy as np
import pytest

from jhflow.model import FlowParams
from jhflow.oracle import (
    DEFAULT_STEP,
    OracleSolution,
    ShootingDiverged,
    fit_polynomial,
    rk4_step,
    shoot_thermal,
    shoot_velocity,
    velocity_terminal,
)

CASE51 = FlowParams(alpha=math.pi / 24, Re=50.0, H=0.0, Pr=1.0, beta=3.492161428e-13)


# -- rk4_step -----------------------------------------------------------------


def test_rk4_single_step_exponential():
    # y' = y, y(0) = 1, one step h = 0.1: classical RK4 gives the quartic
    # Taylor value 1 + h + h^2/2 + h^3/6 + h^4/24.
    out = rk4_step(np.array([1.0]), 0.0, 0.1, lambda x, y: y)
    assert out[0] == pytest.approx(1.1051708333333333, rel=1e-15)


def test_rk4_is_fourth_order():
    # Integrate y' = y over [0, 1] at two steps; the error ratio ~ 2^4.
    def integrate(n):
        y = np.array([1.0])
        h = 1.0 / n
        for i in range(n):
            y = rk4_step(y, i * h, h, lambda x, v: v)
        return abs(y[0] - math.e)

    ratio = integrate(50) / integrate(100)
    assert 14.0 < ratio < 18.0


def test_rk4_rejects_non_finite():
    from jhflow.oracle import NonFiniteState

    with pytest.raises(NonFiniteState):
        rk4_step(np.array([1.0]), 0.0, 1.0, lambda x, y: np.array([math.inf]))


# -- velocity shooting ----------------------------------------------------------


def test_velocity_shooting_meets_wall_condition():
    sol = shoot_velocity(CASE51, h=1e-3)
    assert sol.terminal_miss <= 1e-12
    assert sol.at(0.0) == pytest.approx(1.0, abs=1e-15)
    assert sol.at(0.0, "dF") == pytest.approx(0.0, abs=1e-15)
    assert abs(sol.at(1.0)) <= 1e-12


def test_velocity_shooting_parameter_value():
    # The centreline curvature for the first bundled configuration.
    sol = shoot_velocity(CASE51, h=1e-3)
    assert sol.shooting_parameter == pytest.approx(-4.62170583122845, rel=1e-9)


def test_velocity_grid_independence():
    coarse = shoot_velocity(CASE51, h=1e-3)
    fine = shoot_velocity(CASE51, h=1e-4)
    for eta in (0.25, 0.5, 0.75):
        assert coarse.at(eta) == pytest.approx(fine.at(eta), abs=1e-10)


def test_velocity_small_groups_limit():
    # With A and B nearly zero the equation degenerates to F''' = 0,
    # whose solution under these conditions is 1 - eta^2.
    tiny = FlowParams(alpha=1e-8, Re=1e-4, H=0.0)
    sol = shoot_velocity(tiny, h=1e-3)
    for eta in (0.0, 0.3, 0.6, 0.9):
        assert sol.at(eta) == pytest.approx(1.0 - eta * eta, abs=1e-9)


def test_velocity_terminal_matches_shot():
    sol = shoot_velocity(CASE51, h=1e-3)
    assert velocity_terminal(CASE51, sol.shooting_parameter, h=1e-3) == pytest.approx(
        0.0, abs=1e-12
    )


def test_bad_bracket_raises():
    with pytest.raises(ShootingDiverged):
        shoot_velocity(CASE51, h=1e-2, bracket=(-30.0, -29.0))


def test_step_must_divide_unit_interval():
    with pytest.raises(ValueError):
        shoot_velocity(CASE51, h=3e-4)
    with pytest.raises(ValueError):
        velocity_terminal(CASE51, -4.0, h=0.7)


# -- thermal superposition --------------------------------------------------------


def test_thermal_solution_boundary_conditions():
    p = FlowParams(alpha=math.pi / 24, Re=50.0, H=250.0, Pr=1.0, beta=3.492161428e-13)
    F = shoot_velocity(p, h=1e-3)
    theta = shoot_thermal(p, F, h=1e-3)
    assert theta.terminal_miss <= 1e-12
    assert abs(theta.at(1.0)) <= 1e-12
    assert theta.at(0.0, "dtheta") == pytest.approx(0.0, abs=1e-15)


def test_thermal_zero_beta_gives_zero_temperature():
    p = FlowParams(alpha=math.pi / 24, Re=50.0, H=250.0, Pr=1.0, beta=0.0)
    F = shoot_velocity(p, h=1e-3)
    theta = shoot_thermal(p, F, h=1e-3)
    assert np.max(np.abs(theta.values[:, 0])) <= 1e-15


def test_thermal_linear_in_beta():
    base = FlowParams(alpha=math.pi / 24, Re=50.0, H=250.0, Pr=1.0, beta=1e-6)
    double = FlowParams(alpha=math.pi / 24, Re=50.0, H=250.0, Pr=1.0, beta=2e-6)
    F = shoot_velocity(base, h=1e-3)
    t1 = shoot_thermal(base, F, h=1e-3)
    t2 = shoot_thermal(double, F, h=1e-3)
    for eta in (0.0, 0.4, 0.8):
        assert t2.at(eta) == pytest.approx(2.0 * t1.at(eta), rel=1e-9, abs=1e-300)


def test_thermal_grid_mismatch_rejected():
    F = shoot_velocity(CASE51, h=1e-3)
    with pytest.raises(ValueError):
        shoot_thermal(CASE51, F, h=1e-4)


# -- OracleSolution access ---------------------------------------------------------


def test_at_grid_nodes_exact_and_between_hermite():
    sol = shoot_velocity(CASE51, h=1e-3)
    # On-node lookups return the stored value bit-for-bit.
    i = 500
    assert sol.at(0.5) == sol.values[i, 0]
    assert sol.at(0.5, 1) == sol.values[i, 1]
    # Between nodes the cubic Hermite value tracks a finer grid closely.
    fine = shoot_velocity(CASE51, h=1e-4)
    x = 0.50047
    assert sol.at(x) == pytest.approx(fine.at(x), abs=1e-10)


def test_at_component_by_name_and_index_agree():
    sol = shoot_velocity(CASE51, h=1e-2)
    assert sol.at(0.3, "F") == sol.at(0.3, 0)
    assert sol.at(0.3, "dF") == sol.at(0.3, 1)


def test_at_domain_and_component_errors():
    sol = shoot_velocity(CASE51, h=1e-2)
    with pytest.raises(ValueError):
        sol.at(-0.1)
    with pytest.raises(ValueError):
        sol.at(1.2)
    with pytest.raises(ValueError):
        sol.at(0.305, "d2F")  # no stored derivative above the last column
    with pytest.raises(ValueError):
        sol.at(0.3, "missing")


def test_to_csv_full_precision(tmp_path):
    sol = shoot_velocity(CASE51, h=1e-2)
    path = tmp_path / "velocity.csv"
    sol.to_csv(path)
    lines = path.read_text().strip().split("\n")
    assert lines[0] == "eta,F,dF,d2F"
    assert len(lines) == 102
    row = lines[51].split(",")
    assert float(row[0]) == 0.5
    # 17 significant digits round-trip the float64 exactly.
    assert float(row[1]) == sol.values[50, 0]


# -- polynomial condensation ---------------------------------------------------


def test_fit_polynomial_tracks_solution():
    sol = shoot_velocity(CASE51, h=1e-3)
    poly = fit_polynomial(sol, degree=14)
    grid = np.linspace(0.0, 1.0, 101)
    dense = np.array([sol.at(x) for x in grid])
    assert np.max(np.abs(poly.evaluate(grid) - dense)) < 1e-9


def test_fit_polynomial_recovers_exact_polynomial():
    # A solution whose value column is itself a cubic comes back exactly.
    grid = np.linspace(0.0, 1.0, 101)
    vals = 1.0 - 0.5 * grid**2 + 0.25 * grid**3
    deriv = -grid + 0.75 * grid**2
    sol = OracleSolution(
        grid=grid,
        values=np.column_stack([vals, deriv]),
        columns=("F", "dF"),
        shooting_parameter=0.0,
        terminal_miss=0.0,
    )
    poly = fit_polynomial(sol, degree=3)
    assert poly.coefficient(0) == pytest.approx(1.0, abs=1e-12)
    assert poly.coefficient(2) == pytest.approx(-0.5, abs=1e-12)
    assert poly.coefficient(3) == pytest.approx(0.25, abs=1e-12)
