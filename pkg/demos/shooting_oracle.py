# The independent ground truth: classic RK4 with shooting.
#
# The centerline curvature F''(0) is unknown, so the solver brackets it,
# runs secant steps with bisection fallback, and accepts once the wall
# value |F(1)| drops below 1e-12.  Halving the step should shrink the
# error about sixteen-fold for a fourth-order scheme; the Richardson
# ratio below checks that without knowing the exact solution.

import numpy as np

from jhflow import get_case, shoot_velocity, shoot_thermal
from jhflow.oracle import velocity_terminal

case = get_case("5.1")
params = case.params

sol = shoot_velocity(params, h=1e-3)
print("F''(0) =", sol.shooting_parameter)
print("wall miss:", sol.terminal_miss)
for eta in (0.0, 0.25, 0.5, 0.75, 1.0):
    print("F(%.2f) = %.12f" % (eta, sol.at(eta, "F")))

# Richardson: with the shooting parameter frozen, compare wall values at
# h, h/2, h/4.  The ratio of successive differences estimates 2^order.
s = sol.shooting_parameter
f1 = velocity_terminal(params, s, h=1e-3)
f2 = velocity_terminal(params, s, h=5e-4)
f3 = velocity_terminal(params, s, h=2.5e-4)
print("Richardson ratio:", (f1 - f2) / (f2 - f3), "(sixteen for fourth order)")

# The temperature rides on the frozen velocity profile.  Its equation is
# linear, so two trial integrations plus superposition pin the center
# value; a third run verifies the wall condition.
th = shoot_thermal(params, sol, h=1e-3)
print("theta(0) =", th.at(0.0, "theta"))
print("theta(1) =", th.at(1.0, "theta"))

# Off-grid queries interpolate with a cubic Hermite built from the
# stored values and derivatives, keeping fourth-order accuracy.
print("theta(1/3) =", th.at(1.0 / 3.0, "theta"))
