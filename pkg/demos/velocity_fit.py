# Identifying the free series parameters by least squares.
#
# The residual of the governing equation, squared and integrated over the
# channel with Gauss-Legendre weights, is minimized over C1..C7 with a
# damped Gauss-Newton loop started from several points.  The resulting
# series is then judged against the shooting solution on a uniform grid.

import time

import numpy as np

from jhflow import (
    fit,
    get_case,
    shoot_velocity,
    velocity_objective_spec,
    velocity_solution,
)

case = get_case("5.6")
params = case.params

t0 = time.time()
spec = velocity_objective_spec(params)
result = fit(spec, params, seed=0)
print("fit in %.1fs, converged=%s, objective=%.3e" % (time.time() - t0, result.converged, result.objective_value))
for name, value in result.parameters.items():
    print("  %s = % .10f" % (name, value))

F = velocity_solution(params, result.parameters).assembled
oracle = shoot_velocity(params, h=1e-4)
grid = np.round(np.linspace(0.0, 1.0, 11), 1)
err = max(abs(F.evaluate(float(e)) - oracle.at(float(e), "F")) for e in grid)
print("max grid error vs oracle: %.3e" % err)

# The iteration log keeps every accepted and rejected step; accepted
# objectives never increase.
accepted = [rec.objective for rec in result.iteration_log if rec.accepted]
print("accepted steps:", len(accepted), "monotone:", all(b <= a for a, b in zip(accepted, accepted[1:])))
