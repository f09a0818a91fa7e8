# Plugging in the published solution polynomials.
#
# Every bench case bundles the closed-form series printed for it, so the
# published curves can be evaluated without running any fit.  This script
# rebuilds the case 5.1 velocity comparison: own shooting solution next
# to the published series, with the absolute gap per row.

from jhflow import get_case, shoot_velocity

case = get_case("5.1")
F_pub = case.paper_F

oracle = shoot_velocity(case.params, h=1e-4)

print("eta   numeric          series           |gap|")
worst = 0.0
for k in range(11):
    eta = round(0.1 * k, 1)
    num = oracle.at(eta, "F")
    ser = F_pub.evaluate(eta)
    gap = abs(num - ser)
    worst = max(worst, gap)
    print("%.1f   %.12f   %.12f   %.3e" % (eta, num, ser, gap))
print("largest gap:", worst, "(the published table reports errors near 5e-7)")

# The temperature polynomials ship with one repaired coefficient: as
# printed, the quadratic term's sign disagrees with the very tables the
# series was tabulated in.  Both variants are available.
from jhflow.cases import paper_solution_theta

bad = paper_solution_theta("5.1", corrected=False)
good = paper_solution_theta("5.1", corrected=True)
print("printed  theta(0.4) = %.6e" % bad.evaluate(0.4))
print("repaired theta(0.4) = %.6e" % good.evaluate(0.4))
