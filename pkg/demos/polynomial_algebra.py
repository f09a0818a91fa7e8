# Exact polynomial algebra with a single 1/eta tail.
#
# The series machinery keeps every intermediate object as a sparse
# integer-exponent polynomial, so stage solutions stay exact until the
# final float evaluation.  This script walks the basic operations.

import numpy as np

from jhflow import LaurentPoly

# Build 1 - eta^2 two ways and check they agree term by term.
p = LaurentPoly({0: 1.0, 2: -1.0})
q = LaurentPoly.constant(1.0) - LaurentPoly.monomial(2)
print("terms of p:", p.to_pairs())
print("p == q:", p.to_pairs() == q.to_pairs())

# Products collect exponents; (1 - eta^2)^2 = 1 - 2 eta^2 + eta^4.
print("(1 - eta^2)^2:", (p * p).to_pairs())

# Differentiation and antidifferentiation are exact inverses whenever no
# 1/eta term is produced.
d = p.differentiate()
print("p' :", d.to_pairs())
print("integral of p' recovers p up to the constant:", d.antiderivative().to_pairs())

# A 1/eta term is allowed (the auxiliary multipliers carry one), deeper
# poles are not.
tail = LaurentPoly.monomial(-1, 3.0)
print("3/eta at eta = 0.5:", tail.evaluate(0.5))

# Evaluation broadcasts over arrays via a Horner pass.
grid = np.linspace(0.0, 1.0, 5)
print("p on a grid:", p.evaluate(grid))

# Serialization round-trips bit for bit.
blob = p.to_json()
print("round trip ok:", LaurentPoly.from_json(blob).to_pairs() == p.to_pairs())
