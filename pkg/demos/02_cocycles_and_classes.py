"""2-cocycles on N^n and their cohomology classes.

A bimultiplicative cocycle is an n x n matrix of units A with
mu(u, v) = prod A_ij^(u_i v_j); the cocycle identity holds automatically.
Classes are classified by the antisymmetrization beta(u,v) = mu(u,v)/mu(v,u),
i.e. by multiplicatively antisymmetric matrices, and every class has a unique
canonical upper-triangular representative.
"""

import random

from qtwist import (
    AntisymmetricMatrix,
    BimultiplicativeCocycle,
    ExponentVector,
    UnitScalar,
    antisymmetrize,
    canonical_from_antisym,
    cohomologous,
)

q = UnitScalar.param("q")
r = UnitScalar.param("r")
one = UnitScalar.one()

# An antisymmetric matrix (q_ii = 1, q_ij q_ji = 1) and its canonical cocycle.
Q = AntisymmetricMatrix.from_upper(3, {(0, 1): q, (0, 2): r, (1, 2): q * r})
mu = canonical_from_antisym(Q)
print("canonical cocycle:", mu.to_json())

# The cocycle identity mu(x, y+z) mu(y, z) = mu(x, y) mu(x+y, z), checked at
# random points (it holds identically for bimultiplicative matrices).
rng = random.Random(0)
for _ in range(5):
    x, y, z = (ExponentVector([rng.randint(0, 4) for _ in range(3)]) for _ in range(3))
    lhs = mu.evaluate(x, y + z) * mu.evaluate(y, z)
    rhs = mu.evaluate(x, y) * mu.evaluate(x + y, z)
    assert lhs == rhs
print("cocycle identity holds at sampled triples")

# Antisymmetrization recovers Q: the class determines and is determined by it.
print("antisymmetrize(mu) == Q:", antisymmetrize(mu) == Q)

# A cocycle differing by a symmetric (coboundary) factor stays in the class.
sym = BimultiplicativeCocycle([[q, r, one], [r, one, q], [one, q, r * r]])
print("cohomologous(mu, mu*sym):", cohomologous(mu, mu * sym))

# A genuinely different class is detected.
other = canonical_from_antisym(AntisymmetricMatrix.from_upper(3, {(0, 1): q * q}))
print("cohomologous(mu, other):  ", cohomologous(mu, other))
