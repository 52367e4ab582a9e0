"""Twisted tensor products and factorization of twisted squares.

B (x)_alpha C glues two graded algebras so that c * b = alpha(deg b, deg c)
b (x) c.  With alpha trivial the factors commute (classical tensor product).
Any twist of the classical tensor product by a cocycle on the product monoid
is isomorphic to a twisted tensor product of twists of the factors.
"""

from qtwist import (
    AntisymmetricMatrix,
    Pairing,
    UnitScalar,
    canonical_from_antisym,
    embed_left,
    embed_right,
    factor_twist,
    quantum_projective_space,
    render_element,
    twisted_tensor_product,
    yamazaki_reconstruct,
)

q = UnitScalar.param("q")
r = UnitScalar.param("r")
s = UnitScalar.param("s")

B = quantum_projective_space(AntisymmetricMatrix.from_upper(2, {(0, 1): q}), ["x0", "x1"])
C = quantum_projective_space(AntisymmetricMatrix.from_upper(2, {(0, 1): r}), ["y0", "y1"])

# A nontrivial pairing makes the factors q-commute with each other.
alpha = Pairing([[s, UnitScalar.one()], [UnitScalar.one(), s.inv()]])
T = twisted_tensor_product(B, C, alpha)
x = embed_left(T, B.generator(0))
y = embed_right(T, C.generator(0))
print("x*y =", render_element(x * y))
print("y*x =", render_element(y * x), "   (= alpha(deg x, deg y) * x*y)")

# With the trivial pairing the factors commute: the classical tensor product.
classical = twisted_tensor_product(B, C, Pairing.trivial(2, 2))
xc = embed_left(classical, B.generator(0))
yc = embed_right(classical, C.generator(0))
print("classical tensor commutes:", xc * yc == yc * xc)

# Twisting the classical tensor product by any cocycle on the product monoid
# factors into twists of B and C glued by a pairing.
mu = yamazaki_reconstruct(canonical_from_antisym(AntisymmetricMatrix.from_upper(2, {(0, 1): s})),
                          canonical_from_antisym(AntisymmetricMatrix.trivial(2)),
                          alpha)
report = factor_twist(B, C, mu)
print("cohomologous:", report.cohomologous,
      "| identical:", report.identical,
      "| factorizable:", report.factorizable)
print("twisted square cocycle:   ", report.twisted_classical.cocycle.to_json())
print("tensor-of-twists cocycle: ", report.tensor_of_twists.cocycle.to_json())
