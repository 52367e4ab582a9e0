"""Quantum projective spaces as cocycle twists.

The algebra on X_0..X_N with relations X_j X_i = q_ji X_i X_j is the twist of
the polynomial algebra by the canonical cocycle of the deformation matrix q.
Standard monomials form a basis by construction, so products normalize
automatically, and cohomologous twisting cocycles give isomorphic algebras via
an explicit diagonal rescaling.
"""

from qtwist import (
    AntisymmetricMatrix,
    BimultiplicativeCocycle,
    ExponentVector,
    UnitScalar,
    canonical_from_antisym,
    coboundary_isomorphism,
    deformation_matrix,
    parse_element,
    quantum_projective_space,
    render_element,
    twist_by,
)

q = UnitScalar.param("q")
one = UnitScalar.one()

# The quantum plane: X1 X0 = q^-1 X0 X1.  Rendered literals always name basis
# monomials (normal forms); the *product* of generators picks up cocycle values.
Q = AntisymmetricMatrix.from_upper(2, {(0, 1): q})
A = quantum_projective_space(Q)
x0, x1 = A.generator(0), A.generator(1)
print("product X0 * X1 ->", x0 * x1, "  (q times the normal form)")
print("product X1 * X0 ->", x1 * x0, "  (the normal form itself)")
relation = x1 * x0 - (x0 * x1).scaled(q.inv())
print("X1*X0 - q^-1 X0*X1 == 0:", relation.is_zero())
print("deformation matrix:", deformation_matrix(A).to_json())

# Elements parse and render in the standard-monomial notation: a literal like
# "X0*X1" names the basis monomial with exponents (1,1), not an iterated product.
element = parse_element(A, "3*X0^2 + q*X0*X1")
print("element:", render_element(element), "| squared:", render_element(element * element))

# The same algebra arises by twisting the polynomial algebra.
poly = quantum_projective_space(AntisymmetricMatrix.trivial(2))
print("twist of polynomial algebra equals quantum plane:",
      twist_by(poly, canonical_from_antisym(Q)) == A)

# Cohomologous cocycles give isomorphic twists; the isomorphism is diagonal.
c = UnitScalar(3, {"q": 1})
mu = BimultiplicativeCocycle([[c]])
nu = BimultiplicativeCocycle.trivial(1)
phi, report = coboundary_isomorphism(quantum_projective_space(AntisymmetricMatrix.trivial(1)),
                                     mu, nu, samples=25, seed=0)
print("scaling isomorphism verified:", report.passed)
print("scale factors h(g^p):",
      [str(phi.scale(ExponentVector((p,)))) for p in range(5)])
