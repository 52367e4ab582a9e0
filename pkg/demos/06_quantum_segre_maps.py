"""Quantum Segre maps: z_ij |-> x_i (x) y_j, twisted by an ambient cocycle.

The source is a twist of the polynomial algebra in the z_ij by the pullback of
the ambient cocycle along the grading morphism; the target is the twisted
tensor square of two quantum projective spaces.  For factorizable ambient
cocycles the source deformation matrix is the Kronecker product of the two
factor matrices, and the degree-2 kernel is spanned by quantum analogues of
the 2x2 minors.
"""

from fractions import Fraction

from qtwist import (
    AntisymmetricMatrix,
    BimultiplicativeCocycle,
    Pairing,
    UnitScalar,
    build_quantum_segre,
    canonical_from_antisym,
    kernel_basis,
    kronecker,
    render_element,
    source_deformation_matrix,
    verify_homomorphism,
    yamazaki_reconstruct,
)

q = UnitScalar.param("q")
r = UnitScalar.param("r")

# Factorizable ambient cocycle: the two projective spaces commute with each other.
Q = AntisymmetricMatrix.from_upper(2, {(0, 1): q})
R = AntisymmetricMatrix.from_upper(2, {(0, 1): r})
mu = yamazaki_reconstruct(canonical_from_antisym(Q), canonical_from_antisym(R),
                          Pairing.trivial(2, 2))
smap = build_quantum_segre(1, 1, mu)
print("source generators:", smap.source.generator_names)
print("target generators:", smap.target.generator_names)

report = verify_homomorphism(smap.homomorphism, samples=50, seed=0)
print("multiplicative on", report.pairs_checked, "pairs:", report.passed)

g = source_deformation_matrix(smap)
print("source deformation matrix == kronecker(Q, R):", g == kronecker(Q, R))
print(g.to_json())

# The kernel probe, exact over Q after specializing the parameters.
classical = kernel_basis(build_quantum_segre(1, 1, BimultiplicativeCocycle.trivial(4)), 2, {})
print("classical degree-2 kernel:", [render_element(x) for x in classical])

# In the normal-form basis the quantum quadric is coefficient-free too; the
# q-coefficients of the quantum minors appear when rewriting the basis
# monomials as products of generators.
quantum = kernel_basis(smap, 2, {"q": Fraction(3), "r": Fraction(-2, 5)})
print("quantum degree-2 kernel:  ", [render_element(x) for x in quantum])

# A nonfactorizable ambient cocycle (cross pairing) still gives a morphism.
alpha = Pairing([[q, UnitScalar.one()], [UnitScalar.one(), r]])
mixed = yamazaki_reconstruct(canonical_from_antisym(Q), canonical_from_antisym(R), alpha)
smap2 = build_quantum_segre(1, 1, mixed)
print("nonfactorizable case verifies:",
      verify_homomorphism(smap2.homomorphism, samples=50, seed=1).passed)
print("its source deformation matrix:", source_deformation_matrix(smap2).to_json())
