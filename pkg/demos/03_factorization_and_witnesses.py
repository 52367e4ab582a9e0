"""Factorization over product monoids, and constructive coboundary witnesses.

A cocycle on N^a x N^b factors into (restriction, restriction, cross pairing);
it is cohomologous to a direct product exactly when the pairing is trivial.
The trivialization procedures make the vanishing results executable: they
produce an explicit h with delta(h) = mu and the package checks the equality
on the whole truncated domain.
"""

import random

from qtwist import (
    BimultiplicativeCocycle,
    ExponentVector,
    FunctionOnMonoid,
    Pairing,
    ProductSplit,
    TruncatedCocycle,
    UnitScalar,
    coboundary,
    is_factorizable,
    trivialize_rank1,
    yamazaki_factorize,
    yamazaki_reconstruct,
    yamazaki_trivialize,
)

q = UnitScalar.param("q")
one = UnitScalar.one()

# Reconstruct a cocycle on N^2 x N^1 from two factors and a cross pairing,
# then factorize it back: the roundtrip is exact.
nu = BimultiplicativeCocycle([[one, q], [one, one]])
xi = BimultiplicativeCocycle([[q]])
alpha = Pairing([[q ** 2], [q.inv()]])
mu = yamazaki_reconstruct(nu, xi, alpha)
split = ProductSplit(2, 1)
print("roundtrip exact:", yamazaki_factorize(mu, split) == (nu, xi, alpha))
print("factorizable with alpha != 1:", is_factorizable(mu, split))
print("factorizable with alpha == 1:",
      is_factorizable(yamazaki_reconstruct(nu, xi, Pairing.trivial(2, 1)), split))

# Rank 1: every cocycle is a coboundary.  The recurrence
# h(g^(p+1)) = h(g^p) / mu(g, g^p) builds the witness.
mu1 = TruncatedCocycle.truncate(BimultiplicativeCocycle([[q]]), 10)
h = trivialize_rank1(mu1)
print("rank-1 witness h(g^4) =", h.value(ExponentVector((4,))))
print("delta(h) == mu (rank 1):", coboundary(h) == mu1)

# Product monoid: when both restrictions and the cross pairing are trivial,
# h((s,t)) = 1/mu((s,e),(e,t)) trivializes.
rng = random.Random(1)

def product_form(w):
    s, t = split.split(w)
    if s.degree() == 0 or t.degree() == 0:
        return one
    return q ** rng.randint(-2, 2)

h0 = FunctionOnMonoid.from_function(3, 6, product_form)
mu_t = coboundary(h0)
witness = yamazaki_trivialize(mu_t, split)
print("delta(witness) == mu (product):", coboundary(witness) == mu_t)
