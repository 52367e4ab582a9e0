"""Exact scalar arithmetic: units and Laurent polynomials.

The coefficient ring is Q[q^{+-1}, r^{+-1}, ...] in named parameters.  Units
(single invertible terms) are what cocycles take values in; polynomials are
what algebra elements carry.  Everything is exact, so equality of values is
equality of mathematical objects.
"""

from fractions import Fraction

from qtwist import LaurentPolynomial, parse_poly, parse_unit, specialize

# Units multiply, invert and take integer powers exactly.
u = parse_unit("-3/2*q^2*r^-1")
print("u          =", u)
print("u^-1       =", u.inv())
print("u * u^-1   =", u * u.inv())
print("u^3        =", u ** 3)

# Parsing canonicalizes: sorted names, reduced rationals, no ^1.
print("canonical  =", parse_unit("2/4*r^-1*q*q"))

# Laurent polynomials are finite sums of units.
p = parse_poly("q + 1")
d = parse_poly("q - 1")
print("(q+1)(q-1) =", p * d)

# Specialization sends parameters to nonzero rationals, exactly.
laurent = LaurentPolynomial.from_param("q") + LaurentPolynomial.from_param("q", -1)
print("q + q^-1 at q=2:", specialize(laurent, {"q": Fraction(2)}))

# Units are invertible even after scaling polynomials.
scaled = (p * d).scaled(u)
print("scaled and back:", scaled.scaled(u.inv()) == p * d)
