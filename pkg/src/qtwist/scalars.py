"""Exact coefficient arithmetic: rationals, Laurent-monomial units, sparse Laurent polynomials.

The coefficient ring is Q[q1^{+-1}, ..., qk^{+-1}] in user-named parameters.
A :class:`UnitScalar` is a single invertible term ``c * q1^a1 * ... * qk^ak``
(nonzero rational ``c``, integer exponents); these form the multiplicative
group in which all cocycle values live.  A :class:`LaurentPolynomial` is a
finite sum of such terms and is what algebra elements carry as coefficients.

All arithmetic is exact (``fractions.Fraction`` underneath) and all values are
canonical: sorted parameter names, no zero exponents, no zero terms, reduced
rationals.  Structural equality therefore coincides with mathematical equality.
"""

from __future__ import annotations

import re
from fractions import Fraction

#: The exact base field is Q; parameters specialize into it.
Rational = Fraction

_COEFF_RE = re.compile(r"(-?\d+)(?:/(\d+))?$")
_FACTOR_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def _canonical_exps(exps):
    """Sorted (name, exponent) tuple with zero exponents dropped."""
    items = exps.items() if isinstance(exps, dict) else exps
    return tuple(sorted((n, e) for n, e in items if e != 0))


class UnitScalar:
    """An invertible scalar: nonzero rational times a Laurent monomial.

    >>> u = UnitScalar(Fraction(-3, 2), {"q": 2, "r": -1})
    >>> str(u)
    '-3/2*q^2*r^-1'
    >>> str(u * u.inv())
    '1'
    """

    __slots__ = ("coeff", "exps")

    def __init__(self, coeff, exps=()):
        coeff = Fraction(coeff)
        if coeff == 0:
            raise ValueError("unit scalars must be invertible; got zero coefficient")
        self.coeff = coeff
        self.exps = _canonical_exps(exps)

    @classmethod
    def one(cls):
        return cls(1)

    @classmethod
    def param(cls, name, exp=1):
        return cls(1, {name: exp})

    def is_one(self):
        return self.coeff == 1 and not self.exps

    def parameters(self):
        return {name for name, _ in self.exps}

    def __mul__(self, other):
        if not isinstance(other, UnitScalar):
            return NotImplemented
        exps = dict(self.exps)
        for name, e in other.exps:
            exps[name] = exps.get(name, 0) + e
        return UnitScalar(self.coeff * other.coeff, exps)

    def __truediv__(self, other):
        if not isinstance(other, UnitScalar):
            return NotImplemented
        return self * other.inv()

    def inv(self):
        return UnitScalar(1 / self.coeff, [(n, -e) for n, e in self.exps])

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return UnitScalar(1)
        return UnitScalar(self.coeff ** k, [(n, e * k) for n, e in self.exps])

    def __neg__(self):
        return UnitScalar(-self.coeff, self.exps)

    def __eq__(self, other):
        if not isinstance(other, UnitScalar):
            return NotImplemented
        return self.coeff == other.coeff and self.exps == other.exps

    def __hash__(self):
        return hash((self.coeff, self.exps))

    def specialize(self, assignment):
        return _specialize_monomial(self.coeff, self.exps, assignment)

    def as_poly(self):
        return LaurentPolynomial({self.exps: self.coeff})

    def __str__(self):
        return render_unit(self)

    def __repr__(self):
        return f"UnitScalar({render_unit(self)!r})"


def _specialize_monomial(coeff, exps, assignment):
    value = coeff
    for name, e in exps:
        if name not in assignment:
            raise ValueError(f"no value assigned to parameter {name!r}")
        a = Fraction(assignment[name])
        if a == 0:
            raise ValueError(f"parameter {name!r} must specialize to a nonzero rational")
        value *= a ** e
    return value


class LaurentPolynomial:
    """Finite sum of Laurent monomials with rational coefficients.

    Stored sparsely as a map from canonical exponent tuples to nonzero
    rationals; the zero polynomial is the empty map.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        canon = {}
        for exps, c in items:
            c = Fraction(c)
            if c == 0:
                continue
            key = _canonical_exps(exps)
            c = canon.get(key, Fraction(0)) + c
            if c == 0:
                canon.pop(key, None)
            else:
                canon[key] = c
        self.terms = canon

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): Fraction(1)})

    @classmethod
    def from_unit(cls, u):
        return cls({u.exps: u.coeff})

    @classmethod
    def from_rational(cls, c):
        return cls({(): Fraction(c)})

    @classmethod
    def from_param(cls, name, exp=1):
        return cls({((name, exp),): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def parameters(self):
        return {name for exps in self.terms for name, _ in exps}

    def units(self):
        """The terms as unit scalars, in canonical order."""
        return [UnitScalar(self.terms[k], k) for k in sorted(self.terms)]

    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, Fraction(0)) + c
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result.terms = out
        return result

    def __neg__(self):
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result.terms = {k: -c for k, c in self.terms.items()}
        return result

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UnitScalar):
            return self.scaled(other)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPolynomial.zero()
            return self.scaled(UnitScalar(other))
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                exps = dict(ka)
                for name, e in kb:
                    exps[name] = exps.get(name, 0) + e
                key = _canonical_exps(exps)
                s = out.get(key, Fraction(0)) + ca * cb
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result.terms = out
        return result

    __rmul__ = __mul__

    def scaled(self, u):
        """Multiply by a unit scalar; invertible (scale by ``u.inv()`` undoes it)."""
        out = {}
        for key, c in self.terms.items():
            exps = dict(key)
            for name, e in u.exps:
                exps[name] = exps.get(name, 0) + e
            out[_canonical_exps(exps)] = c * u.coeff
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result.terms = out
        return result

    def __eq__(self, other):
        if isinstance(other, UnitScalar):
            other = LaurentPolynomial.from_unit(other)
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.from_rational(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def specialize(self, assignment):
        total = Fraction(0)
        for exps, c in self.terms.items():
            total += _specialize_monomial(c, exps, assignment)
        return total

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"LaurentPolynomial({render_poly(self)!r})"


def specialize(p, assignment):
    """Exact evaluation of a polynomial (or unit) at nonzero rational parameter values."""
    return p.specialize(assignment)


# ---------------------------------------------------------------------------
# Literal grammar
#
#   unit   := [sign] coeff ('*' factor)*  |  [sign] factor ('*' factor)*
#   coeff  := integer ['/' positive-integer]
#   factor := name ['^' integer]            name = [A-Za-z][A-Za-z0-9_]*
#
# Examples: "1", "q", "-3/2*q^2*r^-1".  Polynomials are '+'/'-' separated
# sums of unit literals, e.g. "q^2 - 1".
# ---------------------------------------------------------------------------


def parse_unit(text):
    """Parse a unit literal; raises ValueError on malformed or zero literals."""
    s = text.strip()
    sign = 1
    had_sign = s[:1] in ("+", "-")
    if had_sign:
        if s[0] == "-":
            sign = -1
        s = s[1:].strip()
    if not s:
        raise ValueError(f"malformed unit literal: {text!r}")
    coeff = Fraction(sign)
    exps = {}
    for i, part in enumerate(p.strip() for p in s.split("*")):
        m = _COEFF_RE.match(part)
        if m:
            if i != 0:
                raise ValueError(f"numeric factor {part!r} must come first in {text!r}")
            if had_sign and part.startswith("-"):
                raise ValueError(f"double sign in unit literal: {text!r}")
            if m.group(2) == "0":
                raise ValueError(f"zero denominator in {text!r}")
            coeff *= Fraction(int(m.group(1)), int(m.group(2) or 1))
            if coeff == 0:
                raise ValueError(f"unit literal must be nonzero: {text!r}")
            continue
        m = _FACTOR_RE.match(part)
        if not m:
            raise ValueError(f"malformed factor {part!r} in unit literal {text!r}")
        name, e = m.group(1), int(m.group(2) or 1)
        exps[name] = exps.get(name, 0) + e
    return UnitScalar(coeff, exps)


def render_unit(u):
    """Canonical unit literal: reduced rational, sorted names, no ^1."""
    factors = [name if e == 1 else f"{name}^{e}" for name, e in u.exps]
    if not factors:
        return str(u.coeff)
    if u.coeff == 1:
        return "*".join(factors)
    if u.coeff == -1:
        return "-" + "*".join(factors)
    return "*".join([str(u.coeff)] + factors)


def split_terms(text):
    """Split a sum literal at top-level '+'/'-' signs (signs stay with their term).

    A '-' directly after '^', '*', '/', '(' or another sign is part of the
    current token, not a separator.
    """
    tokens = []
    depth = 0
    start = 0
    prev = ""
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        elif ch in "+-" and depth == 0 and i > start and prev not in "^*/+-(":
            tokens.append(text[start:i])
            start = i
        if not ch.isspace():
            prev = ch
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    tokens.append(text[start:])
    return [t.strip() for t in tokens]


def parse_poly(text):
    """Parse a '+'/'-' separated sum of unit literals; "0" is the zero polynomial."""
    total = LaurentPolynomial.zero()
    for token in split_terms(text):
        if token.lstrip("+-").strip() == "0":
            continue
        total = total + LaurentPolynomial.from_unit(parse_unit(token))
    return total


def render_poly(p):
    """Canonical sum literal, terms ordered by exponent key; zero renders as "0"."""
    if not p.terms:
        return "0"
    out = []
    for key in sorted(p.terms):
        c = p.terms[key]
        if not out:
            out.append(render_unit(UnitScalar(c, key)))
        elif c < 0:
            out.append(" - " + render_unit(UnitScalar(-c, key)))
        else:
            out.append(" + " + render_unit(UnitScalar(c, key)))
    return "".join(out)
