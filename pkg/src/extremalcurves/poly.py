"""Multivariate polynomials with exact coefficients and canonical term order.

A PolyRing fixes the field, the number of active variables (out of the
fixed slots x y z w t s u) and a monomial order.  Polynomials store their
terms as a tuple sorted strictly descending in that order, with no zero
coefficients; that canonical form makes equality a tuple comparison and
lets reduced Groebner bases be compared term by term.

BinaryForm holds a homogeneous form in two variables (z, w by default),
the currency of the monoid-surface constructions.
"""

import re

from .fields import ContextMismatchError
from .orders import (CAPACITY, MAX_ARITY, VAR_NAMES, ZERO_EXP,
                     GrevlexOrder, exp_degree, exp_from_var, exp_mul,
                     exp_supported_within)
from . import linalg


class ParseError(ValueError):
    """Raised for malformed polynomial or ideal-file text."""


class PolyRing:
    """Polynomial ring context: field, active arity, monomial order."""

    __slots__ = ("field", "arity", "order")

    def __init__(self, field, arity, order=None):
        if not 1 <= arity <= MAX_ARITY:
            raise ValueError(f"arity {arity} out of range")
        if order is None:
            order = GrevlexOrder(arity)
        if order.arity != arity:
            raise ContextMismatchError("order arity differs from ring arity")
        self.field = field
        self.arity = arity
        self.order = order

    def var_names(self):
        return VAR_NAMES[:self.arity]

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return Polynomial(self, ((ZERO_EXP, self.field.one),))

    def gen(self, index):
        if not 0 <= index < self.arity:
            raise ValueError(f"generator index {index} out of range")
        return Polynomial(self, ((exp_from_var(index), self.field.one),))

    def gens(self):
        return tuple(self.gen(i) for i in range(self.arity))

    def monomial(self, exponent, coeff=None):
        exponent = tuple(exponent)
        if len(exponent) != CAPACITY:
            raise ValueError("exponent has wrong capacity")
        if any(v < 0 for v in exponent):
            raise ValueError("negative exponent")
        if not exp_supported_within(exponent, self.arity):
            raise ContextMismatchError("exponent outside ring arity")
        c = self.field.one if coeff is None else self.field.coerce(coeff)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, ((exponent, c),))

    def constant(self, value):
        c = self.field.coerce(value)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, ((ZERO_EXP, c),))

    def with_order(self, order):
        if order == self.order:
            return self
        return PolyRing(self.field, self.arity, order)

    def extended(self, arity):
        """Same field with more active slots, default grevlex order."""
        if arity < self.arity:
            raise ValueError("extension cannot shrink the ring")
        return PolyRing(self.field, arity)

    def parse(self, text):
        return parse_polynomial(self, text)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.field == self.field
                and other.arity == self.arity and other.order == self.order)

    def __hash__(self):
        return hash((self.field, self.arity, self.order))

    def __repr__(self):
        names = ",".join(self.var_names())
        return f"PolyRing({self.field!r}[{names}], {self.order!r})"


def _check_same_ring(a, b):
    if a.ring != b.ring:
        raise ContextMismatchError(
            f"operands live in different rings: {a.ring!r} vs {b.ring!r}")


class Polynomial:
    """Immutable polynomial; terms sorted strictly descending in the ring order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    @classmethod
    def from_dict(cls, ring, coeffs):
        field = ring.field
        key = ring.order.key
        items = [(e, c) for e, c in coeffs.items() if not field.is_zero(c)]
        items.sort(key=lambda t: key(t[0]), reverse=True)
        return cls(ring, tuple(items))

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def lead_exponent(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def lead_coefficient(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][1]

    @property
    def degree(self):
        """Total degree in the standard grading."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(exp_degree(e) for e, _ in self.terms)

    @property
    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {exp_degree(e) for e, _ in self.terms}
        return len(degs) == 1

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((e, neg(c)) for e, c in self.terms))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        _check_same_ring(self, other)
        field = self.ring.field
        acc = dict(self.terms)
        for e, c in other.terms:
            if e in acc:
                s = field.add(acc[e], c)
                if field.is_zero(s):
                    del acc[e]
                else:
                    acc[e] = s
            else:
                acc[e] = c
        return Polynomial.from_dict(self.ring, acc)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.__add__(-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        _check_same_ring(self, other)
        field = self.ring.field
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = exp_mul(e1, e2)
                prod = field.mul(c1, c2)
                if e in acc:
                    s = field.add(acc[e], prod)
                    if field.is_zero(s):
                        del acc[e]
                    else:
                        acc[e] = s
                else:
                    acc[e] = prod
        return Polynomial.from_dict(self.ring, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, value):
        field = self.ring.field
        c = field.coerce(value)
        if field.is_zero(c):
            return self.ring.zero()
        return Polynomial(self.ring,
                          tuple((e, field.mul(c, v)) for e, v in self.terms))

    def monic(self):
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    def weight_degree(self, weights):
        """Maximal weight of a monomial of the polynomial."""
        if not self.terms:
            raise ValueError("weight degree of the zero polynomial is undefined")
        w = _weights_for_ring(self.ring, weights)
        n = self.ring.arity
        return max(sum(e[i] * w[i] for i in range(n)) for e, _ in self.terms)

    def initial_form(self, weights):
        """Sum of the terms of maximal weight degree."""
        if not self.terms:
            raise ValueError("initial form of the zero polynomial is undefined")
        w = _weights_for_ring(self.ring, weights)
        n = self.ring.arity
        wdegs = [sum(e[i] * w[i] for i in range(n)) for e, _ in self.terms]
        top = max(wdegs)
        kept = tuple(t for t, d in zip(self.terms, wdegs) if d == top)
        return Polynomial(self.ring, kept)

    def reorder(self, order):
        ring = self.ring.with_order(order)
        if ring is self.ring:
            return self
        key = order.key
        terms = sorted(self.terms, key=lambda t: key(t[0]), reverse=True)
        return Polynomial(ring, tuple(terms))

    def in_ring(self, ring):
        """Reinterpret in a compatible ring (same field, enough arity)."""
        if ring.field != self.ring.field:
            raise ContextMismatchError("cannot move between different fields")
        for e, _ in self.terms:
            if not exp_supported_within(e, ring.arity):
                raise ContextMismatchError(
                    "polynomial uses variables outside the target ring")
        key = ring.order.key
        terms = sorted(self.terms, key=lambda t: key(t[0]), reverse=True)
        return Polynomial(ring, tuple(terms))

    def swap_variables(self, i, j):
        """Exchange two variable slots (a coordinate permutation)."""
        if i == j:
            return self
        acc = {}
        for e, c in self.terms:
            le = list(e)
            le[i], le[j] = le[j], le[i]
            acc[tuple(le)] = c
        return Polynomial.from_dict(self.ring, acc)

    def substitute_linear(self, matrix):
        """Replace each variable by its row image under an invertible matrix.

        The matrix is arity x arity over the coefficient field; entry
        (i, j) is the coefficient of variable j in the image of variable i.
        """
        ring = self.ring
        n = ring.arity
        field = ring.field
        rows = [[field.coerce(matrix[i][j]) for j in range(n)] for i in range(n)]
        linalg.mat_inverse(field, rows)  # raises ValueError when singular
        images = []
        for i in range(n):
            acc = {}
            for j in range(n):
                if not field.is_zero(rows[i][j]):
                    acc[exp_from_var(j)] = rows[i][j]
            images.append(Polynomial.from_dict(ring, acc))
        # cache powers of each image to keep repeated exponents cheap
        powers = [{0: ring.one()} for _ in range(n)]

        def image_power(i, k):
            cached = powers[i]
            if k not in cached:
                cached[k] = image_power(i, k - 1) * images[i]
            return cached[k]

        out = ring.zero()
        for e, c in self.terms:
            term = ring.constant(c)
            for i in range(n):
                if e[i]:
                    term = term * image_power(i, e[i])
            out = out + term
        return out

    def coefficient_of(self, exponent):
        for e, c in self.terms:
            if e == exponent:
                return c
        return self.ring.field.zero

    def __str__(self):
        return polynomial_to_string(self)

    def __repr__(self):
        return f"<{polynomial_to_string(self)}>"


def _weights_for_ring(ring, weights):
    w = tuple(int(v) for v in weights)
    if len(w) != ring.arity:
        raise ContextMismatchError("weight vector length differs from arity")
    if any(v < 0 for v in w):
        raise ValueError("weights must be non-negative")
    if not any(w):
        raise ValueError("weight vector must not be zero")
    return w


def poly_arith(f, g, op):
    """Named dispatch mirror of the +, -, * operators."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")


# ---------------------------------------------------------------------------
# text grammar: integer or a/b coefficients, variables x y z w t s u,
# optional '*', '^' powers, e.g.  x*w^3 - y^3*z + 2*z^4
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z]|\^|\*|\+|-|/|\S)")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def parse_polynomial(ring, text):
    """Parse the polynomial grammar into a canonical Polynomial."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    field = ring.field
    names = {name: i for i, name in enumerate(ring.var_names())}
    pos = 0
    total = {}

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_number():
        tok = take()
        if not tok.isdigit():
            raise ParseError(f"expected a number, found {tok!r}")
        value = int(tok)
        if peek() == "/":
            take()
            den = take() if pos < len(tokens) else None
            if den is None or not den.isdigit() or int(den) == 0:
                raise ParseError("malformed fraction coefficient")
            return field.div(field.coerce(value), field.coerce(int(den)))
        return field.coerce(value)

    def parse_factor():
        tok = peek()
        if tok is None:
            raise ParseError("unexpected end of polynomial")
        if tok.isdigit():
            return ZERO_EXP, parse_number()
        if tok.isalpha():
            take()
            if tok not in names:
                raise ParseError(f"unknown variable {tok!r}")
            power = 1
            if peek() == "^":
                take()
                ptok = take() if pos < len(tokens) else None
                if ptok is None or not ptok.isdigit():
                    raise ParseError("malformed exponent")
                power = int(ptok)
            return exp_from_var(names[tok], power), field.one
        raise ParseError(f"unexpected token {tok!r}")

    def parse_term():
        exp, coeff = parse_factor()
        while True:
            tok = peek()
            if tok == "*":
                take()
                tok = peek()
                if tok is None or not (tok.isdigit() or tok.isalpha()):
                    raise ParseError("dangling '*'")
            elif tok is None or not (tok.isdigit() or tok.isalpha()):
                break
            e2, c2 = parse_factor()
            exp = exp_mul(exp, e2)
            coeff = field.mul(coeff, c2)
        return exp, coeff

    sign = 1
    tok = peek()
    if tok in ("+", "-"):
        take()
        sign = -1 if tok == "-" else 1
    while True:
        exp, coeff = parse_term()
        if sign < 0:
            coeff = field.neg(coeff)
        if exp in total:
            total[exp] = field.add(total[exp], coeff)
        else:
            total[exp] = coeff
        tok = peek()
        if tok is None:
            break
        if tok not in ("+", "-"):
            raise ParseError(f"expected '+' or '-', found {tok!r}")
        take()
        sign = -1 if tok == "-" else 1
    return Polynomial.from_dict(ring, total)


def _monomial_string(e):
    parts = []
    for i in range(MAX_ARITY):
        if e[i] == 1:
            parts.append(VAR_NAMES[i])
        elif e[i] > 1:
            parts.append(f"{VAR_NAMES[i]}^{e[i]}")
    return "*".join(parts)


def polynomial_to_string(f):
    if not f.terms:
        return "0"
    field = f.ring.field
    pieces = []
    for idx, (e, c) in enumerate(f.terms):
        neg, mag = field.sign_split(c)
        mono = _monomial_string(e)
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# binary forms
# ---------------------------------------------------------------------------

class BinaryForm:
    """Homogeneous form of fixed degree in two variables (z, w by default).

    Coefficients c_0..c_m encode sum(c_i * z^(m-i) * w^i); the all-zero
    vector is the zero form of that formal degree.
    """

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = tuple(field.coerce(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        self.field = field
        self.degree = len(coeffs) - 1
        self.coeffs = coeffs

    @classmethod
    def zero(cls, field, degree):
        return cls(field, (field.zero,) * (degree + 1))

    @classmethod
    def monomial(cls, field, degree, w_power, coeff=1):
        coeffs = [field.zero] * (degree + 1)
        coeffs[w_power] = field.coerce(coeff)
        return cls(field, coeffs)

    @classmethod
    def random(cls, field, degree, rng):
        """Random nonzero form of the given degree."""
        while True:
            coeffs = [field.random_element(rng) for _ in range(degree + 1)]
            form = cls(field, coeffs)
            if not form.is_zero:
                return form

    @classmethod
    def from_polynomial(cls, poly, slots=(2, 3), degree=None):
        """Extract a form supported on two variable slots of a polynomial."""
        field = poly.ring.field
        if poly.is_zero:
            if degree is None:
                raise ValueError("zero polynomial needs an explicit degree")
            return cls.zero(field, degree)
        if degree is None:
            degree = poly.degree
        coeffs = [field.zero] * (degree + 1)
        a, b = slots
        for e, c in poly.terms:
            if e[a] + e[b] != exp_degree(e) or e[a] + e[b] != degree:
                raise ValueError("polynomial is not a form in the two slots")
            coeffs[e[b]] = c
        return cls(field, coeffs)

    @property
    def is_zero(self):
        return all(self.field.is_zero(c) for c in self.coeffs)

    def to_polynomial(self, ring, slots=(2, 3)):
        a, b = slots
        m = self.degree
        acc = {}
        for i, c in enumerate(self.coeffs):
            if not ring.field.is_zero(c):
                e = [0] * CAPACITY
                e[a] = m - i
                e[b] = i
                acc[tuple(e)] = c
        return Polynomial.from_dict(ring, acc)

    def evaluate(self, z_value, w_value):
        field = self.field
        z0, w0 = field.coerce(z_value), field.coerce(w_value)
        acc = field.zero
        m = self.degree
        for i, c in enumerate(self.coeffs):
            term = c
            for _ in range(m - i):
                term = field.mul(term, z0)
            for _ in range(i):
                term = field.mul(term, w0)
            acc = field.add(acc, term)
        return acc

    def dehomogenized(self):
        """Coefficients of f(z) = F(z, 1), ascending in z, trimmed."""
        m = self.degree
        out = [self.coeffs[m - k] for k in range(m + 1)]
        while out and self.field.is_zero(out[-1]):
            out.pop()
        return out

    def scale(self, value):
        c = self.field.coerce(value)
        return BinaryForm(self.field, tuple(self.field.mul(c, v) for v in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return (self.field == other.field and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.degree, self.coeffs))

    def __str__(self):
        ring = PolyRing(self.field, 4)
        if self.is_zero:
            return "0"
        return str(self.to_polynomial(ring))

    def __repr__(self):
        return f"BinaryForm({self})"


def _univariate_gcd(field, a, b):
    """Euclid on ascending coefficient lists; returns a trimmed list."""
    a, b = list(a), list(b)

    def trim(v):
        while v and field.is_zero(v[-1]):
            v.pop()
        return v

    a, b = trim(a), trim(b)
    while b:
        # a mod b
        inv_lead = field.inv(b[-1])
        while len(a) >= len(b) and a:
            shift = len(a) - len(b)
            factor = field.mul(a[-1], inv_lead)
            for i in range(len(b)):
                a[shift + i] = field.sub(a[shift + i], field.mul(factor, b[i]))
            a = trim(a)
        a, b = b, a
    return a


def binary_forms_coprime(f, g):
    """True when two nonzero binary forms share no projective zero.

    Checks the gcd of the dehomogenizations and the common root at the
    point where the second variable vanishes; equivalent to a nonzero
    Sylvester resultant.
    """
    if not isinstance(f, BinaryForm) or not isinstance(g, BinaryForm):
        raise TypeError("binary forms expected")
    if f.field != g.field:
        raise ContextMismatchError("forms live over different fields")
    if f.is_zero or g.is_zero:
        raise ValueError("coprimality is undefined for the zero form")
    field = f.field
    df, dg = f.dehomogenized(), g.dehomogenized()
    # both divisible by the second variable: common zero at (1, 0)
    if len(df) <= f.degree and len(dg) <= g.degree:
        return False
    return len(_univariate_gcd(field, df, dg)) <= 1


def binary_gcd(f, g):
    """Gcd of the dehomogenizations, as an ascending coefficient list."""
    return _univariate_gcd(f.field, f.dehomogenized(), g.dehomogenized())
