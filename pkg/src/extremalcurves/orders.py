"""Monomial exponents and monomial orders.

An exponent is a tuple of CAPACITY small non-negative integers; slots
beyond a ring's active arity stay zero.  The fixed variable slots are
x y z w t s u (x..w form the curve ring, t/s/u are auxiliaries for
elimination constructions).

Every order here exposes a `key` that is linear in the exponent, so the
key of a product is the componentwise sum of keys.  The Groebner kernel
relies on that to shift sorted term lists without re-sorting.
"""

from .fields import ContextMismatchError

CAPACITY = 8
VAR_NAMES = ("x", "y", "z", "w", "t", "s", "u")
MAX_ARITY = len(VAR_NAMES)

ZERO_EXP = (0,) * CAPACITY

LESS, EQUAL, GREATER = -1, 0, 1


def exp_from_var(index, power=1):
    if not 0 <= index < MAX_ARITY:
        raise ValueError(f"variable slot {index} out of range")
    e = [0] * CAPACITY
    e[index] = power
    return tuple(e)


def exp_mul(a, b):
    return tuple(a[i] + b[i] for i in range(CAPACITY))


def exp_divides(a, b):
    return all(a[i] <= b[i] for i in range(CAPACITY))


def exp_div(a, b):
    """Exponent of a monomial quotient a / b; requires b | a."""
    q = tuple(a[i] - b[i] for i in range(CAPACITY))
    if any(v < 0 for v in q):
        raise ValueError("monomial does not divide")
    return q


def exp_lcm(a, b):
    return tuple(max(a[i], b[i]) for i in range(CAPACITY))


def exp_degree(e):
    return sum(e)


def exp_supported_within(e, arity):
    """True when the exponent uses only the first `arity` slots."""
    return all(e[i] == 0 for i in range(arity, CAPACITY))


def monomial_exponents(arity, degree):
    """All exponents of the given total degree in the first `arity` slots."""
    if arity <= 0:
        if degree == 0:
            yield ZERO_EXP
        return

    def rec(slot, remaining, prefix):
        if slot == arity - 1:
            yield tuple(prefix + [remaining] + [0] * (CAPACITY - arity))
            return
        for v in range(remaining, -1, -1):
            yield from rec(slot + 1, remaining - v, prefix + [v])

    yield from rec(0, degree, [])


def _grevlex_key(e, arity):
    total = 0
    for i in range(arity):
        total += e[i]
    return (total,) + tuple(-e[i] for i in range(arity - 1, -1, -1))


class GrevlexOrder:
    """Graded reverse lexicographic order on the first `arity` slots."""

    __slots__ = ("arity",)
    kind = "grevlex"

    def __init__(self, arity):
        if not 1 <= arity <= MAX_ARITY:
            raise ValueError(f"arity {arity} out of range")
        self.arity = arity

    def key(self, e):
        return _grevlex_key(e, self.arity)

    def __eq__(self, other):
        return isinstance(other, GrevlexOrder) and other.arity == self.arity

    def __hash__(self):
        return hash(("grevlex", self.arity))

    def __repr__(self):
        return f"GrevlexOrder({self.arity})"


class WeightRefinedOrder:
    """Weight-degree comparison first, grevlex on ties.

    Zero weights are allowed (the projection probe uses (1,0,0,0)); the
    grevlex tie-break keeps this a genuine term order.
    """

    __slots__ = ("arity", "weights")
    kind = "weight"

    def __init__(self, weights, arity=None):
        weights = tuple(int(w) for w in weights)
        if arity is None:
            arity = len(weights)
        if len(weights) != arity:
            raise ValueError("one weight per active variable required")
        if any(w < 0 for w in weights):
            raise ValueError("weights must be non-negative")
        if not any(weights):
            raise ValueError("weight vector must not be zero")
        if not 1 <= arity <= MAX_ARITY:
            raise ValueError(f"arity {arity} out of range")
        self.arity = arity
        self.weights = weights

    def weight_degree(self, e):
        w = self.weights
        return sum(e[i] * w[i] for i in range(self.arity))

    def key(self, e):
        return (self.weight_degree(e),) + _grevlex_key(e, self.arity)

    def __eq__(self, other):
        return (isinstance(other, WeightRefinedOrder)
                and other.arity == self.arity
                and other.weights == self.weights)

    def __hash__(self):
        return hash(("weight", self.arity, self.weights))

    def __repr__(self):
        return f"WeightRefinedOrder({self.weights})"


class BlockEliminationOrder:
    """Front block compared first (grevlex), remaining variables break ties.

    A Groebner basis in this order intersects the ideal with the subring
    that omits the front variables.
    """

    __slots__ = ("arity", "front", "back")
    kind = "block"

    def __init__(self, front, arity):
        front = tuple(sorted(set(int(i) for i in front)))
        if not 1 <= arity <= MAX_ARITY:
            raise ValueError(f"arity {arity} out of range")
        if not front:
            raise ValueError("front block must be nonempty")
        if any(not 0 <= i < arity for i in front):
            raise ValueError("front block outside active variables")
        if len(front) >= arity:
            raise ValueError("front block must be a proper subset")
        self.arity = arity
        self.front = front
        self.back = tuple(i for i in range(arity) if i not in front)

    def key(self, e):
        f, b = self.front, self.back
        fdeg = sum(e[i] for i in f)
        bdeg = sum(e[i] for i in b)
        return ((fdeg,) + tuple(-e[i] for i in reversed(f))
                + (bdeg,) + tuple(-e[i] for i in reversed(b)))

    def __eq__(self, other):
        return (isinstance(other, BlockEliminationOrder)
                and other.arity == self.arity and other.front == self.front)

    def __hash__(self):
        return hash(("block", self.arity, self.front))

    def __repr__(self):
        return f"BlockEliminationOrder(front={self.front}, arity={self.arity})"


def compare_monomials(u, v, order):
    """Compare two exponents under an order; returns LESS, EQUAL or GREATER."""
    for e in (u, v):
        if len(e) != CAPACITY:
            raise ValueError("exponent has wrong capacity")
        if not exp_supported_within(e, order.arity):
            raise ContextMismatchError(
                "exponent uses variables outside the order's arity")
    ku, kv = order.key(u), order.key(v)
    if ku < kv:
        return LESS
    if ku > kv:
        return GREATER
    return EQUAL
