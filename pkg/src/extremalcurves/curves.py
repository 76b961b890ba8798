"""Constructors and fixtures for saturated curve ideals in P^3.

The constructors validate their output through the Hilbert machinery
(saturated, dimension one, expected degree and genus).  Smoothness and
local Cohen-Macaulayness of inputs are NOT verified; the degeneration
pipeline certifies its output and trusts its input to be a curve.
"""

import random

from .fields import ContextMismatchError
from .poly import (BinaryForm, PolyRing, binary_forms_coprime,
                   _univariate_gcd)
from .groebner import (IdealBasis, eliminate, ideal_quotient,
                       restrict_to_ring, saturate_irrelevant)
from .hilbert import hilbert
from . import linalg

CURVE_ARITY = 4


def curve_ring(field):
    """The ambient coordinate ring k[x, y, z, w]."""
    return PolyRing(field, CURVE_ARITY)


class CoordinateChange:
    """Invertible linear change of the four coordinates, with its inverse."""

    __slots__ = ("field", "matrix", "inverse")

    def __init__(self, field, matrix):
        rows = [[field.coerce(v) for v in row] for row in matrix]
        if len(rows) != CURVE_ARITY or any(len(r) != CURVE_ARITY for r in rows):
            raise ValueError("a 4x4 matrix is required")
        inverse = linalg.mat_inverse(field, rows)  # ValueError when singular
        self.field = field
        self.matrix = tuple(tuple(r) for r in rows)
        self.inverse = tuple(tuple(r) for r in inverse)

    @classmethod
    def identity(cls, field):
        return cls(field, linalg.mat_identity(field, CURVE_ARITY))

    @classmethod
    def random(cls, field, rng):
        """Entry-wise uniform draw, rejecting singular matrices."""
        while True:
            rows = [[field.random_element(rng) for _ in range(CURVE_ARITY)]
                    for _ in range(CURVE_ARITY)]
            if linalg.mat_is_invertible(field, rows):
                return cls(field, rows)

    @property
    def is_identity(self):
        ident = linalg.mat_identity(self.field, CURVE_ARITY)
        return self.matrix == tuple(tuple(r) for r in ident)

    def apply(self, poly):
        return poly.substitute_linear(self.matrix)

    def unapply(self, poly):
        return poly.substitute_linear(self.inverse)

    def __repr__(self):
        return f"CoordinateChange({self.matrix})"


def transform_ideal(ideal_basis, change):
    return IdealBasis(ideal_basis.ring,
                      [change.apply(g) for g in ideal_basis.generators])


class CurveIdeal:
    """Saturated homogeneous ideal of a curve with cached invariants.

    Besides degree d and arithmetic genus g, the derived quantities
    a = (d-2)(d-3)/2 - g (the maximal Rao dimension), l = d - 2 and
    nu = (d-1)(d-2)/2 - g = a + l recur throughout the degeneration
    pipeline and are exposed as properties.
    """

    __slots__ = ("ideal", "degree", "genus")

    def __init__(self, ideal, degree, genus):
        self.ideal = ideal
        self.degree = degree
        self.genus = genus

    @classmethod
    def from_ideal(cls, ideal_basis, saturate=True):
        if ideal_basis.ring.arity != CURVE_ARITY:
            raise ValueError("curve ideals live in the four-variable ring")
        if not ideal_basis.homogeneous:
            raise ValueError("curve ideals must be homogeneous")
        sat = saturate_irrelevant(ideal_basis) if saturate else ideal_basis
        hd = hilbert(sat)
        if hd.dimension != 1:
            raise ValueError(
                f"not a curve: scheme has dimension {hd.dimension}")
        return cls(sat, hd.degree, hd.genus)

    @classmethod
    def trusted(cls, ideal_basis, degree, genus):
        """Skip validation; for transforms that provably preserve invariants."""
        return cls(ideal_basis, degree, genus)

    @property
    def ring(self):
        return self.ideal.ring

    @property
    def field(self):
        return self.ideal.ring.field

    @property
    def a(self):
        return (self.degree - 2) * (self.degree - 3) // 2 - self.genus

    @property
    def l(self):
        return self.degree - 2

    @property
    def nu(self):
        return (self.degree - 1) * (self.degree - 2) // 2 - self.genus

    @property
    def is_planar_genus(self):
        return self.genus == (self.degree - 1) * (self.degree - 2) // 2

    @property
    def is_acm_boundary_genus(self):
        return self.genus == (self.degree - 2) * (self.degree - 3) // 2

    def __repr__(self):
        return (f"CurveIdeal(d={self.degree}, g={self.genus}, "
                f"gens={[str(g) for g in self.ideal.generators]})")


def extremal_curve(field, d, g, f_form, g_form):
    """The degree-d genus-g curve supported on x = y = 0 cut out by
    x^2, x*y, y^d and x*G - y^(d-1)*F for coprime binary forms F, G."""
    if d < 2:
        raise ValueError("extremal curves need degree at least 2")
    acm_bound = (d - 2) * (d - 3) // 2
    if g >= acm_bound:
        raise ValueError(
            "genus must lie strictly below (d-2)(d-3)/2; at the boundary "
            "use the plane or complete-intersection constructors")
    a = acm_bound - g
    l = d - 2
    if f_form.field != field or g_form.field != field:
        raise ContextMismatchError("forms live over a different field")
    if f_form.degree != a:
        raise ValueError(f"first form must have degree {a}")
    if g_form.degree != a + l:
        raise ValueError(f"second form must have degree {a + l}")
    if f_form.is_zero or g_form.is_zero:
        raise ValueError("zero form supplied")
    if not binary_forms_coprime(f_form, g_form):
        raise ValueError("the two forms must have no common zero")
    ring = curve_ring(field)
    x, y = ring.gen(0), ring.gen(1)
    gens = (x * x, x * y, y ** d,
            x * g_form.to_polynomial(ring) - y ** (d - 1) * f_form.to_polynomial(ring))
    curve = CurveIdeal.from_ideal(IdealBasis(ring, gens), saturate=True)
    if (curve.degree, curve.genus) != (d, g):
        raise AssertionError("extremal constructor produced wrong invariants")
    return curve


def _forms_have_common_zero(field, forms):
    """Best-effort common-zero test of a family of binary forms."""
    # a common zero away from (1, 0) shows up in the gcd of dehomogenizations,
    # a common zero at (1, 0) means every form is divisible by the second slot
    gcd = forms[0].dehomogenized()
    for f in forms[1:]:
        gcd = _univariate_gcd(field, gcd, f.dehomogenized())
    if len(gcd) > 1:
        return True
    return all(len(f.dehomogenized()) <= f.degree for f in forms)


def from_parametrization(field, forms):
    """Kernel ideal of the map sending x, y, z, w to four equal-degree
    binary forms; the image curve of the parametrization."""
    forms = tuple(forms)
    if len(forms) != 4:
        raise ValueError("exactly four parametrizing forms are required")
    degrees = {f.degree for f in forms}
    if len(degrees) != 1:
        raise ValueError("parametrizing forms must share one degree")
    d = degrees.pop()
    if d < 1:
        raise ValueError("constant parametrizations are degenerate")
    if any(f.is_zero for f in forms):
        raise ValueError("degenerate parametrization: a component is zero")
    if _forms_have_common_zero(field, forms):
        raise ValueError("degenerate parametrization: common zero")
    # slots 5, 6 are the parameter variables; eliminate them from the graph
    big = PolyRing(field, 7)
    param_slots = (5, 6)
    gens = []
    for i, f in enumerate(forms):
        gens.append(big.gen(i) - f.to_polynomial(big, slots=param_slots))
    graph = IdealBasis(big, gens)
    eliminated = eliminate(graph, front=param_slots)
    kernel = restrict_to_ring(eliminated, curve_ring(field))
    curve = CurveIdeal.from_ideal(kernel, saturate=True)
    if curve.degree != d:
        raise ValueError(
            f"parametrization is not degree-correct: expected degree {d}, "
            f"computed {curve.degree} (non-injective map?)")
    return curve


def complete_intersection(f, g):
    """Curve cut out by two homogeneous polynomials without common factor."""
    ring = f.ring
    if g.ring != ring:
        raise ContextMismatchError("polynomials live in different rings")
    if f.is_zero or g.is_zero:
        raise ValueError("zero polynomial supplied")
    if not (f.is_homogeneous and g.is_homogeneous):
        raise ValueError("complete intersections need homogeneous equations")
    m, n = f.degree, g.degree
    ideal_fg = IdealBasis(ring, (f, g))
    sat = saturate_irrelevant(ideal_fg)
    hd = hilbert(sat)
    if hd.dimension != 1:
        raise ValueError(
            "the two equations share a factor (intersection is not a curve)")
    expected_genus = m * n * (m + n - 4) // 2 + 1
    if hd.degree != m * n or hd.genus != expected_genus:
        raise ValueError(
            "the two equations share a factor (wrong degree or genus)")
    return CurveIdeal.trusted(sat, hd.degree, hd.genus)


def link(f, g, curve):
    """Liaison residual ((f, g) : I) of a curve inside a complete intersection."""
    ideal_basis = curve.ideal
    if not (ideal_basis.contains(f) and ideal_basis.contains(g)):
        raise ValueError("the curve ideal must contain both equations")
    ci = complete_intersection(f, g)  # validates the pair
    residual = ideal_quotient(ci.ideal, ideal_basis)
    residual = saturate_irrelevant(residual)
    hd = hilbert(residual)
    if hd.dimension != 1:
        raise ValueError(
            "degenerate linkage: the residual scheme is not a curve")
    expected_degree = ci.degree - curve.degree
    if expected_degree <= 0 or hd.degree != expected_degree:
        raise ValueError("degenerate linkage: residual degree mismatch")
    return CurveIdeal.trusted(residual, hd.degree, hd.genus)


def random_coordinate_change(curve, seed):
    """Apply a seeded random invertible coordinate change; deterministic."""
    rng = random.Random(seed)
    change = CoordinateChange.random(curve.field, rng)
    moved = transform_ideal(curve.ideal, change)
    # linear changes preserve saturation and all Hilbert data
    return CurveIdeal.trusted(moved, curve.degree, curve.genus), change


# ---------------------------------------------------------------------------
# named fixtures
# ---------------------------------------------------------------------------

def twisted_cubic(field):
    forms = tuple(BinaryForm.monomial(field, 3, k) for k in range(4))
    return from_parametrization(field, forms)


def rational_quartic(field):
    powers = (0, 1, 3, 4)
    forms = tuple(BinaryForm.monomial(field, 4, k) for k in powers)
    return from_parametrization(field, forms)


def elliptic_quartic(field):
    ring = curve_ring(field)
    x, y, z, w = ring.gens()
    q1 = x * x + y * y + z * z + w * w
    q2 = x * x + 2 * (y * y) + 3 * (z * z) + 4 * (w * w)
    return complete_intersection(q1, q2)


def line_xy(field):
    """The line x = y = 0."""
    ring = curve_ring(field)
    return CurveIdeal.from_ideal(IdealBasis(ring, (ring.gen(0), ring.gen(1))),
                                 saturate=False)


def quintic_genus_two(field):
    """Residual of a line inside a (2,3) complete intersection: a degree-5
    genus-2 divisor of type (2,3) on the smooth quadric x*w - y*z."""
    ring = curve_ring(field)
    x, y, z, w = ring.gens()
    quadric = x * w - y * z
    cubic = x * (z * z) + y * (w * w)
    return link(quadric, cubic, line_xy(field))


FIXTURE_BUILDERS = {
    "twisted-cubic": twisted_cubic,
    "rational-quartic": rational_quartic,
    "elliptic-quartic": elliptic_quartic,
    "quintic-g2": quintic_genus_two,
}


def fixture_names():
    return tuple(sorted(FIXTURE_BUILDERS)) + ("extremal:<d>:<g>",)


def fixture(name, field):
    """Build a named fixture curve; extremal:<d>:<g> uses F=z^a, G=w^(a+l)."""
    if name in FIXTURE_BUILDERS:
        return FIXTURE_BUILDERS[name](field)
    if name.startswith("extremal:"):
        parts = name.split(":")
        if len(parts) != 3:
            raise ValueError(f"malformed fixture name {name!r}")
        try:
            d, g = int(parts[1]), int(parts[2])
        except ValueError:
            raise ValueError(f"malformed fixture name {name!r}") from None
        a = (d - 2) * (d - 3) // 2 - g
        l = d - 2
        f_form = BinaryForm.monomial(field, a, 0)        # z^a
        g_form = BinaryForm.monomial(field, a + l, a + l)  # w^(a+l)
        return extremal_curve(field, d, g, f_form, g_form)
    raise ValueError(
        f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")
