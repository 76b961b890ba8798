"""Buchberger-based ideal arithmetic.

Normal forms, reduced Groebner bases (with Gebauer-Moeller pair pruning
and normal-strategy selection), elimination, quotient, intersection,
saturation and weight-vector initial ideals.

The kernel works on "keyed" term lists: (order_key, exponent, coeff)
triples sorted descending.  Every order key in this package is linear in
the exponent, so multiplying a polynomial by a monomial shifts the keys
componentwise and never re-sorts.
"""

from .fields import ContextMismatchError
from .orders import (CAPACITY, MAX_ARITY, BlockEliminationOrder,
                     GrevlexOrder, WeightRefinedOrder, exp_lcm, exp_mul)
from .poly import Polynomial, _weights_for_ring


def _keyed(poly, order):
    key = order.key
    lst = [(key(e), e, c) for (e, c) in poly.terms]
    lst.sort(key=lambda t: t[0], reverse=True)
    return lst


def _from_keyed(ring, keyed):
    return Polynomial(ring, tuple((e, c) for (_, e, c) in keyed))


def _divides(a, b):
    for i in range(CAPACITY):
        if a[i] > b[i]:
            return False
    return True


def _merge_sub(a, b, field):
    """a - b for keyed lists sorted descending."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    sub, neg, is_zero = field.sub, field.neg, field.is_zero
    while i < na and j < nb:
        ka, kb = a[i][0], b[j][0]
        if ka > kb:
            out.append(a[i])
            i += 1
        elif ka < kb:
            kb_, eb, cb = b[j]
            out.append((kb_, eb, neg(cb)))
            j += 1
        else:
            c = sub(a[i][2], b[j][2])
            if not is_zero(c):
                out.append((ka, a[i][1], c))
            i += 1
            j += 1
    if i < na:
        out.extend(a[i:])
    while j < nb:
        kb_, eb, cb = b[j]
        out.append((kb_, eb, neg(cb)))
        j += 1
    return out


def _normal_form_keyed(terms, reducers, field):
    """Remainder of a keyed list under division by monic reducer triples."""
    out = []
    cur = terms
    i = 0
    mul = field.mul
    while i < len(cur):
        k0, e0, c0 = cur[i]
        hit = None
        for red in reducers:
            if _divides(red[0], e0):
                hit = red
                break
        if hit is None:
            out.append(cur[i])
            i += 1
            continue
        lead_exp, lead_key, tail = hit
        se = tuple(e0[t] - lead_exp[t] for t in range(CAPACITY))
        sk = tuple(k0[t] - lead_key[t] for t in range(len(k0)))
        scaled = [(tuple(sk[t] + k[t] for t in range(len(k0))),
                   tuple(se[t] + e[t] for t in range(CAPACITY)),
                   mul(c0, c)) for (k, e, c) in tail]
        cur = _merge_sub(cur[i + 1:], scaled, field)
        i = 0
    return out


def _monicize(terms, field):
    c = terms[0][2]
    if c == field.one:
        return terms
    inv = field.inv(c)
    mul = field.mul
    return [(k, e, mul(inv, v)) for (k, e, v) in terms]


def _as_reducer(terms):
    """(lead_exp, lead_key, tail) triple of a monic keyed list."""
    return (terms[0][1], terms[0][0], terms[1:])


def _buchberger_core(keyed_inputs, order, field):
    """Groebner basis of monic keyed inputs; Gebauer-Moeller pair updates."""
    G = []          # monic keyed term lists
    reducers = []   # parallel reducer triples
    leads = []      # lead exponents
    pairs = set()
    key = order.key

    def update(new_terms):
        # Gebauer-Moeller: prune old pairs, build minimal new ones
        nonlocal pairs
        new_terms = _monicize(new_terms, field)
        lm_new = new_terms[0][1]
        m = len(G)
        kept = set()
        for (i, j) in pairs:
            lij = exp_lcm(leads[i], leads[j])
            if (not _divides(lm_new, lij)
                    or exp_lcm(leads[i], lm_new) == lij
                    or exp_lcm(leads[j], lm_new) == lij):
                kept.add((i, j))
        groups = {}
        for i in range(m):
            groups.setdefault(exp_lcm(leads[i], lm_new), []).append(i)
        minimal = []
        for lcm_exp in sorted(groups, key=key):
            if all(not _divides(prev, lcm_exp) for prev in minimal):
                minimal.append(lcm_exp)
        for lcm_exp in minimal:
            members = groups[lcm_exp]
            if any(exp_lcm(leads[i], lm_new) == exp_mul(leads[i], lm_new)
                   for i in members):
                continue  # coprime leads: S-polynomial reduces to zero
            kept.add((min(members), m))
        pairs = kept
        G.append(new_terms)
        reducers.append(_as_reducer(new_terms))
        leads.append(lm_new)

    for terms in keyed_inputs:
        if terms:
            update(terms)

    while pairs:
        # normal strategy with a deterministic index tie-break
        i, j = min(pairs,
                   key=lambda p: (key(exp_lcm(leads[p[0]], leads[p[1]])), p))
        pairs.discard((i, j))
        lcm_exp = exp_lcm(leads[i], leads[j])
        lcm_key = key(lcm_exp)
        spair = None
        parts = []
        for idx in (i, j):
            lead_exp, lead_key, tail = reducers[idx]
            sk = tuple(lcm_key[t] - lead_key[t] for t in range(len(lcm_key)))
            se = tuple(lcm_exp[t] - lead_exp[t] for t in range(CAPACITY))
            parts.append([(tuple(sk[t] + k[t] for t in range(len(sk))),
                           tuple(se[t] + e[t] for t in range(CAPACITY)), c)
                          for (k, e, c) in tail])
        spair = _merge_sub(parts[0], parts[1], field)
        remainder = _normal_form_keyed(spair, reducers, field)
        if remainder:
            update(remainder)

    return G


def _reduce_basis(G, field):
    """Minimalize and fully interreduce a Groebner basis in place."""
    order_of = lambda terms: terms[0][0]
    G = sorted((g for g in G if g), key=order_of)
    minimal = []
    for g in G:
        lm = g[0][1]
        if all(not _divides(h[0][1], lm) for h in minimal):
            minimal.append(g)
    basis = [list(g) for g in minimal]
    changed = True
    while changed:
        changed = False
        for idx in range(len(basis)):
            if basis[idx] is None:
                continue
            others = [_as_reducer(b) for j, b in enumerate(basis)
                      if j != idx and b is not None]
            r = _normal_form_keyed(basis[idx], others, field)
            if not r:
                basis[idx] = None
                changed = True
                continue
            r = _monicize(r, field)
            if r != basis[idx]:
                basis[idx] = r
                changed = True
    basis = [b for b in basis if b is not None]
    basis.sort(key=order_of)
    return basis


class GroebnerBasis:
    """Reduced Groebner basis; elements monic, sorted by ascending lead."""

    __slots__ = ("ring", "elements", "_reducers")

    def __init__(self, ring, elements):
        self.ring = ring
        self.elements = elements
        self._reducers = None

    @property
    def order(self):
        return self.ring.order

    def reducers(self):
        if self._reducers is None:
            order = self.ring.order
            self._reducers = [_as_reducer(_keyed(g, order))
                              for g in self.elements]
        return self._reducers

    def lead_exponents(self):
        return [g.lead_exponent for g in self.elements]

    @property
    def is_unit_ideal(self):
        return len(self.elements) == 1 and self.elements[0].degree == 0

    def normal_form(self, f):
        if f.ring.field != self.ring.field:
            raise ContextMismatchError("polynomial and basis fields differ")
        keyed = _keyed(f, self.ring.order)
        r = _normal_form_keyed(keyed, self.reducers(), self.ring.field)
        return _from_keyed(self.ring, r).in_ring(f.ring)

    def contains(self, f):
        return self.normal_form(f).is_zero

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.elements]})"


# when set, every basis the engine produces is re-checked against the
# Buchberger criterion before being returned (used by the test suite)
VERIFY_PRODUCED_BASES = False


def buchberger(generators, order=None):
    """Reduced Groebner basis of a generator list or IdealBasis."""
    if isinstance(generators, IdealBasis):
        ring = generators.ring
        gens = generators.generators
    else:
        gens = tuple(generators)
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    if order is None:
        order = GrevlexOrder(ring.arity)
    work_ring = ring.with_order(order)
    field = ring.field
    keyed = []
    for g in gens:
        if g.ring.field != field or g.ring.arity != ring.arity:
            raise ContextMismatchError("generators live in different rings")
        if g:
            keyed.append(_monicize(_keyed(g, order), field))
    raw = _buchberger_core(keyed, order, field)
    reduced = _reduce_basis(raw, field)
    elements = tuple(_from_keyed(work_ring, g) for g in reduced)
    basis = GroebnerBasis(work_ring, elements)
    if VERIFY_PRODUCED_BASES and not is_groebner(basis):
        raise AssertionError("produced basis fails the Buchberger criterion")
    return basis


def is_groebner(gb):
    """Buchberger criterion: every S-polynomial reduces to zero."""
    field = gb.ring.field
    reducers = gb.reducers()
    key = gb.ring.order.key
    n = len(reducers)
    for i in range(n):
        for j in range(i + 1, n):
            le_i, lk_i, tail_i = reducers[i]
            le_j, lk_j, tail_j = reducers[j]
            lcm_exp = exp_lcm(le_i, le_j)
            lcm_key = key(lcm_exp)
            parts = []
            for (le, lk, tail) in ((le_i, lk_i, tail_i), (le_j, lk_j, tail_j)):
                sk = tuple(lcm_key[t] - lk[t] for t in range(len(lcm_key)))
                se = tuple(lcm_exp[t] - le[t] for t in range(CAPACITY))
                parts.append([(tuple(sk[t] + k[t] for t in range(len(sk))),
                               tuple(se[t] + e[t] for t in range(CAPACITY)), c)
                              for (k, e, c) in tail])
            spair = _merge_sub(parts[0], parts[1], field)
            if _normal_form_keyed(spair, reducers, field):
                return False
    return True


class IdealBasis:
    """Generator list with its ring context and a homogeneity flag.

    Generators are normalized monic, deduplicated and sorted; an empty
    list denotes the zero ideal.  Reduced Groebner bases are cached per
    monomial order.
    """

    __slots__ = ("ring", "generators", "homogeneous", "_gb_cache")

    def __init__(self, ring, generators):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError("IdealBasis expects Polynomial generators")
            g = g.in_ring(ring)
            if g.is_zero:
                continue
            g = g.monic()
            if g.terms in seen:
                continue
            seen.add(g.terms)
            gens.append(g)
        key = ring.order.key
        gens.sort(key=lambda p: key(p.lead_exponent))
        self.ring = ring
        self.generators = tuple(gens)
        self.homogeneous = all(g.is_homogeneous for g in gens)
        self._gb_cache = {}

    def groebner(self, order=None):
        if order is None:
            order = GrevlexOrder(self.ring.arity)
        gb = self._gb_cache.get(order)
        if gb is None:
            gb = buchberger(self, order)
            self._gb_cache[order] = gb
        return gb

    def contains(self, f):
        return self.groebner().contains(f)

    @property
    def is_zero(self):
        return not self.generators

    def __repr__(self):
        return f"IdealBasis({[str(g) for g in self.generators]})"


def ideal(*gens):
    """IdealBasis from polynomials sharing a ring."""
    if not gens:
        raise ValueError("ideal() needs at least one generator")
    return IdealBasis(gens[0].ring, gens)


def ideal_sum(a, b):
    _check_rings(a, b)
    return IdealBasis(a.ring, a.generators + b.generators)


def _check_rings(a, b):
    if a.ring != b.ring:
        raise ContextMismatchError("ideals live in different rings")


def normal_form(f, basis):
    """Remainder of f modulo a GroebnerBasis (or an ideal's cached basis)."""
    if isinstance(basis, IdealBasis):
        basis = basis.groebner()
    return basis.normal_form(f)


def ideal_membership(f, ideal_basis):
    return ideal_basis.groebner().contains(f)


def ideal_equal(a, b):
    """Canonical comparison via reduced grevlex bases."""
    _check_rings(a, b)
    ga = a.groebner(GrevlexOrder(a.ring.arity))
    gb = b.groebner(GrevlexOrder(b.ring.arity))
    return ga.elements == gb.elements


def initial_ideal(ideal_basis, weights):
    """Ideal of initial forms with respect to a weight vector.

    Generated by the initial forms of a reduced Groebner basis in the
    weight-refined order; shares the Hilbert function of the input.
    """
    ring = ideal_basis.ring
    if not ideal_basis.homogeneous:
        raise ValueError("initial ideals require a homogeneous input ideal")
    w = _weights_for_ring(ring, weights)
    refined = WeightRefinedOrder(w, ring.arity)
    gb = ideal_basis.groebner(refined)
    gens = [g.initial_form(w).in_ring(ring) for g in gb.elements]
    return IdealBasis(ring, gens)


def eliminate(ideal_basis, front):
    """Generators of the intersection with the subring avoiding `front` slots."""
    ring = ideal_basis.ring
    front = tuple(sorted(set(front)))
    if not front:
        return ideal_basis
    if any(not 0 <= i < ring.arity for i in front):
        raise ValueError("front variables outside the ring")
    order = BlockEliminationOrder(front, ring.arity)
    gb = ideal_basis.groebner(order)
    kept = []
    for g in gb.elements:
        if any(g.lead_exponent[i] for i in front):
            continue
        if any(e[i] for e, _ in g.terms for i in front):
            raise AssertionError("elimination order misbehaved")
        kept.append(g.in_ring(ring))
    return IdealBasis(ring, kept)


def restrict_to_ring(ideal_basis, ring):
    return IdealBasis(ring, [g.in_ring(ring) for g in ideal_basis.generators])


def _extension(ring):
    if ring.arity >= MAX_ARITY:
        raise ValueError("no auxiliary variable slot left for this construction")
    return ring.extended(ring.arity + 1)


def ideal_intersect(a, b):
    """Intersection via the auxiliary-variable construction t*a + (1-t)*b."""
    _check_rings(a, b)
    ring = a.ring
    if a.is_zero or b.is_zero:
        return IdealBasis(ring, ())
    ext = _extension(ring)
    t = ext.gen(ring.arity)
    one = ext.one()
    gens = [t * f.in_ring(ext) for f in a.generators]
    gens += [(one - t) * g.in_ring(ext) for g in b.generators]
    elim = eliminate(IdealBasis(ext, gens), front=(ring.arity,))
    return restrict_to_ring(elim, ring)


def divide_exact(f, g):
    """Quotient f / g when g divides f exactly; ValueError otherwise."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    if g.ring != ring:
        raise ContextMismatchError("operands live in different rings")
    field = ring.field
    g_keyed = _keyed(g, ring.order)
    lead_key, lead_exp, lead_coeff = g_keyed[0]
    cur = _keyed(f, ring.order)
    quotient = {}
    mul, div = field.mul, field.div
    while cur:
        k0, e0, c0 = cur[0]
        if not _divides(lead_exp, e0):
            raise ValueError("polynomial is not divisible")
        se = tuple(e0[t] - lead_exp[t] for t in range(CAPACITY))
        sk = tuple(k0[t] - lead_key[t] for t in range(len(k0)))
        q = div(c0, lead_coeff)
        quotient[se] = q
        scaled = [(tuple(sk[t] + k[t] for t in range(len(sk))),
                   tuple(se[t] + e[t] for t in range(CAPACITY)),
                   mul(q, c)) for (k, e, c) in g_keyed]
        cur = _merge_sub(cur, scaled, field)
    return Polynomial.from_dict(ring, quotient)


def ideal_quotient_poly(ideal_basis, h):
    """Colon ideal I : (h) for a single nonzero polynomial."""
    if h.is_zero:
        raise ValueError("colon by the zero polynomial")
    ring = ideal_basis.ring
    h = h.in_ring(ring)
    if not h.degree:
        return ideal_basis
    meet = ideal_intersect(ideal_basis, IdealBasis(ring, (h,)))
    return IdealBasis(ring, [divide_exact(g, h) for g in meet.generators])


def ideal_quotient(a, b):
    """Colon ideal a : b, intersected over the generators of b."""
    _check_rings(a, b)
    if b.is_zero:
        raise ValueError("colon by the zero ideal is undefined")
    result = None
    for h in b.generators:
        q = ideal_quotient_poly(a, h)
        result = q if result is None else ideal_intersect(result, q)
        if result.is_zero:
            break
    return result


def saturate_poly(ideal_basis, f):
    """Saturation I : f^infinity by the auxiliary-variable construction."""
    if f.is_zero:
        raise ValueError("saturation by the zero polynomial")
    ring = ideal_basis.ring
    f = f.in_ring(ring)
    if not f.degree:
        return ideal_basis
    ext = _extension(ring)
    t = ext.gen(ring.arity)
    gens = [g.in_ring(ext) for g in ideal_basis.generators]
    gens.append(ext.one() - t * f.in_ring(ext))
    elim = eliminate(IdealBasis(ext, gens), front=(ring.arity,))
    return restrict_to_ring(elim, ring)


def _divide_variable_power(poly, slot, power):
    terms = tuple((tuple(e[t] - power if t == slot else e[t]
                         for t in range(CAPACITY)), c)
                  for (e, c) in poly.terms)
    # dividing every term by the same monomial preserves the sort order
    return Polynomial(poly.ring, terms)


def _saturate_last_variable(ideal_basis):
    """I : v^infinity for the last grevlex variable of a homogeneous ideal.

    For homogeneous ideals in graded reverse lexicographic order, dividing
    every reduced-basis element by its largest power of the last variable
    and iterating to a fixed point yields the saturation.
    """
    ring = ideal_basis.ring
    last = ring.arity - 1
    cur = ideal_basis
    while True:
        gb = cur.groebner(GrevlexOrder(ring.arity))
        divided = []
        changed = False
        for g in gb.elements:
            k = min(e[last] for e, _ in g.terms)
            if k:
                changed = True
                g = _divide_variable_power(g, last, k)
            divided.append(g)
        if not changed:
            return cur
        cur = IdealBasis(ring, divided)


def saturate_variable(ideal_basis, slot):
    """I : v^infinity for one variable of a homogeneous ideal."""
    if not ideal_basis.homogeneous:
        raise ValueError("variable saturation requires a homogeneous ideal")
    ring = ideal_basis.ring
    last = ring.arity - 1
    if slot == last:
        return _saturate_last_variable(ideal_basis)
    swapped = IdealBasis(ring, [g.swap_variables(slot, last)
                                for g in ideal_basis.generators])
    sat = _saturate_last_variable(swapped)
    if sat is swapped:
        return ideal_basis
    return IdealBasis(ring, [g.swap_variables(slot, last)
                             for g in sat.generators])


def saturate_irrelevant(ideal_basis):
    """Saturation with respect to the irrelevant maximal ideal.

    Computed as the intersection of the single-variable saturations; if
    any of them already equals the input, the input is saturated.
    """
    if not ideal_basis.homogeneous:
        raise ValueError("saturation requires a homogeneous ideal")
    ring = ideal_basis.ring
    sats = []
    for slot in range(ring.arity - 1, -1, -1):
        s = saturate_variable(ideal_basis, slot)
        if ideal_equal(s, ideal_basis):
            return ideal_basis
        if not any(ideal_equal(s, prev) for prev in sats):
            sats.append(s)
    result = sats[0]
    for s in sats[1:]:
        result = ideal_intersect(result, s)
    return result
