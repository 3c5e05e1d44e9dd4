"""Homogeneous ideals: membership, quotients, intersections, saturation.

Quotients go through intersection with a principal ideal using one tag
variable and a block elimination order, then exact division.  Saturation
J : I^inf is the intersection over generators F of the stabilized quotient
chain J, (J:F), ((J:F):F), ...
"""

from .groebner import GroebnerBasis, buchberger, normal_form
from .orders import ElimOrder, GrevlexOrder
from .packing import PackedContext
from .poly import Polynomial, Ring


class InternalError(RuntimeError):
    """An impossible-by-construction condition; indicates a kernel bug."""


class Ideal:
    """A homogeneous ideal given by nonzero homogeneous generators."""

    def __init__(self, ring, gens):
        gens = tuple(gens)
        if not gens:
            raise ValueError("ideal needs at least one generator")
        if ring.nvars < 2:
            raise ValueError("ambient ring needs at least two variables")
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator ring mismatch")
            if g.is_zero():
                raise ValueError("zero generator")
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator {g}")
        self.ring = ring
        self.gens = gens
        self._gb = {}

    def groebner(self, order=None) -> GroebnerBasis:
        if order is None:
            order = GrevlexOrder(self.ring.nvars)
        gb = self._gb.get(order.name)
        if gb is None:
            gb = buchberger(self, order)
            self._gb[order.name] = gb
        return gb

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def generator_degrees(self):
        return tuple(g.homogeneous_degree() for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return False
        if self.gens == other.gens:
            return True
        return self.groebner().basis == other.groebner().basis

    def __repr__(self):
        return f"Ideal({len(self.gens)} gens over {self.ring.field.name}, nvars={self.ring.nvars})"


def _extend_poly(f: Polynomial, ring_ext: Ring) -> Polynomial:
    """Reinterpret f in a ring with extra trailing variables."""
    pad = (0,) * (ring_ext.nvars - f.ring.nvars)
    return Polynomial(ring_ext, {m + pad: c for m, c in f.terms.items()})


def _drop_tag(f: Polynomial, ring: Ring) -> Polynomial:
    return Polynomial(ring, {m[:-1]: c for m, c in f.terms.items()})


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    """a `intersect` b via a tag variable t: eliminate t from t*a + (1-t)*b."""
    if a.ring != b.ring:
        raise ValueError("ideal ring mismatch")
    ring = a.ring
    ext = Ring(ring.field, ring.nvars + 1)
    t = ext.variable(ring.nvars)
    one_minus_t = ext.one() - t
    gens = [t * _extend_poly(g, ext) for g in a.gens]
    gens += [one_minus_t * _extend_poly(g, ext) for g in b.gens]
    gb = buchberger(gens, ElimOrder(ext.nvars))
    kept = [g for g in gb if all(m[-1] == 0 for m in g.terms)]
    if not kept:
        raise InternalError("empty intersection of nonzero homogeneous ideals")
    return Ideal(ring, [_drop_tag(g, ring) for g in kept])


def exact_divide(g: Polynomial, f: Polynomial) -> Polynomial:
    """g / f with zero remainder; raises InternalError if f does not divide g."""
    ring = g.ring
    field = ring.field
    ctx = PackedContext(ring.nvars)
    key = ctx.key
    guards = ctx.guards
    fterms = {ctx.pack(m): c for m, c in f.terms.items()}
    lf = max(fterms, key=key)
    cf_inv = field.inv(fterms[lf])
    q = {}
    r = {ctx.pack(m): c for m, c in g.terms.items()}
    while r:
        lm = max(r, key=key)
        if ((lm | guards) - lf) & guards != guards:
            raise InternalError(f"exact division failed: {f} does not divide {g}")
        qm = lm - lf
        qc = field.mul(r[lm], cf_inv)
        q[qm] = qc
        for tm, tc in fterms.items():
            t = qm + tm
            v = field.sub(r.get(t, field.zero), field.mul(qc, tc))
            if v != field.zero:
                r[t] = v
            else:
                r.pop(t, None)
    return Polynomial(ring, {ctx.unpack(s): c for s, c in q.items()})


def ideal_quotient(j: Ideal, f: Polynomial) -> Ideal:
    """(j : f) = {g : g*f in j}, via j `intersect` (f) divided by f."""
    if f.ring != j.ring:
        raise ValueError("ring mismatch")
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("quotient divisor must be homogeneous and nonzero")
    if f.homogeneous_degree() == 0:
        return j  # unit divisor
    inter = ideal_intersection(j, Ideal(j.ring, [f]))
    return Ideal(j.ring, [exact_divide(g, f) for g in inter.gens])


def _contains_ideal(big: Ideal, small: Ideal) -> bool:
    gb = big.groebner()
    return all(gb.contains(g) for g in small.gens)


def saturate_by_poly(j: Ideal, f: Polynomial) -> Ideal:
    """j : f^inf as the fixed point of the quotient chain."""
    cur = j
    while True:
        nxt = ideal_quotient(cur, f)
        # cur is contained in (cur : f); equality iff the new generators
        # already lie in cur
        if _contains_ideal(cur, nxt):
            return cur
        cur = nxt


def saturate(j: Ideal, i: Ideal) -> Ideal:
    """j : i^inf, the intersection over generators F of i of j : F^inf."""
    if j.ring != i.ring:
        raise ValueError("ideal ring mismatch")
    parts = [saturate_by_poly(j, f) for f in i.gens]
    out = parts[0]
    for p in parts[1:]:
        # skip the elimination round when one side already contains the other
        if _contains_ideal(p, out):
            continue
        if _contains_ideal(out, p):
            out = p
            continue
        out = ideal_intersection(out, p)
    return out
