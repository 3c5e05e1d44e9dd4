"""Buchberger's algorithm and normal forms.

Reduced Groebner bases are canonical for a fixed monomial order, so ideal
equality and membership reduce to dictionary comparisons.  The pair loop
uses the normal selection strategy (lowest lcm degree) plus the two
classical Buchberger criteria; no degree truncation is ever applied.

Internally monomials are bit-packed ints (see packing); Polynomial objects
are converted at entry and exit.
"""

import heapq

from .orders import ElimOrder, GrevlexOrder
from .packing import PackedContext
from .poly import Polynomial, RingMismatchError


class GroebnerBasis:
    """A reduced Groebner basis: monic, auto-reduced, sorted by lead term."""

    def __init__(self, ring, order, basis):
        self.ring = ring
        self.order = order
        self.basis = tuple(basis)

    def lead_monomials(self):
        return tuple(g.lead(self.order)[0] for g in self.basis)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and other.ring == self.ring
            and other.order.name == self.order.name
            and other.basis == self.basis
        )

    def __repr__(self):
        return f"GroebnerBasis({len(self.basis)} elements, {self.order.name})"


def _context_for(order, nvars) -> PackedContext:
    if isinstance(order, GrevlexOrder):
        return PackedContext(nvars, elim=False)
    if isinstance(order, ElimOrder):
        return PackedContext(nvars, elim=True)
    raise TypeError(f"unsupported order {order!r}")


def _nf_packed_prime(terms, reducers, ctx, p):
    """_nf_packed specialized to F_p: coefficient arithmetic inlined."""
    key = ctx.key
    guards = ctx.guards
    work = dict(terms)
    out = {}
    heap = [(-key(s), s) for s in work]
    heapq.heapify(heap)
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        _, m = pop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        mg = m | guards
        for lead, tail in reducers:
            if (mg - lead) & guards == guards:
                q = m - lead
                for tm, tc in tail.items():
                    t = q + tm
                    prev = work.get(t)
                    if prev is None:
                        v = -c * tc % p
                        if v:
                            work[t] = v
                            push(heap, (-key(t), t))
                    else:
                        v = (prev - c * tc) % p
                        if v:
                            work[t] = v
                        else:
                            del work[t]
                break
        else:
            out[m] = c
    return out


def _nf_packed(terms, reducers, ctx, field):
    """Full normal form of a packed term dict against monic (lead, tail)
    reducers.  Processes monomials largest-first via a lazy-deletion heap;
    every term of the result is irreducible by every reducer lead."""
    if hasattr(field, "p"):
        return _nf_packed_prime(terms, reducers, ctx, field.p)
    key = ctx.key
    guards = ctx.guards
    zero, mul, sub = field.zero, field.mul, field.sub
    work = dict(terms)
    out = {}
    heap = [(-key(s), s) for s in work]
    heapq.heapify(heap)
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        _, m = pop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        mg = m | guards
        for lead, tail in reducers:
            if (mg - lead) & guards == guards:
                q = m - lead
                for tm, tc in tail.items():
                    t = q + tm
                    prev = work.get(t)
                    if prev is None:
                        v = sub(zero, mul(c, tc))
                        if v != zero:
                            work[t] = v
                            push(heap, (-key(t), t))
                    else:
                        v = sub(prev, mul(c, tc))
                        if v != zero:
                            work[t] = v
                        else:
                            del work[t]
                break
        else:
            out[m] = c
    return out


def _monic_packed(terms, ctx, field):
    lead = max(terms, key=ctx.key)
    lc = terms[lead]
    if lc != field.one:
        inv = field.inv(lc)
        mul = field.mul
        terms = {m: mul(c, inv) for m, c in terms.items()}
    tail = dict(terms)
    del tail[lead]
    return lead, tail


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """The unique remainder of f modulo G; no term is divisible by a lead of G."""
    if f.ring != G.ring:
        raise RingMismatchError(f"{f.ring} vs {G.ring}")
    if f.is_zero():
        return f
    field = f.ring.field
    ctx = _context_for(G.order, f.ring.nvars)
    pack = ctx.pack
    reducers = [_monic_packed({pack(m): c for m, c in g.terms.items()}, ctx, field) for g in G.basis]
    red = _nf_packed({pack(m): c for m, c in f.terms.items()}, reducers, ctx, field)
    return Polynomial(f.ring, {ctx.unpack(s): c for s, c in red.items()})


def buchberger(ideal, order=None) -> GroebnerBasis:
    """Reduced Groebner basis of an Ideal or an iterable of Polynomials."""
    gens = list(ideal.gens) if hasattr(ideal, "gens") else list(ideal)
    if not gens:
        raise ValueError("no generators")
    ring = gens[0].ring
    if order is None:
        order = GrevlexOrder(ring.nvars)
    field = ring.field
    ctx = _context_for(order, ring.nvars)
    key = ctx.key
    lcm = ctx.lcm
    guards = ctx.guards
    pack = ctx.pack
    pair_deg = ctx.pair_deg

    leads = []
    tails = []
    reducers = []
    pairs = []
    pending = set()

    def add_elem(terms):
        lead, tail = _monic_packed(terms, ctx, field)
        t = len(leads)
        leads.append(lead)
        tails.append(tail)
        reducers.append((lead, tail))
        for i in range(t):
            l = lcm(leads[i], lead)
            heapq.heappush(pairs, (pair_deg(l), key(l), i, t))
            pending.add((i, t))

    packed_gens = [
        {pack(m): c for m, c in g.terms.items()} for g in gens if not g.is_zero()
    ]
    if not packed_gens:
        raise ValueError("all generators are zero")
    packed_gens.sort(key=lambda d: key(max(d, key=key)))
    for g in packed_gens:
        r = _nf_packed(g, reducers, ctx, field)
        if r:
            add_elem(r)

    zero, sub = field.zero, field.sub
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        l = lcm(li, lj)
        if l == li + lj:  # first criterion: coprime leads
            continue
        skip = False  # second (chain) criterion
        lg = l | guards
        for k2 in range(len(leads)):
            if k2 == i or k2 == j:
                continue
            if (lg - leads[k2]) & guards == guards:
                a = (i, k2) if i < k2 else (k2, i)
                b = (j, k2) if j < k2 else (k2, j)
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        qi = l - li
        qj = l - lj
        s = {}
        for tm, tc in tails[i].items():
            s[qi + tm] = tc
        for tm, tc in tails[j].items():
            t = qj + tm
            v = sub(s.get(t, zero), tc)
            if v != zero:
                s[t] = v
            else:
                s.pop(t, None)
        r = _nf_packed(s, reducers, ctx, field)
        if r:
            add_elem(r)

    # minimalize: drop elements whose lead is divisible by another lead
    idx = sorted(range(len(leads)), key=lambda i: key(leads[i]))
    kept = []
    for i in idx:
        lg = leads[i] | guards
        if not any((lg - leads[j]) & guards == guards for j in kept):
            kept.append(i)
    # inter-reduce tails
    final = []
    kept_reducers = [(leads[i], tails[i]) for i in kept]
    for pos, i in enumerate(kept):
        others = kept_reducers[:pos] + kept_reducers[pos + 1 :]
        terms = dict(tails[i])
        terms[leads[i]] = field.one
        red = _nf_packed(terms, others, ctx, field)
        final.append(Polynomial(ring, {ctx.unpack(s): c for s, c in red.items()}))
    final.sort(key=lambda g: order.key(g.lead(order)[0]))
    return GroebnerBasis(ring, order, final)
