"""Sparse multivariate polynomials over an exact coefficient field.

Monomials are exponent tuples of fixed length ``ring.nvars``; polynomials
are dicts monomial -> nonzero coefficient.  Everything is immutable by
convention: operations return fresh objects and never mutate arguments.
"""

from .field import PrimeField, RationalField


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff a | b componentwise."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


class Ring:
    """A polynomial ring: coefficient field + number of variables."""

    def __init__(self, field, nvars: int):
        if nvars < 1:
            raise ValueError("ring needs at least one variable")
        self.field = field
        self.nvars = nvars

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(self.field.one)

    def constant(self, c):
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, i: int):
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable index {i} out of range")
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, {tuple(m): self.field.one})

    def monomial(self, expts, c=None):
        expts = tuple(expts)
        if len(expts) != self.nvars or any(e < 0 for e in expts):
            raise ValueError(f"bad exponent vector {expts}")
        c = self.field.one if c is None else c
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {expts: c})

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and other.field == self.field
            and other.nvars == self.nvars
        )

    def __hash__(self):
        return hash((self.field, self.nvars))

    def __repr__(self):
        return f"Ring({self.field.name}, nvars={self.nvars})"


class RingMismatchError(ValueError):
    pass


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        zero = ring.field.zero
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != zero}

    # -- queries ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        """Max total degree, -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def homogeneous_degree(self):
        """The common total degree of all terms, or None if mixed/zero."""
        degs = {sum(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self):
        return self.homogeneous_degree() is not None

    def lead(self, order):
        """(monomial, coefficient) of the largest term under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def sorted_terms(self, order):
        """Terms as (monomial, coefficient), descending in ``order``."""
        return [(m, self.terms[m]) for m in sorted(self.terms, key=order.key, reverse=True)]

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = f.add(out.get(m, f.zero), c)
            if v == f.zero:
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial(self.ring, out)

    def __sub__(self, other):
        self._check(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = f.sub(out.get(m, f.zero), c)
            if v == f.zero:
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial(self.ring, out)

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        f = self.ring.field
        zero, mul, add = f.zero, f.mul, f.add
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = add(out.get(m, zero), mul(c1, c2))
                if v == zero:
                    out.pop(m, None)
                else:
                    out[m] = v
        return Polynomial(self.ring, out)

    def scale(self, c):
        f = self.ring.field
        if c == f.zero:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.mul(cc, c) for m, cc in self.terms.items()})

    def term_mul(self, mono, c=None):
        """Multiply by the single term c * x^mono."""
        f = self.ring.field
        if c is None:
            c = f.one
        if c == f.zero:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {tuple(x + y for x, y in zip(m, mono)): f.mul(cc, c) for m, cc in self.terms.items()},
        )

    def monic(self, order):
        if not self.terms:
            return self
        _, lc = self.lead(order)
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    def partial(self, i: int):
        """Partial derivative with respect to variable i."""
        f = self.ring.field
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            v = f.mul(c, f.of_int(e))
            if v == f.zero:
                continue
            mm = list(m)
            mm[i] = e - 1
            out[tuple(mm)] = v
        return Polynomial(self.ring, out)

    # -- equality / printing -----------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)} over {self.ring.field.name}>"


def format_polynomial(p: Polynomial, names=None) -> str:
    """Canonical text form: grevlex-descending terms, explicit ``*`` and ``^``.

    Output re-parses to an equal polynomial under the ideal-file grammar.
    """
    if p.is_zero():
        return "0"
    if names is None:
        names = [f"x{i}" for i in range(p.ring.nvars)]
    from .orders import GrevlexOrder

    order = GrevlexOrder(p.ring.nvars)
    one = p.ring.field.one
    pieces = []
    for m, c in p.sorted_terms(order):
        factors = [
            names[i] if e == 1 else f"{names[i]}^{e}"
            for i, e in enumerate(m)
            if e > 0
        ]
        if not factors:
            body = _coef_str(c)
        elif c == one:
            body = "*".join(factors)
        else:
            body = "*".join([_coef_str(c)] + factors)
        pieces.append(body)
    return " + ".join(pieces)


def _coef_str(c) -> str:
    s = str(c)
    if "/" in s or s.startswith("-"):
        return f"({s})"
    return s
