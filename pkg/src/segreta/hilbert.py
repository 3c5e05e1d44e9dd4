"""Dimension and degree of projective schemes via Hilbert series.

The Hilbert series of the quotient by a Groebner lead-term ideal equals
that of the quotient by the ideal itself, so everything reduces to the
monomial case, handled by the standard pivot-splitting recursion

    N(L) = N(L + (x_v)) + t * N(L : x_v).

The series is N(t)/(1-t)^nvars; cancelling all (1-t) factors leaves
P(t)/(1-t)^krull with P(1) = degree of the projective scheme.
"""

from dataclasses import dataclass

from .orders import GrevlexOrder
from .poly import mono_divides


@dataclass(frozen=True)
class HilbertData:
    """Krull dimension of the affine cone, projective dimension (None for an
    empty scheme), degree (0 for empty), and the reduced numerator P(t)."""

    krull_dim: int
    proj_dim: int | None
    degree: int
    numerator: tuple[int, ...]

    @property
    def empty(self) -> bool:
        return self.proj_dim is None


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_add(a, b, shift=0):
    out = list(a) + [0] * max(0, shift + len(b) - len(a))
    for j, y in enumerate(b):
        out[shift + j] += y
    return out


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _minimalize(gens):
    """Minimal generators of a monomial ideal (drop divisible ones)."""
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return out


def _numerator(gens, memo):
    """Hilbert numerator of the quotient by the monomial ideal (gens minimal)."""
    if not gens:
        return [1]
    key = tuple(sorted(gens))
    hit = memo.get(key)
    if hit is not None:
        return hit
    supports = [[i for i, e in enumerate(g) if e] for g in gens]
    if any(not s for s in supports):  # a unit generator
        memo[key] = [0]
        return [0]
    if all(len(s) == 1 for s in supports):
        # pairwise-coprime variable powers: product of (1 - t^deg)
        out = [1]
        for g in gens:
            d = sum(g)
            factor = [0] * (d + 1)
            factor[0] = 1
            factor[d] = -1
            out = _poly_mul(out, factor)
        memo[key] = out
        return out
    counts = {}
    for g, s in zip(gens, supports):
        if len(s) > 1:
            for i in s:
                counts[i] = counts.get(i, 0) + 1
    v = max(sorted(counts), key=lambda i: counts[i])
    plus = _minimalize([g for g in gens if g[v] == 0] + [_power(v, 1, len(gens[0]))])
    colon = _minimalize(
        [g[:v] + (g[v] - 1 if g[v] else 0,) + g[v + 1 :] for g in gens]
    )
    n_plus = _numerator(plus, memo)
    n_colon = _numerator(colon, memo)
    out = _trim(_poly_add(n_plus, n_colon, shift=1))
    memo[key] = out
    return out


def _power(i, e, nvars):
    m = [0] * nvars
    m[i] = e
    return tuple(m)


def monomial_numerator(lead_monomials, nvars):
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of the quotient."""
    return _numerator(_minimalize(lead_monomials), {})


def hilbert_data(j, order=None) -> HilbertData:
    """HilbertData of the projective scheme cut out by the homogeneous ideal j.

    The result is independent of the monomial order used for the basis.
    """
    if order is None:
        order = GrevlexOrder(j.ring.nvars)
    gb = j.groebner(order)
    nvars = j.ring.nvars
    num = monomial_numerator(gb.lead_monomials(), nvars)
    if not _trim(list(num)):
        # unit ideal: the zero ring
        return HilbertData(krull_dim=0, proj_dim=None, degree=0, numerator=(0,))
    cancels = 0
    while sum(num) == 0:
        # divide by (1 - t): q_k = -(num_{k+1} + ... ) accumulated backwards
        q = [0] * (len(num) - 1)
        acc = 0
        for k in range(len(num) - 1, 0, -1):
            acc += num[k]
            q[k - 1] = -acc
        num = _trim(q) or [0]
        cancels += 1
    krull = nvars - cancels
    if krull < 0:
        raise AssertionError("numerator cancelled more than nvars times")
    value = sum(num)
    if krull == 0:
        # quotient is finite-dimensional: the scheme misses projective space
        return HilbertData(krull_dim=0, proj_dim=None, degree=0, numerator=tuple(num))
    return HilbertData(
        krull_dim=krull, proj_dim=krull - 1, degree=value, numerator=tuple(num)
    )
