"""Monomial orders as flat integer sort keys on exponent tuples.

A monomial is an exponent tuple; m1 > m2 in the order iff key(m1) > key(m2)
lexicographically.  Keys are plain int tuples so heaps and max() work on
them directly (negate componentwise to flip direction).
"""


class GrevlexOrder:
    """Graded reverse lexicographic: degree first, then the rightmost
    nonzero entry of the exponent difference decides (negatively)."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.name = "grevlex"

        def key(m):
            return (sum(m),) + tuple(-e for e in reversed(m))

        self.key = key

    def __eq__(self, other):
        return isinstance(other, GrevlexOrder) and other.nvars == self.nvars

    def __hash__(self):
        return hash(("grevlex", self.nvars))

    def __repr__(self):
        return f"GrevlexOrder({self.nvars})"


class ElimOrder:
    """Single-block elimination order for the last variable (the tag):
    any monomial containing the tag beats any monomial without it, ties
    broken by grevlex on the remaining variables."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.name = f"elim:last-of-{nvars}"

        def key(m):
            rest = m[:-1]
            return (m[-1], sum(rest)) + tuple(-e for e in reversed(rest))

        self.key = key

    def __eq__(self, other):
        return isinstance(other, ElimOrder) and other.nvars == self.nvars

    def __hash__(self):
        return hash(("elim", self.nvars))

    def __repr__(self):
        return f"ElimOrder({self.nvars})"
