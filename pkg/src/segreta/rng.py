"""Deterministic seeded randomness for the Monte Carlo engine.

SeedStream is splitmix64: a 64-bit state advanced by a fixed odd constant,
output mixed by two xor-multiply rounds.  All randomized behaviour in the
package flows through an explicit stream, so identical seeds give
identical runs, bit for bit, in every field mode.
"""

from .field import DEFAULT_PRIME
from .poly import Polynomial

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SeedStream:
    """splitmix64 generator; ``spawn`` derives an independent child stream."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def spawn(self) -> "SeedStream":
        return SeedStream(self.next_u64())


def random_coefficient(field, stream: SeedStream):
    """One field element: a u64 reduced mod the default prime, embedded in
    the field.  Using the same reduction in F_p and Q modes makes the two
    modes draw identical combinations."""
    return field.of_int(stream.next_u64() % DEFAULT_PRIME)


def random_combination(ideal, stream: SeedStream) -> Polynomial:
    """A random element sum(c_i * F_i) of the span of the generators.

    All generators must share one degree; the zero combination is rejected
    and redrawn.
    """
    degs = set(ideal.generator_degrees())
    if len(degs) != 1:
        raise ValueError(f"generators have mixed degrees {sorted(degs)}")
    ring = ideal.ring
    while True:
        f = ring.zero()
        for g in ideal.gens:
            f = f + g.scale(random_coefficient(ring.field, stream))
        if not f.is_zero():
            return f
