"""Bit-packed monomials for the Groebner hot loops.

An exponent tuple (e_0, ..., e_{n-1}) is stored as a single int with n+1
fields of ``bits`` bits each: the total degree on top, then e_{n-1} down
to e_0.  Multiplication and exact division become integer add/subtract,
divisibility is one guard-bit test, and monomial orders become integer
keys, so dict and heap operations run on machine ints.

Exponents must stay below 2^(bits-1); the guard bit of every field
absorbs borrows in the divisibility test.
"""

BITS = 16


class PackedContext:
    """Packing, divisibility and order keys for one ring width."""

    def __init__(self, nvars: int, elim: bool = False, bits: int = BITS):
        self.nvars = nvars
        self.elim = elim
        self.bits = bits
        n, B = nvars, bits
        self.field_mask = (1 << B) - 1
        self.deg_shift = n * B
        self.low_mask = (1 << (n * B)) - 1
        self.low_allm = 0
        for i in range(n):
            self.low_allm |= self.field_mask << (i * B)
        self.guards = 0
        for i in range(n + 1):
            self.guards |= (1 << (B - 1)) << (i * B)
        self.max_exponent = (1 << (B - 1)) - 1

        low_mask = self.low_mask
        low_allm = self.low_allm

        if not elim:
            # grevlex: (deg, -e_{n-1}, ..., -e_0) as one int
            def key(s, _lm=low_mask, _la=low_allm):
                low = s & _lm
                return s - low - low + _la

            def pair_deg(s, _ds=self.deg_shift):
                return s >> _ds

        else:
            # eliminate the last variable: (e_tag, deg', -e_{n-2}, ..., -e_0)
            tag_shift = (n - 1) * B
            rest_mask = (1 << tag_shift) - 1
            rest_allm = low_allm & rest_mask
            fm = self.field_mask
            deg_shift = self.deg_shift

            def key(
                s,
                _ts=tag_shift,
                _fm=fm,
                _ds=deg_shift,
                _rm=rest_mask,
                _ra=rest_allm,
            ):
                etag = (s >> _ts) & _fm
                deg_rest = (s >> _ds) - etag
                return (etag << _ds) | (deg_rest << _ts) | (_ra - (s & _rm))

            # pair selection ignores the tag: the ideals fed to the
            # eliminator are graded in the original variables only
            def pair_deg(s, _ts=tag_shift, _fm=fm, _ds=deg_shift):
                return (s >> _ds) - ((s >> _ts) & _fm)

        self.key = key
        self.pair_deg = pair_deg

    def pack(self, m) -> int:
        B = self.bits
        s = 0
        deg = 0
        for i, e in enumerate(m):
            if e > self.max_exponent:
                raise OverflowError(f"exponent {e} exceeds packed width")
            s |= e << (i * B)
            deg += e
        if deg > self.max_exponent:
            raise OverflowError(f"degree {deg} exceeds packed width")
        return s | (deg << self.deg_shift)

    def unpack(self, s: int):
        B, fm = self.bits, self.field_mask
        return tuple((s >> (i * B)) & fm for i in range(self.nvars))

    def deg(self, s: int) -> int:
        return s >> self.deg_shift

    def divides(self, a: int, b: int) -> bool:
        g = self.guards
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        B, fm = self.bits, self.field_mask
        out = 0
        deg = 0
        for i in range(self.nvars):
            ai = (a >> (i * B)) & fm
            bi = (b >> (i * B)) & fm
            m = ai if ai > bi else bi
            out |= m << (i * B)
            deg += m
        return out | (deg << self.deg_shift)
