"""Arithmetic in the binary fields GF(2^n) used by the cryptosystem.

Elements are plain Python ints whose binary digits are the coefficients of
a polynomial over GF(2), reduced modulo a published irreducible polynomial
of degree n.  One canonical modulus is fixed per degree (the
lexicographically least irreducible polynomial, table below) so that
serialized keys and ciphertexts are interoperable.

The cryptosystem itself only uses odd widths n = 2s + 1 with 3 <= n <= 127
(``make_params``), for which q = 2^n, q0 = 2^s and the Suzuki exponents
2*q0 = 2^(s+1) and 2*q0 + 1 are provided.  The plain ``BinaryField`` class
accepts any degree and is used by tests that need extension fields.

WARNING: nothing here is constant-time.  This is a research artifact for
studying the scheme at desk scale; do not use it to protect real data.

Published moduli (regenerate with scripts/gen_modulus_table.py)::

    n=3   x^3+x+1              n=5   x^5+x^2+1
    n=63  x^63+x+1             n=65  x^65+x^4+x^3+x+1
    n=127 x^127+x+1            (full table in IRREDUCIBLE)
"""

from __future__ import annotations

from functools import lru_cache

# Lexicographically least irreducible polynomial of each odd degree 3..127,
# encoded as an int with coefficient bits.
IRREDUCIBLE: dict[int, int] = {
    3: 0xB,
    5: 0x25,
    7: 0x83,
    9: 0x203,
    11: 0x805,
    13: 0x201B,
    15: 0x8003,
    17: 0x20009,
    19: 0x80027,
    21: 0x200005,
    23: 0x800021,
    25: 0x2000009,
    27: 0x8000027,
    29: 0x20000005,
    31: 0x80000009,
    33: 0x20000004B,
    35: 0x800000005,
    37: 0x200000003F,
    39: 0x8000000011,
    41: 0x20000000009,
    43: 0x80000000059,
    45: 0x20000000001B,
    47: 0x800000000021,
    49: 0x2000000000071,
    51: 0x800000000004B,
    53: 0x20000000000047,
    55: 0x80000000000047,
    57: 0x200000000000011,
    59: 0x80000000000007B,
    61: 0x2000000000000027,
    63: 0x8000000000000003,
    65: 0x2000000000000001B,
    67: 0x80000000000000027,
    69: 0x200000000000000065,
    71: 0x80000000000000002B,
    73: 0x200000000000000001D,
    75: 0x800000000000000004B,
    77: 0x20000000000000000065,
    79: 0x8000000000000000001D,
    81: 0x200000000000000000011,
    83: 0x800000000000000000095,
    85: 0x2000000000000000000107,
    87: 0x80000000000000000000A3,
    89: 0x20000000000000000000069,
    91: 0x800000000000000000000ED,
    93: 0x200000000000000000000005,
    95: 0x800000000000000000000077,
    97: 0x2000000000000000000000041,
    99: 0x800000000000000000000004B,
    101: 0x200000000000000000000000C3,
    103: 0x800000000000000000000000BD,
    105: 0x200000000000000000000000011,
    107: 0x8000000000000000000000000AF,
    109: 0x2000000000000000000000000035,
    111: 0x8000000000000000000000000095,
    113: 0x2000000000000000000000000002D,
    115: 0x800000000000000000000000000AF,
    117: 0x200000000000000000000000000027,
    119: 0x800000000000000000000000000101,
    121: 0x2000000000000000000000000000123,
    123: 0x8000000000000000000000000000005,
    125: 0x200000000000000000000000000000AF,
    127: 0x80000000000000000000000000000003,
}

# Fields up to this order get log/exp tables; larger ones use shift-and-add.
_TABLE_LIMIT = 1 << 18


def _polymod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, _polymod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: int) -> bool:
    """Ben-Or irreducibility test for a GF(2) polynomial given as bits."""
    n = f.bit_length() - 1
    if n < 1 or not (f & 1):
        return False
    x = 0b10
    t = x
    powers = {}
    for k in range(1, n + 1):
        # square t mod f without a field object
        r, a, b = 0, t, t
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a = _polymod(a << 1, f)
        t = r
        powers[k] = t
    if powers[n] != x:
        return False
    for p in _prime_factors(n):
        if _polygcd(powers[n // p] ^ x, f) != 1:
            return False
    return True


class BinaryField:
    """GF(2^n) with a given irreducible modulus.

    All operations take and return plain ints < 2^n.  Instances are
    immutable after construction and safe to share across threads.
    """

    def __init__(self, n: int, modulus: int | None = None):
        if n < 2:
            raise ValueError("field degree must be at least 2")
        if modulus is None:
            modulus = IRREDUCIBLE.get(n)
            if modulus is None:
                raise ValueError(f"no published modulus for n={n}")
        if modulus.bit_length() - 1 != n:
            raise ValueError("modulus degree does not match n")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus 0x{modulus:X} is reducible")
        self.n = n
        self.q = 1 << n
        self.modulus = modulus
        self.element_size = (n + 7) // 8
        self._log: list[int] | None = None
        self._exp: list[int] | None = None
        self._frob_cols: dict[int, list[int]] = {}
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, modulus=0x{self.modulus:X})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryField)
            and self.n == other.n
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.n, self.modulus))

    # -- core arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        """Characteristic-2 sum; identical to subtraction."""
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if self._log is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def _mul_raw(self, a: int, b: int) -> int:
        """Shift-and-add product reduced by the modulus."""
        r = 0
        m = self.modulus
        top = self.q
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= m
        return r

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroDivisionError for 0."""
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^n)")
        if self._log is not None:
            return self._exp[self.q - 1 - self._log[a]]
        return self._inv_euclid(a)

    def _inv_euclid(self, a: int) -> int:
        """Inverse via the extended Euclidean algorithm on polynomials."""
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^n)")
        r0, r1 = self.modulus, a
        s0, s1 = 0, 1
        while r1:
            shift = r0.bit_length() - r1.bit_length()
            if shift < 0:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            r0 ^= r1 << shift
            s0 ^= s1 << shift
        # r0 is now the gcd (a constant 1 since the modulus is irreducible)
        return _polymod(s0, self.modulus)

    def _inv_pow(self, a: int) -> int:
        """Inverse as a^(q-2); cross-check route for _inv_euclid."""
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^n)")
        e = self.q - 2
        r = 1
        base = a
        while e:
            if e & 1:
                r = self._mul_raw(r, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return r

    def frob_pow(self, a: int, k: int) -> int:
        """a^(2^k).  Frobenius powers; a^(2^n) = a so k is taken mod n."""
        k %= self.n
        if k == 0 or a == 0 or a == 1:
            return a
        if self._log is not None:
            return self._exp[(self._log[a] << k) % (self.q - 1)]
        cols = self._frob_cols.get(k)
        if cols is None:
            cols = self._build_frob(k)
        r = 0
        i = 0
        while a:
            if a & 1:
                r ^= cols[i]
            a >>= 1
            i += 1
        return r

    def _build_frob(self, k: int) -> list[int]:
        # column i of the GF(2)-linear map x -> x^(2^k) is (x^i)^(2^k) mod f
        sq = [_polymod(1 << (2 * i), self.modulus) for i in range(self.n)]
        cols = sq
        for _ in range(k - 1):
            nxt = []
            for c in cols:
                r, i = 0, 0
                while c:
                    if c & 1:
                        r ^= sq[i]
                    c >>= 1
                    i += 1
                nxt.append(r)
            cols = nxt
        self._frob_cols[k] = cols
        return cols

    # -- helpers ---------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def random_element(self, rng) -> int:
        return rng.getrandbits(self.n)

    def random_nonzero(self, rng) -> int:
        while True:
            v = rng.getrandbits(self.n)
            if v:
                return v

    def to_bytes(self, a: int) -> bytes:
        """Little-endian ceil(n/8) bytes, high bits zero."""
        return a.to_bytes(self.element_size, "little")

    def from_bytes(self, data: bytes) -> int:
        if len(data) != self.element_size:
            raise ValueError("wrong element length")
        v = int.from_bytes(data, "little")
        if v >= self.q:
            raise ValueError("element has nonzero padding bits")
        return v

    def _build_tables(self) -> None:
        g = self._find_generator()
        size = self.q - 1
        exp = [0] * (2 * size)
        log = [0] * self.q
        v = 1
        for i in range(size):
            exp[i] = v
            log[v] = i
            v = self._mul_raw(v, g)
        for i in range(size, 2 * size):
            exp[i] = exp[i - size]
        self._exp = exp
        self._log = log

    def _find_generator(self) -> int:
        order = self.q - 1
        factors = _prime_factors(order)
        for g in range(2, self.q):
            if all(self._pow_raw(g, order // p) != 1 for p in factors):
                return g
        raise AssertionError("no generator found")

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r


class FieldParams(BinaryField):
    """GF(2^n) for odd n = 2s + 1, with the exponents the group law needs."""

    def __init__(self, n: int, modulus: int | None = None):
        if n % 2 == 0:
            raise ValueError("n must be odd")
        if not 3 <= n <= 127:
            raise ValueError("n must be in 3..127")
        super().__init__(n, modulus)
        self.s = (n - 1) // 2
        self.q0 = 1 << self.s

    def pow_2q0(self, a: int) -> int:
        """a^(2*q0) = a^(2^(s+1))."""
        return self.frob_pow(a, self.s + 1)

    def pow_2q0_plus_1(self, a: int) -> int:
        """a^(2*q0 + 1)."""
        return self.mul(self.frob_pow(a, self.s + 1), a)


@lru_cache(maxsize=None)
def make_params(n: int, modulus: int | None = None) -> FieldParams:
    """Field parameters for width n (odd, 3..127); published modulus by default.

    Cached: repeated calls share one instance (and its tables) per (n, modulus).
    """
    return FieldParams(n, modulus)
