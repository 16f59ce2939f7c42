"""Logarithmic-signature machinery.

A signature type (r_1, ..., r_s) splits indexes 0 <= x < m = prod(r_i) into
mixed-radix digits (j_1, ..., j_s), j_1 least significant (``tau`` /
``tau_inv``).  A ``Cover`` holds s blocks of group elements and maps x to
the left-to-right product of one entry per block (``induced_map``).

A ``TameSignature`` lives over the additive group of GF(q): every r_i is a
power of two 2^h_i with sum(h_i) = n, the canonical entry for digit j of
block i is j shifted into block i's bit chunk, and the published entries
are the canonical ones pushed through a secret invertible GF(2)-linear map
plus per-block offsets.  Evaluation (XOR of one entry per block) is then a
bijection Z_q -> GF(q) that the trapdoor inverts in O(n).  Only the bit
width n matters here, not the field modulus: the construction uses nothing
beyond XOR.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .group import ALL_NONZERO, GroupElement, SuzukiGroup


@dataclass(frozen=True)
class SignatureType:
    r: tuple[int, ...]

    def __post_init__(self):
        if not self.r or any(ri < 2 for ri in self.r):
            raise ValueError("block sizes must all be >= 2")

    @property
    def s(self) -> int:
        return len(self.r)

    @property
    def m(self) -> int:
        return prod(self.r)

    @property
    def weights(self) -> tuple[int, ...]:
        """m_i = product of the block sizes before block i (m_1 = 1)."""
        w, acc = [], 1
        for ri in self.r:
            w.append(acc)
            acc *= ri
        return tuple(w)

    def bit_widths(self) -> tuple[int, ...]:
        """h_i with r_i = 2^h_i; error if any block size is not a 2-power."""
        widths = []
        for ri in self.r:
            h = ri.bit_length() - 1
            if 1 << h != ri:
                raise ValueError(f"block size {ri} is not a power of two")
            widths.append(h)
        return tuple(widths)

    def chunk_shifts(self) -> tuple[int, ...]:
        """Bit offset of each block's chunk, chunk 1 at the low end."""
        sh, acc = [], 0
        for h in self.bit_widths():
            sh.append(acc)
            acc += h
        return tuple(sh)

    def covers_bits(self, n: int) -> bool:
        try:
            return sum(self.bit_widths()) == n
        except ValueError:
            return False


def covering_type(n: int) -> SignatureType:
    """Default type tiling n bits: (n-3)/2 two-bit chunks plus one 3-bit chunk."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    return SignatureType((4,) * ((n - 3) // 2) + (8,))


def tau(sig_type: SignatureType, digits: tuple[int, ...]) -> int:
    """Mixed-radix encode: sum of j_i * m_i, j_1 least significant."""
    if len(digits) != sig_type.s:
        raise ValueError("digit count does not match type")
    x = 0
    for j, ri, mi in zip(digits, sig_type.r, sig_type.weights):
        if not 0 <= j < ri:
            raise ValueError(f"digit {j} out of range for block size {ri}")
        x += j * mi
    return x


def tau_inv(sig_type: SignatureType, x: int) -> tuple[int, ...]:
    """Mixed-radix decode; inverse of ``tau``."""
    if not 0 <= x < sig_type.m:
        raise ValueError(f"index {x} out of range for m={sig_type.m}")
    digits = []
    for ri in sig_type.r:
        digits.append(x % ri)
        x //= ri
    return tuple(digits)


# -- covers of group elements ---------------------------------------------


@dataclass(frozen=True)
class Cover:
    type: SignatureType
    blocks: tuple[tuple[GroupElement, ...], ...]

    def __post_init__(self):
        if len(self.blocks) != self.type.s or any(
            len(block) != ri for block, ri in zip(self.blocks, self.type.r)
        ):
            raise ValueError("block shapes do not match type")


def induced_map(group: SuzukiGroup, cover: Cover, x: int) -> GroupElement:
    """Product of one entry per block, selected by the digits of x."""
    digits = tau_inv(cover.type, x)
    acc = cover.blocks[0][digits[0]]
    for block, j in zip(cover.blocks[1:], digits[1:]):
        acc = group.mul(acc, block[j])
    return acc


def gen_random_cover(
    group: SuzukiGroup,
    sig_type: SignatureType,
    rng,
    constraint: str = ALL_NONZERO,
) -> Cover:
    blocks = tuple(
        tuple(group.random_element(rng, constraint) for _ in range(ri))
        for ri in sig_type.r
    )
    return Cover(sig_type, blocks)


# -- tame signatures over (GF(q), +) ---------------------------------------


def apply_linear(cols: tuple[int, ...], x: int) -> int:
    """Apply the GF(2)-linear map with the given basis-image columns."""
    r, i = 0, 0
    while x:
        if x & 1:
            r ^= cols[i]
        x >>= 1
        i += 1
    return r


def invert_linear(cols: tuple[int, ...], n: int) -> tuple[int, ...] | None:
    """Columns of the inverse map, or None if singular.

    Row-style Gauss-Jordan on the column list computes the inverse of the
    transpose in row form, which is exactly the inverse in column form.
    """
    a = list(cols)
    inv = [1 << i for i in range(n)]
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if a[r] >> c & 1:
                pivot = r
                break
        if pivot is None:
            return None
        a[c], a[pivot] = a[pivot], a[c]
        inv[c], inv[pivot] = inv[pivot], inv[c]
        for r in range(n):
            if r != c and a[r] >> c & 1:
                a[r] ^= a[c]
                inv[r] ^= inv[c]
    return tuple(inv)


def random_invertible(n: int, rng) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Random invertible GF(2)-linear map on n bits, with its inverse."""
    while True:
        cols = tuple(rng.getrandbits(n) for _ in range(n))
        inv = invert_linear(cols, n)
        if inv is not None:
            return cols, inv


def _masked_blocks(
    sig_type: SignatureType,
    cols: tuple[int, ...],
    offsets: tuple[int, ...],
) -> tuple[tuple[int, ...], ...]:
    out = []
    for shift, ri, d in zip(sig_type.chunk_shifts(), sig_type.r, offsets):
        out.append(tuple(apply_linear(cols, j << shift) ^ d for j in range(ri)))
    return tuple(out)


@dataclass(frozen=True)
class TameSignature:
    type: SignatureType
    n: int
    blocks: tuple[tuple[int, ...], ...]
    lin_cols: tuple[int, ...]
    lin_inv_cols: tuple[int, ...]
    offsets: tuple[int, ...]

    def canonical_blocks(self) -> tuple[tuple[int, ...], ...]:
        """Entries rebuilt from the trapdoor; equals ``blocks`` by invariant."""
        return _masked_blocks(self.type, self.lin_cols, self.offsets)


def gen_tame(n: int, sig_type: SignatureType, rng) -> TameSignature:
    if not sig_type.covers_bits(n):
        raise ValueError("type does not cover GF(2^n)")
    cols, inv = random_invertible(n, rng)
    offsets = tuple(rng.getrandbits(n) for _ in range(sig_type.s))
    blocks = _masked_blocks(sig_type, cols, offsets)
    return TameSignature(sig_type, n, blocks, cols, inv, offsets)


def evaluate_tame(sig: TameSignature, x: int) -> int:
    """XOR of one entry per block, selected by the digits of x."""
    v = 0
    for block, j in zip(sig.blocks, tau_inv(sig.type, x)):
        v ^= block[j]
    return v


def factor_tame(sig: TameSignature, v: int) -> int:
    """The unique x with evaluate_tame(sig, x) = v."""
    total = 0
    for d in sig.offsets:
        total ^= d
    u = apply_linear(sig.lin_inv_cols, v ^ total)
    digits = []
    for shift, h in zip(sig.type.chunk_shifts(), sig.type.bit_widths()):
        digits.append(u >> shift & ((1 << h) - 1))
    return tau(sig.type, tuple(digits))


def embed_in_b(sig: TameSignature) -> Cover:
    """Signature entries as group elements (1, b_ij, 0); b-coordinates add."""
    return Cover(
        sig.type,
        tuple(tuple(GroupElement(1, b, 0) for b in block) for block in sig.blocks),
    )


def embed_in_c(sig: TameSignature) -> Cover:
    """Signature entries as central elements (1, 0, b_ij); c-coordinates add."""
    return Cover(
        sig.type,
        tuple(tuple(GroupElement(1, 0, b) for b in block) for block in sig.blocks),
    )
