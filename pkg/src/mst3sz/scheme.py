"""The public-key encryption scheme.

Key generation builds, for k = 1, 2:

  * a tame signature beta_k over GF(q), embedded in the group as
    (1, b, 0) entries for k = 1 and (1, 0, b) entries for k = 2;
  * a random cover alpha_k of the same type, all coordinates nonzero;
  * a chain t_0(k), ..., t_s(k) of non-central masking elements with
    t_s(1) = t_0(2), and the published cover
    gamma_k[i][j] = t_(i-1)(k)^-1 * f_k(alpha_k[i][j]) * beta_k[i][j] * t_i(k).

Every published quantity is computed as a product of whole group elements;
no per-coordinate shortcut formulas are used anywhere.

Encryption of m under nonce (R1, R2) emits

    y1 = alpha1'(R1) * alpha2'(R2) * m        (the masked message)
    y2 = gamma1'(R1) * gamma2'(R2)            (telescopes to t0^-1 * U*V * ts)
    y3 = product of f1 images of the selected alpha1 entries
    y4 = product of f2 images of the selected alpha2 entries

where U multiplies the f1(alpha1)*beta1 factors and V the f2(alpha2)*beta2
factors.  Note y3 is a product of f1 IMAGES: f1 is not a homomorphism, so
this differs from f1 of the product, and only the image-product form makes
the cancellation below work.

Decryption strips the chain (t_0(1) * y2 * t_s(2)^-1 = U*V), divides out y3
to leave exactly evaluate(beta1, R1) in the b-coordinate, factors it with
the trapdoor, removes gamma1'(R1), repeats on the c-coordinate with y4 for
R2, and unmasks y1.  Encryption is deterministic given the nonce; drawing
the nonce is the caller's job (``random_nonce``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .field import FieldParams
from .group import GroupElement, SuzukiGroup
from .logsig import (
    Cover,
    SignatureType,
    TameSignature,
    covering_type,
    embed_in_b,
    embed_in_c,
    factor_tame,
    gen_random_cover,
    gen_tame,
    induced_map,
    tau_inv,
)


class CiphertextError(ValueError):
    """Structurally malformed ciphertext."""


class SessionNonce(NamedTuple):
    r1: int
    r2: int


@dataclass(frozen=True)
class PublicKey:
    group: SuzukiGroup
    alpha1: Cover
    alpha2: Cover
    gamma1: Cover
    gamma2: Cover

    @property
    def type1(self) -> SignatureType:
        return self.alpha1.type

    @property
    def type2(self) -> SignatureType:
        return self.alpha2.type


@dataclass(frozen=True)
class PrivateKey:
    group: SuzukiGroup
    beta1: TameSignature
    beta2: TameSignature
    chain1: tuple[GroupElement, ...]
    chain2: tuple[GroupElement, ...]


@dataclass(frozen=True)
class Ciphertext:
    y1: GroupElement
    y2: GroupElement
    y3: GroupElement
    y4: GroupElement


def _random_masking_element(group: SuzukiGroup, rng) -> GroupElement:
    # chain elements need a != 0 and b != 0 (hence non-central); c is free
    f = group.params
    return GroupElement(f.random_nonzero(rng), f.random_nonzero(rng), f.random_element(rng))


def _masked_cover(
    group: SuzukiGroup,
    alpha: Cover,
    beta_cover: Cover,
    fk: Callable[[GroupElement], GroupElement],
    chain: tuple[GroupElement, ...],
) -> Cover:
    blocks = []
    for i, (ablock, bblock) in enumerate(zip(alpha.blocks, beta_cover.blocks)):
        left = group.inv(chain[i])
        right = chain[i + 1]
        blocks.append(
            tuple(
                group.mul(group.mul(group.mul(left, fk(a)), b), right)
                for a, b in zip(ablock, bblock)
            )
        )
    return Cover(alpha.type, tuple(blocks))


def keygen(
    params: FieldParams,
    type1: SignatureType | None = None,
    type2: SignatureType | None = None,
    *,
    rng,
) -> tuple[PublicKey, PrivateKey]:
    group = SuzukiGroup(params)
    n = params.n
    if type1 is None:
        type1 = covering_type(n)
    if type2 is None:
        type2 = covering_type(n)
    if not type1.covers_bits(n) or not type2.covers_bits(n):
        raise ValueError("signature types must cover GF(2^n)")

    beta1 = gen_tame(n, type1, rng)
    beta2 = gen_tame(n, type2, rng)
    alpha1 = gen_random_cover(group, type1, rng)
    alpha2 = gen_random_cover(group, type2, rng)

    chain1 = tuple(_random_masking_element(group, rng) for _ in range(type1.s + 1))
    # the chains share their joint: t_s(1) = t_0(2)
    chain2 = (chain1[-1],) + tuple(
        _random_masking_element(group, rng) for _ in range(type2.s)
    )

    gamma1 = _masked_cover(group, alpha1, embed_in_b(beta1), group.f1, chain1)
    gamma2 = _masked_cover(group, alpha2, embed_in_c(beta2), group.f2, chain2)

    pk = PublicKey(group, alpha1, alpha2, gamma1, gamma2)
    sk = PrivateKey(group, beta1, beta2, chain1, chain2)
    return pk, sk


def random_nonce(params: FieldParams, rng) -> SessionNonce:
    return SessionNonce(rng.getrandbits(params.n), rng.getrandbits(params.n))


def _image_product(
    group: SuzukiGroup,
    cover: Cover,
    x: int,
    fk: Callable[[GroupElement], GroupElement],
) -> GroupElement:
    return group.product(
        fk(block[j]) for block, j in zip(cover.blocks, tau_inv(cover.type, x))
    )


def encrypt(pk: PublicKey, m: GroupElement, nonce: SessionNonce) -> Ciphertext:
    group = pk.group
    q = group.params.q
    r1, r2 = nonce
    if not (0 <= r1 < q and 0 <= r2 < q):
        raise ValueError("nonce out of range")
    if m.a == 0:
        raise ValueError("message needs a nonzero first coordinate")
    y1 = group.mul(
        group.mul(induced_map(group, pk.alpha1, r1), induced_map(group, pk.alpha2, r2)),
        m,
    )
    y2 = group.mul(
        induced_map(group, pk.gamma1, r1), induced_map(group, pk.gamma2, r2)
    )
    y3 = _image_product(group, pk.alpha1, r1, group.f1)
    y4 = _image_product(group, pk.alpha2, r2, group.f2)
    return Ciphertext(y1, y2, y3, y4)


def recover_nonce(pk: PublicKey, sk: PrivateKey, ct: Ciphertext) -> SessionNonce:
    """The nonce the trapdoors derive from (y2, y3, y4)."""
    group = pk.group
    if ct.y3.a != 1:
        raise CiphertextError("y3 must have first coordinate 1")
    if ct.y4.a != 1 or ct.y4.b != 0:
        raise CiphertextError("y4 must be central")
    d1 = group.mul(group.mul(sk.chain1[0], ct.y2), group.inv(sk.chain2[-1]))
    d1 = group.mul(group.inv(ct.y3), d1)
    r1 = factor_tame(sk.beta1, d1.b)
    y2p = group.mul(group.inv(induced_map(group, pk.gamma1, r1)), ct.y2)
    d2 = group.mul(group.mul(sk.chain2[0], y2p), group.inv(sk.chain2[-1]))
    d2 = group.mul(group.inv(ct.y4), d2)
    r2 = factor_tame(sk.beta2, d2.c)
    return SessionNonce(r1, r2)


def decrypt(pk: PublicKey, sk: PrivateKey, ct: Ciphertext) -> GroupElement:
    group = pk.group
    r1, r2 = recover_nonce(pk, sk, ct)
    mask2 = group.inv(induced_map(group, pk.alpha2, r2))
    mask1 = group.inv(induced_map(group, pk.alpha1, r1))
    return group.mul(group.mul(mask2, mask1), ct.y1)


# -- byte payloads as group elements ----------------------------------------
#
# A triple packs 3n bits.  One bit is a guard forcing the first coordinate
# nonzero, eight bits hold the payload length in bytes, the rest is payload:
#
#     bits = 1 | length << 1 | payload << 9     (little-endian across a,b,c)


def max_payload_bytes(n: int) -> int:
    return (3 * n - 9) // 8


def encode_message(params: FieldParams, payload: bytes) -> GroupElement:
    if len(payload) > max_payload_bytes(params.n):
        raise ValueError(
            f"payload exceeds {max_payload_bytes(params.n)} bytes for n={params.n}"
        )
    bits = 1 | len(payload) << 1 | int.from_bytes(payload, "little") << 9
    n, mask = params.n, params.q - 1
    return GroupElement(bits & mask, bits >> n & mask, bits >> 2 * n & mask)


def decode_message(params: FieldParams, m: GroupElement) -> bytes:
    n = params.n
    bits = m.a | m.b << n | m.c << 2 * n
    if not bits & 1:
        raise ValueError("bad padding: guard bit clear")
    length = bits >> 1 & 0xFF
    if length > max_payload_bytes(n):
        raise ValueError("bad padding: length field out of range")
    payload = bits >> 9
    if payload >> 8 * length:
        raise ValueError("bad padding: nonzero trailing bits")
    return (payload & ((1 << 8 * length) - 1)).to_bytes(length, "little")
