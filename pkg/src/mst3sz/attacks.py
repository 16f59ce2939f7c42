"""Brute-force oracles for the desk-scale security analysis.

Attacks 1-3 are executable enumerations with operation counters, capped to
small fields (n <= 5).  Attacks 4-5 have stated difficulties but no usable
procedure, so they appear only in ``complexity_report``.

A candidate nonce is accepted only when it is consistent with the whole
ciphertext (y2, y3 and y4 reproduced).  The single-component matches the
sketches suggest are not injective at these field sizes -- most keys admit
several nonces with the same y2, or the same y4 -- while full consistency
determines the nonce uniquely (decryption derives it as a function of
(y2, y3, y4)).  Verification runs only on filter hits and is not counted
as a trial; trials count enumeration steps, and their bounds (q^2 for
attacks 1-2, 2q for attack 3) are unchanged.

Enumeration order is fixed: pairs (R1, R2) with R1 outer, R2 inner.  Any
parallel split must still report the lowest-index verified match.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .group import GroupElement
from .logsig import induced_map
from .scheme import Ciphertext, PublicKey, SessionNonce, _image_product, decode_message

_MAX_N = 5


@dataclass(frozen=True)
class AttackResult:
    recovered: object
    trials: int
    success: bool
    nonce: SessionNonce | None


def _check_small(pk: PublicKey) -> None:
    if pk.group.params.n > _MAX_N:
        raise ValueError("parameters too large for enumeration (need n <= 5)")


def _tables(pk: PublicKey):
    group = pk.group
    q = group.params.q
    a1 = [induced_map(group, pk.alpha1, r) for r in range(q)]
    a2 = [induced_map(group, pk.alpha2, r) for r in range(q)]
    g1 = [induced_map(group, pk.gamma1, r) for r in range(q)]
    g2 = [induced_map(group, pk.gamma2, r) for r in range(q)]
    y3 = [_image_product(group, pk.alpha1, r, group.f1) for r in range(q)]
    y4 = [_image_product(group, pk.alpha2, r, group.f2) for r in range(q)]
    return a1, a2, g1, g2, y3, y4


def default_validity_predicate(pk: PublicKey) -> Callable[[GroupElement], bool]:
    """Accept candidates that carry valid message padding."""

    def valid(m: GroupElement) -> bool:
        try:
            decode_message(pk.group.params, m)
        except ValueError:
            return False
        return True

    return valid


def attack1_bruteforce_ciphertext(
    pk: PublicKey,
    ct: Ciphertext,
    oracle: Callable[[GroupElement], bool] | None = None,
) -> AttackResult:
    """Enumerate nonces, unmask y1, accept recognizable verified plaintext."""
    _check_small(pk)
    if oracle is None:
        oracle = default_validity_predicate(pk)
    group = pk.group
    q = group.params.q
    a1, a2, g1, g2, y3, y4 = _tables(pk)
    inv2 = [group.inv(g) for g in a2]
    trials = 0
    for r1 in range(q):
        left = group.inv(a1[r1])
        for r2 in range(q):
            trials += 1
            cand = group.mul(group.mul(inv2[r2], left), ct.y1)
            if oracle(cand) and (
                group.mul(g1[r1], g2[r2]) == ct.y2
                and y3[r1] == ct.y3
                and y4[r2] == ct.y4
            ):
                return AttackResult(cand, trials, True, SessionNonce(r1, r2))
    return AttackResult(None, trials, False, None)


def attack2_bruteforce_nonce(pk: PublicKey, ct: Ciphertext) -> AttackResult:
    """Enumerate nonces until the masked-cover product matches y2."""
    _check_small(pk)
    group = pk.group
    q = group.params.q
    _, _, g1, g2, y3, y4 = _tables(pk)
    trials = 0
    for r1 in range(q):
        for r2 in range(q):
            trials += 1
            if (
                group.mul(g1[r1], g2[r2]) == ct.y2
                and y3[r1] == ct.y3
                and y4[r2] == ct.y4
            ):
                nonce = SessionNonce(r1, r2)
                return AttackResult(nonce, trials, True, nonce)
    return AttackResult(None, trials, False, None)


def attack3_session_key(pk: PublicKey, ct: Ciphertext) -> AttackResult:
    """Recover R1 from y3 and R2 from y4, one coordinate at a time."""
    _check_small(pk)
    group = pk.group
    q = group.params.q
    _, _, g1, g2, y3, y4 = _tables(pk)
    trials = 0
    cand1 = []
    for r1 in range(q):
        trials += 1
        if y3[r1] == ct.y3:
            cand1.append(r1)
    for r2 in range(q):
        trials += 1
        if y4[r2] == ct.y4:
            for r1 in cand1:
                if group.mul(g1[r1], g2[r2]) == ct.y2:
                    nonce = SessionNonce(r1, r2)
                    return AttackResult(nonce, trials, True, nonce)
    return AttackResult(None, trials, False, None)


def complexity_report(params) -> dict[str, int]:
    """Stated worst-case difficulties as exact integers."""
    q = params.q
    return {
        "attack1": q * q,
        "attack2": q * q,
        "attack3": q,
        "attack4": q * q * q,
        "attack5": q * q,
    }
