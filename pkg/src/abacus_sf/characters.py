"""Symmetric group characters by the Murnaghan-Nakayama rule.

The recursion removes one rim hook per step, working on beta-numbers: a rim
hook of length k is a bead that can drop k positions, and the height of the
hook is the number of beads jumped over.  Values are memoized in a shared
table keyed by (shape, cycle type); the table only ever grows and entries
are immutable, so concurrent use from several threads returns identical
results.
"""

from __future__ import annotations

from math import factorial

from .partitions import Partition, normalize

__all__ = ["z_factor", "mn_character", "character_cache_size"]

_CACHE: dict[tuple[Partition, Partition], int] = {}


def z_factor(rho: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type rho."""
    z = 1
    mult = 1
    for i, part in enumerate(rho):
        mult = mult + 1 if i > 0 and rho[i - 1] == part else 1
        z *= part * mult
    return z


def _beta(lam: Partition) -> tuple[int, ...]:
    m = len(lam)
    return tuple(lam[i] + (m - 1 - i) for i in range(m))


def _from_beta(beads: list[int]) -> Partition:
    xs = sorted(beads, reverse=True)
    m = len(xs)
    return normalize(xs[i] - (m - 1 - i) for i in range(m))


def mn_character(lam: Partition, rho: Partition) -> int:
    """Irreducible character of S_n indexed by lam at cycle type rho."""
    if sum(lam) != sum(rho):
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return _mn(tuple(lam), tuple(sorted(rho, reverse=True)))


def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    key = (lam, rho)
    cached = _CACHE.get(key)
    if cached is not None:
        return cached
    k = rho[0]
    rest = rho[1:]
    beads = list(_beta(lam))
    occupied = set(beads)
    total = 0
    for idx, b in enumerate(beads):
        if b - k < 0 or (b - k) in occupied:
            continue
        height = sum(1 for c in beads if b - k < c < b)
        moved = beads[:idx] + [b - k] + beads[idx + 1:]
        term = _mn(_from_beta(moved), rest)
        total += -term if height % 2 else term
    _CACHE[key] = total
    return total


def character_cache_size() -> int:
    return len(_CACHE)
