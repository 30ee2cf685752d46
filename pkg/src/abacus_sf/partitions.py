"""Partitions, strict partitions and the abacus division calculus.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the empty partition.  All functions return normalized
tuples (no zero parts), so equality of partitions is tuple equality.

The r-abacus of a partition records the beta-numbers ``lam + delta_m`` as
bead positions on ``r`` runners (position ``q`` sits on runner ``q mod r``).
The 3-bar abacus of a strict partition records the parts themselves as bead
positions.  Cores, quotients and signs are read off these bead models.

Everything here is a pure function over immutable values and is safe to call
concurrently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "Abacus",
    "BarAbacus",
    "normalize",
    "as_partition",
    "is_partition",
    "is_strict",
    "conjugate",
    "partitions_of",
    "strict_partitions_of",
    "beta_sequence",
    "r_quotient",
    "r_core",
    "r_sign",
    "double",
    "bar_core3",
    "bar_quotient3",
    "bar_sign3",
    "is_balanced",
    "enumerate_balanced",
    "complementary_pairs",
    "from_quotients",
    "from_two_quotient",
]


def normalize(parts) -> Partition:
    """Drop zero parts and return the partition as a tuple."""
    return tuple(p for p in parts if p > 0)


def is_partition(parts) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(p > 0 for p in parts)


def is_strict(parts) -> bool:
    return all(a > b for a, b in zip(parts, parts[1:])) and all(p > 0 for p in parts)


def as_partition(parts, strict: bool = False) -> Partition:
    """Validate and normalize a part sequence, allowing trailing zeros."""
    lam = tuple(parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if strict:
        if not is_strict(lam):
            raise ValueError(f"not a strict partition: {parts!r}")
    elif not is_partition(lam):
        raise ValueError(f"not a partition: {parts!r}")
    return lam


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def partitions_of(n: int, max_part: int | None = None):
    """Yield all partitions of n, largest part first, in reverse-lex order."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(max_part, 0, -1):
        for rest in partitions_of(n - k, k):
            yield (k,) + rest


def strict_partitions_of(n: int, max_part: int | None = None):
    """Yield all strict partitions of n in reverse-lex order."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(max_part, 0, -1):
        for rest in strict_partitions_of(n - k, k - 1):
            yield (k,) + rest


# ---------------------------------------------------------------------------
# beta-numbers and the r-abacus

def _padded_length(length: int, r: int) -> int:
    # smallest positive multiple of r that is >= length
    m = max(length, 1)
    return ((m + r - 1) // r) * r


def _check_modulus(r: int) -> None:
    if r < 2:
        raise ValueError(f"modulus must be at least 2, got {r}")


def beta_sequence(lam: Partition, r: int, pad: int | None = None) -> tuple[int, ...]:
    """Beta-numbers lam + delta_m, decreasing, with m a multiple of r.

    ``pad`` overrides the bead count (it must be a multiple of r and at
    least len(lam)); results of the quotient/core/sign functions do not
    depend on this choice.
    """
    _check_modulus(r)
    m = _padded_length(len(lam), r) if pad is None else pad
    if m % r != 0 or m < len(lam):
        raise ValueError(f"invalid padding {pad} for length {len(lam)}")
    padded = list(lam) + [0] * (m - len(lam))
    return tuple(padded[i] + (m - 1 - i) for i in range(m))


def _partition_from_beads(beads) -> Partition:
    xs = sorted(beads, reverse=True)
    m = len(xs)
    return normalize(xs[i] - (m - 1 - i) for i in range(m))


def r_quotient(lam: Partition, r: int, pad: int | None = None) -> tuple[Partition, ...]:
    """The r-quotient (lam[0], ..., lam[r-1]) read off the runners."""
    beads = beta_sequence(lam, r, pad)
    out = []
    for k in range(r):
        levels = [(b - k) // r for b in beads if b % r == k]
        out.append(_partition_from_beads(levels))
    return tuple(out)


def r_core(lam: Partition, r: int, pad: int | None = None) -> Partition:
    """The r-core: every bead pushed to the top of its runner."""
    beads = beta_sequence(lam, r, pad)
    counts = [0] * r
    for b in beads:
        counts[b % r] += 1
    pushed = [r * s + k for k in range(r) for s in range(counts[k])]
    return _partition_from_beads(pushed)


def _inversions(word) -> int:
    return sum(
        1
        for i, j in itertools.combinations(range(len(word)), 2)
        if word[i] > word[j]
    )


def r_sign(lam: Partition, r: int, pad: int | None = None) -> int:
    """Sign of the permutation between the two bead numberings.

    Beads are numbered once in increasing position order and once layer by
    layer: sorted by (rank within the bead's own runner counted from the
    top, then runner index).  The sign is the parity of the permutation
    relating the two numberings.
    """
    beads = beta_sequence(lam, r, pad)
    layered = sorted(
        (rank, b % r, b)
        for k in range(r)
        for rank, b in enumerate(sorted(x for x in beads if x % r == k))
    )
    number = {b: i + 1 for i, (_, _, b) in enumerate(layered)}
    word = [number[b] for b in sorted(beads)]
    return -1 if _inversions(word) % 2 else 1


@dataclass(frozen=True)
class Abacus:
    """Bead positions of the beta-numbers of a partition on r runners."""

    modulus: int
    beads: frozenset[int]
    padding: int

    @classmethod
    def from_partition(cls, lam: Partition, r: int, pad: int | None = None) -> "Abacus":
        xs = beta_sequence(lam, r, pad)
        return cls(r, frozenset(xs), len(xs))

    def to_partition(self) -> Partition:
        return _partition_from_beads(self.beads)

    def rows(self) -> list[list[tuple[int, bool]]]:
        """Rows of (position, occupied) pairs covering every bead."""
        top = max(self.beads, default=0)
        nrows = top // self.modulus + 1
        return [
            [(r0 * self.modulus + k, r0 * self.modulus + k in self.beads)
             for k in range(self.modulus)]
            for r0 in range(nrows)
        ]


# ---------------------------------------------------------------------------
# the double and the 3-bar calculus of strict partitions

def double(lam: Partition) -> Partition:
    """Double of a strict partition: Frobenius coordinates (lam | lam - 1)."""
    if not is_strict(lam):
        raise ValueError(f"double needs a strict partition, got {lam!r}")
    d = len(lam)
    if d == 0:
        return ()
    parts = [lam[i] + i + 1 for i in range(d)]
    cols = [lam[j] - 1 + j + 1 for j in range(d)]  # column lengths on the diagonal
    i = d + 1
    while True:
        row = sum(1 for c in cols if c >= i)
        if row == 0:
            break
        parts.append(row)
        i += 1
    return tuple(parts)


def _bar_runners(lam: Partition) -> list[list[int]]:
    out: list[list[int]] = [[], [], []]
    for p in lam:
        out[p % 3].append(p)
    return [sorted(r) for r in out]


@dataclass(frozen=True)
class BarAbacus:
    """3-bar abacus of a strict partition: the parts are the bead positions."""

    beads: frozenset[int]

    @classmethod
    def from_partition(cls, lam: Partition) -> "BarAbacus":
        if not is_strict(lam):
            raise ValueError(f"bar abacus needs a strict partition, got {lam!r}")
        return cls(frozenset(lam))

    def to_partition(self) -> Partition:
        return tuple(sorted(self.beads, reverse=True))

    def rows(self) -> list[list[tuple[int, bool]]]:
        top = max(self.beads, default=0)
        nrows = top // 3 + 1
        return [
            [(r0 * 3 + k, r0 * 3 + k in self.beads) for k in range(3)]
            for r0 in range(nrows)
        ]


def bar_core3(lam: Partition) -> Partition:
    """3-bar core by the removal game.

    Drop every runner-0 bead, remove runner-1/runner-2 beads pairwise until
    one of the two runners is empty, then push what is left to the top of
    its runner.
    """
    if not is_strict(lam):
        raise ValueError(f"bar core needs a strict partition, got {lam!r}")
    _, r1, r2 = _bar_runners(lam)
    pairs = min(len(r1), len(r2))
    k1 = len(r1) - pairs
    k2 = len(r2) - pairs
    parts = [3 * i + 1 for i in range(k1)] + [3 * i + 2 for i in range(k2)]
    return tuple(sorted(parts, reverse=True))


def _bar_quotient1_word(lam: Partition) -> Partition:
    # Two-sided 0/1 word: runner 2 read bottom-up (bead -> 0, hole -> 1) on
    # the left, runner 1 read top-down (bead -> 1, hole -> 0) on the right.
    # Each 1 contributes a part counting the 0's to its left; the implicit
    # all-1 prefix and all-0 suffix contribute nothing.
    _, r1, r2 = _bar_runners(lam)
    word = []
    if r2:
        q = max(r2)
        while q >= 2:
            word.append(0 if q in r2 else 1)
            q -= 3
    if r1:
        q = 1
        while q <= max(r1):
            word.append(1 if q in r1 else 0)
            q += 3
    zeros = 0
    parts = []
    for ch in word:
        if ch == 0:
            zeros += 1
        else:
            parts.append(zeros)
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def bar_quotient3(lam: Partition) -> tuple[Partition, Partition]:
    """3-bar quotient (lam_b[0], lam_b[1]) of a strict partition.

    lam_b[0] collects the levels of the runner-0 beads; lam_b[1] comes from
    the two-sided 0/1 word over runners 2 and 1.  Both components also equal
    the first two components of the 3-quotient of the double, which is
    asserted here as a consistency check.
    """
    if not is_strict(lam):
        raise ValueError(f"bar quotient needs a strict partition, got {lam!r}")
    r0, _, _ = _bar_runners(lam)
    b0 = tuple(p // 3 for p in sorted(r0, reverse=True))
    b1 = _bar_quotient1_word(lam)
    if __debug__:
        q = r_quotient(double(lam), 3)
        assert double(b0) == q[0] and b1 == q[1], (lam, (b0, b1), q)
    return b0, b1


def bar_sign3(lam: Partition) -> int:
    """Sign of the permutation between the two bar-abacus numberings.

    The bar numbering takes the runner-0 beads first in increasing order,
    then the paired runner-1/runner-2 beads layer by layer with the
    runner-2 bead of each pair before the runner-1 bead, then the leftover
    beads in increasing order.
    """
    if not is_strict(lam):
        raise ValueError(f"bar sign needs a strict partition, got {lam!r}")
    r0, r1, r2 = _bar_runners(lam)
    pairs = min(len(r1), len(r2))
    order = list(r0)
    for i in range(pairs):
        order += [r2[i], r1[i]]
    order += sorted(r1[pairs:] + r2[pairs:])
    number = {b: i + 1 for i, b in enumerate(order)}
    word = [number[b] for b in sorted(lam)]
    return -1 if _inversions(word) % 2 else 1


# ---------------------------------------------------------------------------
# balanced partitions, complementary pairs, inverse quotients

def is_balanced(mu: Partition, n: int, m: int) -> bool:
    """True iff mu, padded to 2n parts, satisfies mu_i + mu_{2n+1-i} = 2m."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    if len(mu) > 2 * n:
        return False
    if sum(mu) != 2 * n * m:
        return False
    padded = list(mu) + [0] * (2 * n - len(mu))
    return all(padded[i] + padded[2 * n - 1 - i] == 2 * m for i in range(n))


def enumerate_balanced(n: int, m: int) -> list[Partition]:
    """All (n,m)-balanced partitions W(n,m); there are binom(n+m, m)."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    if n == 0 or m == 0:
        return [()]
    out = []
    for alpha in _subpartitions_in_box(n, m):
        head = [m + a for a in alpha] + [m] * (n - len(alpha))
        tail = [2 * m - h for h in reversed(head)]
        out.append(normalize(head + tail))
    return out


def _subpartitions_in_box(rows: int, cols: int):
    """All partitions fitting in a rows x cols box, in reverse-lex order."""
    def rec(remaining_rows, max_part):
        yield ()
        if remaining_rows == 0:
            return
        for first in range(max_part, 0, -1):
            for rest in rec(remaining_rows - 1, first):
                yield (first,) + rest
    return rec(rows, cols)


def complementary_pairs(n: int, m: int) -> list[tuple[Partition, Partition]]:
    """All pairs (alpha, beta) complementary relative to the n x m rectangle."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    out = []
    for alpha in _subpartitions_in_box(n, m):
        padded = list(alpha) + [0] * (n - len(alpha))
        beta = normalize(m - padded[n - 1 - i] for i in range(n))
        out.append((alpha, beta))
    assert len(out) == comb(n + m, m)
    return out


def from_quotients(quotients, r: int) -> Partition:
    """The unique partition with empty r-core and the given r-quotient."""
    _check_modulus(r)
    if len(quotients) != r:
        raise ValueError(f"need exactly {r} quotient components")
    t = max((len(q) for q in quotients), default=0)
    t = max(t, 1)
    beads = []
    for k, q in enumerate(quotients):
        padded = list(q) + [0] * (t - len(q))
        beads += [r * (padded[i] + (t - 1 - i)) + k for i in range(t)]
    return _partition_from_beads(beads)


def from_two_quotient(alpha: Partition, beta: Partition) -> Partition:
    """Inverse of the 2-quotient at empty 2-core."""
    return from_quotients((alpha, beta), 2)
