"""Node fillings, weights and operator combinatorics on partition labels.

Young diagram cells are filled with residues 0/1 by one of two rules: the
alternating rule (cell (i, j) gets (i + j) mod 2) or the period-three rule
(each row reads 010 010 ... from the left, so a cell is a 1-node exactly
when its column is congruent to 2 mod 3).  Raising and lowering operators
act on strict-partition labels by removing/adding single nodes of a given
residue; additions or removals that break strictness do not count.

The basis map ``leidwanger_phi`` sends a strict-partition label to a scaled
triple (3-bar quotient components, charge exponent).
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .partitions import (
    Partition,
    bar_quotient3,
    bar_sign3,
    is_strict,
    normalize,
)

FockElement = dict[Partition, int]
PhiImage = dict[tuple[Partition, Partition, int], Fraction]

__all__ = [
    "Filling",
    "FockElement",
    "PhiImage",
    "weight_counts",
    "removable_nodes",
    "indent_nodes",
    "apply_e",
    "apply_f",
    "staircase_delta",
    "lambda_ell",
    "add_one_nodes",
    "p_exponent",
    "charge",
    "leidwanger_phi",
    "homogeneous_degree",
]


class Filling(enum.Enum):
    """Residue rule for cells of a Young diagram, 1-indexed (row, col)."""

    A22 = "a22"  # rows read 010 010 ...: residue 1 iff col = 2 (mod 3)
    A11 = "a11"  # checkerboard: residue (row + col) mod 2

    def residue(self, row: int, col: int) -> int:
        if self is Filling.A22:
            return 1 if col % 3 == 2 else 0
        return (row + col) % 2


def weight_counts(lam: Partition, filling: Filling) -> tuple[int, int]:
    """(k0, k1): how many cells of the diagram carry residue 0 resp. 1."""
    k1 = 0
    for row, length in enumerate(lam, start=1):
        k1 += sum(filling.residue(row, col) for col in range(1, length + 1))
    return sum(lam) - k1, k1


def removable_nodes(lam: Partition, i: int, filling: Filling = Filling.A22) -> list[Partition]:
    """Strict partitions obtained by removing one removable i-node."""
    _check_strict_label(lam)
    out = []
    for r in range(len(lam)):
        if filling.residue(r + 1, lam[r]) != i:
            continue
        shorter = lam[r] - 1
        below = lam[r + 1] if r + 1 < len(lam) else 0
        if shorter == 0 or shorter > below:
            out.append(normalize(lam[:r] + (shorter,) + lam[r + 1:]))
    return out


def indent_nodes(lam: Partition, i: int, filling: Filling = Filling.A22) -> list[Partition]:
    """Strict partitions obtained by adding one indent i-node."""
    _check_strict_label(lam)
    out = []
    for r in range(len(lam) + 1):
        here = lam[r] if r < len(lam) else 0
        longer = here + 1
        if filling.residue(r + 1, longer) != i:
            continue
        above = lam[r - 1] if r > 0 else None
        if above is not None and longer >= above:
            continue
        out.append(lam[:r] + (longer,) + lam[r + 1:])
    return out


def _check_strict_label(lam: Partition) -> None:
    if not is_strict(lam):
        raise ValueError(f"operator labels must be strict partitions: {lam!r}")


def _apply_linear(v: FockElement, nodes) -> FockElement:
    out: FockElement = {}
    for lam, coeff in v.items():
        for mu in nodes(lam):
            s = out.get(mu, 0) + coeff
            if s:
                out[mu] = s
            else:
                del out[mu]
    return out


def apply_e(v: FockElement, i: int, filling: Filling = Filling.A22) -> FockElement:
    """Lowering operator: remove one removable i-node from every label."""
    return _apply_linear(v, lambda lam: removable_nodes(lam, i, filling))


def apply_f(v: FockElement, i: int, filling: Filling = Filling.A22) -> FockElement:
    """Raising operator: add one indent i-node to every label."""
    return _apply_linear(v, lambda lam: indent_nodes(lam, i, filling))


def staircase_delta(ell: int) -> Partition:
    """The staircase (ell, ell-1, ..., 1); ell must be odd and positive."""
    if ell < 1 or ell % 2 == 0:
        raise ValueError(f"staircase parameter must be a positive odd integer: {ell}")
    return tuple(range(ell, 0, -1))


def lambda_ell(ell: int) -> Partition:
    """(3*ell - 2, 3*ell - 5, ..., 7, 4, 1)."""
    if ell < 1:
        raise ValueError(f"need a positive length: {ell}")
    return tuple(3 * (ell - i) + 1 for i in range(1, ell + 1))


def add_one_nodes(base: Partition, m: int, filling: Filling,
                  strict_only: bool = False) -> list[Partition]:
    """All partitions reachable from base by adding m distinct 1-nodes.

    Each row can gain at most one cell (two adjacent cells never both carry
    residue 1 under either filling); with strict_only the intermediate and
    final shapes must be strictly decreasing.
    """
    if m < 0:
        raise ValueError("cannot add a negative number of nodes")
    base = tuple(base)
    nrows = len(base) + 2
    out: list[Partition] = []

    def rec(r: int, acc: list[int], left: int) -> None:
        if r == nrows:
            if left == 0:
                out.append(normalize(acc))
            return
        if left > nrows - r:
            return
        base_r = base[r] if r < len(base) else 0
        prev = acc[-1] if acc else None
        for inc in (0, 1) if left else (0,):
            if inc and filling.residue(r + 1, base_r + 1) != 1:
                continue
            val = base_r + inc
            if val and prev is not None:
                if val > prev or (strict_only and val == prev):
                    continue
            rec(r + 1, acc + [val], left - inc)

    rec(0, [], m)
    return out


def p_exponent(lam: Partition) -> int:
    """Sum of floor((part - 1) / 3) over the parts not divisible by 3."""
    return sum((p - 1) // 3 for p in lam if p % 3)


def charge(lam: Partition) -> int:
    """Runner-1 bead count minus runner-2 bead count on the 3-bar abacus."""
    return sum(1 for p in lam if p % 3 == 1) - sum(1 for p in lam if p % 3 == 2)


def leidwanger_phi(v: FockElement) -> PhiImage:
    """Basis map P_lam -> 2^{p(lam)} * barsign(lam) * (lam_b[0], lam_b[1], charge)."""
    out: PhiImage = {}
    for lam, coeff in v.items():
        b0, b1 = bar_quotient3(lam)
        key = (b0, b1, charge(lam))
        value = Fraction(coeff * bar_sign3(lam) * 2 ** p_exponent(lam))
        s = out.get(key, Fraction(0)) + value
        if s:
            out[key] = s
        else:
            del out[key]
    return out


def homogeneous_degree(term: tuple[Partition, Partition, int]) -> int:
    """Degree 2*(|b0| + |b1|) + q^2 of an image triple."""
    b0, b1, q = term
    return 2 * (sum(b0) + sum(b1)) + q * q
