"""Littlewood-Richardson combinatorics and quotient-driven Schur expansions.

The LR rule is implemented by direct tableau enumeration: semistandard skew
fillings whose reverse reading word is a lattice word.  The product route
through the Hall inner product lives in the power-sum engine and serves as
an independent oracle in the tests; the two must agree.
"""

from __future__ import annotations

from .partitions import (
    Partition,
    conjugate,
    enumerate_balanced,
    from_quotients,
    partitions_of,
    r_sign,
)

__all__ = [
    "rectangle",
    "contains",
    "subpartitions",
    "skew_lr_contents",
    "lr_expand_product",
    "lr_coeff",
    "schur_difference_expansion",
    "plethysm_via_quotients",
    "plethysm_rect_balanced",
]


def rectangle(n: int, m: int) -> Partition:
    """The rectangular partition with n rows of length m."""
    if n < 0 or m < 0:
        raise ValueError("rectangle sides must be non-negative")
    return (m,) * n if m else ()


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(outer[i] >= inner[i] for i in range(len(inner)))


def subpartitions(lam: Partition):
    """All partitions contained in lam, in reverse-lex order."""
    def rec(row, max_part):
        yield ()
        if row == len(lam):
            return
        for first in range(min(lam[row], max_part), 0, -1):
            for rest in rec(row + 1, first):
                yield (first,) + rest
    return rec(0, lam[0] if lam else 0)


def skew_lr_contents(outer: Partition, inner: Partition) -> list[Partition]:
    """Contents of all LR fillings of outer/inner, one entry per tableau.

    Cells are filled row by row, right to left within a row, so that the
    reverse reading word grows one letter at a time; the lattice condition
    and semistandardness are enforced incrementally.  The multiset of
    contents returned has c^outer_{inner, beta} copies of each beta.
    """
    if not contains(outer, inner):
        return []
    inner_padded = list(inner) + [0] * (len(outer) - len(inner))
    cells = []  # (row, col) in reading order
    for r in range(len(outer)):
        for c in range(outer[r] - 1, inner_padded[r] - 1, -1):
            cells.append((r, c))
    if not cells:
        return [()]
    size = len(cells)
    values: dict[tuple[int, int], int] = {}
    counts = [0] * (len(outer) + 2)  # counts[v] = multiplicity of letter v; v <= row + 1
    out: list[Partition] = []

    def place(i: int) -> None:
        if i == size:
            out.append(tuple(c for c in counts[1:] if c))
            return
        r, c = cells[i]
        hi = r + 1  # entries in row r (0-indexed) never exceed r + 1
        right = values.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        above = values.get((r - 1, c))
        lo = above + 1 if above is not None else 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            values[(r, c)] = v
            counts[v] += 1
            place(i + 1)
            counts[v] -= 1
        values.pop((r, c), None)

    place(0)
    return out


def _multiply_by_schur(expansion: dict[Partition, int], nu: Partition) -> dict[Partition, int]:
    """Expand (sum c_sigma S_sigma) * S_nu in the Schur basis by the LR rule."""
    if not nu:
        return dict(expansion)
    out: dict[Partition, int] = {}
    for sigma, coeff in expansion.items():
        target = sum(sigma) + sum(nu)
        width = (sigma[0] if sigma else 0) + nu[0]
        depth = len(sigma) + len(nu)
        for lam in partitions_of(target, max_part=width):
            if len(lam) > depth or not contains(lam, sigma):
                continue
            mult = sum(1 for beta in skew_lr_contents(lam, sigma) if beta == nu)
            if mult:
                out[lam] = out.get(lam, 0) + coeff * mult
    return {k: v for k, v in out.items() if v}


def lr_expand_product(factors) -> dict[Partition, int]:
    """Schur expansion of the product S_{mu^0} S_{mu^1} ... via the LR rule."""
    expansion: dict[Partition, int] = {(): 1}
    for nu in factors:
        expansion = _multiply_by_schur(expansion, tuple(nu))
    return expansion


def lr_coeff(lam: Partition, factors) -> int:
    """Multiple LR coefficient: multiplicity of S_lam in prod_k S_{mu^k}."""
    if sum(lam) != sum(sum(f) for f in factors):
        return 0
    return lr_expand_product(factors).get(tuple(lam), 0)


def schur_difference_expansion(lam: Partition) -> list[tuple[int, Partition, Partition]]:
    """Triples (sign, alpha, beta') expanding S_lam over a difference of alphabets.

    Every pair (alpha, beta) with nonzero LR coefficient contributes
    LR^lam_{alpha,beta} copies of ((-1)^{|beta|}, alpha, conjugate(beta)).
    """
    lam = tuple(lam)
    out: list[tuple[int, Partition, Partition]] = []
    for alpha in subpartitions(lam):
        for beta in skew_lr_contents(lam, alpha):
            sign = -1 if sum(beta) % 2 else 1
            out.append((sign, alpha, conjugate(beta)))
    out.sort(key=lambda t: (t[1], t[2], t[0]))
    return out


def _compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def plethysm_via_quotients(lam: Partition, r: int) -> dict[Partition, int]:
    """Schur expansion of p_r o S_lam over partitions with empty r-core.

    Each r-tuple of partitions with sizes summing to |lam| corresponds to a
    unique empty-core partition mu; its coefficient is the r-sign of mu
    times the multiple LR coefficient of lam at the tuple.
    """
    if r < 2:
        raise ValueError("plethysm expansion needs r >= 2")
    lam = tuple(lam)
    n = sum(lam)
    out: dict[Partition, int] = {}
    for sizes in _compositions(n, r):
        tuples = [()]
        for s in sizes:
            tuples = [t + (q,) for t in tuples for q in partitions_of(s)]
        for quots in tuples:
            c = lr_coeff(lam, quots)
            if not c:
                continue
            mu = from_quotients(quots, r)
            out[mu] = out.get(mu, 0) + r_sign(mu, r) * c
    return {k: v for k, v in out.items() if v}


def plethysm_rect_balanced(n: int, m: int) -> dict[Partition, int]:
    """Schur expansion of p_2 o S_rectangle(n, m) over balanced partitions."""
    return {mu: r_sign(mu, 2) for mu in enumerate_balanced(n, m)}
