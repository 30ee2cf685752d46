"""Exact sparse polynomial algebra in the power-sum basis.

A polynomial is a dict mapping a partition rho (the index of
``p_rho = p_{rho_1} p_{rho_2} ...``) to a nonzero Fraction.  The zero
polynomial is the empty dict and the constant 1 is ``{(): Fraction(1)}``.
All arithmetic is exact; no floats anywhere.

Schur functions are built from the character expansion
``S_lam = sum_rho chi^lam_rho / z_rho * p_rho``.  Schur Q-functions are
built from the generating series of the one-row functions, the two-row
formula and a Pfaffian recursion, and P-functions are Q rescaled by
``2^{-length}``.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import mn_character, z_factor
from .partitions import Partition, partitions_of

PPoly = dict[Partition, Fraction]
SchurExpansion = dict[Partition, Fraction]

__all__ = [
    "PPoly",
    "SchurExpansion",
    "zero",
    "one",
    "p_single",
    "p_monomial",
    "add",
    "sub",
    "scale",
    "mul",
    "degree_components",
    "schur_p",
    "schur_q",
    "schur_small_p",
    "plethysm_pr",
    "omega_specialize",
    "reduce_mod3",
    "hall_inner",
    "to_schur_basis",
    "from_schur_expansion",
    "expansion_to_records",
    "expansion_from_records",
]


def zero() -> PPoly:
    return {}


def one() -> PPoly:
    return {(): Fraction(1)}


def p_single(k: int) -> PPoly:
    """The power sum p_k."""
    if k < 1:
        raise ValueError("power sum index must be positive")
    return {(k,): Fraction(1)}


def p_monomial(rho: Partition, coeff=1) -> PPoly:
    c = Fraction(coeff)
    return {tuple(rho): c} if c else {}


def add(a: PPoly, b: PPoly) -> PPoly:
    out = dict(a)
    for idx, c in b.items():
        s = out.get(idx, 0) + c
        if s:
            out[idx] = s
        else:
            out.pop(idx, None)
    return out


def sub(a: PPoly, b: PPoly) -> PPoly:
    return add(a, scale(b, -1))


def scale(a: PPoly, factor) -> PPoly:
    f = Fraction(factor)
    if not f:
        return {}
    return {idx: c * f for idx, c in a.items()}


def mul(a: PPoly, b: PPoly) -> PPoly:
    out: PPoly = {}
    for ia, ca in a.items():
        for ib, cb in b.items():
            idx = tuple(sorted(ia + ib, reverse=True))
            s = out.get(idx, 0) + ca * cb
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
    return out


def degree_components(a: PPoly) -> dict[int, PPoly]:
    """Split into homogeneous components keyed by degree."""
    out: dict[int, PPoly] = {}
    for idx, c in a.items():
        out.setdefault(sum(idx), {})[idx] = c
    return out


# ---------------------------------------------------------------------------
# Schur functions

_SCHUR_CACHE: dict[Partition, PPoly] = {}


def schur_p(lam: Partition) -> PPoly:
    """S_lam expanded in power sums via the character formula."""
    lam = tuple(lam)
    cached = _SCHUR_CACHE.get(lam)
    if cached is None:
        n = sum(lam)
        cached = {}
        for rho in partitions_of(n):
            chi = mn_character(lam, rho)
            if chi:
                cached[rho] = Fraction(chi, z_factor(rho))
        _SCHUR_CACHE[lam] = cached
    return dict(cached)


_Q_ROW: dict[int, PPoly] = {0: one()}


def _q_row(n: int) -> PPoly:
    # Coefficient of z^n in exp(sum_{k odd} 2 p_k z^k / k), via the series
    # ODE f' = g' f:  n f_n = sum_{k odd <= n} 2 p_k f_{n-k}.
    if n not in _Q_ROW:
        for d in range(1, n + 1):
            if d in _Q_ROW:
                continue
            acc: PPoly = {}
            for k in range(1, d + 1, 2):
                acc = add(acc, scale(mul(p_single(k), _Q_ROW[d - k]), 2))
            _Q_ROW[d] = scale(acc, Fraction(1, d))
    return dict(_Q_ROW[n])


def _q_two_row(a: int, b: int) -> PPoly:
    # Q_{(a,b)} = q_a q_b + 2 sum_{i>=1} (-1)^i q_{a+i} q_{b-i}
    if b == 0:
        return _q_row(a)
    out = mul(_q_row(a), _q_row(b))
    for i in range(1, b + 1):
        term = scale(mul(_q_row(a + i), _q_row(b - i)), 2 * (-1) ** i)
        out = add(out, term)
    return out


def schur_q(lam: Partition) -> PPoly:
    """Schur Q-function of a strict partition, supported on odd-part indices."""
    parts = tuple(lam)
    if any(a <= b for a, b in zip(parts, parts[1:])) or any(p <= 0 for p in parts):
        raise ValueError(f"Q-functions are indexed by strict partitions: {lam!r}")
    if len(parts) % 2:
        parts = parts + (0,)
    return _q_pfaffian(parts)


def _q_pfaffian(parts: tuple[int, ...]) -> PPoly:
    if not parts:
        return one()
    if len(parts) == 2:
        return _q_two_row(parts[0], parts[1])
    out: PPoly = {}
    head, rest = parts[0], parts[1:]
    for j, b in enumerate(rest):
        minor = _q_pfaffian(rest[:j] + rest[j + 1:])
        term = mul(_q_two_row(head, b), minor)
        out = add(out, term if j % 2 == 0 else scale(term, -1))
    return out


def schur_small_p(lam: Partition) -> PPoly:
    """P_lam = 2^{-length} Q_lam."""
    return scale(schur_q(lam), Fraction(1, 2 ** len(lam)))


# ---------------------------------------------------------------------------
# plethysm, specializations, projections

def plethysm_pr(a: PPoly, r: int) -> PPoly:
    """p_r composed with a: every index part k becomes rk."""
    if r < 1:
        raise ValueError("plethysm degree must be positive")
    return {tuple(r * k for k in idx): c for idx, c in a.items()}


def omega_specialize(a: PPoly, r: int) -> PPoly:
    """Evaluate at the r-inflated alphabet: p_k -> r p_k if r | k, else 0."""
    if r < 2:
        raise ValueError("omega specialization needs r >= 2")
    out: PPoly = {}
    for idx, c in a.items():
        if all(k % r == 0 for k in idx):
            out[idx] = c * r ** len(idx)
    return out


def reduce_mod3(a: PPoly) -> PPoly:
    """Kill every term whose index has a part divisible by 3."""
    return {idx: c for idx, c in a.items() if all(k % 3 for k in idx)}


# ---------------------------------------------------------------------------
# Hall inner product and basis conversion

def hall_inner(a: PPoly, b: PPoly) -> Fraction:
    """<a, b> with <p_rho, p_sigma> = z_rho delta_{rho sigma}."""
    if len(b) < len(a):
        a, b = b, a
    total = Fraction(0)
    for idx, c in a.items():
        d = b.get(idx)
        if d is not None:
            total += c * d * z_factor(idx)
    return total


def to_schur_basis(a: PPoly) -> SchurExpansion:
    """Schur coefficients <a, S_lam>, one graded component at a time.

    Equivalent to hall_inner(a, schur_p(lam)) for every lam of the right
    size, computed as a character sum over the support of a.
    """
    out: SchurExpansion = {}
    for degree, comp in degree_components(a).items():
        for lam in partitions_of(degree):
            c = Fraction(0)
            for rho, coeff in comp.items():
                chi = mn_character(lam, rho)
                if chi:
                    c += coeff * chi
            if c:
                out[lam] = c
    return out


def from_schur_expansion(e: SchurExpansion) -> PPoly:
    out: PPoly = {}
    for lam, c in e.items():
        out = add(out, scale(schur_p(lam), c))
    return out


# ---------------------------------------------------------------------------
# serialization (shared by PowerSumPolynomial and SchurExpansion)

def expansion_to_records(a) -> list[dict]:
    """JSON-ready records sorted by index in reverse-lex order; bit-stable."""
    out = []
    for idx in sorted(a, reverse=True):
        c = Fraction(a[idx])
        out.append({"index": list(idx), "num": str(c.numerator), "den": str(c.denominator)})
    return out


def expansion_from_records(records) -> PPoly:
    out: PPoly = {}
    for rec in records:
        c = Fraction(int(rec["num"]), int(rec["den"]))
        if c:
            out[tuple(rec["index"])] = c
    return out
