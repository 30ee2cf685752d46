"""Machine checks for the displayed identities.

Every verifier returns a VerificationReport.  Structural mode compares
finite signed multisets of partitions; analytic mode expands both sides
exactly (rational arithmetic) and compares term by term.  A failed report
carries the first mismatching term as a witness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from collections import Counter
from math import comb

from .fock import Filling, add_one_nodes, lambda_ell, staircase_delta
from .lr import (
    lr_coeff,
    plethysm_rect_balanced,
    plethysm_via_quotients,
    rectangle,
    schur_difference_expansion,
)
from .partitions import (
    Partition,
    bar_quotient3,
    bar_sign3,
    conjugate,
    enumerate_balanced,
    is_balanced,
    partitions_of,
    r_core,
    r_quotient,
    r_sign,
)
from .powersum import (
    add,
    omega_specialize,
    plethysm_pr,
    scale,
    schur_p,
    to_schur_basis,
    zero,
)

DEFAULT_MAX_DEGREE = 18

__all__ = [
    "DEFAULT_MAX_DEGREE",
    "VerificationReport",
    "epsilon",
    "alpha_gamma_sequences",
    "verify_a11",
    "verify_main",
    "verify_plethysm_quotient",
    "verify_balanced_plethysm",
    "verify_quotient_balance",
    "verify_sign_lemma",
    "verify_littlewood",
    "verify_all",
]


@dataclass
class VerificationReport:
    identity: str
    params: dict
    mode: str
    verdict: str
    witness: str | None
    millis: float

    @property
    def verified(self) -> bool:
        return self.verdict == "verified"

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": self.params,
            "mode": self.mode,
            "verdict": self.verdict,
            "millis": round(self.millis, 3),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _run(identity: str, params: dict, mode: str, check) -> VerificationReport:
    start = time.perf_counter()
    witness = check()
    millis = (time.perf_counter() - start) * 1000.0
    verdict = "verified" if witness is None else "failed"
    return VerificationReport(identity, params, mode, verdict, witness, millis)


def _first_mismatch(lhs: Counter, rhs: Counter) -> str | None:
    for key in sorted(set(lhs) | set(rhs), key=repr):
        if lhs[key] != rhs[key]:
            return f"{key!r}: lhs multiplicity {lhs[key]}, rhs multiplicity {rhs[key]}"
    return None


def _first_poly_mismatch(lhs: dict, rhs: dict) -> str | None:
    for key in sorted(set(lhs) | set(rhs), reverse=True):
        if lhs.get(key, 0) != rhs.get(key, 0):
            return f"index {key!r}: lhs {lhs.get(key, 0)}, rhs {rhs.get(key, 0)}"
    return None


# ---------------------------------------------------------------------------
# sign bookkeeping

def epsilon(ell: int, m: int) -> int:
    """Comparison sign between the two sides of the main identity."""
    if not 0 <= m <= ell:
        raise ValueError(f"need 0 <= m <= ell, got m={m}, ell={ell}")
    low = (-1) ** comb(m, 2)
    high = (-1) ** (comb(ell - m + 1, 2) + (ell - m) * m)
    if 2 * m == ell:
        assert low == high
    return low if 2 * m <= ell else high


def _family_rows(ell: int, m: int, mu: Partition) -> list[int]:
    base = lambda_ell(ell)
    if len(mu) != ell:
        raise ValueError(f"{mu!r} is not in the m={m} family over {base!r}")
    diff = [mu[i] - base[i] for i in range(ell)]
    if any(d not in (0, 1) for d in diff) or sum(diff) != m:
        raise ValueError(f"{mu!r} is not in the m={m} family over {base!r}")
    return [i + 1 for i, d in enumerate(diff) if d == 1]


def alpha_gamma_sequences(ell: int, m: int, mu: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Inversion and offset sequences of a family member.

    alpha records the inversions contributing to the 3-bar sign of mu,
    gamma the row offsets; alpha + gamma equals gamma at the reference
    point and (-1)^{sum alpha} equals the 3-bar sign, both checked here.
    """
    rows = _family_rows(ell, m, mu)
    if 2 * m <= ell:
        sub = [2 * k - 1 for k in range(1, m + 1)]
        gamma_ref = [ell - m - k for k in range(m)]
    else:
        sub = [2 * k - 1 for k in range(1, ell - m + 1)]
        sub += list(range(2 * (ell - m) + 1, ell + 1))
        gamma_ref = [ell - m - k for k in range(ell - m)] + [0] * (2 * m - ell)
    alpha = tuple((ell + 1 - rows[m - k]) - sub[k - 1] for k in range(1, m + 1))
    gamma = tuple(rows[m - k] - (m - k + 1) for k in range(1, m + 1))
    if tuple(a + g for a, g in zip(alpha, gamma)) != tuple(gamma_ref):
        raise ValueError(f"offset identity fails for {mu!r}: {alpha} + {gamma} != {gamma_ref}")
    if bar_sign3(mu) != (-1) ** (sum(alpha) % 2):
        raise ValueError(f"sign identity fails for {mu!r}: alpha={alpha}")
    return alpha, gamma


# ---------------------------------------------------------------------------
# the two rectangle theorems

def verify_a11(ell: int, m: int, analytic: bool = False) -> VerificationReport:
    """Staircase family vs. the two-alphabet rectangle expansion."""
    if ell < 1 or ell % 2 == 0:
        raise ValueError(f"ell must be a positive odd integer: {ell}")
    if not 0 <= m <= ell:
        raise ValueError(f"need 0 <= m <= ell, got m={m}")
    params = {"ell": ell, "m": m}
    mode = "analytic" if analytic else "structural"
    box = rectangle(ell + 1 - m, m)

    def check() -> str | None:
        family = add_one_nodes(staircase_delta(ell), m, Filling.A11)
        if len(family) != comb(ell + 1, m):
            return f"family size {len(family)} != C({ell + 1},{m})"
        # A quotient pair matches an expansion triple (sign, alpha, beta')
        # with (alpha, beta) = (mu[0], conjugate(mu[1])) complementary, so the
        # third slot of the triple carries mu[1] itself.
        lhs = Counter()
        pairs = []
        for mu in family:
            q0, q1 = r_quotient(mu, 2)
            sign = -1 if sum(q1) % 2 else 1
            lhs[(sign, q0, q1)] += 1
            pairs.append((q0, conjugate(q1)))
        rhs = Counter(schur_difference_expansion(box))
        bad = _first_mismatch(lhs, rhs)
        if bad is not None:
            return bad
        if analytic:
            n_rows = ell + 1 - m
            for alpha, beta in pairs:
                padded = list(alpha) + [0] * (n_rows - len(alpha))
                comp = tuple(x for x in (m - padded[n_rows - 1 - i] for i in range(n_rows)) if x)
                if beta != comp:
                    return f"pair ({alpha!r}, {beta!r}) not complementary in {box!r}"
        return None

    return _run("a11", params, mode, check)


def verify_main(ell: int, m: int, analytic: bool = False) -> VerificationReport:
    """Main identity: bar-quotient family vs. the balanced expansion."""
    if ell < 1:
        raise ValueError(f"ell must be positive: {ell}")
    if not 0 <= m <= ell:
        raise ValueError(f"need 0 <= m <= ell, got m={m}")
    params = {"ell": ell, "m": m}
    mode = "analytic" if analytic else "structural"

    def check() -> str | None:
        family = add_one_nodes(lambda_ell(ell), m, Filling.A22, strict_only=True)
        if len(family) != comb(ell, m):
            return f"family size {len(family)} != C({ell},{m})"
        eps = epsilon(ell, m)
        lhs = Counter((bar_sign3(mu), bar_quotient3(mu)[1]) for mu in family)
        rhs = Counter((eps * r_sign(nu, 2), nu) for nu in enumerate_balanced(ell - m, m))
        bad = _first_mismatch(lhs, rhs)
        if bad is not None:
            return bad
        if analytic:
            lhs_poly = zero()
            for mu in family:
                lhs_poly = add(lhs_poly, scale(schur_p(bar_quotient3(mu)[1]), bar_sign3(mu)))
            rhs_poly = scale(plethysm_pr(schur_p(rectangle(ell - m, m)), 2), eps)
            return _first_poly_mismatch(lhs_poly, rhs_poly)
        return None

    return _run("main", params, mode, check)


# ---------------------------------------------------------------------------
# plethysm propositions and lemmas

def verify_plethysm_quotient(lam: Partition, r: int) -> VerificationReport:
    """Quotient-sum expansion of p_r o S_lam against the substitution oracle."""
    lam = tuple(lam)
    params = {"lambda": list(lam), "r": r}

    def check() -> str | None:
        got = plethysm_via_quotients(lam, r)
        want = to_schur_basis(plethysm_pr(schur_p(lam), r))
        return _first_poly_mismatch(got, want)

    return _run("plethysm-quotient", params, "analytic", check)


def verify_balanced_plethysm(n: int, m: int,
                             max_degree: int = DEFAULT_MAX_DEGREE) -> VerificationReport:
    """Balanced expansion of p_2 o S_rectangle(n, m)."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    params = {"n": n, "m": m}
    analytic = 2 * n * m <= max_degree
    mode = "analytic" if analytic else "structural"

    def check() -> str | None:
        got = plethysm_rect_balanced(n, m)
        if analytic:
            want = to_schur_basis(plethysm_pr(schur_p(rectangle(n, m)), 2))
            return _first_poly_mismatch(got, want)
        if len(got) != comb(n + m, m):
            return f"term count {len(got)} != C({n + m},{m})"
        for mu, coeff in got.items():
            if coeff not in (1, -1):
                return f"coefficient of {mu!r} is {coeff}, not a sign"
            if not is_balanced(mu, n, m):
                return f"index {mu!r} is not balanced"
        return None

    return _run("balanced-plethysm", params, mode, check)


def verify_quotient_balance(ell: int, m: int) -> VerificationReport:
    """Second bar-quotient components of the family fill W(ell-m, m) exactly."""
    if ell < 1 or not 0 <= m <= ell:
        raise ValueError(f"need 1 <= ell and 0 <= m <= ell, got ell={ell}, m={m}")
    params = {"ell": ell, "m": m}

    def check() -> str | None:
        family = add_one_nodes(lambda_ell(ell), m, Filling.A22, strict_only=True)
        images = [bar_quotient3(mu)[1] for mu in family]
        if len(set(images)) != len(images):
            return "quotient map is not injective on the family"
        got = set(images)
        want = set(enumerate_balanced(ell - m, m))
        if got != want:
            extra = got - want
            missing = want - got
            return f"extra {sorted(extra)!r}, missing {sorted(missing)!r}"
        return None

    return _run("quotient-balance", params, "structural", check)


def verify_sign_lemma(n: int, m: int) -> VerificationReport:
    """2-sign of a balanced partition equals the parity of its tail parts."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    params = {"n": n, "m": m}

    def check() -> str | None:
        for mu in enumerate_balanced(n, m):
            padded = list(mu) + [0] * (2 * n - len(mu))
            tail = sum(padded[n:])
            if r_sign(mu, 2) != (-1) ** (tail % 2):
                return f"{mu!r}: sign {r_sign(mu, 2)}, tail parity {(-1) ** (tail % 2)}"
        return None

    return _run("sign-lemma", params, "structural", check)


def verify_littlewood(mu: Partition, r: int) -> VerificationReport:
    """Specialization at the r-inflated alphabet against the quotient side."""
    mu = tuple(mu)
    params = {"mu": list(mu), "r": r}

    def check() -> str | None:
        got = omega_specialize(schur_p(mu), r)
        want = zero()
        if not r_core(mu, r):
            quots = r_quotient(mu, r)
            sign = r_sign(mu, r)
            for nu in partitions_of(sum(mu) // r):
                c = lr_coeff(nu, quots)
                if c:
                    want = add(want, scale(plethysm_pr(schur_p(nu), r), sign * c))
        return _first_poly_mismatch(got, want)

    return _run("littlewood", params, "analytic", check)


# ---------------------------------------------------------------------------
# aggregation

def verify_all(max_ell: int = 6, max_degree: int = DEFAULT_MAX_DEGREE,
               max_plethysm_size: int = 5, max_balanced_area: int = 8,
               max_littlewood_size: int = 9) -> list[VerificationReport]:
    """Run every verifier over its declared range; deterministic order."""
    reports = []
    for ell in range(1, max_ell + 1, 2):
        for m in range(ell + 1):
            reports.append(verify_a11(ell, m, analytic=True))
    for ell in range(1, max_ell + 1):
        for m in range(ell + 1):
            analytic = 2 * m * (ell - m) <= max_degree
            reports.append(verify_main(ell, m, analytic=analytic))
            reports.append(verify_quotient_balance(ell, m))
    for r in (2, 3):
        for n in range(max_plethysm_size + 1):
            for lam in partitions_of(n):
                reports.append(verify_plethysm_quotient(lam, r))
    for n in range(max_balanced_area + 1):
        for m in range(max_balanced_area + 1):
            if n * m <= max_balanced_area:
                reports.append(verify_balanced_plethysm(n, m, max_degree))
    for n in range(max_balanced_area + 1):
        for m in range(max_balanced_area + 1 - n):
            reports.append(verify_sign_lemma(n, m))
    for r in (2, 3):
        for n in range(max_littlewood_size + 1):
            for mu in partitions_of(n):
                reports.append(verify_littlewood(mu, r))
    return reports
