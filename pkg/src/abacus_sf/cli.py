"""Command-line surface: abacus calculus, expansions and identity checks.

Every verb prints human-readable text by default and stable JSON with
``--json`` (term order is deterministic, so JSON output is byte-identical
across runs).  Exit codes: 0 success or verified, 1 an identity check
failed, 2 usage error (including analytic requests beyond the degree cap,
which defaults to 18 and can be overridden by ``--max-degree`` or the
``ABACUS_SF_MAX_DEGREE`` environment variable).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import fock, lr, partitions, powersum, verifier


def parse_partition(text: str, strict: bool = False) -> partitions.Partition:
    """Parse a comma-separated partition literal; empty string is empty."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition literal: {text!r}")
    if any(p < 0 for p in parts):
        raise ValueError(f"negative parts in partition literal: {text!r}")
    return partitions.as_partition(parts, strict=strict)


def format_partition(lam) -> str:
    return ",".join(str(p) for p in lam) if lam else "()"


def _paren(lam) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")"


def format_partition_tuple(quots) -> str:
    return "(" + ",".join(_paren(q) for q in quots) + ")"


def _dump(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _render_abacus(rows) -> str:
    width = max((len(str(pos)) for row in rows for pos, _ in row), default=1)
    lines = []
    for row in rows:
        cells = []
        for pos, bead in row:
            body = f"{pos:>{width}}"
            cells.append(f"({body})" if bead else f" {body} ")
        lines.append(" ".join(cells))
    lines.append(" ".join("." * (width + 2) for _ in rows[0]) if rows else "")
    return "\n".join(lines)


def _sign_str(s: int) -> str:
    return "+1" if s > 0 else "-1"


# ---------------------------------------------------------------------------
# verb handlers (each returns an exit code)

def _cmd_core(args) -> int:
    lam = parse_partition(args.partition)
    core = partitions.r_core(lam, args.r)
    print(_dump(list(core)) if args.json else format_partition(core))
    return 0


def _cmd_quotient(args) -> int:
    lam = parse_partition(args.partition)
    quots = partitions.r_quotient(lam, args.r)
    print(_dump([list(q) for q in quots]) if args.json else format_partition_tuple(quots))
    return 0


def _cmd_sign(args) -> int:
    lam = parse_partition(args.partition)
    print(_sign_str(partitions.r_sign(lam, args.r)))
    return 0


def _cmd_barcore(args) -> int:
    lam = parse_partition(args.partition, strict=True)
    core = partitions.bar_core3(lam)
    print(_dump(list(core)) if args.json else format_partition(core))
    return 0


def _cmd_barquotient(args) -> int:
    lam = parse_partition(args.partition, strict=True)
    quots = partitions.bar_quotient3(lam)
    print(_dump([list(q) for q in quots]) if args.json else format_partition_tuple(quots))
    return 0


def _cmd_barsign(args) -> int:
    lam = parse_partition(args.partition, strict=True)
    print(_sign_str(partitions.bar_sign3(lam)))
    return 0


def _cmd_double(args) -> int:
    lam = parse_partition(args.partition, strict=True)
    dbl = partitions.double(lam)
    print(_dump(list(dbl)) if args.json else format_partition(dbl))
    return 0


def _cmd_abacus(args) -> int:
    if args.bar:
        lam = parse_partition(args.partition, strict=True)
        print(_render_abacus(partitions.BarAbacus.from_partition(lam).rows()))
    else:
        lam = parse_partition(args.partition)
        print(_render_abacus(partitions.Abacus.from_partition(lam, args.r).rows()))
    return 0


def _emit_expansion(expansion, as_json: bool, kind: str) -> None:
    records = powersum.expansion_to_records(expansion)
    if as_json:
        print(_dump(records))
        return
    if not records:
        print("0")
        return
    terms = []
    for rec in records:
        coeff = rec["num"] if rec["den"] == "1" else f'{rec["num"]}/{rec["den"]}'
        index = ",".join(str(i) for i in rec["index"])
        terms.append(f"{coeff}*{kind}[{index}]")
    print(" + ".join(terms))


def _cmd_schur(args) -> int:
    lam = parse_partition(args.partition)
    if sum(lam) > args.max_degree:
        raise ValueError(f"degree {sum(lam)} exceeds the analytic cap {args.max_degree}")
    _emit_expansion(powersum.schur_p(lam), args.json, "p")
    return 0


def _cmd_qfn(args) -> int:
    lam = parse_partition(args.partition, strict=True)
    _emit_expansion(powersum.schur_q(lam), args.json, "p")
    return 0


def _cmd_plethysm(args) -> int:
    if (args.partition is None) == (args.rect is None):
        raise ValueError("give exactly one of --lambda or --rect")
    if args.rect is not None:
        try:
            n, m = (int(t) for t in args.rect.split(","))
        except ValueError:
            raise ValueError(f"malformed rectangle literal: {args.rect!r}")
        lam = lr.rectangle(n, m)
    else:
        lam = parse_partition(args.partition)
    if args.r * sum(lam) > args.max_degree:
        raise ValueError(
            f"degree {args.r * sum(lam)} exceeds the analytic cap {args.max_degree}")
    _emit_expansion(lr.plethysm_via_quotients(lam, args.r), args.json, "S")
    return 0


def _cmd_phi(args) -> int:
    lam = parse_partition(args.partition, strict=True)
    image = fock.leidwanger_phi({lam: 1})
    items = sorted(image.items())
    if args.json:
        records = [
            {"b0": list(b0), "b1": list(b1), "q": q,
             "num": str(c.numerator), "den": str(c.denominator)}
            for (b0, b1, q), c in items
        ]
        print(_dump(records))
    else:
        terms = [f"{c}*P{_paren(b0)}*S{_paren(b1)}*q^{q}" for (b0, b1, q), c in items]
        print(" + ".join(terms) if terms else "0")
    return 0


def _cmd_apply(args) -> int:
    lam = parse_partition(args.partition, strict=True)
    filling = fock.Filling.A11 if args.filling == "a11" else fock.Filling.A22
    op = fock.apply_e if args.op == "e" else fock.apply_f
    result = op({lam: 1}, args.i, filling)
    items = sorted(result.items(), reverse=True)
    if args.json:
        print(_dump([{"index": list(mu), "coeff": c} for mu, c in items]))
    else:
        terms = [f"P{_paren(mu)}" if c == 1 else f"{c}*P{_paren(mu)}" for mu, c in items]
        print(" + ".join(terms) if terms else "0")
    return 0


def _cmd_family(args) -> int:
    if args.base == "delta":
        base = fock.staircase_delta(args.ell)
        members = fock.add_one_nodes(base, args.m, fock.Filling.A11)
    else:
        base = fock.lambda_ell(args.ell)
        members = fock.add_one_nodes(base, args.m, fock.Filling.A22, strict_only=True)
    members.sort(reverse=True)
    if args.json:
        print(_dump([list(mu) for mu in members]))
    else:
        for mu in members:
            print(format_partition(mu))
    return 0


def _require(args, *names) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise ValueError(f"verify {args.identity} requires --{name}")


def _cmd_verify(args) -> int:
    cap = args.max_degree
    reports = []
    ident = args.identity
    if ident == "a11":
        _require(args, "ell", "m")
        reports.append(verifier.verify_a11(args.ell, args.m, analytic=args.analytic))
    elif ident == "main":
        _require(args, "ell", "m")
        if args.analytic and 2 * args.m * (args.ell - args.m) > cap:
            raise ValueError(
                f"analytic degree {2 * args.m * (args.ell - args.m)} exceeds the cap {cap}")
        reports.append(verifier.verify_main(args.ell, args.m, analytic=args.analytic))
    elif ident == "plethysm":
        _require(args, "r", "partition")
        lam = parse_partition(args.partition)
        if args.r * sum(lam) > cap:
            raise ValueError(f"analytic degree {args.r * sum(lam)} exceeds the cap {cap}")
        reports.append(verifier.verify_plethysm_quotient(lam, args.r))
    elif ident == "balanced":
        _require(args, "n", "m")
        reports.append(verifier.verify_balanced_plethysm(args.n, args.m, cap))
    elif ident == "quotient-balance":
        _require(args, "ell", "m")
        reports.append(verifier.verify_quotient_balance(args.ell, args.m))
    elif ident == "sign-lemma":
        _require(args, "n", "m")
        reports.append(verifier.verify_sign_lemma(args.n, args.m))
    elif ident == "littlewood":
        _require(args, "r", "partition")
        mu = parse_partition(args.partition)
        if sum(mu) > cap:
            raise ValueError(f"analytic degree {sum(mu)} exceeds the cap {cap}")
        reports.append(verifier.verify_littlewood(mu, args.r))
    elif ident == "all":
        reports.extend(verifier.verify_all(max_ell=args.max_ell, max_degree=cap))
    else:
        raise ValueError(f"unknown identity {ident!r}")

    payload = [r.to_dict() for r in reports]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(_dump(payload))
    if args.json:
        print(_dump(payload))
    else:
        for r in reports:
            label = " ".join(f"{k}={v}" for k, v in r.params.items())
            line = f"{r.identity} {label} [{r.mode}]: {r.verdict} ({r.millis:.1f} ms)"
            if r.witness is not None:
                line += f"  witness: {r.witness}"
            print(line)
    return 0 if all(r.verified for r in reports) else 1


# ---------------------------------------------------------------------------
# argument parsing

def _add_partition_option(p, required=True, helptext="partition literal, e.g. 7,7,4,4,1"):
    p.add_argument("--lambda", dest="partition", required=required, help=helptext)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abacus-sf",
        description="abacus core/quotient calculus, exact Schur expansions and identity checks",
    )
    default_cap = int(os.environ.get("ABACUS_SF_MAX_DEGREE", verifier.DEFAULT_MAX_DEGREE))
    parser.add_argument("--max-degree", type=int, default=default_cap,
                        help="cap on analytic conversion degree (default %(default)s)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("core", help="r-core of a partition")
    p.add_argument("--r", type=int, required=True)
    _add_partition_option(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_core)

    p = sub.add_parser("quotient", help="r-quotient of a partition")
    p.add_argument("--r", type=int, required=True)
    _add_partition_option(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_quotient)

    p = sub.add_parser("sign", help="r-sign of a partition")
    p.add_argument("--r", type=int, required=True)
    _add_partition_option(p)
    p.set_defaults(handler=_cmd_sign)

    p = sub.add_parser("barcore", help="3-bar core of a strict partition")
    _add_partition_option(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_barcore)

    p = sub.add_parser("barquotient", help="3-bar quotient of a strict partition")
    _add_partition_option(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_barquotient)

    p = sub.add_parser("barsign", help="3-bar sign of a strict partition")
    _add_partition_option(p)
    p.set_defaults(handler=_cmd_barsign)

    p = sub.add_parser("double", help="double of a strict partition")
    _add_partition_option(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_double)

    p = sub.add_parser("abacus", help="render an abacus")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--bar", action="store_true", help="render the 3-bar abacus")
    _add_partition_option(p)
    p.set_defaults(handler=_cmd_abacus)

    p = sub.add_parser("schur", help="Schur function in the power-sum basis")
    _add_partition_option(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_schur)

    p = sub.add_parser("qfn", help="Schur Q-function in the power-sum basis")
    _add_partition_option(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_qfn)

    p = sub.add_parser("plethysm", help="Schur expansion of p_r o S_lambda")
    p.add_argument("--r", type=int, required=True)
    _add_partition_option(p, required=False)
    p.add_argument("--rect", help="rectangle n,m instead of --lambda")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_plethysm)

    p = sub.add_parser("phi", help="image of P_lambda under the basis map")
    _add_partition_option(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_phi)

    p = sub.add_parser("apply", help="apply a raising/lowering operator to P_lambda")
    p.add_argument("--op", choices=("e", "f"), required=True)
    p.add_argument("--i", type=int, choices=(0, 1), required=True)
    p.add_argument("--filling", choices=("a22", "a11"), default="a22")
    _add_partition_option(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_apply)

    p = sub.add_parser("family", help="partitions reachable by adding m 1-nodes")
    p.add_argument("--base", choices=("delta", "lambda"), required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("verify", help="machine-check identities")
    p.add_argument("identity", choices=(
        "a11", "main", "plethysm", "balanced", "quotient-balance",
        "sign-lemma", "littlewood", "all"))
    p.add_argument("--ell", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    _add_partition_option(p, required=False)
    p.add_argument("--analytic", action="store_true")
    p.add_argument("--max-ell", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write the JSON reports to this path")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
