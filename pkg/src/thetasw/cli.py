"""Command-line front end: verification suites, decompositions and class tables.

    theta-sw verify <suite> [--g A..B] [--n A..B] [--format text|json]
    theta-sw decompose --g G --parity odd|even|all [--format text|json]
    theta-sw alpha --g G --parity P --degree D [--format text|json]

Exit codes: 0 all checks pass, 1 a verification check failed, 2 usage error.
All output is deterministic: factors, terms and report rows are emitted in
canonical order, so text output is byte-stable across runs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .etale import EtaleAlgebra, alpha_total
from .quadform import MultiquadraticField
from .ring import RingElement
from .symbols import SquareClass
from .theta import GENUS_BOUND, PARITIES, decompose
from .verify import SUITES, UsageError, run_suite

_PROG = "theta-sw"


def _parse_range(text: str) -> tuple[int, int]:
    """Parse 'A..B' or a single 'N' into an inclusive range."""
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
    else:
        lo_s = hi_s = text
    try:
        return int(lo_s), int(hi_s)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or A..B") from None


# -- serialization -------------------------------------------------------------


def decomposition_payload(g: int, parity: str, algebra: EtaleAlgebra) -> dict:
    """JSON-ready form of a decomposition; factors in canonical order."""
    factors = []
    for E, mult in algebra.factors:
        vars_ = []
        twists = []
        for d in E.generators:
            if len(d.vars) != 1:
                raise ValueError("only single-variable generators are serializable")
            vars_.append(min(d.vars))
            twists.append([d.sign, d.two])
        order = sorted(range(len(vars_)), key=lambda k: vars_[k])
        factors.append(
            {
                "A": [vars_[k] for k in order],
                "twists": [twists[k] for k in order],
                "multiplicity": mult,
            }
        )
    factors.sort(key=lambda f: (len(f["A"]), f["A"], f["twists"]))
    return {"g": g, "parity": parity, "factors": factors, "degree": algebra.degree}


def parse_decomposition(data: dict) -> tuple[int, str, EtaleAlgebra]:
    """Inverse of decomposition_payload."""
    factors = []
    for f in data["factors"]:
        gens = tuple(
            SquareClass(sign=tw[0], two=tw[1], vars=frozenset((v,)))
            for v, tw in zip(f["A"], f["twists"])
        )
        factors.append((MultiquadraticField(data["g"], gens), f["multiplicity"]))
    algebra = EtaleAlgebra(data["g"], tuple(factors))
    if algebra.degree != data["degree"]:
        raise ValueError("degree field does not match the listed factors")
    return data["g"], data["parity"], algebra


def _decomposition_text(payload: dict) -> str:
    lines = [f"decomposition of {payload['parity']} theta characteristics, genus {payload['g']}"]
    for f in payload["factors"]:
        name = "{" + ",".join(str(v) for v in f["A"]) + "}"
        twisted = any(tw != [0, 0] for tw in f["twists"])
        suffix = "  (twisted)" if twisted else ""
        lines.append(
            f"  A={name:<12} multiplicity {f['multiplicity']:<3} factor degree {1 << len(f['A'])}{suffix}"
        )
    lines.append(f"total degree {payload['degree']}")
    return "\n".join(lines)


def element_payload(x: RingElement) -> dict:
    """JSON-ready form of a ring element under the canonical term order."""
    return {
        "terms": [[m.eps, m.tau, list(m.var_indices())] for m in x.sorted_terms()],
        "text": str(x),
    }


# -- subcommands ---------------------------------------------------------------


def _cmd_verify(args) -> int:
    g_range = _parse_range(args.g) if args.g else None
    n_range = _parse_range(args.n) if args.n else None
    report = run_suite(args.suite, g_range=g_range, n_range=n_range)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.render_text())
    return 0 if report.passed else 1


def _cmd_decompose(args) -> int:
    if not 2 <= args.g <= GENUS_BOUND:
        raise UsageError(f"--g must be in 2..{GENUS_BOUND}")
    payload = decomposition_payload(args.g, args.parity, decompose(args.g, args.parity))
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(_decomposition_text(payload))
    return 0


def _cmd_alpha(args) -> int:
    if not 2 <= args.g <= GENUS_BOUND:
        raise UsageError(f"--g must be in 2..{GENUS_BOUND}")
    algebra = decompose(args.g, args.parity)
    if not 0 <= args.degree <= algebra.degree // 2:
        raise UsageError(
            f"--degree must be in 0..{algebra.degree // 2} for this algebra (degree {algebra.degree})"
        )
    x = alpha_total(algebra, args.degree)[args.degree]
    if args.format == "json":
        payload = {"g": args.g, "parity": args.parity, "degree": args.degree}
        payload.update(element_payload(x))
        print(json.dumps(payload, sort_keys=True))
    else:
        print(str(x))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=_PROG,
        description="exact verification of symbol-class identities and theta-characteristic counts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--g", help="genus range, e.g. 3..5 or 4")
    p_verify.add_argument("--n", help="order range for the polynomial identities, e.g. 1..5")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(fn=_cmd_verify)

    p_dec = sub.add_parser("decompose", help="decompose theta characteristics into field factors")
    p_dec.add_argument("--g", type=int, required=True)
    p_dec.add_argument("--parity", choices=PARITIES, required=True)
    p_dec.add_argument("--format", choices=("text", "json"), default="text")
    p_dec.set_defaults(fn=_cmd_decompose)

    p_alpha = sub.add_parser("alpha", help="print one graded class of a theta algebra")
    p_alpha.add_argument("--g", type=int, required=True)
    p_alpha.add_argument("--parity", choices=PARITIES, required=True)
    p_alpha.add_argument("--degree", type=int, required=True)
    p_alpha.add_argument("--format", choices=("text", "json"), default="text")
    p_alpha.set_defaults(fn=_cmd_alpha)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"{_PROG}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
