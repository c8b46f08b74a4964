"""Command-line front end.

Every subcommand is a thin wrapper over one library operation and prints
plain text, one result per line.  Exit status: 0 on success, 1 on a domain
error (or a failed check), 2 on a parse error, 3 when a witness search runs
out of bound.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Callable, Optional, Sequence

from . import __version__
from .balls import ball_chain, iterate_M
from .coeq import (
    WitnessBoundExceeded,
    coequalizer_violations,
    cstar_oracle,
    factor_generator,
    in_omega_C,
    omega_C_clopens,
    verify_factorization,
)
from .cstar import cstar_interval, interval_member
from .dyadic import DomainError, format_rational, parse_interval_open, parse_rational
from .forall import check_adjunction, check_frobenius, check_theta_monotone, check_theta_relations, theta
from .opens import (
    check_hook_identities,
    check_presentation_relations,
    check_round_trips,
    lhook,
    pair_open,
    parse_open,
    rhook,
    up,
)
from .streams import approximant, exact_value, half, m_s, parse_stream
from .words import format_word, lexl, lexu, lmid, lt, midl, overlap, parse_selement, parse_word


# Words, streams and negative rationals may start with "-"; argparse would
# read them as options.  They are shielded with a leading space, which every
# value parser strips.
_VALUE_TOKEN = re.compile(r"^-(?:[-+0_()]*|\d+(?:/(?:2\^)?\d+)?)$")


def _shield(argv: Sequence[str]) -> list[str]:
    return [" " + a if _VALUE_TOKEN.match(a) and a not in ("-h",) else a for a in argv]


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


RELATIONS: dict[str, Callable[[str, str], bool]] = {
    "lexl": lexl,
    "lexu": lexu,
    "lt": lt,
    "overlap": overlap,
    "lmid": lmid,
    "midl": midl,
}


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _sign_stream(text: str):
    s = parse_stream(text)
    if "0" in str(s):
        raise ValueError(f"{text!r} is not a sign stream")
    return s


def _value_lines(stream, digits: int) -> list[str]:
    return [str(approximant(stream, digits)), f"exact: {format_rational(exact_value(stream))}"]


def cmd_eval(a) -> list[str]:
    return _value_lines(parse_stream(a.stream), a.digits)


def cmd_midpoint(a) -> list[str]:
    m = m_s(_sign_stream(a.left), _sign_stream(a.right))
    return [str(m), *_value_lines(m, a.digits)]


def cmd_half(a) -> list[str]:
    h = half(_sign_stream(a.stream))
    return [str(h), *_value_lines(h, a.digits)]


def cmd_relate(a) -> list[str]:
    return [_bool(RELATIONS[a.op](parse_word(a.s), parse_word(a.t)))]


def cmd_open(a) -> list[str]:
    if a.kind == "pair":
        if len(a.words) != 2:
            raise ValueError("open pair takes two arguments (use 'bot' for an absent side)")
        return [str(pair_open(parse_selement(a.words[0]), parse_selement(a.words[1])))]
    if len(a.words) != 1:
        raise ValueError(f"open {a.kind} takes one word")
    make = {"up": up, "rhook": rhook, "lhook": lhook}[a.kind]
    return [str(make(parse_word(a.words[0])))]


def cmd_cstar(a) -> list[str]:
    V = parse_interval_open(a.interval)
    out = [str(cstar_interval(V).at_depth(a.depth))]
    for w in a.member or []:
        out.append(f"{format_word(parse_word(w))}: {_bool(interval_member(parse_word(w), V))}")
    return out


def cmd_forallc(a) -> list[str]:
    return [str(theta(parse_selement(a.s), parse_selement(a.t)))]


def cmd_iterate(a) -> list[str]:
    s = parse_stream(a.stream)
    endpoints = (parse_rational(a.endpoints[0]), parse_rational(a.endpoints[1]))
    if a.chain:
        return [f"{k}: {b}" for k, b in enumerate(ball_chain(s, a.n, endpoints))]
    return [str(iterate_M(s, a.n, endpoints))]


def cmd_coeq(a) -> list[str]:
    if a.check is None:
        return [str(U) for U in omega_C_clopens(a.depth)]
    U = parse_open(a.check)
    if in_omega_C(U):
        return ["true"]
    bad = coequalizer_violations(U.member, U.depth, U.depth + 1)
    return ["false", f"witness: {format_word(bad[0])}"]


def cmd_factor(a) -> list[str]:
    V = parse_interval_open(a.interval)
    U = cstar_oracle(V)
    if a.word is not None:
        u = parse_word(a.word)
        if not U.member(u):
            raise DomainError(f"{format_word(u)} is not in c*({V})")
        bound = a.bound if a.bound is not None else 2 * (len(u) + a.depth) + 2
        return [str(factor_generator(u, U, bound))]
    rep = verify_factorization(U, a.depth, a.bound)
    return [rep.summary(), *rep.notes]


CHECKS = {
    "hooks": lambda a: [check_hook_identities(a.max_len)],
    "presentations": lambda a: [check_presentation_relations(a.max_len), check_round_trips(a.max_len)],
    "adjunction": lambda a: [check_adjunction(a.max_len, a.depth)],
    "frobenius": lambda a: [check_frobenius(a.max_len, a.depth)],
    "theta": lambda a: [check_theta_monotone(a.max_len), check_theta_relations(a.max_len)],
}


def cmd_check(a) -> list[str]:
    reports = CHECKS[a.which](a)
    a.failed = not all(r.ok for r in reports)
    lines = []
    for r in reports:
        lines.append(r.summary())
        lines += [f"  violation: {v}" for v in r.violations[:20]]
    return lines


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="interval-object", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    q = sub.add_parser("eval", help="approximate and evaluate a stream such as '+-(+)'")
    q.add_argument("--stream", required=True, help="prefix(period); digits from -, + (and 0 for trits)")
    q.add_argument("--digits", type=int, default=10)
    q.set_defaults(run=cmd_eval)

    q = sub.add_parser("midpoint", help="digitwise midpoint of two sign streams (a trit stream)")
    q.add_argument("left")
    q.add_argument("right")
    q.add_argument("--digits", type=int, default=10)
    q.set_defaults(run=cmd_midpoint)

    q = sub.add_parser("half", help="the stream whose value is half the given one")
    q.add_argument("stream")
    q.add_argument("--digits", type=int, default=10)
    q.set_defaults(run=cmd_half)

    q = sub.add_parser("relate", help="decide a relation between two words ('_' is the empty word)")
    q.add_argument("--op", required=True, choices=sorted(RELATIONS))
    q.add_argument("s")
    q.add_argument("t")
    q.set_defaults(run=cmd_relate)

    q = sub.add_parser("open", help="canonical generators of a cylinder, hook or pair open")
    q.add_argument("kind", choices=["up", "rhook", "lhook", "pair"])
    q.add_argument("words", nargs="+", help="one word, or two for pair ('bot' for an absent side)")
    q.set_defaults(run=cmd_open)

    q = sub.add_parser("cstar", help="depth-k term of the inverse image of an interval open")
    q.add_argument("--interval", required=True, help="e.g. '[-1,-1/4) u (1/4,1]'")
    q.add_argument("--depth", type=int, default=0)
    q.add_argument("--member", action="append", help="also decide membership of this cylinder")
    q.set_defaults(run=cmd_cstar)

    q = sub.add_parser("forallc", help="right adjoint of the inverse image on a pair basic")
    q.add_argument("s", help="left word or 'bot'")
    q.add_argument("t", help="right word or 'bot'")
    q.set_defaults(run=cmd_forallc)

    q = sub.add_parser("iterate", help="ball-domain iterate M_n of a stream")
    q.add_argument("--stream", required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--endpoints", nargs=2, default=["-1", "1"], metavar=("A_MINUS", "A_PLUS"))
    q.add_argument("--chain", action="store_true", help="print M_0 .. M_n")
    q.set_defaults(run=cmd_iterate)

    q = sub.add_parser("coeq", help="decide whether an open is identified by both u maps")
    q.add_argument("--check", help="finitely generated open, e.g. '{+-,-+}'")
    q.add_argument("--depth", type=int, default=3, help="without --check: list passing clopens of this depth")
    q.set_defaults(run=cmd_coeq)

    q = sub.add_parser("factor", help="factor the inverse image of an interval open through intervals")
    q.add_argument("--interval", required=True)
    q.add_argument("--word", help="factor this single member; otherwise verify all members")
    q.add_argument("--depth", type=int, default=3)
    q.add_argument("--bound", type=int, help="witness exponent bound (default 2(|u|+depth)+2)")
    q.set_defaults(run=cmd_factor)

    q = sub.add_parser("check", help="run an exhaustive property checker")
    q.add_argument("which", choices=sorted(CHECKS))
    q.add_argument("--max-len", type=int, default=3)
    q.add_argument("--depth", type=int, default=3)
    q.set_defaults(run=cmd_check)
    return p


def _nonnegative(args) -> None:
    for name in ("digits", "depth", "n", "max_len", "bound"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            raise ValueError(f"--{name.replace('_', '-')} must be non-negative")


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_shield(argv))
    except SystemExit as e:
        return int(e.code or 0)
    try:
        _nonnegative(args)
        lines = args.run(args)
    except WitnessBoundExceeded as e:
        print(f"error: {e}", file=err)
        return 3
    except DomainError as e:
        print(f"error: {e}", file=err)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=err)
        return 2
    for line in lines:
        print(line, file=out)
    return 1 if getattr(args, "failed", False) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
