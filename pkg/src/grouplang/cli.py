"""``grouplang`` command line.

Exit codes: 0 success or YES, 1 NO, 2 UNKNOWN or a search cap was hit,
64 usage or validation error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .catalog import BUILTINS, kappa
from .errors import GroupLangError, NonExhaustiveError
from .growth import growth_of_system
from .lsystem import (
    LSystem,
    SearchCaps,
    Verdict,
    enumerate_language,
    format_grammar,
    format_word,
    member,
    parse_grammar,
    verify,
)

EXIT_OK = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("grammar", nargs="?", type=Path, help="grammar file")
    src.add_argument("--builtin", choices=sorted(BUILTINS), help="use a built-in system")
    p.add_argument(
        "--dump-grammar", action="store_true", help="print the grammar in file format and exit"
    )


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-sentential", type=int, help="cap on sentential form length")
    p.add_argument("--max-control", type=int, help="cap on the number of table applications")
    p.add_argument("--max-visited", type=int, help="cap on visited search states")


def _caps(args: argparse.Namespace) -> SearchCaps:
    base = SearchCaps.from_env()
    try:
        return SearchCaps(
            args.max_sentential or base.max_sentential_length,
            args.max_control or base.max_control_length,
            args.max_visited or base.max_visited,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _system(args: argparse.Namespace) -> LSystem:
    if args.builtin:
        return BUILTINS[args.builtin]()
    try:
        text = args.grammar.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.grammar}: {exc.strerror}") from exc
    return parse_grammar(text, args.grammar.stem)


def _dumped(args: argparse.Namespace, system: LSystem) -> bool:
    if getattr(args, "dump_grammar", False):
        sys.stdout.write(format_grammar(system))
        return True
    return False


def _show(word) -> str:
    return format_word(word, compact=True) or "~"


# -- commands --------------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    system = _system(args)
    if _dumped(args, system):
        return EXIT_OK
    if args.max_len < 0:
        raise UsageError("--max-len must be nonnegative")
    result = enumerate_language(system, args.max_len, _caps(args))
    for w in result.sorted():
        print(_show(w))
    note = "exhaustive" if result.exhaustive else "NOT exhaustive (a search cap was hit)"
    print(f"# {len(result.words)} words, {note}, {result.visited} states", file=sys.stderr)
    return EXIT_OK if result.exhaustive else EXIT_UNKNOWN


def cmd_member(args: argparse.Namespace) -> int:
    system = _system(args)
    if _dumped(args, system):
        return EXIT_OK
    word = system.terminal_word(args.word)
    if args.grig_oracle:
        return _member_with_oracle(system, word, args)
    result = member(system, word, _caps(args))
    print(result.verdict.value)
    if result.verdict is Verdict.YES:
        sys.stdout.write(result.witness.serialize())
        return EXIT_OK
    return EXIT_NO if result.verdict is Verdict.NO else EXIT_UNKNOWN


def _member_with_oracle(system: LSystem, word, args: argparse.Namespace) -> int:
    from .catalog import grigorchuk_coword_system
    from .grigorchuk import derive_witness, is_trivial

    if format_grammar(system) != format_grammar(grigorchuk_coword_system()):
        raise UsageError("--grig-oracle applies only to the grigorchuk-coword system")
    text = "".join(word)
    if is_trivial(text):
        print("NO")
        print(f"# {text or '~'} represents the identity of G", file=sys.stderr)
        return EXIT_NO
    result = member(system, word, _caps(args))
    witness = result.witness if result.verdict is Verdict.YES else derive_witness(text)
    if not verify(witness, system):
        print("UNKNOWN")
        print("# constructed witness failed verification", file=sys.stderr)
        return EXIT_UNKNOWN
    print("YES")
    sys.stdout.write(witness.serialize())
    return EXIT_OK


def cmd_grig(args: argparse.Namespace) -> int:
    from .catalog import grigorchuk_coword_system
    from .grigorchuk import derive_witness, is_trivial
    from .grigorchuk.words import check_word

    word = check_word("" if args.word == "~" else args.word)
    if args.action == "wp":
        trivial = is_trivial(word)
        print("TRIVIAL" if trivial else "NONTRIVIAL")
        return EXIT_OK if trivial else EXIT_NO
    if is_trivial(word):
        print(f"{word or '~'} represents the identity; it has no derivation", file=sys.stderr)
        return EXIT_NO
    witness = derive_witness(word)
    check = verify(witness, grigorchuk_coword_system())
    if not check:
        print(f"internal error: witness does not verify ({check.reason})", file=sys.stderr)
        return EXIT_UNKNOWN
    sys.stdout.write(witness.serialize())
    return EXIT_OK


def cmd_free(args: argparse.Namespace) -> int:
    from .stallings import format_word as fw
    from .stallings import free_reduce, is_basis_f2, parse_word, parse_word_set, recognize

    def load(w):
        r = free_reduce(w)
        if r != w:
            print(f"# warning: {fw(w)} freely reduced to {fw(r)}", file=sys.stderr)
        return r

    if args.action == "basis2":
        g, h = load(parse_word(args.g)), load(parse_word(args.h))
        if any(abs(x) > 2 for x in g + h):
            raise UsageError("basis2 works in F_2: use only a, b and their inverses")
        ok = is_basis_f2(g, h)
        print("YES" if ok else "NO")
        return EXIT_OK if ok else EXIT_NO
    if args.k < 1:
        raise UsageError("-k must be positive")
    words = [load(w) for w in parse_word_set(args.words)]
    result = recognize(words, args.k, trace=args.trace, same_edge_pinches=not args.no_same_edge)
    print("YES" if result.primitive else "NO")
    if not result.primitive:
        print(f"# {result.reason}", file=sys.stderr)
    for line in result.trace:
        print(line)
    return EXIT_OK if result.primitive else EXIT_NO


def cmd_growth(args: argparse.Namespace) -> int:
    system = _system(args)
    if _dumped(args, system):
        return EXIT_OK
    if args.max_len < 0:
        raise UsageError("--max-len must be nonnegative")
    try:
        series = growth_of_system(system, args.max_len, _caps(args))
    except NonExhaustiveError as exc:
        print(f"# {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    sys.stdout.write(series.to_csv())
    return EXIT_OK


def cmd_kappa(args: argparse.Namespace) -> int:
    print(kappa(args.m, args.n))
    return EXIT_OK


def cmd_dump(args: argparse.Namespace) -> int:
    sys.stdout.write(format_grammar(_system(args)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grouplang", description="L-systems and group-theoretic languages.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list terminal words up to a length")
    _add_source(p)
    p.add_argument("--max-len", type=int, required=True)
    _add_caps(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("member", help="decide membership, printing a witness on YES")
    _add_source(p)
    p.add_argument("--word", required=True, help="terminal word ('~' for the empty word)")
    p.add_argument(
        "--grig-oracle", action="store_true",
        help="settle Grigorchuk co-word queries with the word problem",
    )
    _add_caps(p)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("grig", help="Grigorchuk group word problem and witnesses")
    p.add_argument("action", choices=["wp", "witness"])
    p.add_argument("word", help="word over a, b, c, d ('~' or '' for the empty word)")
    p.set_defaults(func=cmd_grig)

    p = sub.add_parser("free", help="primitive sets and bases in free groups")
    fsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = fsub.add_parser("primitive", help="is w1#...#wn a primitive set of F_k?")
    q.add_argument("-k", type=int, required=True, help="rank of the free group")
    q.add_argument("words", help="'#'-separated words, uppercase letters are inverses")
    q.add_argument("--trace", action="store_true", help="print the pinch and fold sequence")
    q.add_argument("--no-same-edge", action="store_true", help="forbid pinching one segment with itself")
    q.set_defaults(func=cmd_free)
    q = fsub.add_parser("basis2", help="is {g, h} a basis of F_2?")
    q.add_argument("g")
    q.add_argument("h")
    q.set_defaults(func=cmd_free)

    p = sub.add_parser("growth", help="growth series as CSV")
    _add_source(p)
    p.add_argument("--max-len", type=int, required=True)
    _add_caps(p)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("kappa", help="crossing sequence of (m, n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("dump", help="print a system in grammar-file format")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("grammar", nargs="?", type=Path)
    src.add_argument("--builtin", choices=sorted(BUILTINS))
    p.set_defaults(func=cmd_dump)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GroupLangError) as exc:
        print(f"grouplang: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
