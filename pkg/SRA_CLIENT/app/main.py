"""sra: command-line front end for computations in presented superrings."""

import argparse
import json
import logging
import sys

import config
from errors import InternalError, SuperringError
from frontend.commands import VERBS
from frontend.printer import format_error
from session.session_manager import Session, SessionState, render_text

try:
    import readline

    is_rl_available = True
except ModuleNotFoundError:
    is_rl_available = False

__version__ = "1.0"

logger = logging.getLogger(__name__)


def emit(result, as_json):
    if as_json:
        print(json.dumps(result, sort_keys=True, ensure_ascii=False))
    else:
        print(render_text(result))


def report_error(error, as_json, line=None):
    if as_json:
        data = error.to_dict()
        if line is not None:
            data.setdefault("line", line)
        print(json.dumps(data, sort_keys=True, ensure_ascii=False))
    else:
        print(format_error(error), file=sys.stderr)


def run_batch(session, lines, as_json):
    """Run a script, stopping at the first error with its exit code."""
    for number, text in enumerate(lines, 1):
        try:
            for result in session.execute(text.rstrip("\n"), number):
                emit(result, as_json)
        except SuperringError as error:
            if not isinstance(error, InternalError):
                logger.warning(f"line {number}: {error.message}")
            report_error(error, as_json, number)
            return error.exit_code
        if session.state is SessionState.FINISHED:
            break
    return 0


def _completer(text, state):
    matches = [verb for verb in VERBS if verb.startswith(text)]
    return matches[state] if state < len(matches) else None


def run_repl(session, as_json):
    if is_rl_available:
        readline.parse_and_bind("tab: complete")
        readline.set_completer(_completer)
    print(f"sra {__version__}, supercommutative ring algebra (default field {session.default_field})")
    print("Type 'help' for the command list, 'quit' to leave.")
    while session.state is SessionState.ACTIVE:
        try:
            line = input("sra> ")
        except (EOFError, KeyboardInterrupt):
            print()
            break
        try:
            for result in session.execute(line):
                emit(result, as_json)
        except SuperringError as error:
            report_error(error, as_json)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="sra", description="supercommutative ring algebra")
    parser.add_argument("command", nargs="?", choices=["run"], help="run a session file in batch mode")
    parser.add_argument("file", nargs="?", help="session file (one command per line, '#' comments)")
    parser.add_argument("--json", action="store_true", help="one JSON object per result")
    parser.add_argument("--field", default=config.DEFAULT_FIELD, help="default field: q or fp:<p>")
    parser.add_argument("--max-degree", type=int, default=config.MAX_DEGREE, help="Groebner degree cap")
    parser.add_argument("--max-odd", type=int, default=config.MAX_ODD, help="cap on odd variables")
    parser.add_argument("--timeout", type=float, default=config.TIMEOUT, help="seconds per command, 0 = none")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr (-vv for debug)")
    parser.add_argument("--version", action="version", version=f"sra {__version__}")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "run" and not args.file:
        print("sra run: missing session file", file=sys.stderr)
        return 1

    level = {0: config.LOG_LEVEL, 1: "INFO"}.get(args.verbose, "DEBUG")
    logging.basicConfig(level=level, format='%(asctime)s - %(levelname)s - %(message)s', stream=sys.stderr)

    config.MAX_DEGREE = args.max_degree
    config.MAX_ODD = args.max_odd
    config.TIMEOUT = args.timeout
    config.JSON_OUTPUT = args.json

    try:
        session = Session(field=args.field, timeout=args.timeout)
    except SuperringError as error:
        report_error(error, args.json)
        return error.exit_code

    if args.command == "run":
        try:
            with open(args.file, encoding="utf-8") as handle:
                lines = handle.readlines()
        except OSError as exc:
            print(f"sra: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
            return 1
        return run_batch(session, lines, args.json)
    if not sys.stdin.isatty():
        return run_batch(session, sys.stdin.readlines(), args.json)
    return run_repl(session, args.json)


if __name__ == "__main__":
    sys.exit(main())
