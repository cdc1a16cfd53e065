"""
Command language: one or more ';'-separated commands per line, '#' starts a comment.

Definitions bind a name (`ring`, `ideal`, `frac`, `elem`); every other verb
works on the active ring and bound names.  Arguments are kept as raw text
with their column so the session can parse them in the right ring and
point at the offending column on error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from errors import CommandError
from frontend.expr_parser import is_generator_list, split_top_level

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_DEFINITION = re.compile(rf"^(?P<verb>ring|ideal|frac|elem)\s+(?P<name>{_NAME})\s*=\s*(?P<body>.*?)\s*$")
_RING_BODY = re.compile(r"^(?P<field>[^\[]*?)\s*\[(?P<vars>[^\]]*)\]\s*(?:/\s*(?P<gens>.*?))?\s*$")
_VERB = re.compile(r"^(?P<verb>[A-Za-z_]+)\b\s*(?P<rest>.*?)\s*$")
_IDENTIFIER = re.compile(rf"^{_NAME}$")

IDEAL_FORMS = {"sum": 2, "product": 2, "intersect": 2, "colon": 2, "power": 2, "canonical": 0, "ann": 1}

# verb -> (usage, argument kinds); kinds: "ideal", "frac", "name", "expr", "path", "int"
VERBS = {
    "ring": ("ring <R> = [field][evens | odds] / (gens)", None),
    "use": ("use <R>", ("name",)),
    "elem": ("elem <u> = <expr>", None),
    "ideal": ("ideal <m> = (gens) | sum|product|intersect|colon <a> <b> | power <a> <k> | canonical | ann <expr>", None),
    "frac": ("frac <M> = (gens) [/ <den>]", None),
    "ksdim": ("ksdim", ()),
    "superreduce": ("superreduce", ()),
    "is_prime": ("is_prime <ideal>", ("ideal",)),
    "is_maximal": ("is_maximal <ideal>", ("ideal",)),
    "is_superdomain": ("is_superdomain", ()),
    "is_superfield": ("is_superfield", ()),
    "is_strong": ("is_strong", ()),
    "is_zerodivisor": ("is_zerodivisor <expr>", ("expr",)),
    "is_regular_at": ("is_regular_at <maximal ideal>", ("ideal",)),
    "cotangent": ("cotangent <maximal ideal>", ("ideal",)),
    "defect_locus": ("defect_locus", ()),
    "is_dedekind": ("is_dedekind", ()),
    "dvr_at": ("dvr_at <maximal ideal>", ("ideal",)),
    "inv": ("inv <frac>", ("frac",)),
    "is_invertible": ("is_invertible <frac>", ("frac",)),
    "is_invertible_at": ("is_invertible_at <frac> <prime>", ("frac", "ideal")),
    "prod": ("prod <frac> <frac>", ("frac", "frac")),
    "equal": ("equal <a> <b>", ("frac", "frac")),
    "contained_at": ("contained_at <b> <c> <prime>", ("ideal", "ideal", "ideal")),
    "member": ("member <expr> in <ideal>", ("expr", "ideal")),
    "nf": ("nf <expr> [mod <ideal>]", ("expr",)),
    "gb": ("gb [<ideal>]", ()),
    "show": ("show [<name>]", ()),
    "save": ("save <file>", ("path",)),
    "load": ("load <file>", ("path",)),
    "help": ("help", ()),
    "quit": ("quit", ()),
}

_OPTIONAL = {"gb": ("ideal",), "show": ("name",)}
_KEYWORD = {"member": "in", "nf": "mod"}


@dataclass(frozen=True)
class Arg:
    text: str
    start: int   # column of text inside Command.source


@dataclass(frozen=True)
class Command:
    verb: str
    args: tuple[Arg, ...] = ()
    name: str | None = None
    form: str | None = None
    source: str = ""
    line: int = 1
    text: str = ""   # the command itself, without comment or separators

    def arg(self, i: int) -> Arg:
        return self.args[i]


def usage(verb: str) -> str:
    return VERBS[verb][0]


def split_args(text: str, start: int = 0) -> list[Arg]:
    """Whitespace-separated arguments; parenthesized groups stay whole."""
    out, depth, begin = [], 0, None
    for i, ch in enumerate(text + " "):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch.isspace() and depth == 0:
            if begin is not None:
                out.append(Arg(text[begin:i], start + begin))
                begin = None
        elif begin is None:
            begin = i
    return out


def _split_keyword(text: str, start: int, keyword: str) -> tuple[Arg, Arg] | None:
    """Split 'left <keyword> right' at the last top-level keyword."""
    depth, found = 0, None
    for mo in re.finditer(rf"\(|\)|\s{keyword}\s", text):
        token = mo.group()
        if token == "(":
            depth += 1
        elif token == ")":
            depth -= 1
        elif depth == 0:
            found = mo
    if found is None:
        return None
    left, right = text[:found.start()], text[found.end():]
    right_start = found.end() + len(right) - len(right.lstrip())
    return Arg(left.strip(), start), Arg(right.strip(), start + right_start)


def _parse_ring(name: str, body: str, at: int, source: str, line: int) -> Command:
    mo = _RING_BODY.match(body)
    if not mo:
        raise CommandError(f"usage: {usage('ring')}")
    args = [Arg(mo.group("field"), at + mo.start("field")), Arg(mo.group("vars"), at + mo.start("vars"))]
    if mo.group("gens") is not None:
        gens = mo.group("gens")
        if not is_generator_list(gens):
            raise CommandError(f"defining generators must be a list '(g1, g2, ...)', got '{gens}'")
        args.append(Arg(gens, at + mo.start("gens")))
    return Command("ring", tuple(args), name=name, source=source, line=line)


def _parse_ideal(name: str, body: str, at: int, source: str, line: int) -> Command:
    if is_generator_list(body):
        return Command("ideal", (Arg(body, at),), name=name, form="list", source=source, line=line)
    words = split_args(body, at)
    if not words or words[0].text not in IDEAL_FORMS:
        raise CommandError(f"usage: {usage('ideal')}")
    form = words[0].text
    if form == "ann":
        rest = body[len(form):]
        expr = Arg(rest.strip(), at + len(form) + len(rest) - len(rest.lstrip()))
        if not expr.text:
            raise CommandError("usage: ideal <m> = ann <expr>")
        return Command("ideal", (expr,), name=name, form=form, source=source, line=line)
    args = tuple(words[1:])
    if len(args) != IDEAL_FORMS[form]:
        raise CommandError(f"ideal {form} takes {IDEAL_FORMS[form]} argument(s), got {len(args)}")
    return Command("ideal", args, name=name, form=form, source=source, line=line)


def _parse_frac(name: str, body: str, at: int, source: str, line: int) -> Command:
    pieces = split_top_level(body, "/")
    numerator, _ = pieces[0]
    lead = len(numerator) - len(numerator.lstrip())
    args = [Arg(numerator.strip(), at + lead)]
    if len(pieces) > 1:
        _, den_start = pieces[1]
        den = body[den_start:]
        args.append(Arg(den.strip(), at + den_start + len(den) - len(den.lstrip())))
    if not args[0].text or (len(args) > 1 and not args[1].text):
        raise CommandError(f"usage: {usage('frac')}")
    return Command("frac", tuple(args), name=name, source=source, line=line)


def _parse_one(source: str, at: int, text: str, line: int) -> Command:
    definition = _DEFINITION.match(text)
    if definition:
        verb, name = definition.group("verb"), definition.group("name")
        body = definition.group("body")
        body_at = at + definition.start("body")
        if verb == "ring":
            return _parse_ring(name, body, body_at, source, line)
        if verb == "ideal":
            return _parse_ideal(name, body, body_at, source, line)
        if verb == "frac":
            return _parse_frac(name, body, body_at, source, line)
        if not body:
            raise CommandError(f"usage: {usage('elem')}")
        return Command("elem", (Arg(body, body_at),), name=name, source=source, line=line)

    mo = _VERB.match(text)
    if not mo or mo.group("verb") not in VERBS:
        word = text.split()[0] if text.split() else text
        raise CommandError(f"unknown command '{word}' (try help)")
    verb, rest = mo.group("verb"), mo.group("rest")
    rest_at = at + mo.start("rest")
    kinds = VERBS[verb][1]
    if kinds is None:
        raise CommandError(f"usage: {usage(verb)}")

    if verb in _KEYWORD:
        split = _split_keyword(rest, rest_at, _KEYWORD[verb])
        if split is None:
            args = (Arg(rest, rest_at),) if rest else ()
        else:
            args = split
        if not args or not args[0].text or (verb == "member" and len(args) != 2):
            raise CommandError(f"usage: {usage(verb)}")
        return Command(verb, tuple(args), source=source, line=line)
    if kinds == ("expr",):
        if not rest:
            raise CommandError(f"usage: {usage(verb)}")
        return Command(verb, (Arg(rest, rest_at),), source=source, line=line)

    args = split_args(rest, rest_at)
    allowed = len(kinds) + len(_OPTIONAL.get(verb, ()))
    if not len(kinds) <= len(args) <= allowed:
        raise CommandError(f"usage: {usage(verb)}")
    return Command(verb, tuple(args), source=source, line=line)


def parse_line(line_text: str, line: int = 1) -> list[Command]:
    """Split a line into commands; comments and blank pieces are dropped."""
    text = line_text.split("#", 1)[0]
    commands = []
    for piece, start in split_top_level(text, ";"):
        stripped = piece.strip()
        if not stripped:
            continue
        at = start + len(piece) - len(piece.lstrip())
        commands.append(replace(_parse_one(line_text, at, stripped, line), text=stripped))
    return commands


def parse_names(text: str) -> tuple[str, ...]:
    """Comma-separated variable names of a ring declaration."""
    names = tuple(n.strip() for n in text.split(",") if n.strip())
    for name in names:
        if not _IDENTIFIER.match(name):
            raise CommandError(f"invalid variable name '{name}'")
    return names


def parse_variables(text: str) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """'x, y | t1, t2' -> (evens, odds); without '|' every variable is even."""
    evens, _, odds = text.partition("|")
    evens, odds = parse_names(evens), parse_names(odds)
    seen = set()
    for name in evens + odds:
        if name in seen:
            raise CommandError(f"variable '{name}' declared twice")
        seen.add(name)
    return evens, odds


def help_text() -> list[str]:
    return [usage(verb) for verb in VERBS]
