"""
Interactive session: named bindings over presented superrings and the
execution of parsed commands into result dictionaries.

Every result carries {verb, verdict | value, witness?, timing_ms} so the
CLI can print text or one JSON object per command.
"""

from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from enum import Enum
from pathlib import Path

from sympy.polys.rings import PolyElement

import config
from algebra.fields import Field
from algebra.grassmann import Ambient, SuperPolynomial
from engine.limits import budget
from errors import AmbientMismatch, CommandError, InternalError, ParseError, SuperringError, UnknownName
from frontend.commands import Arg, Command, help_text, parse_line, parse_variables
from frontend.expr_parser import is_generator_list, parse_expr, parse_generator_list, variable_scope
from frontend.printer import format_generators, format_poly
from superring.dimension import SuperDimension, even_ksdim, odd_ksdim
from superring.fractional import (FractionalSuperideal, frac_equal, frac_inverse, frac_make,
                                  frac_normalize, frac_product, is_invertible, is_invertible_at,
                                  contained_at)
from superring.predicates import (is_maximal, is_prime, is_strong_superdomain, is_superdomain,
                                  is_superfield)
from superring.regularity import (MaximalIdealPoint, cotangent_sdim, dvr_check_local, is_dedekind,
                                  is_regular_at, regular_defect_locus)
from superring.ring import RingPresentation
from superring.superideal import (SuperIdeal, annihilator, ideal_colon, ideal_equal,
                                  ideal_intersection, ideal_power, ideal_product, ideal_sum,
                                  is_zerodivisor)
from superring.verdict import Decision, Verdict

logger = logging.getLogger(__name__)

_DEFINITIONS = ("ring", "use", "elem", "ideal", "frac")


class SessionState(Enum):
    ACTIVE = "active"
    FINISHED = "finished"


class Session:
    """Bindings (rings, superideals, fractional superideals, elements) and the active ring."""

    def __init__(self, field: str | Field | None = None, timeout: float | None = None):
        if isinstance(field, Field):
            self.default_field = field
        else:
            self.default_field = Field.parse(field or config.DEFAULT_FIELD)
        self.timeout = timeout
        self.rings: dict[str, RingPresentation] = {}
        self.ideals: dict[str, SuperIdeal] = {}
        self.fracs: dict[str, FractionalSuperideal] = {}
        self.elements: dict[str, tuple[RingPresentation, SuperPolynomial]] = {}
        self.active: RingPresentation | None = None
        self.history: list[str] = []
        self.state = SessionState.ACTIVE

    # driving

    def execute(self, line_text: str, line: int = 1) -> list[dict]:
        """Run every command on a line, returning one result per command."""
        return [self.execute_command(cmd) for cmd in parse_line(line_text, line)]

    def run_lines(self, lines, first_line: int = 1) -> list[dict]:
        results = []
        for number, text in enumerate(lines, first_line):
            results.extend(self.execute(text.rstrip("\n"), number))
            if self.state is SessionState.FINISHED:
                break
        return results

    def execute_command(self, cmd: Command) -> dict:
        handler = getattr(self, f"_cmd_{cmd.verb}")
        logger.info(f"line {cmd.line}: {cmd.verb} started")
        start = time.perf_counter()
        try:
            with budget(self.timeout):
                body = handler(cmd)
        except SuperringError:
            raise
        except Exception as exc:
            logger.exception(f"{cmd.verb} failed")
            raise InternalError(f"{type(exc).__name__}: {exc}") from exc
        elapsed = (time.perf_counter() - start) * 1000
        logger.info(f"line {cmd.line}: {cmd.verb} finished in {elapsed:.1f} ms")
        if cmd.verb in _DEFINITIONS:
            self.history.append(cmd.text)
        result = {"verb": cmd.verb}
        result.update({k: self._plain(v) for k, v in body.items() if v is not None})
        result["timing_ms"] = round(elapsed, 3)
        return result

    # argument resolution

    @property
    def ring(self) -> RingPresentation:
        if self.active is None:
            raise CommandError("no active ring (define one with: ring R = Q[x | t1])")
        return self.active

    def scope(self):
        bound = {name: f for name, (ring, f) in self.elements.items() if ring is self.ring}
        return variable_scope(self.ring.ambient, bound)

    @contextmanager
    def _located(self, cmd: Command, arg: Arg):
        """Re-anchor parse errors in an argument onto the whole command line."""
        try:
            yield
        except ParseError as exc:
            raise exc.shifted(cmd.source, arg.start) from None

    def expr(self, cmd: Command, arg: Arg) -> SuperPolynomial:
        with self._located(cmd, arg):
            return parse_expr(arg.text, self.scope(), cmd.line)

    def ideal(self, cmd: Command, arg: Arg) -> SuperIdeal:
        if is_generator_list(arg.text):
            with self._located(cmd, arg):
                return SuperIdeal(self.ring, parse_generator_list(arg.text, self.scope(), cmd.line))
        if arg.text not in self.ideals:
            raise UnknownName(f"no superideal named '{arg.text}'")
        ideal = self.ideals[arg.text]
        if ideal.ring is not self.ring:
            raise AmbientMismatch(f"superideal '{arg.text}' belongs to ring {ideal.ring.name}, not the active ring")
        return ideal

    def frac(self, cmd: Command, arg: Arg) -> FractionalSuperideal:
        if arg.text in self.fracs:
            return self.fracs[arg.text]
        return frac_make(self.ring, self.ideal(cmd, arg).generators)

    def point(self, cmd: Command, arg: Arg) -> MaximalIdealPoint:
        return MaximalIdealPoint.from_ideal(self.ideal(cmd, arg))

    def _plain(self, value):
        """JSON-ready rendering of verdicts, witnesses and values."""
        if isinstance(value, (str, bool, int, float)):
            return value
        if isinstance(value, (list, tuple)):
            return [self._plain(v) for v in value]
        if isinstance(value, dict):
            return {k: self._plain(v) for k, v in value.items()}
        if isinstance(value, PolyElement):
            return format_poly(value)
        if isinstance(value, FractionalSuperideal):
            return str(frac_normalize(value))
        return str(value)


    @staticmethod
    def _decision(decision: Decision) -> dict:
        return {"verdict": decision.verdict, "witness": decision.witness, "reason": decision.reason or None}

    def _forget(self, old: RingPresentation):
        """Drop every binding that lives in a ring about to be replaced."""
        self.ideals = {k: v for k, v in self.ideals.items() if v.ring is not old}
        self.fracs = {k: v for k, v in self.fracs.items() if v.ring is not old}
        self.elements = {k: v for k, v in self.elements.items() if v[0] is not old}

    # definitions

    def _cmd_ring(self, cmd: Command) -> dict:
        field_arg, vars_arg = cmd.args[0], cmd.args[1]
        field = Field.parse(field_arg.text) if field_arg.text.strip() else self.default_field
        evens, odds = parse_variables(vars_arg.text)
        ambient = Ambient(field, evens, odds)
        gens = []
        if len(cmd.args) > 2:
            with self._located(cmd, cmd.args[2]):
                gens = parse_generator_list(cmd.args[2].text, variable_scope(ambient), cmd.line)
        R = RingPresentation(ambient, gens, name=cmd.name)
        if cmd.name in self.rings:
            self._forget(self.rings[cmd.name])
        self.rings[cmd.name] = R
        self.active = R
        return {"value": f"{cmd.name} = {R}"}

    def _cmd_use(self, cmd: Command) -> dict:
        name = cmd.args[0].text
        if name not in self.rings:
            raise UnknownName(f"no ring named '{name}'")
        self.active = self.rings[name]
        return {"value": f"{name} = {self.active}"}

    def _cmd_elem(self, cmd: Command) -> dict:
        R = self.ring
        if cmd.name in R.ambient.evens or cmd.name in R.ambient.odds:
            raise CommandError(f"'{cmd.name}' is a variable of {R.name}")
        f = R.reduce(self.expr(cmd, cmd.args[0]))
        self.elements[cmd.name] = (R, f)
        return {"value": f"{cmd.name} = {f}"}

    def _cmd_ideal(self, cmd: Command) -> dict:
        R = self.ring
        form = cmd.form
        if form == "list":
            ideal = self.ideal(cmd, cmd.args[0])
        elif form == "canonical":
            ideal = R.canonical_superideal()
        elif form == "ann":
            ideal = annihilator(R.reduce(self.expr(cmd, cmd.args[0])), R)
        elif form == "power":
            try:
                k = int(cmd.args[1].text)
            except ValueError:
                raise CommandError(f"ideal power needs a natural number, got '{cmd.args[1].text}'") from None
            if k < 0:
                raise CommandError("ideal power needs a natural number")
            ideal = ideal_power(self.ideal(cmd, cmd.args[0]), k)
        else:
            a, b = self.ideal(cmd, cmd.args[0]), self.ideal(cmd, cmd.args[1])
            operation = {"sum": ideal_sum, "product": ideal_product,
                         "intersect": ideal_intersection, "colon": ideal_colon}[form]
            ideal = operation(a, b)
        self.ideals[cmd.name] = ideal
        return {"value": f"{cmd.name} = {ideal}"}

    def _cmd_frac(self, cmd: Command) -> dict:
        gens = self.ideal(cmd, cmd.args[0]).generators
        den = self.expr(cmd, cmd.args[1]) if len(cmd.args) > 1 else None
        M = frac_make(self.ring, gens, den)
        self.fracs[cmd.name] = M
        return {"value": f"{cmd.name} = {M}"}

    # invariants of the active ring

    def _cmd_ksdim(self, cmd: Command) -> dict:
        R = self.ring
        odd, witness = odd_ksdim(R)
        dim = SuperDimension(even_ksdim(R), odd)
        parameters = None
        if witness is not None:
            parameters = "*".join(R.ambient.odds[i - 1] for i in witness.indices)
        return {"value": dim, "witness": parameters}

    def _cmd_superreduce(self, cmd: Command) -> dict:
        R = self.ring
        _, c = R.superreduce()
        base = f"{R.field.name}[{', '.join(R.ambient.evens)}]"
        return {"value": f"{base} / {format_generators(format_poly(p) for p in c)}"}

    def _cmd_is_superdomain(self, cmd: Command) -> dict:
        return self._decision(is_superdomain(self.ring))

    def _cmd_is_superfield(self, cmd: Command) -> dict:
        return self._decision(is_superfield(self.ring))

    def _cmd_is_strong(self, cmd: Command) -> dict:
        return self._decision(is_strong_superdomain(self.ring))

    def _cmd_is_zerodivisor(self, cmd: Command) -> dict:
        R = self.ring
        f = self.expr(cmd, cmd.args[0])
        if not is_zerodivisor(f, R):
            return {"verdict": Verdict.FALSE}
        killer = annihilator(R.reduce(f), R).generators[0]
        return {"verdict": Verdict.TRUE, "witness": killer}

    def _cmd_defect_locus(self, cmd: Command) -> dict:
        defect, certified = regular_defect_locus(self.ring)
        return {"value": format_generators(format_poly(p) for p in defect), "certified": certified}

    def _cmd_is_dedekind(self, cmd: Command) -> dict:
        return self._decision(is_dedekind(self.ring))

    # superideals and points

    def _cmd_is_prime(self, cmd: Command) -> dict:
        return self._decision(is_prime(self.ideal(cmd, cmd.args[0])))

    def _cmd_is_maximal(self, cmd: Command) -> dict:
        return self._decision(is_maximal(self.ideal(cmd, cmd.args[0])))

    def _cmd_is_regular_at(self, cmd: Command) -> dict:
        report = is_regular_at(self.ring, self.point(cmd, cmd.args[0]))
        return {"verdict": report.verdict, "witness": report.witnesses or None,
                "cotangent": report.cotangent,
                "reason": f"reduced ring: {report.reduced_regular}, odd condition: {report.odd_condition}"}

    def _cmd_cotangent(self, cmd: Command) -> dict:
        return {"value": cotangent_sdim(self.ring, self.point(cmd, cmd.args[0]))}

    def _cmd_dvr_at(self, cmd: Command) -> dict:
        return self._decision(dvr_check_local(self.ring, self.point(cmd, cmd.args[0])))

    def _cmd_contained_at(self, cmd: Command) -> dict:
        b, c, p = (self.ideal(cmd, arg) for arg in cmd.args)
        return {"verdict": Verdict.of(contained_at(b, c, p))}

    def _cmd_member(self, cmd: Command) -> dict:
        f = self.expr(cmd, cmd.args[0])
        return {"verdict": Verdict.of(self.ideal(cmd, cmd.args[1]).contains(self.ring.reduce(f)))}

    def _cmd_nf(self, cmd: Command) -> dict:
        R = self.ring
        f = R.reduce(self.expr(cmd, cmd.args[0]))
        if len(cmd.args) > 1:
            ideal = self.ideal(cmd, cmd.args[1])
            f = SuperPolynomial.from_vector(R.ambient, ideal.gb.normal_form(f.to_vector()))
        return {"value": f}

    def _cmd_gb(self, cmd: Command) -> dict:
        R = self.ring
        if cmd.args:
            return {"value": self.ideal(cmd, cmd.args[0]).module_generators()}
        return {"value": [SuperPolynomial.from_vector(R.ambient, v) for v in R.module_gb.generators]}

    # fractional superideals

    def _cmd_inv(self, cmd: Command) -> dict:
        return {"value": frac_inverse(self.frac(cmd, cmd.args[0]))}

    def _cmd_is_invertible(self, cmd: Command) -> dict:
        return self._decision(is_invertible(self.frac(cmd, cmd.args[0])))

    def _cmd_is_invertible_at(self, cmd: Command) -> dict:
        M, p = self.frac(cmd, cmd.args[0]), self.ideal(cmd, cmd.args[1])
        return {"verdict": Verdict.of(is_invertible_at(M, p))}

    def _cmd_prod(self, cmd: Command) -> dict:
        return {"value": frac_product(self.frac(cmd, cmd.args[0]), self.frac(cmd, cmd.args[1]))}

    def _cmd_equal(self, cmd: Command) -> dict:
        a, b = cmd.args
        if a.text not in self.fracs and b.text not in self.fracs:
            return {"verdict": Verdict.of(ideal_equal(self.ideal(cmd, a), self.ideal(cmd, b)))}
        return {"verdict": Verdict.of(frac_equal(self.frac(cmd, a), self.frac(cmd, b)))}

    # bookkeeping

    def _cmd_show(self, cmd: Command) -> dict:
        if not cmd.args:
            listing = [f"ring {name} = {R}" + (" (active)" if R is self.active else "")
                       for name, R in self.rings.items()]
            listing += [f"ideal {name} = {v}" for name, v in self.ideals.items()]
            listing += [f"frac {name} = {v}" for name, v in self.fracs.items()]
            listing += [f"elem {name} = {f}" for name, (_, f) in self.elements.items()]
            return {"value": listing}
        name = cmd.args[0].text
        for kind, table in (("ring", self.rings), ("ideal", self.ideals), ("frac", self.fracs)):
            if name in table:
                return {"value": f"{kind} {name} = {table[name]}"}
        if name in self.elements:
            return {"value": f"elem {name} = {self.elements[name][1]}"}
        raise UnknownName(f"nothing is bound to '{name}'")

    def _cmd_save(self, cmd: Command) -> dict:
        path = Path(cmd.args[0].text)
        try:
            path.write_text("".join(f"{line}\n" for line in self.history), encoding="utf-8")
        except OSError as exc:
            raise CommandError(f"cannot write {path}: {exc.strerror}") from None
        return {"value": str(path)}

    def _cmd_load(self, cmd: Command) -> dict:
        path = Path(cmd.args[0].text)
        try:
            lines = path.read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise CommandError(f"cannot read {path}: {exc.strerror}") from None
        results = self.run_lines(lines)
        return {"value": str(path), "commands": len(results)}

    def _cmd_help(self, cmd: Command) -> dict:
        return {"value": help_text()}

    def _cmd_quit(self, cmd: Command) -> dict:
        self.state = SessionState.FINISHED
        return {"value": "bye"}


def render_text(result: dict) -> str:
    """Human-readable form of a result dictionary for the REPL."""
    if "verdict" in result:
        text = result["verdict"]
        if result.get("reason"):
            text += f" ({result['reason']})"
    else:
        value = result.get("value", "")
        text = "\n".join(value) if isinstance(value, list) else str(value)
    witness = result.get("witness")
    if witness:
        witnesses = witness if isinstance(witness, list) else [witness]
        text += "".join(f"\n  witness: {w}" for w in witnesses)
    for key in ("cotangent", "certified"):
        if key in result:
            text += f"\n  {key}: {result[key]}"
    return text
