"""Text rendering of superpolynomials, even polynomials and errors."""

from __future__ import annotations

from fractions import Fraction

from errors import ParseError, SuperringError


def _monomial(evens, odds, even_exps, odd_mask=0) -> str:
    factors = []
    for name, e in zip(evens, even_exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    i = 0
    while odd_mask:
        if odd_mask & 1:
            factors.append(odds[i])
        odd_mask >>= 1
        i += 1
    return "*".join(factors)


def _join(terms) -> str:
    """terms: (Fraction coefficient, monomial text) pairs, already ordered."""
    out = []
    for value, monomial in terms:
        negative = value < 0
        value = abs(value)
        magnitude = str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
        if not monomial:
            body = magnitude
        elif value == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(out) or "0"


def format_superpolynomial(f) -> str:
    """Canonical text of f: terms in descending order, odd variables ascending, explicit sign."""
    ambient = f.ambient
    return _join((ambient.field.to_fraction(c), _monomial(ambient.evens, ambient.odds, exps, mask))
                 for c, exps, mask in f.terms())


def _domain_fraction(domain, c) -> Fraction:
    if domain.is_QQ:
        return Fraction(int(domain.numer(c)), int(domain.denom(c)))
    return Fraction(int(domain.to_int(c)) % int(domain.characteristic()))


def format_poly(poly) -> str:
    """Print an element of the even polynomial ring C with its own variable names."""
    ring = poly.ring
    names = [str(s) for s in ring.symbols]
    return _join((_domain_fraction(ring.domain, c), _monomial(names, (), m)) for m, c in poly.terms())


def format_generators(items) -> str:
    items = [str(g) for g in items]
    return "(" + ", ".join(items) + ")" if items else "(0)"


def format_error(error: SuperringError) -> str:
    """One-line message, plus the source line and a caret for parse errors."""
    text = f"error [{error.kind}]: {error.message}"
    if isinstance(error, ParseError) and error.position is not None:
        start, end = error.position
        text = f"error [{error.kind}] at line {error.line}, column {start + 1}: {error.message}"
        highlight = " " * start + "^" * max(1, end - start)
        text += f"\n  {error.source}\n  {highlight}"
    return text
