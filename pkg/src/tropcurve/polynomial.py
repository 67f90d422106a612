"""Max-plus (tropical) polynomials in two variables with exact rational coefficients.

A polynomial is a finite map from integer exponent pairs (i, j) to Fraction
coefficients c, representing the piecewise linear function

    (x, y)  ->  max over terms of  x*i + y*j + c.

Ties are meaningful (they are where the tropical curve lives), so every
comparison is exact: coefficients and evaluation points are Fractions and
no float ever enters.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from .errors import DuplicateTermError, EmptySupportError, ParseError
from .geometry import Point, convex_hull

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' (q > 0) into a Fraction."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Canonical text for a Fraction: 'p' when integral, else 'p/q'."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class TropicalPolynomial:
    """Immutable finite collection of tropical terms (i, j) -> coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Point, Fraction]]):
        coeffs: dict[Point, Fraction] = {}
        for point, coeff in terms:
            key = (int(point[0]), int(point[1]))
            if key in coeffs:
                raise DuplicateTermError(f"duplicate term at exponent {key}")
            coeffs[key] = Fraction(coeff)
        if not coeffs:
            raise EmptySupportError("polynomial needs at least one term")
        self._terms = coeffs

    @property
    def terms(self) -> dict[Point, Fraction]:
        """Exponent -> coefficient map.  Treat as read-only."""
        return self._terms

    @property
    def support(self) -> list[Point]:
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropicalPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        parts = ", ".join(
            f"({i},{j}): {format_rational(c)}" for (i, j), c in sorted(self._terms.items())
        )
        return f"TropicalPolynomial({{{parts}}})"

    def evaluate(self, x, y) -> Fraction:
        """Value max(x*i + y*j + c) at an exact rational point."""
        x = Fraction(x)
        y = Fraction(y)
        return max(x * i + y * j + c for (i, j), c in self._terms.items())

    def argmax_terms(self, x, y) -> set[Point]:
        """All exponents whose term attains the maximum at (x, y)."""
        x = Fraction(x)
        y = Fraction(y)
        best: Fraction | None = None
        winners: set[Point] = set()
        for (i, j), c in self._terms.items():
            value = x * i + y * j + c
            if best is None or value > best:
                best = value
                winners = {(i, j)}
            elif value == best:
                winners.add((i, j))
        return winners

    def newton_polygon(self) -> list[Point]:
        """Convex hull of the support, counterclockwise from the lex minimum."""
        return convex_hull(self.support)

    def standard_degree(self) -> int | None:
        """d when the Newton polygon is the triangle (0,0),(d,0),(0,d), else None."""
        hull = self.newton_polygon()
        if len(hull) != 3 or hull[0] != (0, 0):
            return None
        d = hull[1][0]
        if d >= 1 and hull[1] == (d, 0) and hull[2] == (0, d):
            return d
        return None

    def translate(self, offset) -> "TropicalPolynomial":
        """New polynomial with `offset` added to every coefficient."""
        shift = Fraction(offset)
        return TropicalPolynomial((p, c + shift) for p, c in self._terms.items())

    def render(self) -> str:
        """Term-table text, one `i j c` line per term, sorted by (i, j)."""
        lines = [
            f"{i} {j} {format_rational(c)}" for (i, j), c in sorted(self._terms.items())
        ]
        return "\n".join(lines)


def make_polynomial(terms: Iterable[tuple[Point, Fraction]]) -> TropicalPolynomial:
    """Build a polynomial from (exponent, coefficient) pairs."""
    return TropicalPolynomial(terms)


def parse_term_table(text: str) -> TropicalPolynomial:
    """Parse term-table text: one `<i> <j> <c>` per line.

    Blank lines and lines starting with '#' are ignored; '#' also starts a
    trailing comment.  Raises ParseError with the 1-based line number.
    """
    terms: list[tuple[Point, Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(f"expected `i j c`, got {raw.strip()!r}", line=lineno)
        try:
            i = int(fields[0])
            j = int(fields[1])
        except ValueError:
            raise ParseError(f"exponents must be integers: {raw.strip()!r}", line=lineno)
        try:
            c = parse_rational(fields[2])
        except ValueError:
            raise ParseError(f"bad coefficient {fields[2]!r}", line=lineno)
        terms.append(((i, j), c))
    return TropicalPolynomial(terms)


def render(poly: TropicalPolynomial) -> str:
    return poly.render()


# --- expression parser ------------------------------------------------------
#
# expr := "max" "(" term {"," term} ")"
# term := ["-"] part { ("+"|"-") part }
# part := rat | [rat "*"?] ("x"|"y")
# rat  := ["-"] digits ["/" digits]
#
# Variables may only carry integer slopes; the constant part is rational.

_TOKEN_RE = re.compile(r"\s*(\d+|[()+\-*/,]|max|[xy])")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at offset {pos}")
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


class _ExprParser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r}")
        self.pos += 1
        return tok

    def parse(self) -> list[tuple[Point, Fraction]]:
        self.take("max")
        self.take("(")
        if self.peek() == ")":
            raise ParseError("max() needs at least one term")
        terms = [self.term()]
        while self.peek() == ",":
            self.take(",")
            terms.append(self.term())
        self.take(")")
        if self.peek() is not None:
            raise ParseError(f"trailing input after ')': {self.peek()!r}")
        return terms

    def term(self) -> tuple[Point, Fraction]:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        slope_x, slope_y, const = self.part(sign)
        while self.peek() in ("+", "-"):
            op = self.take()
            sx, sy, c = self.part(1 if op == "+" else -1)
            slope_x += sx
            slope_y += sy
            const += c
        for name, slope in (("x", slope_x), ("y", slope_y)):
            if slope.denominator != 1:
                raise ParseError(f"slope of {name} must be an integer, got {slope}")
        return ((int(slope_x), int(slope_y)), const)

    def part(self, sign: int) -> tuple[Fraction, Fraction, Fraction]:
        """One additive part, returned as (x-slope, y-slope, constant)."""
        tok = self.peek()
        if tok in ("x", "y"):
            self.take()
            coeff = Fraction(sign)
            return (coeff, Fraction(0), Fraction(0)) if tok == "x" else (Fraction(0), coeff, Fraction(0))
        value = sign * self.rational()
        if self.peek() == "*":
            self.take()
            var = self.take()
            if var not in ("x", "y"):
                raise ParseError(f"expected variable after '*', got {var!r}")
        elif self.peek() in ("x", "y"):
            var = self.take()
        else:
            return (Fraction(0), Fraction(0), value)
        if var == "x":
            return (value, Fraction(0), Fraction(0))
        return (Fraction(0), value, Fraction(0))

    def rational(self) -> Fraction:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.take()
        if not tok.isdigit():
            raise ParseError(f"expected a number, got {tok!r}")
        value = Fraction(int(tok))
        if self.peek() == "/":
            self.take()
            den = self.take()
            if not den.isdigit() or int(den) == 0:
                raise ParseError(f"bad denominator {den!r}")
            value = Fraction(int(tok), int(den))
        return sign * value


def parse_expression(text: str) -> TropicalPolynomial:
    """Parse `max(term, ...)` with affine terms in x and y."""
    return TropicalPolynomial(_ExprParser(_tokenize(text)).parse())
