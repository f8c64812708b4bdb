"""Element grammar for the built-in ambient groups.

    free     ::= "e" | letter ("*" letter)*
    letter   ::= "p" index ["^" ["-"] digits]
    vector   ::= "(" [int ("," int)*] ")"
    integer  ::= ["-"] digits
    affine   ::= "(" rational "," rational ")"        -- (b, a) acting as x -> a*x + b
    rational ::= ["-"] digits ["/" digits]

Whitespace between tokens is ignored. Printing produces the canonical form of
each grammar, so ``parse_element(format_element(g)) == g``.
"""

import re
from fractions import Fraction

from semilab.ambient.elements import GroupElement, affine, integer, vector, word
from semilab.ambient.groups import AmbientGroup
from semilab.config import GroupKind
from semilab.errors import ElementSyntaxError, UnknownGeneratorError

_LETTER = re.compile(r"p(\d+)(?:\^(-?\d+))?")
_INT = re.compile(r"-?\d+")
_RATIONAL = re.compile(r"-?\d+(?:/\d+)?")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_spaces()
        return self.pos >= len(self.text)

    def match(self, pattern: re.Pattern, what: str) -> re.Match:
        self.skip_spaces()
        found = pattern.match(self.text, self.pos)
        if found is None:
            raise ElementSyntaxError(self.text, self.pos, f"Expected {what}")
        self.pos = found.end()
        return found

    def accept(self, literal: str) -> bool:
        self.skip_spaces()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.accept(literal):
            raise ElementSyntaxError(self.text, self.pos, f"Expected {literal!r}")

    def finish(self) -> None:
        if not self.at_end():
            raise ElementSyntaxError(self.text, self.pos, "Unexpected trailing input")


def parse_element(text: str, group: AmbientGroup) -> GroupElement:
    """Parse ``text`` into a normalized element of ``group``.

    Args:
        text (str): Element literal following the module grammar.
        group (AmbientGroup): The ambient group the literal belongs to.

    Returns:
        The normalized element.

    Raises:
        ElementSyntaxError: With the offending position.
        UnknownGeneratorError: For a free generator outside the group's rank.
    """
    scanner = _Scanner(text)
    if group.kind is GroupKind.FREE:
        element = _parse_word(scanner, group.rank)
    elif group.kind is GroupKind.LATTICE:
        element = _parse_vector(scanner, group.rank)
    elif group.kind is GroupKind.INTEGER:
        element = integer(int(scanner.match(_INT, "an integer").group()))
    else:
        element = _parse_affine(scanner)
    scanner.finish()
    return element


def format_element(g: GroupElement) -> str:
    if g.kind is GroupKind.FREE:
        if not g.payload:
            return "e"
        return "*".join(f"p{gen}" if exp == 1 else f"p{gen}^{exp}" for gen, exp in g.payload)
    if g.kind is GroupKind.LATTICE:
        return "(" + ",".join(str(x) for x in g.payload) + ")"
    if g.kind is GroupKind.INTEGER:
        return str(g.payload)
    b, a = g.payload
    return f"({_format_rational(b)},{_format_rational(a)})"


# Helper functions
def _parse_word(scanner: _Scanner, rank: int) -> GroupElement:
    if scanner.accept("e"):
        runs = []
    else:
        runs = [_parse_letter(scanner, rank)]
    while scanner.accept("*"):
        if scanner.accept("e"):
            continue
        runs.append(_parse_letter(scanner, rank))
    return word(*runs)


def _parse_letter(scanner: _Scanner, rank: int) -> tuple[int, int]:
    scanner.skip_spaces()
    start = scanner.pos
    found = scanner.match(_LETTER, "a generator such as 'p1'")
    index = int(found.group(1))
    if not 1 <= index <= rank:
        raise UnknownGeneratorError(scanner.text, start, f"Unknown generator p{index}")
    exponent = int(found.group(2)) if found.group(2) is not None else 1
    return index, exponent


def _parse_vector(scanner: _Scanner, dimension: int) -> GroupElement:
    start = scanner.pos
    scanner.expect("(")
    coordinates: list[int] = []
    if not scanner.accept(")"):
        coordinates.append(int(scanner.match(_INT, "an integer").group()))
        while scanner.accept(","):
            coordinates.append(int(scanner.match(_INT, "an integer").group()))
        scanner.expect(")")
    if len(coordinates) != dimension:
        raise ElementSyntaxError(
            scanner.text, start, f"Expected a vector of dimension {dimension}"
        )
    return vector(*coordinates)


def _parse_affine(scanner: _Scanner) -> GroupElement:
    scanner.expect("(")
    b = _rational(scanner)
    scanner.expect(",")
    position = scanner.pos
    a = _rational(scanner)
    scanner.expect(")")
    if a == 0:
        raise ElementSyntaxError(scanner.text, position, "Multiplicative part must be nonzero")
    return affine(b, a)


def _rational(scanner: _Scanner) -> Fraction:
    found = scanner.match(_RATIONAL, "a rational")
    try:
        return Fraction(found.group())
    except ZeroDivisionError:
        raise ElementSyntaxError(scanner.text, found.start(), f"Zero denominator in {found.group()}") from None


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
