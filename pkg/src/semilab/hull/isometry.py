"""Partial isometries of the left inverse hull, stored as ``(domain, shift)``.

A nonzero element is the partial bijection ``x -> shift·x`` on ``domain``.
Words over ``v[p]`` (the isometry ``x -> px``) and ``v[p]*`` (its adjoint)
print as space-separated letters, for example ``v[p1] v[p2]*``; the empty
word prints as ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional, Sequence

from semilab.ambient.elements import GroupElement, invert, is_identity, multiply
from semilab.ambient.parsing import format_element
from semilab.errors import ElementSyntaxError, NotInSemigroupError, UndefinedGradeError
from semilab.ideals.ideal import ConstructibleIdeal, EmptyIdeal

if TYPE_CHECKING:
    from semilab.ambient.pair import AmbientPair

# (p, starred) stands for v[p] or v[p]*
Letter = tuple[GroupElement, bool]

_LETTER = re.compile(r"v\[(?P<element>[^\]]*)\](?P<star>\*?)")


@dataclass(frozen=True)
class PartialIsometry:
    domain: ConstructibleIdeal
    shift: Optional[GroupElement]
    word: tuple[Letter, ...] = field(default=(), compare=False, hash=False)

    @property
    def is_zero(self) -> bool:
        return self.domain.is_empty

    def sort_key(self) -> tuple:
        if self.is_zero:
            return (1,)
        return (0, self.shift.sort_key(), self.domain.sort_key())


ZERO = PartialIsometry(EmptyIdeal(), None)


def identity(amb: AmbientPair) -> PartialIsometry:
    return PartialIsometry(amb.model.full(), amb.identity)


def idempotent(amb: AmbientPair, ideal: ConstructibleIdeal) -> PartialIsometry:
    """The projection onto ``X``."""
    if ideal.is_empty:
        return ZERO
    return PartialIsometry(ideal, amb.identity)


def isometry(amb: AmbientPair, p: GroupElement) -> PartialIsometry:
    """``v[p]``: the map ``x -> px`` on P."""
    if not amb.is_in_p(p):
        raise NotInSemigroupError(format_element(p))
    return PartialIsometry(amb.model.full(), p, ((p, False),))


def co_isometry(amb: AmbientPair, p: GroupElement) -> PartialIsometry:
    """``v[p]*``: the map ``px -> x`` on ``pP``."""
    if not amb.is_in_p(p):
        raise NotInSemigroupError(format_element(p))
    return PartialIsometry(amb.model.principal(p), invert(p), ((p, True),))


def compose(amb: AmbientPair, first: PartialIsometry, second: PartialIsometry) -> PartialIsometry:
    """Return ``first ∘ second`` (apply ``second``, then ``first``)."""
    if first.is_zero or second.is_zero:
        return ZERO
    model = amb.model
    pulled_back = model.cap_translate(invert(second.shift), first.domain)
    domain = model.intersect(second.domain, pulled_back)
    if domain.is_empty:
        return ZERO
    return PartialIsometry(domain, multiply(first.shift, second.shift), first.word + second.word)


def adjoint(amb: AmbientPair, s: PartialIsometry) -> PartialIsometry:
    if s.is_zero:
        return ZERO
    image = amb.model.cap_translate(s.shift, s.domain)
    word = tuple((p, not starred) for p, starred in reversed(s.word))
    return PartialIsometry(image, invert(s.shift), word)


def g_map(s: PartialIsometry) -> GroupElement:
    """The grade of a nonzero element.

    Raises:
        UndefinedGradeError: For the zero element.
    """
    if s.is_zero:
        raise UndefinedGradeError("The zero partial isometry has no grade")
    return s.shift


def from_word(amb: AmbientPair, letters: Sequence[Letter]) -> PartialIsometry:
    """Multiply out a word over ``v[p]`` and ``v[p]*``."""
    result = identity(amb)
    for p, starred in letters:
        letter = co_isometry(amb, p) if starred else isometry(amb, p)
        result = compose(amb, result, letter)
        if result.is_zero:
            return ZERO
    return result


def apply(amb: AmbientPair, s: PartialIsometry, x: GroupElement) -> Optional[GroupElement]:
    """Evaluate ``s`` at a point of P; None outside the domain."""
    if s.is_zero or not amb.model.ideal_contains(s.domain, x):
        return None
    return multiply(s.shift, x)


def restrict(amb: AmbientPair, s: PartialIsometry, ideal: ConstructibleIdeal) -> PartialIsometry:
    return compose(amb, s, idempotent(amb, ideal))


def source_projection(amb: AmbientPair, s: PartialIsometry) -> PartialIsometry:
    """``s*s``, the projection onto the domain."""
    return idempotent(amb, s.domain)


def range_projection(amb: AmbientPair, s: PartialIsometry) -> PartialIsometry:
    """``ss*``, the projection onto the image."""
    return ZERO if s.is_zero else idempotent(amb, amb.model.cap_translate(s.shift, s.domain))


def is_idempotent(s: PartialIsometry) -> bool:
    return not s.is_zero and is_identity(s.shift)


def format_isometry(amb: AmbientPair, s: PartialIsometry) -> str:
    if s.is_zero:
        return "0"
    return f"({amb.model.format_ideal(s.domain)}, {format_element(s.shift)})"


def format_word(letters: Sequence[Letter]) -> str:
    if not letters:
        return "1"
    return " ".join(f"v[{format_element(p)}]{'*' if starred else ''}" for p, starred in letters)


def parse_word(amb: AmbientPair, text: str) -> tuple[Letter, ...]:
    stripped = text.strip()
    if stripped in ("", "1"):
        return ()
    letters = []
    position = 0
    for token in stripped.split():
        found = _LETTER.fullmatch(token)
        if found is None:
            raise ElementSyntaxError(text, position, "Expected a letter such as 'v[p1]' or 'v[p1]*'")
        p = amb.parse(found.group("element"))
        if not amb.is_in_p(p):
            raise NotInSemigroupError(format_element(p))
        letters.append((p, bool(found.group("star"))))
        position = stripped.find(token, position) + len(token)
    return tuple(letters)
