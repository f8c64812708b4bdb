import logging
from typing import Optional, Sequence, Union

from semilab.ambient.balls import semigroup_ball
from semilab.ambient.elements import GroupElement, invert, multiply
from semilab.ambient.groups import AmbientGroup
from semilab.ambient.parsing import format_element, parse_element
from semilab.config import BOUNDED_MEMBERSHIP_RADIUS, BOUNDED_WINDOW_RADIUS
from semilab.errors import ElementSyntaxError
from semilab.ideals.ideal import BoundedIdeal, ConstructibleIdeal, EmptyIdeal
from semilab.models.base_model import EMPTY_SYMBOLS, SemigroupModel

logger = logging.getLogger(__name__)

# Construction trees: ("P",) | ("shift", g, tree) for P ∩ g·tree | ("cap", tree, tree)
Term = Union[tuple[str], tuple[str, GroupElement, "Term"], tuple[str, "Term", "Term"]]


class BoundedModel(SemigroupModel):
    """A finitely generated subsemigroup of a built-in ambient group, decided to a bound.

    Membership in P is "product of at most ``membership_radius`` generators".
    Ideals are compared on the window of products of at most ``window_radius``
    generators, so every answer is bounded and flagged as such downstream.

    Args:
        group (AmbientGroup): Ambient group.
        generators (Sequence[GroupElement]): Generators of P.
        membership_radius (int): Word-length bound for deciding ``g ∈ P``.
        window_radius (int): Word-length bound of the comparison window.
    """

    exact = False

    def __init__(
        self,
        group: AmbientGroup,
        generators: Sequence[GroupElement],
        membership_radius: int = BOUNDED_MEMBERSHIP_RADIUS,
        window_radius: int = BOUNDED_WINDOW_RADIUS,
    ):
        super().__init__(group)
        identity = group.identity()
        self.generators = tuple(generators)
        self._members = frozenset(semigroup_ball(self.generators, identity, membership_radius))
        self.window = tuple(semigroup_ball(self.generators, identity, min(window_radius, membership_radius)))
        logger.debug(
            "bounded model over %s: %d members, window of %d",
            group.describe(),
            len(self._members),
            len(self.window),
        )

    def contains_element(self, g: GroupElement) -> bool:
        return g in self._members

    def full(self) -> ConstructibleIdeal:
        return self._make(("P",))

    def cap_translate(self, g: GroupElement, ideal: ConstructibleIdeal) -> ConstructibleIdeal:
        if ideal.is_empty:
            return EmptyIdeal()
        return self._make(("shift", g, ideal.term))

    def intersect(self, left: ConstructibleIdeal, right: ConstructibleIdeal) -> ConstructibleIdeal:
        if left.is_empty or right.is_empty:
            return EmptyIdeal()
        return self._make(("cap", left.term, right.term))

    def ideal_contains(self, ideal: ConstructibleIdeal, x: GroupElement) -> bool:
        return not ideal.is_empty and self._member(ideal.term, x)

    def uncovered_point(
        self, ideal: ConstructibleIdeal, covers: Sequence[ConstructibleIdeal]
    ) -> Optional[GroupElement]:
        if ideal.is_empty:
            return None
        for x in self.window:
            if x in ideal.window and not any(
                not cover.is_empty and x in cover.window for cover in covers
            ):
                return x
        return None

    def format_ideal(self, ideal: ConstructibleIdeal) -> str:
        if ideal.is_empty:
            return "∅"
        return _format_term(ideal.term)

    def parse_ideal(self, text: str) -> ConstructibleIdeal:
        """Parse ``∅``, ``P``, ``[g]T`` (for ``P ∩ g·T``) or ``(T&U)``."""
        stripped = text.strip()
        if stripped in EMPTY_SYMBOLS:
            return EmptyIdeal()
        term, position = self._parse_term(stripped, 0)
        if position != len(stripped):
            raise ElementSyntaxError(text, position, "Unexpected trailing input")
        return self._make(term)

    # Helper functions
    def _make(self, term: Term) -> ConstructibleIdeal:
        window = frozenset(x for x in self.window if self._member(term, x))
        if not window:
            return EmptyIdeal()
        return BoundedIdeal(window, term)

    def _member(self, term: Term, x: GroupElement) -> bool:
        if x not in self._members:
            return False
        if term[0] == "P":
            return True
        if term[0] == "shift":
            return self._member(term[2], multiply(invert(term[1]), x))
        return self._member(term[1], x) and self._member(term[2], x)

    def _parse_term(self, text: str, position: int) -> tuple[Term, int]:
        if text.startswith("P", position):
            return ("P",), position + 1
        if text.startswith("[", position):
            close = text.find("]", position)
            if close < 0:
                raise ElementSyntaxError(text, position, "Unclosed '['")
            g = parse_element(text[position + 1 : close], self.group)
            inner, end = self._parse_term(text, close + 1)
            return ("shift", g, inner), end
        if text.startswith("(", position):
            left, middle = self._parse_term(text, position + 1)
            if not text.startswith("&", middle):
                raise ElementSyntaxError(text, middle, "Expected '&'")
            right, end = self._parse_term(text, middle + 1)
            if not text.startswith(")", end):
                raise ElementSyntaxError(text, end, "Expected ')'")
            return ("cap", left, right), end + 1
        raise ElementSyntaxError(text, position, "Expected 'P', '[' or '('")


def _format_term(term: Term) -> str:
    if term[0] == "P":
        return "P"
    if term[0] == "shift":
        return f"[{format_element(term[1])}]{_format_term(term[2])}"
    return f"({_format_term(term[1])}&{_format_term(term[2])})"
