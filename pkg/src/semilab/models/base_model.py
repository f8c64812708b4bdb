import re
from abc import ABC, abstractmethod
from typing import Optional, Sequence

from semilab.ambient.elements import GroupElement, is_identity
from semilab.ambient.groups import AmbientGroup
from semilab.ambient.parsing import format_element, parse_element
from semilab.errors import ElementSyntaxError
from semilab.ideals.ideal import ConstructibleIdeal, EmptyIdeal

EMPTY_SYMBOLS = ("∅", "empty")
_PRINCIPAL = re.compile(r"^(?P<element>.+?)\s*[·.]\s*P$")


class SemigroupModel(ABC):
    """Membership in P together with the exact arithmetic of its constructible ideals.

    Every ideal operation is derived from ``cap_translate`` (``P ∩ g·X``) and
    ``intersect``: ``pX = P ∩ p·X`` and ``p⁻¹X = P ∩ p⁻¹·X`` for ``p`` in P.

    Args:
        group (AmbientGroup): The ambient group G containing P.
    """

    exact: bool = True

    def __init__(self, group: AmbientGroup):
        self.group = group

    @abstractmethod
    def contains_element(self, g: GroupElement) -> bool:
        """Decide ``g ∈ P``."""

    @abstractmethod
    def full(self) -> ConstructibleIdeal:
        """The ideal P itself."""

    @abstractmethod
    def cap_translate(self, g: GroupElement, ideal: ConstructibleIdeal) -> ConstructibleIdeal:
        """Return ``P ∩ (g·X)`` for any group element ``g``."""

    @abstractmethod
    def intersect(self, left: ConstructibleIdeal, right: ConstructibleIdeal) -> ConstructibleIdeal:
        """Return ``X1 ∩ X2``."""

    @abstractmethod
    def ideal_contains(self, ideal: ConstructibleIdeal, x: GroupElement) -> bool:
        """Decide ``x ∈ X``."""

    @abstractmethod
    def uncovered_point(
        self, ideal: ConstructibleIdeal, covers: Sequence[ConstructibleIdeal]
    ) -> Optional[GroupElement]:
        """Return a point of ``X`` lying in none of ``covers``, or None when ``X ⊆ ∪ covers``."""

    @abstractmethod
    def format_ideal(self, ideal: ConstructibleIdeal) -> str:
        """Canonical literal of an ideal."""

    def principal(self, p: GroupElement) -> ConstructibleIdeal:
        return self.cap_translate(p, self.full())

    def principal_generator(self, ideal: ConstructibleIdeal) -> Optional[GroupElement]:
        """Return ``x`` with ``X = xP``, or None if ``X`` is empty or not principal."""
        if ideal.is_empty:
            return None
        x = self.point_of(ideal)
        return x if self.principal(x) == ideal else None

    def point_of(self, ideal: ConstructibleIdeal) -> GroupElement:
        """A canonical point of a nonempty ideal."""
        point = self.uncovered_point(ideal, [])
        if point is None:
            raise ValueError("The empty ideal has no points")
        return point

    def is_subset(self, left: ConstructibleIdeal, right: ConstructibleIdeal) -> bool:
        return self.intersect(left, right) == left

    def parse_ideal(self, text: str) -> ConstructibleIdeal:
        """Parse an ideal literal: ``∅``, ``P`` or ``<element>·P``."""
        stripped = text.strip()
        if stripped in EMPTY_SYMBOLS:
            return EmptyIdeal()
        if stripped == "P":
            return self.full()
        found = _PRINCIPAL.match(stripped)
        if found is None:
            raise ElementSyntaxError(text, 0, "Expected an ideal literal such as 'p1·P'")
        p = parse_element(found.group("element"), self.group)
        if not self.contains_element(p):
            raise ElementSyntaxError(text, 0, f"{format_element(p)} is not a member of P")
        return self.principal(p)

    def format_principal(self, generator: GroupElement) -> str:
        if is_identity(generator):
            return "P"
        return f"{format_element(generator)}·P"
