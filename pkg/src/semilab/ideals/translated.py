from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from semilab.ambient.elements import GroupElement, invert, is_identity, multiply
from semilab.ambient.parsing import format_element
from semilab.ideals.ideal import ConstructibleIdeal

if TYPE_CHECKING:
    from semilab.ambient.pair import AmbientPair
    from semilab.ideals.closure import IdealFamily


@dataclass(frozen=True)
class TranslatedIdeal:
    """The subset ``g·X`` of G for a constructible ideal ``X``.

    Principal bases are folded into the shift, so ``g·(xP)`` is stored as ``(gx)·P``.
    """

    shift: GroupElement
    base: ConstructibleIdeal

    @property
    def is_empty(self) -> bool:
        return self.base.is_empty

    def cap(self, amb: AmbientPair) -> ConstructibleIdeal:
        """The constructible ideal ``P ∩ (g·X)``."""
        return amb.model.cap_translate(self.shift, self.base)

    def translate(self, amb: AmbientPair, g: GroupElement) -> TranslatedIdeal:
        return translated(amb, multiply(g, self.shift), self.base)

    def contains(self, amb: AmbientPair, x: GroupElement) -> bool:
        """Decide ``x ∈ g·X`` for any ``x`` in G."""
        return amb.model.ideal_contains(self.base, multiply(invert(self.shift), x))

    def describe(self, amb: AmbientPair) -> str:
        base = amb.model.format_ideal(self.base)
        if self.is_empty or is_identity(self.shift):
            return base
        return f"{format_element(self.shift)}·[{base}]"


def translated(amb: AmbientPair, g: GroupElement, ideal: ConstructibleIdeal) -> TranslatedIdeal:
    """Build ``g·X`` in folded form."""
    if ideal.is_empty:
        return TranslatedIdeal(amb.identity, ideal)
    generator = amb.model.principal_generator(ideal)
    if generator is not None:
        return TranslatedIdeal(multiply(g, generator), amb.model.full())
    return TranslatedIdeal(g, ideal)


def translated_family(amb: AmbientPair, family: IdealFamily, radius: int) -> list[TranslatedIdeal]:
    """All ``g·X`` with ``|g| <= radius`` and ``X`` a nonempty member of ``family``, deduplicated."""
    seen: dict[TranslatedIdeal, None] = {}
    for g in amb.group_ball(radius):
        for ideal in family.ideals:
            if ideal.is_empty:
                continue
            seen.setdefault(translated(amb, g, ideal), None)
    return list(seen)
