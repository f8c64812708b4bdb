from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from semilab.ambient.elements import GroupElement, multiply
from semilab.ideals.closure import IdealFamily
from semilab.ideals.translated import TranslatedIdeal, translated_family
from semilab.spectrum.filters import Filter, holds


@dataclass(frozen=True)
class ExtendedCharacter:
    """The character ``(c*F)·h`` on translated ideals, for a filter ``F`` and ``h`` in G."""

    filter: Filter
    shift: GroupElement

    def act(self, g: GroupElement) -> ExtendedCharacter:
        """``χ·g``, evaluated at ``k·X`` as ``χ(gk·X)``."""
        return ExtendedCharacter(self.filter, multiply(self.shift, g))


def evaluate(family: IdealFamily, chi: ExtendedCharacter, ideal: TranslatedIdeal) -> bool:
    """Value of ``χ`` on ``k·X``: whether ``P ∩ (hk)·X`` lies in the filter."""
    if ideal.is_empty:
        return False
    cut = family.amb.model.cap_translate(multiply(chi.shift, ideal.shift), ideal.base)
    return holds(family, chi.filter, cut)


class CharacterTable:
    """Evaluations of extended characters on the translated ideals ``k·X`` with ``|k| <= radius``.

    Two characters are equal here iff they agree on every test ideal.

    Args:
        family (IdealFamily): Family supplying the bases ``X``.
        radius (int): Length bound of the shifts ``k``.
    """

    def __init__(self, family: IdealFamily, radius: int):
        self.family = family
        self.radius = radius
        self.tests = translated_family(family.amb, family, radius)
        self._signatures: dict[tuple[frozenset[int], object, GroupElement], tuple[bool, ...]] = {}

    def signature(self, chi: ExtendedCharacter) -> tuple[bool, ...]:
        key = (chi.filter.members, chi.filter.base, chi.shift)
        if key not in self._signatures:
            self._signatures[key] = tuple(evaluate(self.family, chi, test) for test in self.tests)
        return self._signatures[key]

    def equal(self, left: ExtendedCharacter, right: ExtendedCharacter) -> bool:
        return self.signature(left) == self.signature(right)

    def separating_ideal(self, left: ExtendedCharacter, right: ExtendedCharacter) -> Optional[TranslatedIdeal]:
        for test, a, b in zip(self.tests, self.signature(left), self.signature(right)):
            if a != b:
                return test
        return None
