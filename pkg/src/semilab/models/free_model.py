from typing import Optional, Sequence

from semilab.ambient.elements import (
    GroupElement,
    letters_of,
    multiply,
    word,
)
from semilab.ambient.groups import AmbientGroup
from semilab.config import GroupKind
from semilab.ideals.ideal import ConstructibleIdeal, EmptyIdeal, PrincipalWord
from semilab.models.base_model import SemigroupModel


class FreeMonoidModel(SemigroupModel):
    """P = ℕ₀^{*n}, the positive words inside the free group F_n.

    Every nonempty constructible ideal is ``wP`` for a positive word ``w``.
    """

    def __init__(self, rank: int):
        super().__init__(AmbientGroup(GroupKind.FREE, rank))

    def contains_element(self, g: GroupElement) -> bool:
        return all(exp > 0 for _, exp in g.payload)

    def full(self) -> ConstructibleIdeal:
        return PrincipalWord(word())

    def cap_translate(self, g: GroupElement, ideal: ConstructibleIdeal) -> ConstructibleIdeal:
        if ideal.is_empty:
            return EmptyIdeal()
        shifted = multiply(g, ideal.word)
        # u·y is positive for positive y iff u = v·c⁻¹ with v positive, and then y = c·y'
        runs = list(shifted.payload)
        while runs and runs[-1][1] < 0:
            runs.pop()
        if any(exp < 0 for _, exp in runs):
            return EmptyIdeal()
        return PrincipalWord(word(*runs))

    def intersect(self, left: ConstructibleIdeal, right: ConstructibleIdeal) -> ConstructibleIdeal:
        if left.is_empty or right.is_empty:
            return EmptyIdeal()
        a, b = letters_of(left.word), letters_of(right.word)
        if b[: len(a)] == a:
            return right
        if a[: len(b)] == b:
            return left
        return EmptyIdeal()

    def ideal_contains(self, ideal: ConstructibleIdeal, x: GroupElement) -> bool:
        if ideal.is_empty or not self.contains_element(x):
            return False
        prefix = letters_of(ideal.word)
        return letters_of(x)[: len(prefix)] == prefix

    def uncovered_point(
        self, ideal: ConstructibleIdeal, covers: Sequence[ConstructibleIdeal]
    ) -> Optional[GroupElement]:
        if ideal.is_empty:
            return None
        generator = ideal.word
        if any(self.ideal_contains(cover, generator) for cover in covers):
            return None
        return generator

    def principal_generator(self, ideal: ConstructibleIdeal) -> Optional[GroupElement]:
        return None if ideal.is_empty else ideal.word

    def format_ideal(self, ideal: ConstructibleIdeal) -> str:
        if ideal.is_empty:
            return "∅"
        return self.format_principal(ideal.word)
