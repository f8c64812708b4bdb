from typing import Optional, Sequence

from semilab.ambient.elements import GroupElement, multiply, vector
from semilab.ambient.groups import AmbientGroup
from semilab.config import GroupKind
from semilab.ideals.ideal import ConstructibleIdeal, EmptyIdeal, PrincipalVector
from semilab.models.base_model import SemigroupModel


class ConeModel(SemigroupModel):
    """P = ℕ^k inside ℤ^k; every constructible ideal is ``v + ℕ^k``.

    Dimension 0 gives the trivial semigroup P = {e}.
    """

    def __init__(self, dimension: int):
        super().__init__(AmbientGroup(GroupKind.LATTICE, dimension))

    def contains_element(self, g: GroupElement) -> bool:
        return all(x >= 0 for x in g.payload)

    def full(self) -> ConstructibleIdeal:
        return PrincipalVector(vector(*([0] * self.group.rank)))

    def cap_translate(self, g: GroupElement, ideal: ConstructibleIdeal) -> ConstructibleIdeal:
        if ideal.is_empty:
            return EmptyIdeal()
        shifted = multiply(g, ideal.vector)
        return PrincipalVector(vector(*(max(x, 0) for x in shifted.payload)))

    def intersect(self, left: ConstructibleIdeal, right: ConstructibleIdeal) -> ConstructibleIdeal:
        if left.is_empty or right.is_empty:
            return EmptyIdeal()
        return PrincipalVector(
            vector(*(max(x, y) for x, y in zip(left.vector.payload, right.vector.payload)))
        )

    def ideal_contains(self, ideal: ConstructibleIdeal, x: GroupElement) -> bool:
        if ideal.is_empty:
            return False
        return all(a >= b for a, b in zip(x.payload, ideal.vector.payload))

    def uncovered_point(
        self, ideal: ConstructibleIdeal, covers: Sequence[ConstructibleIdeal]
    ) -> Optional[GroupElement]:
        if ideal.is_empty:
            return None
        if any(self.ideal_contains(cover, ideal.vector) for cover in covers):
            return None
        return ideal.vector

    def principal_generator(self, ideal: ConstructibleIdeal) -> Optional[GroupElement]:
        return None if ideal.is_empty else ideal.vector

    def format_ideal(self, ideal: ConstructibleIdeal) -> str:
        if ideal.is_empty:
            return "∅"
        return self.format_principal(ideal.vector)
