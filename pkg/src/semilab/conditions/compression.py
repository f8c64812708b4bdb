from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

from semilab.ambient.elements import GroupElement, invert, multiply
from semilab.hull.isometry import ZERO, PartialIsometry
from semilab.ideals.ideal import ConstructibleIdeal

if TYPE_CHECKING:
    from semilab.ambient.pair import AmbientPair


@dataclass(frozen=True)
class CompressionDescriptor:
    """The compression of the translation by ``g`` to P: ``x -> gx`` on ``P ∩ g⁻¹·P``."""

    g: GroupElement
    domain: ConstructibleIdeal

    @property
    def is_zero(self) -> bool:
        return self.domain.is_empty

    def as_isometry(self) -> PartialIsometry:
        return ZERO if self.is_zero else PartialIsometry(self.domain, self.g)

    def contains(self, amb: AmbientPair, x: GroupElement) -> bool:
        return amb.is_in_p(x) and amb.is_in_p(multiply(self.g, x))

    def apply(self, amb: AmbientPair, x: GroupElement) -> Optional[GroupElement]:
        return multiply(self.g, x) if self.contains(amb, x) else None


def compression_descriptor(amb: AmbientPair, g: GroupElement) -> CompressionDescriptor:
    amb.group.check(g)
    return CompressionDescriptor(g, amb.model.cap_translate(invert(g), amb.model.full()))
