from dataclasses import dataclass

from semilab.ambient.elements import GroupElement, identity_of
from semilab.config import GroupKind
from semilab.errors import FamilyMismatchError


@dataclass(frozen=True)
class AmbientGroup:
    """Descriptor of an ambient group G.

    Args:
        kind (GroupKind): Which built-in group family.
        rank (int): Number of free generators for FREE, dimension for LATTICE, unused otherwise.
    """

    kind: GroupKind
    rank: int = 0

    def identity(self) -> GroupElement:
        return identity_of(self.kind, self.rank)

    def describe(self) -> str:
        if self.kind is GroupKind.FREE:
            return f"F_{self.rank}"
        if self.kind is GroupKind.LATTICE:
            return f"Z^{self.rank}"
        if self.kind is GroupKind.INTEGER:
            return "Z"
        return "Q ⋊ Q^x"

    def check(self, g: GroupElement) -> None:
        """Raise if ``g`` does not belong to this group."""
        if g.kind is not self.kind:
            raise FamilyMismatchError(self.describe(), g)
        if self.kind is GroupKind.LATTICE and len(g.payload) != self.rank:
            raise FamilyMismatchError(self.describe(), g)
        if self.kind is GroupKind.FREE and any(gen > self.rank for gen, _ in g.payload):
            raise FamilyMismatchError(self.describe(), g)
