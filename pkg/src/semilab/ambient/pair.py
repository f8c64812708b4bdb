from dataclasses import dataclass, field
from typing import Optional

from semilab.ambient.balls import group_ball, semigroup_ball
from semilab.ambient.elements import GroupElement, is_identity
from semilab.ambient.groups import AmbientGroup
from semilab.ambient.parsing import format_element, parse_element
from semilab.errors import ConfigError
from semilab.models.base_model import SemigroupModel
from semilab.schemas.catalog_schema import CatalogMetadata


@dataclass(frozen=True, eq=False)
class AmbientPair:
    """A subsemigroup P of an ambient group G with its membership rule and catalog record.

    Args:
        family_id (str): Catalog id or config name.
        model (SemigroupModel): Decides membership and carries the ideal arithmetic.
        generators (tuple[GroupElement, ...]): Finite generator list of P.
        metadata (CatalogMetadata): Amenability flag, citations and known resolutions.
    """

    family_id: str
    model: SemigroupModel
    generators: tuple[GroupElement, ...]
    metadata: CatalogMetadata
    _balls: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.model.contains_element(self.identity):
            raise ConfigError("P must contain the identity of G", "generators")
        for position, g in enumerate(self.generators):
            self.group.check(g)
            if not self.model.contains_element(g):
                raise ConfigError(f"{format_element(g)} is not a member of P", f"generators[{position}]")

    @property
    def group(self) -> AmbientGroup:
        return self.model.group

    @property
    def identity(self) -> GroupElement:
        return self.group.identity()

    @property
    def exact(self) -> bool:
        return self.model.exact

    @property
    def is_trivial(self) -> bool:
        return all(is_identity(g) for g in self.generators)

    def is_in_p(self, g: GroupElement) -> bool:
        self.group.check(g)
        return self.model.contains_element(g)

    def parse(self, text: str) -> GroupElement:
        return parse_element(text, self.group)

    def format(self, g: GroupElement) -> str:
        return format_element(g)

    def word_length(self, g: GroupElement, cap: int) -> Optional[int]:
        """Length of ``g`` over the generators of P and their inverses, or None beyond ``cap``."""
        self.group.check(g)
        for radius in range(cap + 1):
            key = ("group-set", radius)
            if key not in self._balls:
                self._balls[key] = frozenset(self.group_ball(radius))
            if g in self._balls[key]:
                return radius
        return None

    def group_ball(self, radius: int) -> list[GroupElement]:
        """Elements of length at most ``radius`` in the group generated by P."""
        key = ("group", radius)
        if key not in self._balls:
            self._balls[key] = group_ball(self.generators, self.identity, radius)
        return self._balls[key]

    def semigroup_ball(self, radius: int) -> list[GroupElement]:
        """Products of at most ``radius`` generators of P."""
        key = ("semigroup", radius)
        if key not in self._balls:
            self._balls[key] = semigroup_ball(self.generators, self.identity, radius)
        return self._balls[key]


def is_in_p(g: GroupElement, amb: AmbientPair) -> bool:
    """Decide ``g ∈ P`` under the membership rule of ``amb``."""
    return amb.is_in_p(g)
