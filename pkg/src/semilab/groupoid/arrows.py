"""Arrows of the groupoid of germs, in two views.

View A: a germ ``[s, F]`` of a partial isometry at a filter with ``dom(s) ∈ F``.
View B: a pair ``(χ, g)`` of the transformation groupoid, with range ``χ`` and
source ``χ·g``. ``phi_map`` sends ``[s, F]`` to ``((c*F)·g(s)⁻¹, g(s))``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from semilab.ambient.elements import GroupElement, invert, multiply
from semilab.errors import ComposabilityError
from semilab.groupoid.characters import CharacterTable, ExtendedCharacter
from semilab.hull.isometry import PartialIsometry, adjoint, compose, identity, restrict
from semilab.ideals.closure import IdealFamily
from semilab.spectrum.filters import Filter, holds, up_filter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupoidArrow:
    s: PartialIsometry
    source: Filter


@dataclass(frozen=True)
class TransformationArrow:
    character: ExtendedCharacter
    g: GroupElement

    @property
    def source(self) -> ExtendedCharacter:
        return self.character.act(self.g)


def s_dot_chi(family: IdealFamily, s: PartialIsometry, f: Filter) -> Filter:
    """The filter ``s.F`` with ``X ∈ s.F`` iff ``s* e_X s`` lies in ``F``.

    Raises:
        ComposabilityError: If ``dom(s)`` is not in ``F``.
    """
    if s.is_zero or not holds(family, f, s.domain):
        raise ComposabilityError("the domain of s is not a member of the filter")
    return up_filter(family, family.amb.model.cap_translate(s.shift, f.base))


def arrow_range(family: IdealFamily, a: GroupoidArrow) -> Filter:
    return s_dot_chi(family, a.s, a.source)


def arrow_equiv(family: IdealFamily, left: GroupoidArrow, right: GroupoidArrow) -> bool:
    """``[s1, F] = [s2, F]`` iff some ideal of ``F`` equalizes ``s1`` and ``s2``."""
    if left.source != right.source:
        return False
    amb = family.amb
    candidates = [family.ideals[i] for i in sorted(left.source.members)] + [left.source.base]
    for ideal in candidates:
        restricted = restrict(amb, left.s, ideal)
        if not restricted.is_zero and restricted == restrict(amb, right.s, ideal):
            return True
    return False


def canonical(family: IdealFamily, a: GroupoidArrow) -> GroupoidArrow:
    """The representative ``[s restricted to min F, F]``."""
    return GroupoidArrow(restrict(family.amb, a.s, a.source.base), a.source)


def compose_arrows(family: IdealFamily, left: GroupoidArrow, right: GroupoidArrow) -> GroupoidArrow:
    """``[s1, F1][s2, F2] = [s1 s2, F2]``, defined when ``F1 = s2.F2``.

    Raises:
        ComposabilityError: If the source of ``left`` is not the range of ``right``.
    """
    if left.source != arrow_range(family, right):
        raise ComposabilityError("arrows are not composable")
    return GroupoidArrow(compose(family.amb, left.s, right.s), right.source)


def invert_arrow(family: IdealFamily, a: GroupoidArrow) -> GroupoidArrow:
    return GroupoidArrow(adjoint(family.amb, a.s), arrow_range(family, a))


def unit_arrow(family: IdealFamily, f: Filter) -> GroupoidArrow:
    return GroupoidArrow(identity(family.amb), f)


def phi_map(a: GroupoidArrow) -> TransformationArrow:
    g = a.s.shift
    return TransformationArrow(ExtendedCharacter(a.source, invert(g)), g)


def transformation_equal(table: CharacterTable, left: TransformationArrow, right: TransformationArrow) -> bool:
    return left.g == right.g and table.equal(left.character, right.character)


def transformation_composable(table: CharacterTable, left: TransformationArrow, right: TransformationArrow) -> bool:
    return table.equal(left.source, right.character)


def compose_transformation(
    table: CharacterTable, left: TransformationArrow, right: TransformationArrow
) -> TransformationArrow:
    if not transformation_composable(table, left, right):
        raise ComposabilityError("transformation arrows are not composable")
    return TransformationArrow(left.character, multiply(left.g, right.g))


def enumerate_arrows(
    family: IdealFamily, elements: Sequence[PartialIsometry], filters: Sequence[Filter]
) -> list[GroupoidArrow]:
    """Arrow classes ``[s, F]`` whose range stays inside the stored family, one per ``(g(s), F)``."""
    amb = family.amb
    arrows: dict[tuple, GroupoidArrow] = {}
    for s in elements:
        if s.is_zero:
            continue
        for f in filters:
            if not holds(family, f, s.domain):
                continue
            image = amb.model.cap_translate(s.shift, f.base)
            if family.index_of(image) is None:
                continue
            arrows.setdefault((s.shift, f.members), canonical(family, GroupoidArrow(s, f)))
    logger.debug("enumerated %d arrow classes", len(arrows))
    return list(arrows.values())


@dataclass(frozen=True)
class IdentificationCheck:
    well_defined: bool
    injective: bool
    composable: bool
    character_identity: bool


def check_identification(
    family: IdealFamily, arrows: Sequence[GroupoidArrow], table: CharacterTable
) -> IdentificationCheck:
    """Compare view A and view B on every pair of enumerated arrows."""
    images = [phi_map(a) for a in arrows]
    well_defined = injective = composable = True
    for i, a in enumerate(arrows):
        for j, b in enumerate(arrows):
            same_class = arrow_equiv(family, a, b)
            same_image = transformation_equal(table, images[i], images[j])
            if same_class and not same_image:
                well_defined = False
            if same_image and not same_class:
                injective = False
            in_view_a = a.source == arrow_range(family, b)
            in_view_b = transformation_composable(table, images[i], images[j])
            if in_view_a != in_view_b:
                composable = False
            elif in_view_a:
                product = phi_map(compose_arrows(family, a, b))
                if not transformation_equal(table, product, compose_transformation(table, images[i], images[j])):
                    composable = False
    character_identity = all(
        table.equal(ExtendedCharacter(arrow_range(family, a), family.amb.identity), phi_map(a).character)
        for a in arrows
    )
    return IdentificationCheck(well_defined, injective, composable, character_identity)
