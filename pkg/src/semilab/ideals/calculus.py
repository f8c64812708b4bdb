"""Generating operations of the constructible right ideals.

All of them reduce to the model's ``cap_translate``: for ``p`` in P,
``pX = P ∩ p·X`` and ``p⁻¹X = P ∩ p⁻¹·X``.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from semilab.ambient.elements import GroupElement, invert
from semilab.ambient.parsing import format_element
from semilab.errors import NotInSemigroupError
from semilab.ideals.ideal import ConstructibleIdeal

if TYPE_CHECKING:
    from semilab.ambient.pair import AmbientPair


def left_multiply(amb: AmbientPair, p: GroupElement, ideal: ConstructibleIdeal) -> ConstructibleIdeal:
    """Return ``pX = {px : x ∈ X}``.

    Raises:
        NotInSemigroupError: If ``p`` is not a member of P.
    """
    _require_member(amb, p)
    return amb.model.cap_translate(p, ideal)


def left_preimage(amb: AmbientPair, p: GroupElement, ideal: ConstructibleIdeal) -> ConstructibleIdeal:
    """Return ``p⁻¹X = {y ∈ P : py ∈ X}``.

    Raises:
        NotInSemigroupError: If ``p`` is not a member of P.
    """
    _require_member(amb, p)
    return amb.model.cap_translate(invert(p), ideal)


def intersect(amb: AmbientPair, left: ConstructibleIdeal, right: ConstructibleIdeal) -> ConstructibleIdeal:
    return amb.model.intersect(left, right)


def cap_translate(amb: AmbientPair, g: GroupElement, ideal: ConstructibleIdeal) -> ConstructibleIdeal:
    """Return ``P ∩ (g·X)`` for an arbitrary group element ``g``."""
    amb.group.check(g)
    return amb.model.cap_translate(g, ideal)


def contains(amb: AmbientPair, ideal: ConstructibleIdeal, x: GroupElement) -> bool:
    return amb.model.ideal_contains(ideal, x)


def is_subset(amb: AmbientPair, left: ConstructibleIdeal, right: ConstructibleIdeal) -> bool:
    return amb.model.is_subset(left, right)


def format_ideal(amb: AmbientPair, ideal: ConstructibleIdeal) -> str:
    return amb.model.format_ideal(ideal)


def parse_ideal(amb: AmbientPair, text: str) -> ConstructibleIdeal:
    return amb.model.parse_ideal(text)


def _require_member(amb: AmbientPair, p: GroupElement) -> None:
    if not amb.is_in_p(p):
        raise NotInSemigroupError(format_element(p))
