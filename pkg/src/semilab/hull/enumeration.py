from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from semilab.ambient.elements import is_identity
from semilab.config import MAX_HULL_DEPTH, MAX_HULL_ELEMENTS
from semilab.hull.isometry import ZERO, PartialIsometry, co_isometry, compose, identity, isometry

if TYPE_CHECKING:
    from semilab.ambient.pair import AmbientPair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HullEnumeration:
    """Distinct values of the words of length at most ``depth``.

    ``elements`` starts with the identity, lists nonzero values by word length
    and ends with Zero, which is always adjoined.
    """

    elements: tuple[PartialIsometry, ...]
    depth: int
    truncated: bool

    @property
    def nonzero(self) -> tuple[PartialIsometry, ...]:
        return self.elements[:-1]


def hull_enumerate(
    amb: AmbientPair, depth: int, max_depth: int = MAX_HULL_DEPTH, max_elements: int = MAX_HULL_ELEMENTS
) -> HullEnumeration:
    """Breadth-first enumeration of the left inverse hull up to a word length.

    Args:
        amb (AmbientPair): The semigroup.
        depth (int): Maximal word length.
        max_depth (int): Depth cap; larger requests are clamped and flagged.
        max_elements (int): Element cap; the partial list is flagged when it is hit.
    """
    truncated = False
    if depth > max_depth:
        logger.warning("hull depth %d clamped to %d", depth, max_depth)
        depth, truncated = max_depth, True
    letters = []
    for p in amb.generators:
        if not is_identity(p):
            letters.extend([isometry(amb, p), co_isometry(amb, p)])

    start = identity(amb)
    seen: dict[PartialIsometry, PartialIsometry] = {start: start}
    frontier = [start]
    for length in range(1, depth + 1):
        next_frontier = []
        for s in frontier:
            for letter in letters:
                product = compose(amb, s, letter)
                if product.is_zero or product in seen:
                    continue
                seen[product] = product
                next_frontier.append(product)
                if len(seen) >= max_elements:
                    logger.warning("hull element cap of %d reached at length %d", max_elements, length)
                    return HullEnumeration(tuple(seen.values()) + (ZERO,), depth, True)
        logger.debug("hull length %d: %d new elements", length, len(next_frontier))
        if not next_frontier:
            break
        frontier = next_frontier
    return HullEnumeration(tuple(seen.values()) + (ZERO,), depth, truncated)
