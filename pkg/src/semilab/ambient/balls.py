from typing import Sequence

from semilab.ambient.elements import GroupElement, invert, multiply


def semigroup_ball(
    generators: Sequence[GroupElement], identity: GroupElement, radius: int
) -> list[GroupElement]:
    """Distinct products of at most ``radius`` generators, shortest first.

    Ties are broken by generator order, so the listing is deterministic.
    """
    return _breadth_first(list(generators), identity, radius)


def group_ball(
    generators: Sequence[GroupElement], identity: GroupElement, radius: int
) -> list[GroupElement]:
    """Elements of word length at most ``radius`` in the subgroup generated by ``generators``."""
    symmetric: list[GroupElement] = []
    for g in generators:
        for candidate in (g, invert(g)):
            if candidate not in symmetric and candidate != identity:
                symmetric.append(candidate)
    return _breadth_first(symmetric, identity, radius)


# Helper functions
def _breadth_first(
    letters: list[GroupElement], identity: GroupElement, radius: int
) -> list[GroupElement]:
    seen = {identity}
    ordered = [identity]
    frontier = [identity]
    for _ in range(radius):
        next_frontier = []
        for g in frontier:
            for letter in letters:
                h = multiply(g, letter)
                if h not in seen:
                    seen.add(h)
                    ordered.append(h)
                    next_frontier.append(h)
        if not next_frontier:
            break
        frontier = next_frontier
    return ordered
