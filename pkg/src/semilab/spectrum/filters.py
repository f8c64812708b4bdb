"""Filters over a finite ideal family.

Over an intersection-closed finite family every filter is ``↑m`` for its
smallest member ``m``, so enumeration runs over the nonempty members. A filter
also remembers ``base``, the ideal whose principal filter in the full family
of constructible ideals it truncates: ``holds(F, Y)`` decides ``Y ∈ F`` for
any constructible ``Y``, stored or not.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

from semilab.ambient.elements import GroupElement
from semilab.config import MAX_FILTER_CANDIDATES
from semilab.errors import BudgetExceededError, ConfigError, NotInSemigroupError
from semilab.ideals.closure import EMPTY_INDEX, IdealFamily
from semilab.ideals.ideal import ConstructibleIdeal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Filter:
    """A filter over a stored family, identified by its member indices."""

    members: frozenset[int]
    base: ConstructibleIdeal = field(compare=False, hash=False)

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def sort_key(self) -> tuple:
        return (len(self.members), sorted(self.members))


@dataclass(frozen=True)
class BasicOpen:
    """``U(X; X1, ..., Xn)``: filters containing ``X`` and none of the ``Xi`` (family indices)."""

    required: int
    excluded: tuple[int, ...] = ()

    def contains(self, f: Filter) -> bool:
        return self.required in f.members and not any(i in f.members for i in self.excluded)


def holds(family: IdealFamily, f: Filter, ideal: ConstructibleIdeal) -> bool:
    """Decide whether the constructible ideal ``Y`` belongs to the filter truncated by ``f``."""
    return not ideal.is_empty and family.amb.model.is_subset(f.base, ideal)


def up_filter(family: IdealFamily, ideal: ConstructibleIdeal, max_level: Optional[int] = None) -> Filter:
    """The principal filter of a nonempty ideal, restricted to the family."""
    if ideal.is_empty:
        raise ConfigError("the empty ideal generates no filter")
    return Filter(family.up_restricted(ideal, max_level), ideal)


def is_filter(family: IdealFamily, members: Iterable[int]) -> bool:
    """Check the filter axioms for a set of member indices."""
    chosen = frozenset(members)
    if not chosen or EMPTY_INDEX in chosen:
        return False
    for i in chosen:
        for j in family.nonempty_indices():
            if j not in chosen and family.is_subset(i, j):
                return False
    for i, j in itertools.combinations(chosen, 2):
        meet = family.meet(i, j)
        if meet.is_empty:
            return False
        k = family.index_of(meet)
        if k is not None and k not in chosen:
            return False
    return True


def enumerate_filters(family: IdealFamily, max_candidates: int = MAX_FILTER_CANDIDATES) -> list[Filter]:
    """All filters over the family, smallest first.

    Raises:
        BudgetExceededError: If a non-closed family needs more than ``max_candidates`` subsets.
    """
    if family.intersection_closed:
        filters = [up_filter(family, family.ideals[i]) for i in family.nonempty_indices()]
        return sorted(filters, key=Filter.sort_key)
    nonempty = family.nonempty_indices()
    if 2 ** len(nonempty) > max_candidates:
        raise BudgetExceededError(
            f"{2 ** len(nonempty)} candidate member sets exceed the cap of {max_candidates}"
        )
    logger.warning("family is not intersection-closed; enumerating member subsets")
    filters = []
    for size in range(1, len(nonempty) + 1):
        for chosen in itertools.combinations(nonempty, size):
            if is_filter(family, chosen):
                filters.append(Filter(frozenset(chosen), _meet_all(family, chosen)))
    return sorted(filters, key=Filter.sort_key)


def principal_filter_of(family: IdealFamily, x: GroupElement) -> Filter:
    """``{X ∈ family : x ∈ X}``, the filter of a point of P."""
    amb = family.amb
    if not amb.is_in_p(x):
        raise NotInSemigroupError(amb.format(x))
    return up_filter(family, amb.model.principal(x))


def is_relative_ultrafilter(family: IdealFamily, f: Filter) -> bool:
    """Every nonempty member outside ``f`` is disjoint from some member of ``f``."""
    for i in family.nonempty_indices():
        if i in f.members:
            continue
        if not any(family.disjoint(i, j) for j in f.members):
            return False
    return True


def smallest_basic_open(family: IdealFamily, f: Filter) -> BasicOpen:
    """The smallest basic open containing ``f``: its least member required, all non-members excluded."""
    least = max(f.members, key=lambda i: (sum(family.is_subset(i, j) for j in f.members), -i))
    excluded = tuple(i for i in family.nonempty_indices() if i not in f.members)
    return BasicOpen(least, excluded)


def boundary_approx(family: IdealFamily, filters: Optional[list[Filter]] = None) -> list[Filter]:
    """Filters all of whose basic neighbourhoods contain a relative ultrafilter.

    Every basic open containing ``f`` contains its smallest basic open, so it
    suffices to test that one.
    """
    filters = enumerate_filters(family) if filters is None else filters
    ultrafilters = [f for f in filters if is_relative_ultrafilter(family, f)]
    boundary = []
    for f in filters:
        neighbourhood = smallest_basic_open(family, f)
        if any(neighbourhood.contains(u) for u in ultrafilters):
            boundary.append(f)
    return boundary


def format_filter(family: IdealFamily, f: Filter) -> list[str]:
    return family.formatted(f.members)


def _meet_all(family: IdealFamily, members: Iterable[int]) -> ConstructibleIdeal:
    model = family.amb.model
    indices = list(members)
    result = family.ideals[indices[0]]
    for i in indices[1:]:
        result = model.intersect(result, family.ideals[i])
    return result
