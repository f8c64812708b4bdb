from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Sequence

from semilab.ambient.elements import GroupElement
from semilab.config import MAX_JOIN_MEMBERS
from semilab.errors import BudgetExceededError, IntersectionClosureError
from semilab.ideals.ideal import ConstructibleIdeal

if TYPE_CHECKING:
    from semilab.ambient.pair import AmbientPair
    from semilab.ideals.closure import IdealFamily

logger = logging.getLogger(__name__)

INDEPENDENT = "Independent"
DEPENDENT = "Dependent"
UNKNOWN_TRUNCATED = "UnknownTruncated"

# Exhaustive search for the smallest covering union stops at this arity
_EXHAUSTIVE_UNION_ARITY = 3


@dataclass(frozen=True)
class IndependenceResult:
    """Outcome of the independence search over a family.

    ``ideal`` and ``union`` are family indices: ``ideals[ideal]`` is the union of
    ``ideals[k]`` for ``k`` in ``union``, each properly contained in it.
    ``bounded`` marks answers read off a finite window of a config-defined semigroup.
    """

    verdict: str
    ideal: Optional[int] = None
    union: tuple[int, ...] = ()
    bounded: bool = False


@dataclass(frozen=True)
class Atom:
    ideal: ConstructibleIdeal
    removed: tuple[ConstructibleIdeal, ...]
    witness: Optional[GroupElement]

    @property
    def is_empty(self) -> bool:
        return self.witness is None


def proper_members(family: IdealFamily, i: int) -> list[int]:
    """Nonempty members properly contained in ``ideals[i]``."""
    return [j for j in family.nonempty_indices() if j != i and family.is_subset(j, i)]


def independence_check(family: IdealFamily) -> IndependenceResult:
    """Search for a member equal to a finite union of proper members.

    For the catalog families the uncovered point returned by the model decides
    coverage exactly. Config-defined families only see a window, so a negative
    answer there is ``UnknownTruncated``.
    """
    model = family.amb.model
    for i in family.nonempty_indices():
        covers = proper_members(family, i)
        if not covers:
            continue
        if model.uncovered_point(family.ideals[i], [family.ideals[j] for j in covers]) is not None:
            continue
        union = minimal_union(family, i, covers)
        logger.debug("%s is covered by %d proper members", family.format(i), len(union))
        return IndependenceResult(DEPENDENT, i, union, bounded=not model.exact)
    if not model.exact or family.budget_exhausted:
        return IndependenceResult(UNKNOWN_TRUNCATED, bounded=not model.exact)
    return IndependenceResult(INDEPENDENT)


def minimal_union(family: IdealFamily, i: int, covers: Sequence[int]) -> tuple[int, ...]:
    """A small sub-union of ``covers`` still equal to ``ideals[i]``, fewest members first."""
    model = family.amb.model
    target = family.ideals[i]

    def covered(chosen: Sequence[int]) -> bool:
        return model.uncovered_point(target, [family.ideals[j] for j in chosen]) is None

    for arity in range(1, min(len(covers), _EXHAUSTIVE_UNION_ARITY) + 1):
        for chosen in itertools.combinations(covers, arity):
            if covered(chosen):
                return tuple(chosen)
    kept = list(covers)
    for j in list(covers):
        trial = [k for k in kept if k != j]
        if covered(trial):
            kept = trial
    return tuple(kept)


def is_union_witness(
    amb: AmbientPair, ideal: ConstructibleIdeal, union: Sequence[ConstructibleIdeal]
) -> bool:
    """Replay a Dependent witness: every member is proper and together they cover ``ideal``."""
    model = amb.model
    if ideal.is_empty or not union:
        return False
    for member in union:
        if member.is_empty or member == ideal or not model.is_subset(member, ideal):
            return False
    return model.uncovered_point(ideal, list(union)) is None


def orthogonal_atoms(amb: AmbientPair, members: Sequence[ConstructibleIdeal]) -> list[Atom]:
    """Orthogonalize an intersection-closed sub-family into ``e ∖ ∪{e' ⊊ e}`` atoms.

    Raises:
        IntersectionClosureError: If two members meet outside the sub-family (∅ aside).
    """
    model = amb.model
    distinct = list(dict.fromkeys(m for m in members if not m.is_empty))
    present = set(distinct)
    for left, right in itertools.combinations(distinct, 2):
        meet = model.intersect(left, right)
        if not meet.is_empty and meet not in present:
            raise IntersectionClosureError(
                f"{model.format_ideal(left)} ∩ {model.format_ideal(right)} = "
                f"{model.format_ideal(meet)} is not a member"
            )
    atoms = []
    for ideal in distinct:
        below = tuple(m for m in distinct if m != ideal and model.is_subset(m, ideal))
        atoms.append(Atom(ideal, below, model.uncovered_point(ideal, list(below))))
    return atoms


def format_atom(amb: AmbientPair, atom: Atom) -> str:
    model = amb.model
    if not atom.removed:
        return model.format_ideal(atom.ideal)
    removed = " ∪ ".join(model.format_ideal(m) for m in atom.removed)
    return f"{model.format_ideal(atom.ideal)} ∖ ({removed})"


def join_expansion(amb: AmbientPair, members: Sequence[ConstructibleIdeal]) -> dict[ConstructibleIdeal, int]:
    """Inclusion–exclusion expansion of ``e_1 ∨ ... ∨ e_n`` over intersections.

    Returns:
        dict[ConstructibleIdeal, int]: Collapsed coefficients, zero terms and ∅ dropped.
    """
    if len(members) > MAX_JOIN_MEMBERS:
        raise BudgetExceededError(f"join of {len(members)} members exceeds {MAX_JOIN_MEMBERS}")
    model = amb.model
    coefficients: dict[ConstructibleIdeal, int] = {}
    for size in range(1, len(members) + 1):
        sign = 1 if size % 2 else -1
        for chosen in itertools.combinations(members, size):
            meet = chosen[0]
            for other in chosen[1:]:
                meet = model.intersect(meet, other)
                if meet.is_empty:
                    break
            if meet.is_empty:
                continue
            coefficients[meet] = coefficients.get(meet, 0) + sign
    return {ideal: c for ideal, c in coefficients.items() if c != 0}
