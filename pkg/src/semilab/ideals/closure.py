from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

from semilab.ambient.elements import is_identity
from semilab.ambient.parsing import format_element
from semilab.config import MAX_IDEALS
from semilab.errors import ConfigError
from semilab.ideals.calculus import left_multiply, left_preimage
from semilab.ideals.ideal import ConstructibleIdeal, EmptyIdeal

if TYPE_CHECKING:
    from semilab.ambient.pair import AmbientPair

logger = logging.getLogger(__name__)

MUL = "mul"
PRE = "pre"
CAP = "cap"
EMPTY = "empty"

FULL_INDEX = 0
EMPTY_INDEX = 1


@dataclass(eq=False)
class IdealFamily:
    """A depth-truncated, intersection-saturated family of constructible ideals.

    ``ideals[0]`` is P and ``ideals[1]`` is ∅. Each member carries a provenance
    word, replayable from P: ``mul g`` / ``pre g`` apply ``gX`` / ``g⁻¹X``,
    ``cap i j`` intersects two earlier members and ``empty`` is ∅.
    ``levels[i]`` is the discovery level, lowered through intersections so that
    ``level(X ∩ Y) <= max(level(X), level(Y))``.

    Args:
        amb (AmbientPair): The semigroup the ideals live in.
        ideals (list[ConstructibleIdeal]): Distinct members in discovery order.
        provenance (list[tuple[str, ...]]): Provenance word per member.
        levels (list[int]): Level per member.
        depth (int): Number of generating operations explored.
        truncated (bool): Whether a further operation would produce a new ideal.
        budget_exhausted (bool): Whether the ideal cap stopped the exploration.
        stabilized_at (Optional[int]): Level at which the closure stopped growing.
    """

    amb: AmbientPair
    ideals: list[ConstructibleIdeal]
    provenance: list[tuple[str, ...]]
    levels: list[int]
    depth: int
    truncated: bool
    budget_exhausted: bool = False
    stabilized_at: Optional[int] = None
    _index: dict[ConstructibleIdeal, int] = field(init=False, repr=False)
    _meets: dict[tuple[int, int], ConstructibleIdeal] = field(default_factory=dict, repr=False)
    _subsets: dict[tuple[int, int], bool] = field(default_factory=dict, repr=False)
    _ups: dict[tuple[ConstructibleIdeal, int], frozenset[int]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {ideal: i for i, ideal in enumerate(self.ideals)}

    def __len__(self) -> int:
        return len(self.ideals)

    def __contains__(self, ideal: ConstructibleIdeal) -> bool:
        return ideal in self._index

    @property
    def nonempty_count(self) -> int:
        return len(self.ideals) - 1

    @property
    def intersection_closed(self) -> bool:
        return not self.budget_exhausted

    def index_of(self, ideal: ConstructibleIdeal) -> Optional[int]:
        return self._index.get(ideal)

    def nonempty_indices(self) -> list[int]:
        return [i for i in range(len(self.ideals)) if i != EMPTY_INDEX]

    def indices_up_to_level(self, max_level: int) -> list[int]:
        return [i for i in self.nonempty_indices() if self.levels[i] <= max_level]

    def meet(self, i: int, j: int) -> ConstructibleIdeal:
        key = (min(i, j), max(i, j))
        if key not in self._meets:
            self._meets[key] = self.amb.model.intersect(self.ideals[i], self.ideals[j])
        return self._meets[key]

    def meet_index(self, i: int, j: int) -> Optional[int]:
        return self.index_of(self.meet(i, j))

    def disjoint(self, i: int, j: int) -> bool:
        return self.meet(i, j).is_empty

    def is_subset(self, i: int, j: int) -> bool:
        """Decide ``ideals[i] ⊆ ideals[j]``."""
        key = (i, j)
        if key not in self._subsets:
            self._subsets[key] = self.meet(i, j) == self.ideals[i]
        return self._subsets[key]

    def up_restricted(self, ideal: ConstructibleIdeal, max_level: Optional[int] = None) -> frozenset[int]:
        """Indices of the nonempty members containing ``ideal``, optionally only up to a level."""
        cutoff = self.depth if max_level is None else max_level
        key = (ideal, cutoff)
        if key not in self._ups:
            model = self.amb.model
            self._ups[key] = frozenset(
                i for i in self.indices_up_to_level(cutoff) if model.is_subset(ideal, self.ideals[i])
            )
        return self._ups[key]

    def format(self, i: int) -> str:
        return self.amb.model.format_ideal(self.ideals[i])

    def formatted(self, indices: Optional[Iterable[int]] = None) -> list[str]:
        chosen = range(len(self.ideals)) if indices is None else sorted(indices)
        return [self.format(i) for i in chosen]


def closure_to_depth(amb: AmbientPair, depth: int, max_ideals: int = MAX_IDEALS) -> IdealFamily:
    """Breadth-first closure of ``{P, ∅}`` under ``pX`` and ``p⁻¹X`` by generators, then ∩-saturation.

    Args:
        amb (AmbientPair): The semigroup.
        depth (int): Maximal number of generating operations applied to P.
        max_ideals (int): Cap on the family size; when hit, the partial family is returned.

    Returns:
        IdealFamily: The family with provenance, levels and truncation flags.
    """
    if depth < 0:
        raise ConfigError("depth must be nonnegative", "depth")
    builder = _Builder(amb, max_ideals)
    stabilized_at = builder.explore(depth)
    if not builder.exhausted:
        builder.saturate()
    truncated = builder.exhausted or builder.escapes()
    if truncated:
        stabilized_at = None
    if builder.exhausted:
        logger.warning("ideal budget of %d reached at depth %d", max_ideals, depth)
    logger.debug(
        "closure of %s to depth %d: %d ideals, truncated=%s",
        amb.family_id,
        depth,
        len(builder.ideals),
        truncated,
    )
    return IdealFamily(
        amb=amb,
        ideals=builder.ideals,
        provenance=builder.provenance,
        levels=builder.levels,
        depth=depth,
        truncated=truncated,
        budget_exhausted=builder.exhausted,
        stabilized_at=stabilized_at,
        _meets=builder.meets,
    )


def replay_provenance(
    amb: AmbientPair, steps: Sequence[str], earlier: Sequence[ConstructibleIdeal]
) -> ConstructibleIdeal:
    """Rebuild an ideal from its provenance word.

    Args:
        amb (AmbientPair): The semigroup.
        steps (Sequence[str]): Provenance word, applied to P from left to right.
        earlier (Sequence[ConstructibleIdeal]): Members referenced by ``cap i j`` steps.
    """
    ideal = amb.model.full()
    for step in steps:
        op, _, argument = step.partition(" ")
        if op == EMPTY:
            ideal = EmptyIdeal()
        elif op == CAP:
            i, j = (int(part) for part in argument.split())
            ideal = amb.model.intersect(earlier[i], earlier[j])
        elif op in (MUL, PRE):
            g = amb.parse(argument)
            ideal = left_multiply(amb, g, ideal) if op == MUL else left_preimage(amb, g, ideal)
        else:
            raise ConfigError(f"Unknown provenance step {step!r}", "provenance")
    return ideal


class _Builder:
    def __init__(self, amb: AmbientPair, max_ideals: int):
        self.amb = amb
        self.max_ideals = max_ideals
        self.ideals: list[ConstructibleIdeal] = [amb.model.full(), EmptyIdeal()]
        self.provenance: list[tuple[str, ...]] = [(), (EMPTY,)]
        self.levels: list[int] = [0, 0]
        self.index = {ideal: i for i, ideal in enumerate(self.ideals)}
        self.meets: dict[tuple[int, int], ConstructibleIdeal] = {}
        self.exhausted = False
        self.letters = [g for g in amb.generators if not is_identity(g)]

    def add(self, ideal: ConstructibleIdeal, provenance: tuple[str, ...], level: int) -> Optional[int]:
        if ideal in self.index:
            return None
        if len(self.ideals) >= self.max_ideals:
            self.exhausted = True
            return None
        self.index[ideal] = len(self.ideals)
        self.ideals.append(ideal)
        self.provenance.append(provenance)
        self.levels.append(level)
        return self.index[ideal]

    def successors(self, i: int):
        for g in self.letters:
            label = format_element(g)
            yield f"{MUL} {label}", left_multiply(self.amb, g, self.ideals[i])
            yield f"{PRE} {label}", left_preimage(self.amb, g, self.ideals[i])

    def explore(self, depth: int) -> int:
        frontier = [0]
        for level in range(1, depth + 1):
            next_frontier = []
            for i in frontier:
                for step, ideal in self.successors(i):
                    added = self.add(ideal, self.provenance[i] + (step,), level)
                    if added is not None:
                        next_frontier.append(added)
                    if self.exhausted:
                        return level
            logger.debug("level %d: %d new ideals", level, len(next_frontier))
            if not next_frontier:
                return level - 1
            frontier = next_frontier
        return depth

    def saturate(self) -> None:
        start = 0
        rounds = 0
        while start < len(self.ideals):
            end = len(self.ideals)
            rounds += 1
            for j in range(start, end):
                for i in range(j):
                    meet = self._meet(i, j)
                    level = max(self.levels[i], self.levels[j])
                    added = self.add(meet, (f"{CAP} {i} {j}",), level)
                    if self.exhausted:
                        return
                    if added is None:
                        k = self.index[meet]
                        self.levels[k] = min(self.levels[k], level)
            start = end
        logger.debug("saturation closed after %d passes", rounds)
        self._settle_levels()

    def escapes(self) -> bool:
        return any(
            ideal not in self.index
            for i in range(len(self.ideals))
            for _, ideal in self.successors(i)
        )

    def _meet(self, i: int, j: int) -> ConstructibleIdeal:
        key = (i, j)
        if key not in self.meets:
            self.meets[key] = self.amb.model.intersect(self.ideals[i], self.ideals[j])
        return self.meets[key]

    def _settle_levels(self) -> None:
        changed = True
        while changed:
            changed = False
            for (i, j), meet in self.meets.items():
                k = self.index[meet]
                level = max(self.levels[i], self.levels[j])
                if level < self.levels[k]:
                    self.levels[k] = level
                    changed = True
