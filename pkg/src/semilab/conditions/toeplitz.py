from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Sequence

from semilab.ambient.elements import GroupElement, invert, is_identity, multiply
from semilab.ambient.parsing import format_element
from semilab.conditions.compression import CompressionDescriptor, compression_descriptor
from semilab.config import DEFAULT_BOUND, DEFAULT_TOEPLITZ_BUDGET, MAX_DECOMPOSITION_CANDIDATES, Condition
from semilab.errors import ConfigError
from semilab.hull.isometry import Letter, format_word, from_word
from semilab.schemas.report_schema import ConditionReport, ToeplitzCertificate

if TYPE_CHECKING:
    from semilab.ambient.pair import AmbientPair

logger = logging.getLogger(__name__)

ZERO_CASE = "ZeroCase"
DECOMPOSITION = "Decomposition"
UNKNOWN_TO_BUDGET = "UnknownToBudget"

# Word lengths of g beyond this are not looked up in the group ball
_LENGTH_LOOKUP_CAP = 8


@dataclass(frozen=True)
class ToeplitzResult:
    kind: str
    letters: tuple[Letter, ...] = ()

    @property
    def shape(self) -> str:
        return letter_shape(self.letters)


def letter_shape(letters: Sequence[Letter]) -> str:
    """Pattern of a word with generic names, e.g. ``V_p V_q*`` or ``V_p* V_q``."""
    names = []
    for position, (_, starred) in enumerate(letters):
        name = "p" if position % 2 == 0 else "q"
        if len(letters) > 2:
            name += str(position // 2 + 1)
        names.append(f"V_{name}{'*' if starred else ''}")
    return " ".join(names)


def toeplitz_decompose(
    amb: AmbientPair, g: GroupElement, budget: int = DEFAULT_TOEPLITZ_BUDGET
) -> ToeplitzResult:
    """Write the compression of ``g`` as an alternating word in ``v[p]`` and ``v[q]*``.

    Iterative deepening over the number of letters, up to ``2 * budget``. All
    letters but the last come from the P-ball of radius ``|g|``, shortest
    first; the last one is solved from ``g``. Star-first words are tried first.

    Args:
        amb (AmbientPair): The semigroup.
        g (GroupElement): Element of G.
        budget (int): Maximal number of ``(p, q)`` letter pairs.
    """
    if budget < 1:
        raise ConfigError("budget must be at least 1", "budget")
    target = compression_descriptor(amb, g)
    if target.is_zero:
        return ToeplitzResult(ZERO_CASE)
    if is_identity(g):
        return ToeplitzResult(DECOMPOSITION)
    radius = max(amb.word_length(g, _LENGTH_LOOKUP_CAP) or budget, 1)
    candidates = [p for p in amb.semigroup_ball(radius) if not is_identity(p)]
    for count in range(1, 2 * budget + 1):
        if len(candidates) ** (count - 1) > MAX_DECOMPOSITION_CANDIDATES:
            logger.debug("decomposition search for %s stopped at %d letters", format_element(g), count)
            break
        for starred_first in (True, False):
            letters = _search(amb, target, candidates, count, starred_first)
            if letters is not None:
                return ToeplitzResult(DECOMPOSITION, letters)
    return ToeplitzResult(UNKNOWN_TO_BUDGET)


def replays_compression(amb: AmbientPair, g: GroupElement, letters: Sequence[Letter]) -> bool:
    """Check that a word multiplies out to exactly the compression of ``g``."""
    return from_word(amb, letters) == compression_descriptor(amb, g).as_isometry()


def toeplitz_probe(
    amb: AmbientPair, bound: int = DEFAULT_BOUND, budget: int = DEFAULT_TOEPLITZ_BUDGET
) -> ConditionReport:
    """Decompose the compression of every ``g`` with ``|g| <= bound``."""
    certificates = []
    unresolved: Optional[GroupElement] = None
    for g in amb.group_ball(bound):
        result = toeplitz_decompose(amb, g, budget)
        certificate = ToeplitzCertificate(g=format_element(g), result=result.kind)
        if result.kind == DECOMPOSITION:
            certificate.word = format_word(result.letters)
            certificate.shape = result.shape
            certificate.domain = amb.model.format_ideal(compression_descriptor(amb, g).domain)
        elif result.kind == UNKNOWN_TO_BUDGET and unresolved is None:
            unresolved = g
        certificates.append(certificate)
    report = ConditionReport(
        condition=Condition.TOEPLITZ.value,
        status="HoldsToBudget",
        budget=bound,
        checked=len(certificates),
        certificates=certificates,
    )
    if unresolved is not None:
        logger.warning("no decomposition of %s within budget %d", format_element(unresolved), budget)
        report.sub_condition = format_element(unresolved)
    elif Condition.TOEPLITZ.value in amb.metadata.proven and amb.exact:
        report.status = "HoldsProven"
        report.argument = amb.metadata.proven[Condition.TOEPLITZ.value]
    return report


# Helper functions
def _search(
    amb: AmbientPair,
    target: CompressionDescriptor,
    candidates: list[GroupElement],
    count: int,
    starred_first: bool,
) -> Optional[tuple[Letter, ...]]:
    stars = [starred_first if position % 2 == 0 else not starred_first for position in range(count)]
    expected = target.as_isometry()
    for prefix in itertools.product(candidates, repeat=count - 1):
        value = amb.identity
        for p, starred in zip(prefix, stars):
            value = multiply(value, invert(p) if starred else p)
        last = multiply(invert(value), target.g)
        if stars[-1]:
            last = invert(last)
        if is_identity(last) or not amb.is_in_p(last):
            continue
        letters = tuple(zip(prefix, stars[:-1])) + ((last, stars[-1]),)
        if from_word(amb, letters) == expected:
            return letters
    return None
