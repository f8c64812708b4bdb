from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from semilab.ambient.elements import GroupElement, invert, is_identity, multiply
from semilab.conditions.probes import find_disjoint_pair
from semilab.config import DEFAULT_BOUND, DEFAULT_MARGIN
from semilab.errors import EmptyOpenSetError, UsageError
from semilab.ideals.closure import EMPTY_INDEX, IdealFamily
from semilab.ideals.ideal import ConstructibleIdeal
from semilab.spectrum.filters import BasicOpen, Filter, is_relative_ultrafilter

logger = logging.getLogger(__name__)

IN_G0 = "InG0ToBudget"
NOT_IN_G0 = "NotInG0"
MOVED = "MovedWitness"
FIXED = "FixedEverywhereSampled"
WITNESS = "Witness"
NOT_APPLICABLE = "NotApplicableReversible"


@dataclass(frozen=True)
class G0Result:
    g: GroupElement
    verdict: str
    translate: Optional[GroupElement] = None
    witness: Optional[int] = None


@dataclass(frozen=True)
class TopFreeResult:
    g: GroupElement
    verdict: str
    filter: Optional[Filter] = None
    shift: Optional[GroupElement] = None
    base: Optional[int] = None


@dataclass(frozen=True)
class LocalBoundaryResult:
    verdict: str
    x: Optional[GroupElement] = None
    p: Optional[GroupElement] = None
    q: Optional[GroupElement] = None
    g_prime: Optional[GroupElement] = None
    delta: Optional[ConstructibleIdeal] = None


def g0_probe(family: IdealFamily, g: GroupElement) -> G0Result:
    """Check that ``g·P`` and ``g⁻¹·P`` meet every nonempty stored ideal."""
    model = family.amb.model
    for translate in (g, invert(g)):
        shifted = model.cap_translate(translate, model.full())
        for i in family.nonempty_indices():
            if model.intersect(shifted, family.ideals[i]).is_empty:
                return G0Result(g, NOT_IN_G0, translate, i)
    return G0Result(g, IN_G0)


def g0_sample(family: IdealFamily, radius: int = DEFAULT_BOUND) -> list[GroupElement]:
    """Nontrivial elements of the group ball certified ``InG0ToBudget``."""
    return [
        g
        for g in family.amb.group_ball(radius)
        if not is_identity(g) and g0_probe(family, g).verdict == IN_G0
    ]


def top_free_probe(
    family: IdealFamily,
    g: GroupElement,
    boundary: Sequence[Filter],
    radius: int = DEFAULT_BOUND,
    margin: int = DEFAULT_MARGIN,
) -> TopFreeResult:
    """Look for a boundary character moved by ``g``.

    ``χ`` and ``χ·g`` are compared on ``k·X`` only where both ``P ∩ k·X`` and
    ``P ∩ gk·X`` are stored members of level at most ``depth - margin``.

    Raises:
        UsageError: If ``g`` is the identity.
    """
    if is_identity(g):
        raise UsageError("the identity fixes every character")
    amb = family.amb
    model = amb.model
    allowed = set(family.indices_up_to_level(family.depth - margin)) | {EMPTY_INDEX}
    comparable = []
    for k in amb.group_ball(radius):
        gk = multiply(g, k)
        for i in family.nonempty_indices():
            left = family.index_of(model.cap_translate(k, family.ideals[i]))
            right = family.index_of(model.cap_translate(gk, family.ideals[i]))
            if left in allowed and right in allowed and left != right:
                comparable.append((k, i, left, right))
    for f in boundary:
        for k, i, left, right in comparable:
            if (left in f.members) != (right in f.members):
                return TopFreeResult(g, MOVED, f, k, i)
    return TopFreeResult(g, FIXED)


def local_boundary_witness(
    family: IdealFamily, open_set: BasicOpen, boundary: Sequence[Filter], bound: int = DEFAULT_BOUND
) -> LocalBoundaryResult:
    """Find ``g'`` compressing the cylinder of ``xP`` strictly into itself inside ``open_set``.

    Raises:
        EmptyOpenSetError: If no relative ultrafilter lies in ``open_set``.
    """
    amb = family.amb
    model = amb.model
    inside = [f for f in boundary if open_set.contains(f) and is_relative_ultrafilter(family, f)]
    if not inside:
        raise EmptyOpenSetError("the basic open set misses the boundary")
    chi = inside[0]
    tilde = family.ideals[open_set.required]
    for excluded in open_set.excluded:
        separating = next(j for j in sorted(chi.members) if family.disjoint(excluded, j))
        tilde = model.intersect(tilde, family.ideals[separating])
    x = model.point_of(tilde)
    pair = find_disjoint_pair(amb, bound)
    if pair is None:
        return LocalBoundaryResult(NOT_APPLICABLE)
    p, q = pair
    g_prime = multiply(multiply(x, invert(p)), invert(x))
    logger.debug("local boundary witness x=%s g'=%s", amb.format(x), amb.format(g_prime))
    return LocalBoundaryResult(WITNESS, x, p, q, g_prime, model.principal(x))


def replays_local_boundary(
    family: IdealFamily, x: GroupElement, p: GroupElement, q: GroupElement, g_prime: GroupElement
) -> bool:
    """Replay a strict compression: ``g'⁻¹·xP = xpP ⊊ xP`` with ``xqP ⊆ xP`` disjoint from ``xpP``."""
    amb = family.amb
    model = amb.model
    if not all(amb.is_in_p(element) for element in (x, p, q)):
        return False
    if g_prime != multiply(multiply(x, invert(p)), invert(x)):
        return False
    delta = model.principal(x)
    compressed = model.cap_translate(invert(g_prime), delta)
    xp, xq = model.principal(multiply(x, p)), model.principal(multiply(x, q))
    return (
        compressed == xp
        and model.is_subset(xp, delta)
        and xp != delta
        and model.is_subset(xq, delta)
        and model.intersect(xp, xq).is_empty
    )
