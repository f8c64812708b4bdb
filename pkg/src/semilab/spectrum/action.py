from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from semilab.ambient.elements import GroupElement, is_identity
from semilab.config import DEFAULT_MARGIN
from semilab.errors import MarginError, NotInSemigroupError, UndefinedOutsideRangeError, UsageError
from semilab.ideals.calculus import left_multiply, left_preimage
from semilab.ideals.closure import IdealFamily
from semilab.spectrum.filters import Filter, holds, is_relative_ultrafilter, up_filter

HOLDS = "Holds"
FAILS = "Fails"
UNKNOWN_TRUNCATED = "UnknownTruncated"


@dataclass(frozen=True)
class InvarianceResult:
    verdict: str
    generator: Optional[GroupElement] = None
    filter: Optional[Filter] = None
    direction: Optional[str] = None


def act_forward(family: IdealFamily, p: GroupElement, f: Filter) -> Filter:
    """``pF = {X : p⁻¹X ∈ F}``, read on the stored family.

    Membership of a stored ``X`` is decided by looking its preimage up in ``F``,
    so ``p·min F`` itself may lie past the depth.

    Raises:
        NotInSemigroupError: If ``p`` is not a member of P.
        MarginError: If the preimage of a stored ideal is not stored.
    """
    amb = family.amb
    members = set()
    for index in family.nonempty_indices():
        preimage = left_preimage(amb, p, family.ideals[index])
        position = family.index_of(preimage)
        if position is None:
            raise MarginError(
                f"forward action of {amb.format(p)} needs {amb.model.format_ideal(preimage)}, "
                "outside the stored family"
            )
        if position in f.members:
            members.add(index)
    return Filter(frozenset(members), left_multiply(amb, p, f.base))


def act_backward(family: IdealFamily, p: GroupElement, f: Filter) -> Filter:
    """The unique ``F'`` with ``pF' = F``, defined when ``pP ∈ F``.

    Raises:
        NotInSemigroupError: If ``p`` is not a member of P.
        UndefinedOutsideRangeError: If ``pP`` is not in ``F``.
    """
    amb = family.amb
    if not amb.is_in_p(p):
        raise NotInSemigroupError(amb.format(p))
    if not holds(family, f, amb.model.principal(p)):
        raise UndefinedOutsideRangeError(f"{amb.format(p)}·P is not a member of the filter")
    return up_filter(family, left_preimage(amb, p, f.base))


def invariant_subset_check(
    family: IdealFamily, subset: Iterable[Filter], margin: int = DEFAULT_MARGIN
) -> InvarianceResult:
    """Check ``pC ⊆ C`` and ``p⁻¹(C ∩ pΣ) ⊆ C`` for every generator ``p``.

    Images are compared after restriction to the members of level at most
    ``depth - margin``, so filters near the truncation edge do not fail spuriously.
    """
    cutoff = family.depth - margin
    chosen = list(subset)
    if cutoff < 1:
        return InvarianceResult(UNKNOWN_TRUNCATED)
    amb = family.amb
    shadows = {family.up_restricted(f.base, cutoff) for f in chosen}
    for f in chosen:
        for p in amb.generators:
            if is_identity(p):
                continue
            forward = left_multiply(amb, p, f.base)
            if family.up_restricted(forward, cutoff) not in shadows:
                return InvarianceResult(FAILS, p, f, "forward")
            if holds(family, f, amb.model.principal(p)):
                backward = left_preimage(amb, p, f.base)
                if family.up_restricted(backward, cutoff) not in shadows:
                    return InvarianceResult(FAILS, p, f, "backward")
    return InvarianceResult(HOLDS)


def reach_from(family: IdealFamily, f: Filter, target: Filter) -> tuple[GroupElement, Filter]:
    """Move any filter onto a relative ultrafilter.

    With ``x`` a point of ``min U``, ``x·F`` restricted to the family is ``U``.

    Returns:
        tuple[GroupElement, Filter]: The point ``x`` and the filter reached.
    """
    if not is_relative_ultrafilter(family, target):
        raise UsageError("the target must be a relative ultrafilter")
    amb = family.amb
    x = amb.model.point_of(target.base)
    image = amb.model.cap_translate(x, f.base)
    return x, up_filter(family, image)
