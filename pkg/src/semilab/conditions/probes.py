from __future__ import annotations

import itertools
import logging
from typing import TYPE_CHECKING, Optional

from semilab.ambient.elements import GroupElement, invert, is_identity, multiply
from semilab.ambient.parsing import format_element
from semilab.config import DEFAULT_BOUND, Condition
from semilab.schemas.report_schema import ConditionReport

if TYPE_CHECKING:
    from semilab.ambient.pair import AmbientPair

logger = logging.getLogger(__name__)


def quasi_lattice_probe(amb: AmbientPair, bound: int = DEFAULT_BOUND) -> ConditionReport:
    """Check the quasi-lattice axioms on balls of radius ``bound``.

    QL0: no nontrivial unit. QL2: ``pP ∩ qP`` is empty or principal.
    QL1: ``P ∩ g·P`` is empty or principal.
    """
    model = amb.model
    report = _report(Condition.QUASI_LATTICE, bound)
    members = [p for p in amb.semigroup_ball(bound) if not is_identity(p)]

    for p in members:
        report.checked += 1
        if amb.is_in_p(invert(p)):
            return _fails(report, "QL0", unit=format_element(p))

    for p, q in itertools.combinations(members, 2):
        report.checked += 1
        meet = model.intersect(model.principal(p), model.principal(q))
        if not meet.is_empty and model.principal_generator(meet) is None:
            return _fails(
                report, "QL2", p=format_element(p), q=format_element(q), intersection=model.format_ideal(meet)
            )

    for g in amb.group_ball(bound):
        report.checked += 1
        meet = model.cap_translate(g, model.full())
        if not meet.is_empty and model.principal_generator(meet) is None:
            return _fails(report, "QL1", g=format_element(g), intersection=model.format_ideal(meet))
    return _holds(amb, report)


def ore_probe(amb: AmbientPair, bound: int = DEFAULT_BOUND) -> ConditionReport:
    """Search ``g = p⁻¹q`` for every ``|g| <= bound`` with ``p`` in the P-ball of the same radius.

    An element left without a quotient is a failure only when the family is
    recorded as not left Ore. The witness then writes ``g = p·q⁻¹``, which
    needs a common left multiple of ``p`` and ``q``.
    """
    report = _report(Condition.ORE, bound)
    members = amb.semigroup_ball(bound)
    for g in amb.group_ball(bound):
        report.checked += 1
        if _left_quotient(amb, g, members) is not None:
            continue
        if amb.metadata.left_ore is False and amb.exact:
            witness = {"g": format_element(g)}
            right = _right_quotient(amb, g, members)
            if right is not None:
                witness.update(p=format_element(right[0]), q=format_element(right[1]))
            return _fails(report, None, **witness)
        logger.warning("no left quotient of %s within the P-ball of radius %d", format_element(g), bound)
        report.sub_condition = format_element(g)
        return report
    return _holds(amb, report)


def is_ore_witness(amb: AmbientPair, g: GroupElement, bound: int) -> bool:
    """Whether no ``p`` of the P-ball of radius ``bound`` puts ``p·g`` into P."""
    return _left_quotient(amb, g, amb.semigroup_ball(bound)) is None


def find_disjoint_pair(amb: AmbientPair, bound: int = DEFAULT_BOUND) -> Optional[tuple[GroupElement, GroupElement]]:
    """First pair ``(p, q)`` of the P-ball with ``pP ∩ qP = ∅``, or None."""
    model = amb.model
    members = [p for p in amb.semigroup_ball(bound) if not is_identity(p)]
    for p, q in itertools.combinations(members, 2):
        if model.intersect(model.principal(p), model.principal(q)).is_empty:
            return p, q
    return None


def reversibility_probe(amb: AmbientPair, bound: int = DEFAULT_BOUND) -> ConditionReport:
    report = _report(Condition.REVERSIBLE, bound)
    pair = find_disjoint_pair(amb, bound)
    size = len(amb.semigroup_ball(bound)) - 1
    report.checked = size * (size - 1) // 2
    if pair is not None:
        p, q = pair
        return _fails(report, None, p=format_element(p), q=format_element(q))
    return _holds(amb, report)


def ore_and_reversibility_probe(
    amb: AmbientPair, bound: int = DEFAULT_BOUND
) -> tuple[ConditionReport, ConditionReport]:
    return ore_probe(amb, bound), reversibility_probe(amb, bound)


def is_disjoint_pair(amb: AmbientPair, p: GroupElement, q: GroupElement) -> bool:
    model = amb.model
    return amb.is_in_p(p) and amb.is_in_p(q) and model.intersect(model.principal(p), model.principal(q)).is_empty


# Helper functions
def _left_quotient(
    amb: AmbientPair, g: GroupElement, members: list[GroupElement]
) -> Optional[tuple[GroupElement, GroupElement]]:
    for p in members:
        q = multiply(p, g)
        if amb.is_in_p(q):
            return p, q
    return None


def _right_quotient(
    amb: AmbientPair, g: GroupElement, members: list[GroupElement]
) -> Optional[tuple[GroupElement, GroupElement]]:
    for q in members:
        p = multiply(g, q)
        if amb.is_in_p(p):
            return p, q
    return None


def _report(condition: Condition, bound: int) -> ConditionReport:
    return ConditionReport(condition=condition.value, status="HoldsToBudget", budget=bound)


def _fails(report: ConditionReport, sub_condition: Optional[str], **witness: str) -> ConditionReport:
    report.status = "Fails"
    report.sub_condition = sub_condition
    report.witness = witness
    return report


def _holds(amb: AmbientPair, report: ConditionReport) -> ConditionReport:
    argument = amb.metadata.proven.get(report.condition)
    if argument is not None and amb.exact:
        report.status = "HoldsProven"
        report.argument = argument
    return report
