from __future__ import annotations

from typing import Optional, Sequence

from semilab.conditions.probes import reversibility_probe
from semilab.config import DEFAULT_BOUND, DEFAULT_MARGIN
from semilab.groupoid.dynamics import FIXED, MOVED, TopFreeResult, g0_sample, top_free_probe
from semilab.ideals.closure import IdealFamily
from semilab.schemas.report_schema import ChecklistItem, ChecklistReport, ConditionReport
from semilab.spectrum.filters import boundary_approx

REVERSIBLE_REASON = "one-point boundary fixed by G_0 ⊇ P"
FREENESS = "G_0 acts topologically freely"


def kirchberg_checklist(
    family: IdealFamily,
    bound: int = DEFAULT_BOUND,
    reversibility: Optional[ConditionReport] = None,
    evidence: Optional[Sequence[TopFreeResult]] = None,
    margin: int = DEFAULT_MARGIN,
) -> ChecklistReport:
    """Aggregate the combinatorial inputs for the boundary quotient to be a UCT Kirchberg algebra.

    Inputs: P nontrivial, amenability (catalog metadata, reported as ASSUMED),
    P not left reversible, and topological freeness of G_0 on the boundary.
    Freeness is only resolved by a catalog argument; probe evidence is recorded.
    """
    amb = family.amb
    metadata = amb.metadata
    if reversibility is None:
        reversibility = reversibility_probe(amb, bound)
    if evidence is None:
        boundary = boundary_approx(family)
        evidence = [top_free_probe(family, g, boundary, bound, margin) for g in g0_sample(family, bound)]

    items = [
        ChecklistItem(
            name="nontrivial",
            status="Fails" if amb.is_trivial else "Passes",
            detail="P = {e}" if amb.is_trivial else "P has a nontrivial generator",
        ),
        _amenability_item(metadata.amenable, metadata.amenability_citation),
        _reversibility_item(reversibility),
        _freeness_item(metadata.topologically_free, metadata.topological_freeness_citation, evidence),
    ]
    # Freeness failures lead the reasons.
    ranked = sorted(items, key=lambda item: item.name != FREENESS)
    failing = [f"{item.name}: {item.detail}" for item in ranked if item.status == "Fails"]
    open_items = [f"{item.name}: {item.detail}" for item in ranked if item.status == "Inconclusive"]
    if failing:
        verdict, reasons = "ChecklistFails", failing
    elif open_items:
        verdict, reasons = "Inconclusive", open_items
    else:
        verdict, reasons = "ChecklistPasses", []
    return ChecklistReport(
        verdict=verdict, reasons=reasons, items=items, boundary_quotient=metadata.boundary_note
    )


def _amenability_item(amenable: Optional[bool], citation: Optional[str]) -> ChecklistItem:
    if amenable is None:
        return ChecklistItem(name="amenability", status="Inconclusive", detail="no catalog record")
    if not amenable:
        return ChecklistItem(
            name="amenability", status="Fails", detail="catalog records a non-amenable action", citation=citation
        )
    return ChecklistItem(name="amenability", status="ASSUMED", detail="catalog metadata", citation=citation)


def _reversibility_item(report: ConditionReport) -> ChecklistItem:
    if report.status == "Fails":
        p, q = report.witness["p"], report.witness["q"]
        return ChecklistItem(
            name="not left reversible", status="Passes", detail=f"{p}·P ∩ {q}·P = ∅"
        )
    return ChecklistItem(name="not left reversible", status="Fails", detail=REVERSIBLE_REASON)


def _freeness_item(
    resolution: Optional[bool], citation: Optional[str], evidence: Sequence[TopFreeResult]
) -> ChecklistItem:
    moved = sum(result.verdict == MOVED for result in evidence)
    fixed = sum(result.verdict == FIXED for result in evidence)
    detail = f"{moved} sampled elements of G_0 move a boundary character, {fixed} fix all sampled ones"
    if resolution is None:
        if fixed:
            detail += "; no counterexample to fixed points found"
        return ChecklistItem(name=FREENESS, status="Inconclusive", detail=detail)
    return ChecklistItem(
        name=FREENESS, status="Passes" if resolution else "Fails", detail=detail, citation=citation
    )
