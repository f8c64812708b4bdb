from typing import Literal, Optional

from pydantic import BaseModel, Field

ConditionStatus = Literal["HoldsProven", "HoldsToBudget", "Fails", "ZeroCase"]
DecompositionKind = Literal["ZeroCase", "Decomposition", "UnknownToBudget"]


class ToeplitzCertificate(BaseModel):
    g: str = Field(description="The group element whose compression was decomposed")
    result: DecompositionKind = Field(description="Outcome of the decomposition search")
    word: Optional[str] = Field(default=None, description="Word in v[p] and v[p]* multiplying to the compression")
    shape: Optional[str] = Field(default=None, description="Letter pattern of the word, e.g. 'V_p V_q*'")
    domain: Optional[str] = Field(default=None, description="Domain P ∩ g⁻¹·P of the compression")


class ConditionReport(BaseModel):
    condition: str = Field(description="Condition id: toeplitz, ql, ore or reversible")
    status: ConditionStatus = Field(description="Outcome of the probe")
    argument: Optional[str] = Field(
        default=None, description="Family-level argument id backing HoldsProven"
    )
    sub_condition: Optional[str] = Field(
        default=None, description="Failing sub-condition (QL0, QL1, QL2) or unresolved element"
    )
    witness: dict[str, str] = Field(
        default_factory=dict, description="Replayable witness: element and ideal literals"
    )
    budget: int = Field(description="Length bound used by the search")
    checked: int = Field(default=0, description="Number of cases examined")
    certificates: list[ToeplitzCertificate] = Field(
        default_factory=list, description="Per-element Toeplitz certificates"
    )


class IndependenceReport(BaseModel):
    verdict: Literal["Independent", "Dependent", "UnknownTruncated"] = Field(
        description="Independence of the stored family"
    )
    ideal: Optional[str] = Field(default=None, description="Member equal to a union of proper members")
    union: list[str] = Field(default_factory=list, description="The proper members whose union it is")
    bounded: bool = Field(default=False, description="Whether the answer was read off a finite window")


class FamilySummary(BaseModel):
    depth: int = Field(description="Number of generating operations explored")
    nonempty_count: int = Field(description="Number of nonempty ideals")
    truncated: bool = Field(description="Whether a further operation produces a new ideal")
    budget_exhausted: bool = Field(description="Whether the ideal cap stopped the closure")
    stabilized_at: Optional[int] = Field(description="Level at which the closure stopped growing")
    ideals: list[str] = Field(description="Canonical ideal literals; index 0 is P and index 1 is ∅")
    provenance: list[list[str]] = Field(description="Provenance word per ideal, replayable from P")
    levels: list[int] = Field(description="Level per ideal")


class HullSummary(BaseModel):
    depth: int = Field(description="Maximal word length")
    size: int = Field(description="Number of distinct nonzero elements")
    truncated: bool = Field(description="Whether a cap cut the enumeration short")
    abstract_faithful: bool = Field(
        description="Whether the family is independent, so the concrete hull equals the abstract one"
    )
    elements: list[str] = Field(description="Elements as (domain, shift) pairs, Zero last")
    words: list[str] = Field(description="A shortest word per element, Zero last")


class SpectrumSummary(BaseModel):
    depth_label: str = Field(description="All counts are relative to the stored family")
    filter_count: int = Field(description="Number of filters over the family")
    ultrafilter_count: int = Field(description="Number of relative ultrafilters")
    boundary_size: int = Field(description="Number of filters in the approximated boundary")
    boundary: list[list[str]] = Field(description="Boundary filters as sorted member lists")
    invariance: Literal["Holds", "Fails", "UnknownTruncated"] = Field(
        description="Invariance of the approximated boundary under the generators, up to margin"
    )
    margin: int = Field(description="Depth margin used by the action")


class GroupoidSummary(BaseModel):
    depth: int = Field(description="Hull depth of the enumerated truncation")
    arrow_count: int = Field(description="Number of arrow classes in the truncation")
    phi_well_defined: bool = Field(description="Equivalent arrows have equal images")
    phi_injective: bool = Field(description="Inequivalent arrows have distinct images")
    phi_composable: bool = Field(description="Composability is preserved and reflected")
    character_identity: bool = Field(
        description="s.χ and (c*χ)g(s)⁻¹ agree on every test ideal"
    )


class G0Sample(BaseModel):
    g: str = Field(description="Sampled group element")
    verdict: Literal["InG0ToBudget", "NotInG0"] = Field(description="Outcome of the G_0 probe")
    translate: Optional[str] = Field(default=None, description="g or g⁻¹, whichever misses the witness")
    witness: Optional[str] = Field(default=None, description="Nonempty ideal missed by the translate of P")


class TopFreeEvidence(BaseModel):
    g: str = Field(description="Probed element of G_0")
    verdict: Literal["MovedWitness", "FixedEverywhereSampled"] = Field(description="Outcome of the probe")
    filter: list[str] = Field(default_factory=list, description="Boundary filter of the moved character")
    shift: Optional[str] = Field(default=None, description="Shift k of the separating ideal k·X")
    base: Optional[str] = Field(default=None, description="Base X of the separating ideal k·X")


class LocalBoundaryReport(BaseModel):
    verdict: Literal["Witness", "NotApplicableReversible"] = Field(description="Outcome of the construction")
    x: Optional[str] = Field(default=None, description="Point x of the open set")
    p: Optional[str] = Field(default=None, description="First element of the disjoint pair")
    q: Optional[str] = Field(default=None, description="Second element of the disjoint pair")
    g_prime: Optional[str] = Field(default=None, description="Compressing element x p⁻¹ x⁻¹")
    delta: Optional[str] = Field(default=None, description="The ideal xP cut out by the witness")


class ChecklistItem(BaseModel):
    name: str = Field(description="Checklist input")
    status: Literal["Passes", "Fails", "ASSUMED", "Inconclusive"] = Field(description="Item status")
    detail: str = Field(description="How the status was obtained")
    citation: Optional[str] = Field(default=None, description="Literature or argument backing the item")


class ChecklistReport(BaseModel):
    verdict: Literal["ChecklistPasses", "ChecklistFails", "Inconclusive"] = Field(
        description="Aggregated verdict"
    )
    reasons: list[str] = Field(default_factory=list, description="Failing or inconclusive items")
    items: list[ChecklistItem] = Field(description="The individual inputs")
    boundary_quotient: Optional[str] = Field(
        default=None, description="Known identification of the boundary quotient"
    )
