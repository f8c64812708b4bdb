from typing import Optional

from pydantic import BaseModel, Field

from semilab.schemas.config_schema import SemigroupConfig
from semilab.schemas.report_schema import (
    ChecklistReport,
    ConditionReport,
    FamilySummary,
    G0Sample,
    GroupoidSummary,
    HullSummary,
    IndependenceReport,
    LocalBoundaryReport,
    SpectrumSummary,
    TopFreeEvidence,
)


class Dossier(BaseModel):
    schema_version: int = Field(description="Version of the Dossier schema")
    tool_version: str = Field(description="Version of semilab that produced the Dossier")
    family_id: str = Field(description="Catalog id or config name of the semigroup")
    semigroup: SemigroupConfig = Field(description="Definition the semigroup is rebuilt from on verify")
    description: str = Field(description="Human readable description of P ⊆ G")
    ambient: str = Field(description="The ambient group G")
    generators: list[str] = Field(description="Generators of P")
    exact: bool = Field(description="Whether ideals are decided exactly rather than on a window")
    depth: int = Field(description="Depth of the ideal closure")
    bound: int = Field(description="Length bound of the probes")
    seed: int = Field(description="Seed of the sampling")
    margin: int = Field(description="Depth margin of the action")
    hull_depth: int = Field(description="Word length of the hull")
    toeplitz_budget: int = Field(description="Letter pairs per decomposition")
    family: FamilySummary = Field(description="The stored ideal family")
    independence: IndependenceReport = Field(description="Independence of the family")
    conditions: list[ConditionReport] = Field(description="Toeplitz, quasi-lattice, Ore and reversibility reports")
    hull: HullSummary = Field(description="The enumerated left inverse hull")
    spectrum: SpectrumSummary = Field(description="Filters, relative ultrafilters and the boundary")
    groupoid: GroupoidSummary = Field(description="Checks of the groupoid identification")
    g0_samples: list[G0Sample] = Field(description="Probed elements of the group ball")
    top_free: list[TopFreeEvidence] = Field(description="Topological freeness evidence over G_0 samples")
    local_boundary: LocalBoundaryReport = Field(description="Strict compression of the whole boundary")
    checklist: ChecklistReport = Field(description="Kirchberg checklist")
    notes: list[str] = Field(default_factory=list, description="Catalog notes on truncation and the boundary")
    wall_clock: Optional[float] = Field(default=None, description="Seconds spent, only with --timing")
