from typing import Optional

from pydantic import BaseModel, Field


class CatalogMetadata(BaseModel):
    description: str = Field(description="Human readable description of P ⊆ G")
    ambient: str = Field(description="The ambient group G")
    amenable: Optional[bool] = Field(
        default=None,
        description="Amenability of the relevant group action, never computed",
    )
    amenability_citation: Optional[str] = Field(
        default=None, description="Literature reference backing the amenability flag"
    )
    left_ore: Optional[bool] = Field(default=None, description="Whether G = P⁻¹P is known")
    proven: dict[str, str] = Field(
        default_factory=dict,
        description="Condition id -> family-level argument id for HoldsProven reports",
    )
    topologically_free: Optional[bool] = Field(
        default=None,
        description="Known resolution of topological freeness of G_0 on the boundary",
    )
    topological_freeness_citation: Optional[str] = Field(
        default=None, description="Argument backing the topological freeness resolution"
    )
    boundary_note: Optional[str] = Field(
        default=None, description="What the boundary and its quotient are known to be"
    )
    truncation_note: Optional[str] = Field(
        default=None, description="How an infinite generating set was truncated"
    )
