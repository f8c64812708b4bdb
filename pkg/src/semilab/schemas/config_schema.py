from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from semilab.config import (
    DEFAULT_BOUND,
    DEFAULT_DEPTH,
    DEFAULT_HULL_DEPTH,
    DEFAULT_MARGIN,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOEPLITZ_BUDGET,
)


class MetadataConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    amenable: Optional[bool] = Field(default=None, description="Amenability of the relevant action")
    amenability_citation: Optional[str] = Field(default=None, description="Reference for the amenability flag")
    left_ore: Optional[bool] = Field(default=None, description="Whether G = P⁻¹P is known")
    proven: dict[str, str] = Field(default_factory=dict, description="Condition id -> argument id")
    topologically_free: Optional[bool] = Field(default=None, description="Known freeness resolution")
    topological_freeness_citation: Optional[str] = Field(default=None, description="Argument for the resolution")


class SemigroupConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = Field(default=None, description="Name used as the family id of an inline definition")
    family: Optional[str] = Field(default=None, description="Catalog id, e.g. 'numerical:2,3'")
    ambient: Optional[Literal["free_group", "lattice", "integers", "affine_rationals"]] = Field(
        default=None, description="Ambient group of an inline definition"
    )
    rank: Optional[int] = Field(default=None, ge=1, description="Number of free generators of the free group")
    dimension: Optional[int] = Field(default=None, ge=0, description="Dimension of the lattice")
    generators: list[str] = Field(default_factory=list, description="Generators of P as element literals")
    metadata: MetadataConfig = Field(default_factory=MetadataConfig, description="Catalog metadata")

    @model_validator(mode="after")
    def _one_source(self):
        if (self.family is None) == (self.ambient is None):
            raise ValueError("exactly one of 'family' and 'ambient' must be given")
        if self.ambient == "free_group" and self.rank is None:
            raise ValueError("'rank' is required for a free_group ambient")
        if self.ambient == "lattice" and self.dimension is None:
            raise ValueError("'dimension' is required for a lattice ambient")
        if self.ambient is not None and not self.generators:
            raise ValueError("'generators' must list at least one element")
        return self


class AnalysisConfig(BaseModel):
    depth: int = Field(default=DEFAULT_DEPTH, ge=1, description="Depth of the ideal closure")
    bound: int = Field(default=DEFAULT_BOUND, ge=1, description="Length bound of the probes")
    seed: int = Field(default=DEFAULT_SEED, description="Seed of the sampling")
    margin: int = Field(default=DEFAULT_MARGIN, ge=0, description="Depth margin of the action")
    hull_depth: int = Field(default=DEFAULT_HULL_DEPTH, ge=0, description="Word length of the hull")
    toeplitz_budget: int = Field(default=DEFAULT_TOEPLITZ_BUDGET, ge=1, description="Letter pairs per decomposition")
    samples: int = Field(default=DEFAULT_SAMPLES, ge=0, description="Number of G_0 samples fed to the freeness probe")
    timing: bool = Field(default=False, description="Record wall-clock seconds")
    progress: bool = Field(default=False, description="Show a progress bar")
