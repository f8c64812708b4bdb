from semilab.schemas.catalog_schema import CatalogMetadata
from semilab.schemas.config_schema import AnalysisConfig, MetadataConfig, SemigroupConfig
from semilab.schemas.dossier_schema import Dossier
from semilab.schemas.report_schema import (
    ChecklistItem,
    ChecklistReport,
    ConditionReport,
    FamilySummary,
    G0Sample,
    GroupoidSummary,
    HullSummary,
    IndependenceReport,
    LocalBoundaryReport,
    SpectrumSummary,
    ToeplitzCertificate,
    TopFreeEvidence,
)


__all__ = [
    "AnalysisConfig",
    "CatalogMetadata",
    "ChecklistItem",
    "ChecklistReport",
    "ConditionReport",
    "Dossier",
    "FamilySummary",
    "G0Sample",
    "GroupoidSummary",
    "HullSummary",
    "IndependenceReport",
    "LocalBoundaryReport",
    "MetadataConfig",
    "SemigroupConfig",
    "SpectrumSummary",
    "ToeplitzCertificate",
    "TopFreeEvidence",
]
