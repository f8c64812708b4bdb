from semilab.catalog.analyze import Analyze
from semilab.catalog.catalog import build_pair, list_catalog, load_config, resolve_family
from semilab.catalog.verify import VerificationReport, Verify, WitnessCheck, load_dossier, verify_dossier


__all__ = [
    "Analyze",
    "VerificationReport",
    "Verify",
    "WitnessCheck",
    "build_pair",
    "list_catalog",
    "load_config",
    "load_dossier",
    "resolve_family",
    "verify_dossier",
]
