from semilab.groupoid.arrows import (
    GroupoidArrow,
    IdentificationCheck,
    TransformationArrow,
    arrow_equiv,
    arrow_range,
    canonical,
    check_identification,
    compose_arrows,
    compose_transformation,
    enumerate_arrows,
    invert_arrow,
    phi_map,
    s_dot_chi,
    unit_arrow,
)
from semilab.groupoid.characters import CharacterTable, ExtendedCharacter, evaluate
from semilab.groupoid.checklist import kirchberg_checklist
from semilab.groupoid.dynamics import (
    G0Result,
    LocalBoundaryResult,
    TopFreeResult,
    g0_probe,
    g0_sample,
    local_boundary_witness,
    replays_local_boundary,
    top_free_probe,
)


__all__ = [
    "CharacterTable",
    "ExtendedCharacter",
    "G0Result",
    "GroupoidArrow",
    "IdentificationCheck",
    "LocalBoundaryResult",
    "TopFreeResult",
    "TransformationArrow",
    "arrow_equiv",
    "arrow_range",
    "canonical",
    "check_identification",
    "compose_arrows",
    "compose_transformation",
    "enumerate_arrows",
    "evaluate",
    "g0_probe",
    "g0_sample",
    "invert_arrow",
    "kirchberg_checklist",
    "local_boundary_witness",
    "phi_map",
    "replays_local_boundary",
    "s_dot_chi",
    "top_free_probe",
    "unit_arrow",
]
