from semilab.ideals.calculus import (
    cap_translate,
    contains,
    format_ideal,
    intersect,
    is_subset,
    left_multiply,
    left_preimage,
    parse_ideal,
)
from semilab.ideals.closure import IdealFamily, closure_to_depth, replay_provenance
from semilab.ideals.ideal import ConstructibleIdeal, EmptyIdeal
from semilab.ideals.independence import (
    Atom,
    IndependenceResult,
    format_atom,
    independence_check,
    is_union_witness,
    join_expansion,
    orthogonal_atoms,
)
from semilab.ideals.translated import TranslatedIdeal, translated, translated_family


__all__ = [
    "Atom",
    "ConstructibleIdeal",
    "EmptyIdeal",
    "IdealFamily",
    "IndependenceResult",
    "TranslatedIdeal",
    "cap_translate",
    "closure_to_depth",
    "contains",
    "format_atom",
    "format_ideal",
    "independence_check",
    "intersect",
    "is_subset",
    "is_union_witness",
    "join_expansion",
    "left_multiply",
    "left_preimage",
    "orthogonal_atoms",
    "parse_ideal",
    "replay_provenance",
    "translated",
    "translated_family",
]
