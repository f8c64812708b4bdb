from semilab.hull.enumeration import HullEnumeration, hull_enumerate
from semilab.hull.isometry import (
    ZERO,
    Letter,
    PartialIsometry,
    adjoint,
    apply,
    co_isometry,
    compose,
    format_isometry,
    format_word,
    from_word,
    g_map,
    idempotent,
    identity,
    is_idempotent,
    isometry,
    parse_word,
    range_projection,
    restrict,
    source_projection,
)


__all__ = [
    "HullEnumeration",
    "Letter",
    "PartialIsometry",
    "ZERO",
    "adjoint",
    "apply",
    "co_isometry",
    "compose",
    "format_isometry",
    "format_word",
    "from_word",
    "g_map",
    "hull_enumerate",
    "idempotent",
    "identity",
    "is_idempotent",
    "isometry",
    "parse_word",
    "range_projection",
    "restrict",
    "source_projection",
]
