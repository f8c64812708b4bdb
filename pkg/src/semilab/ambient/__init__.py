from semilab.ambient.elements import GroupElement, invert, is_identity, multiply
from semilab.ambient.groups import AmbientGroup
from semilab.ambient.parsing import format_element, parse_element
from semilab.ambient.pair import AmbientPair, is_in_p


__all__ = [
    "AmbientGroup",
    "AmbientPair",
    "GroupElement",
    "format_element",
    "invert",
    "is_identity",
    "is_in_p",
    "multiply",
    "parse_element",
]
