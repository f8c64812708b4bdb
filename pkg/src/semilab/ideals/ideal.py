from dataclasses import dataclass, field
from typing import Any

from semilab.ambient.elements import GroupElement


@dataclass(frozen=True)
class ConstructibleIdeal:
    """Canonical representation of a constructible right ideal of P.

    Two values compare equal iff they denote the same subset of P (exactly for
    the canonical variants, on a finite window for ``BoundedIdeal``).
    """

    @property
    def is_empty(self) -> bool:
        return False

    def sort_key(self) -> tuple:
        raise NotImplementedError


@dataclass(frozen=True)
class EmptyIdeal(ConstructibleIdeal):
    @property
    def is_empty(self) -> bool:
        return True

    def sort_key(self) -> tuple:
        return (0,)


@dataclass(frozen=True)
class PrincipalWord(ConstructibleIdeal):
    """``wP`` for a positive word ``w`` of a free monoid."""

    word: GroupElement

    def sort_key(self) -> tuple:
        return (1, self.word.sort_key())


@dataclass(frozen=True)
class PrincipalVector(ConstructibleIdeal):
    """``v + N^k`` for a nonnegative vector ``v``."""

    vector: GroupElement

    def sort_key(self) -> tuple:
        return (1, self.vector.sort_key())


@dataclass(frozen=True)
class TailSet(ConstructibleIdeal):
    """``finite ∪ ([threshold, ∞) ∩ P)`` in a numerical semigroup, threshold the least member of P from which the tail runs."""

    finite: frozenset[int]
    threshold: int

    def sort_key(self) -> tuple:
        return (1, self.threshold, tuple(sorted(self.finite)))


@dataclass(frozen=True)
class CongruenceScaled(ConstructibleIdeal):
    """``(residue + scale*Z) x (scale*Z \\ {0})`` inside ``Z ⋊ Z^x``, with ``0 <= residue < scale``."""

    residue: int
    scale: int

    def sort_key(self) -> tuple:
        return (1, self.scale, self.residue)


@dataclass(frozen=True)
class BoundedIdeal(ConstructibleIdeal):
    """Fallback for config-defined semigroups, keyed by its members in a finite window.

    ``term`` is the construction tree used to decide membership of points outside
    the window; it does not take part in equality.
    """

    window: frozenset[GroupElement]
    term: Any = field(compare=False, hash=False)

    def sort_key(self) -> tuple:
        return (1, len(self.window), sorted(g.sort_key() for g in self.window))
