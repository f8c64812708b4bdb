from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from semilab.config import GroupKind
from semilab.errors import FamilyMismatchError

# A free-group word is stored as alternating runs (generator index, nonzero exponent).
Run = tuple[int, int]
Payload = Union[tuple[Run, ...], tuple[int, ...], int, tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class GroupElement:
    """A normalized element of one of the built-in ambient groups.

    Payloads by kind:
        FREE: freely reduced word as runs ``((gen, exp), ...)``.
        LATTICE: integer vector of fixed dimension.
        INTEGER: a single integer.
        AFFINE: pair ``(b, a)`` of fractions acting as ``x -> a*x + b``, with ``a != 0``.
    """

    kind: GroupKind
    payload: Payload

    def __str__(self) -> str:
        from semilab.ambient.parsing import format_element

        return format_element(self)

    def sort_key(self) -> tuple:
        if self.kind is GroupKind.FREE:
            letters = letters_of(self)
            return (len(letters), letters)
        if self.kind is GroupKind.LATTICE:
            return (sum(abs(x) for x in self.payload), self.payload)
        if self.kind is GroupKind.INTEGER:
            return (abs(self.payload), self.payload)
        b, a = self.payload
        return (abs(b) + abs(a), b, a)


def reduce_runs(runs: Iterable[Run]) -> tuple[Run, ...]:
    """Freely reduce a sequence of runs in a single pass."""
    stack: list[Run] = []
    for gen, exp in runs:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged != 0:
                stack.append((gen, merged))
        else:
            stack.append((gen, exp))
    return tuple(stack)


def letters_of(word: GroupElement) -> tuple[int, ...]:
    """Expand a free-group word into signed letters (``-i`` for the inverse of ``pi``)."""
    letters: list[int] = []
    for gen, exp in word.payload:
        letters.extend([gen if exp > 0 else -gen] * abs(exp))
    return tuple(letters)


def word(*runs: Run) -> GroupElement:
    return GroupElement(GroupKind.FREE, reduce_runs(runs))


def word_from_letters(letters: Iterable[int]) -> GroupElement:
    return word(*((abs(letter), 1 if letter > 0 else -1) for letter in letters))


def vector(*coordinates: int) -> GroupElement:
    return GroupElement(GroupKind.LATTICE, tuple(int(x) for x in coordinates))


def integer(n: int) -> GroupElement:
    return GroupElement(GroupKind.INTEGER, int(n))


def affine(b: Union[int, Fraction, str], a: Union[int, Fraction, str]) -> GroupElement:
    b, a = Fraction(b), Fraction(a)
    if a == 0:
        raise ValueError("The multiplicative part of an affine element must be nonzero")
    return GroupElement(GroupKind.AFFINE, (b, a))


def identity_of(kind: GroupKind, dimension: int = 0) -> GroupElement:
    if kind is GroupKind.FREE:
        return word()
    if kind is GroupKind.LATTICE:
        return vector(*([0] * dimension))
    if kind is GroupKind.INTEGER:
        return integer(0)
    return affine(0, 1)


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    """Return the normal form of the product ``a * b``."""
    _check_same_group(a, b)
    if a.kind is GroupKind.FREE:
        return GroupElement(a.kind, reduce_runs(a.payload + b.payload))
    if a.kind is GroupKind.LATTICE:
        return GroupElement(a.kind, tuple(x + y for x, y in zip(a.payload, b.payload)))
    if a.kind is GroupKind.INTEGER:
        return GroupElement(a.kind, a.payload + b.payload)
    (b1, a1), (b2, a2) = a.payload, b.payload
    return GroupElement(a.kind, (b1 + a1 * b2, a1 * a2))


def invert(a: GroupElement) -> GroupElement:
    """Return the inverse of ``a``."""
    if a.kind is GroupKind.FREE:
        return GroupElement(a.kind, tuple((gen, -exp) for gen, exp in reversed(a.payload)))
    if a.kind is GroupKind.LATTICE:
        return GroupElement(a.kind, tuple(-x for x in a.payload))
    if a.kind is GroupKind.INTEGER:
        return GroupElement(a.kind, -a.payload)
    b, coefficient = a.payload
    return GroupElement(a.kind, (-b / coefficient, 1 / coefficient))


def product(elements: Iterable[GroupElement], identity: GroupElement) -> GroupElement:
    result = identity
    for element in elements:
        result = multiply(result, element)
    return result


def is_identity(a: GroupElement) -> bool:
    if a.kind is GroupKind.FREE:
        return a.payload == ()
    if a.kind is GroupKind.LATTICE:
        return all(x == 0 for x in a.payload)
    if a.kind is GroupKind.INTEGER:
        return a.payload == 0
    return a.payload == (Fraction(0), Fraction(1))


def _check_same_group(a: GroupElement, b: GroupElement) -> None:
    if a.kind is not b.kind:
        raise FamilyMismatchError(a, b)
    if a.kind is GroupKind.LATTICE and len(a.payload) != len(b.payload):
        raise FamilyMismatchError(a, b)
