from fractions import Fraction
from typing import Optional, Sequence

from sympy.ntheory.modular import solve_congruence

from semilab.ambient.elements import GroupElement, affine, multiply
from semilab.ambient.groups import AmbientGroup
from semilab.config import GroupKind
from semilab.ideals.ideal import CongruenceScaled, ConstructibleIdeal, EmptyIdeal
from semilab.models.base_model import SemigroupModel


class AffineIntegerModel(SemigroupModel):
    """P = ℤ ⋊ ℤ^x inside ℚ ⋊ ℚ^x, where ``(b, a)`` acts as ``x -> a*x + b``.

    Every nonempty constructible ideal is principal:
    ``(b, a)·P = (b + aℤ) x (aℤ \\ {0})``, stored as ``CongruenceScaled(b mod a, a)``.
    """

    def __init__(self):
        super().__init__(AmbientGroup(GroupKind.AFFINE))

    def contains_element(self, g: GroupElement) -> bool:
        b, a = g.payload
        return b.denominator == 1 and a.denominator == 1 and a != 0

    def full(self) -> ConstructibleIdeal:
        return CongruenceScaled(0, 1)

    def cap_translate(self, g: GroupElement, ideal: ConstructibleIdeal) -> ConstructibleIdeal:
        if ideal.is_empty:
            return EmptyIdeal()
        generator = affine(ideal.residue, ideal.scale)
        # g·X = (alpha + beta·ℤ) x (beta·ℤ \ {0}) with rational alpha, beta
        alpha, beta = multiply(g, generator).payload
        numerator, denominator = beta.numerator, beta.denominator
        # alpha + (r/s)ℤ meets ℤ iff s·alpha is an integer, and then in a coset of rℤ
        if (alpha * denominator).denominator != 1:
            return EmptyIdeal()
        offset = int(alpha * denominator)
        k0 = (-offset * pow(numerator, -1, denominator)) % denominator if denominator > 1 else 0
        anchor = alpha + beta * k0
        modulus = abs(numerator)
        return CongruenceScaled(int(anchor) % modulus, modulus)

    def intersect(self, left: ConstructibleIdeal, right: ConstructibleIdeal) -> ConstructibleIdeal:
        if left.is_empty or right.is_empty:
            return EmptyIdeal()
        solution = solve_congruence((left.residue, left.scale), (right.residue, right.scale))
        if solution is None:
            return EmptyIdeal()
        residue, modulus = solution
        return CongruenceScaled(int(residue) % int(modulus), int(modulus))

    def ideal_contains(self, ideal: ConstructibleIdeal, x: GroupElement) -> bool:
        if ideal.is_empty or not self.contains_element(x):
            return False
        b, a = (int(value) for value in x.payload)
        return (b - ideal.residue) % ideal.scale == 0 and a % ideal.scale == 0

    def uncovered_point(
        self, ideal: ConstructibleIdeal, covers: Sequence[ConstructibleIdeal]
    ) -> Optional[GroupElement]:
        if ideal.is_empty:
            return None
        generator = affine(ideal.residue, ideal.scale)
        if any(self.ideal_contains(cover, generator) for cover in covers):
            return None
        return generator

    def principal_generator(self, ideal: ConstructibleIdeal) -> Optional[GroupElement]:
        if ideal.is_empty:
            return None
        return affine(Fraction(ideal.residue), Fraction(ideal.scale))

    def format_ideal(self, ideal: ConstructibleIdeal) -> str:
        if ideal.is_empty:
            return "∅"
        return self.format_principal(affine(ideal.residue, ideal.scale))
