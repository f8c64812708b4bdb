import logging
import math
import re
from functools import reduce
from typing import Callable, Optional, Sequence

from semilab.ambient.elements import GroupElement, integer
from semilab.ambient.groups import AmbientGroup
from semilab.config import GroupKind
from semilab.errors import ConfigError, ElementSyntaxError
from semilab.ideals.ideal import ConstructibleIdeal, EmptyIdeal, TailSet
from semilab.models.base_model import EMPTY_SYMBOLS, SemigroupModel

logger = logging.getLogger(__name__)

_TAIL = re.compile(r"^(?:\{(?P<finite>[\d,\s]*)\}\s*(?:∪|\|)\s*)?P(?:\s*(?:≥|>=)\s*(?P<threshold>\d+))?$")


class NumericalModel(SemigroupModel):
    """P = ⟨a1, ..., ak⟩ ⊂ ℤ, a finitely generated submonoid of ℕ.

    Constructible ideals are stored as ``TailSet(finite, t)`` denoting
    ``finite ∪ ([t, ∞) ∩ P)`` where ``t`` is the least member of P above which
    the set contains all of P.

    Args:
        generators (Sequence[int]): Positive generators of P.
    """

    def __init__(self, generators: Sequence[int]):
        super().__init__(AmbientGroup(GroupKind.INTEGER))
        if not generators or any(a <= 0 for a in generators):
            raise ConfigError("numerical semigroups need positive generators", "generators")
        self.generators = tuple(sorted(set(int(a) for a in generators)))
        self.gcd = reduce(math.gcd, self.generators)
        self.conductor, self._small_members = self._compute_conductor()
        logger.debug(
            "numerical semigroup %s: gcd %d, conductor %d", self.generators, self.gcd, self.conductor
        )

    def contains_element(self, g: GroupElement) -> bool:
        return self.is_member(g.payload)

    def is_member(self, n: int) -> bool:
        if n < 0 or n % self.gcd:
            return False
        return n >= self.conductor or n in self._small_members

    def full(self) -> ConstructibleIdeal:
        return TailSet(frozenset(), 0)

    def cap_translate(self, g: GroupElement, ideal: ConstructibleIdeal) -> ConstructibleIdeal:
        if ideal.is_empty or g.payload % self.gcd:
            return EmptyIdeal()
        shift = g.payload
        bound = max(ideal.threshold, self.conductor) + max(shift, 0)
        return self._from_predicate(lambda z: self._in_tail(ideal, z - shift), bound)

    def intersect(self, left: ConstructibleIdeal, right: ConstructibleIdeal) -> ConstructibleIdeal:
        if left.is_empty or right.is_empty:
            return EmptyIdeal()
        bound = max(left.threshold, right.threshold)
        return self._from_predicate(
            lambda z: self._in_tail(left, z) and self._in_tail(right, z), bound
        )

    def ideal_contains(self, ideal: ConstructibleIdeal, x: GroupElement) -> bool:
        return self.is_member(x.payload) and self._in_tail(ideal, x.payload)

    def uncovered_point(
        self, ideal: ConstructibleIdeal, covers: Sequence[ConstructibleIdeal]
    ) -> Optional[GroupElement]:
        if ideal.is_empty:
            return None
        live = [cover for cover in covers if not cover.is_empty]
        # beyond every threshold and the conductor, X and each cover agree with P
        horizon = max([ideal.threshold, self.conductor] + [cover.threshold for cover in live])
        for z in range(horizon + 1):
            if not self.is_member(z) or not self._in_tail(ideal, z):
                continue
            if not any(self._in_tail(cover, z) for cover in live):
                return integer(z)
        if not live:
            return integer(self._first_member_from(horizon + 1))
        return None

    def format_ideal(self, ideal: ConstructibleIdeal) -> str:
        if ideal.is_empty:
            return "∅"
        tail = "P" if ideal.threshold == 0 else f"P≥{ideal.threshold}"
        if not ideal.finite:
            return tail
        finite = ",".join(str(z) for z in sorted(ideal.finite))
        return f"{{{finite}}} ∪ {tail}"

    def parse_ideal(self, text: str) -> ConstructibleIdeal:
        """Parse ``∅``, ``P``, ``P≥t``, ``{a,b} ∪ P≥t`` or a principal literal ``n·P``."""
        stripped = text.strip()
        if stripped in EMPTY_SYMBOLS:
            return EmptyIdeal()
        found = _TAIL.match(stripped)
        if found is None:
            return super().parse_ideal(text)
        finite_text = found.group("finite") or ""
        finite = {int(z) for z in finite_text.replace(" ", "").split(",") if z}
        threshold = int(found.group("threshold") or 0)
        if any(not self.is_member(z) for z in finite):
            raise ElementSyntaxError(text, 0, "Finite part must lie in P")
        candidate = TailSet(frozenset(finite), threshold)
        return self._from_predicate(lambda z: self._in_tail(candidate, z), threshold)

    # Helper functions
    def _in_tail(self, ideal: ConstructibleIdeal, z: int) -> bool:
        if ideal.is_empty:
            return False
        return z in ideal.finite or (z >= ideal.threshold and self.is_member(z))

    def _from_predicate(self, predicate: Callable[[int], bool], bound: int) -> TailSet:
        """Build the canonical TailSet of ``{z ∈ P : predicate(z)}``.

        ``predicate`` must agree with membership in P for every ``z >= bound``.
        """
        bound = max(bound, 0)
        finite = {z for z in range(bound) if self.is_member(z) and predicate(z)}
        threshold = bound
        while threshold > 0 and (
            not self.is_member(threshold - 1) or (threshold - 1) in finite
        ):
            finite.discard(threshold - 1)
            threshold -= 1
        # gaps below the tail are skipped, so P≥2 of ⟨2,3⟩ is not written P≥1
        return TailSet(frozenset(finite), self._first_member_from(threshold))

    def _first_member_from(self, start: int) -> int:
        z = start
        while not self.is_member(z):
            z += 1
        return z

    def _compute_conductor(self) -> tuple[int, frozenset[int]]:
        """Smallest ``c`` with every multiple of the gcd above ``c`` in P, plus the members below ``c``."""
        step = self.gcd
        smallest = self.generators[0] // step
        scaled = [a // step for a in self.generators]
        reachable = [True]
        run = 1
        n = 0
        while run < smallest:
            n += 1
            hit = any(n >= a and reachable[n - a] for a in scaled)
            reachable.append(hit)
            run = run + 1 if hit else 0
        conductor = (n - smallest + 1) * step
        members = frozenset(k * step for k, hit in enumerate(reachable) if hit and k * step < conductor)
        return conductor, members
