"""Catalog of semigroup families and ingestion of config-defined semigroups.

Family ids:

    free_product_naturals:<n>    ℕ₀^{*n} ⊂ F_n
    free_product_naturals:inf    ℕ₀^{*∞}, truncated to SEMILAB_INFINITE_RANK generators
    cone_zk:<k>                  ℕ^k ⊂ ℤ^k
    naturals                     ℕ ⊂ ℤ
    numerical:<a1>,...,<ak>      ⟨a1, ..., ak⟩ ⊂ ℤ
    axb_integers[:<p1>,...]      ℤ ⋊ ℤ^x ⊂ ℚ ⋊ ℚ^x, balls over -1 and the listed primes
    trivial                      P = {e}
"""

import logging
from pathlib import Path
from typing import Callable

import pandas as pd
import yaml
from pydantic import ValidationError

from semilab.ambient.elements import affine, integer, vector, word_from_letters
from semilab.ambient.groups import AmbientGroup
from semilab.ambient.pair import AmbientPair
from semilab.ambient.parsing import format_element, parse_element
from semilab.config import (
    AXB_DEFAULT_PRIMES,
    BOUNDED_MEMBERSHIP_RADIUS,
    INFINITE_RANK_TRUNCATION,
    GroupKind,
)
from semilab.errors import ConfigError
from semilab.models import AffineIntegerModel, BoundedModel, ConeModel, FreeMonoidModel, NumericalModel
from semilab.schemas import CatalogMetadata, SemigroupConfig
from semilab.utils import read_yaml

logger = logging.getLogger(__name__)

LATTICE_ORDER = "lattice-order"
COMMUTATIVE = "commutative"
LEFT_ORE = "left-ore"

CUNTZ_CITATION = (
    "J. Cuntz, Simple C*-algebras generated by isometries, Comm. Math. Phys. 57 (1977) 173-185: "
    "O_n is nuclear and F_n acts amenably on its boundary of infinite words"
)
FREE_G0_REASON = (
    "G_0 is trivial: for g ≠ e one of g·P, g⁻¹·P misses a principal ideal wP"
)
AXB_FREENESS_REASON = (
    "a nontrivial map x -> ax + b fixes at most one point of the profinite integers, "
    "so its fixed points have empty interior in the boundary"
)


def resolve_family(family_id: str) -> AmbientPair:
    """Build the semigroup of a catalog id.

    Raises:
        ConfigError: For an unknown id or malformed parameters.
    """
    name, _, argument = family_id.strip().partition(":")
    builder = _BUILDERS.get(name)
    if builder is None:
        raise ConfigError(f"Unknown family {family_id!r}", "family")
    amb = builder(family_id.strip(), argument)
    logger.debug("resolved %s with %d generators", family_id, len(amb.generators))
    return amb


def load_config(path: Path) -> SemigroupConfig:
    """Read and validate a semigroup config file.

    Raises:
        ConfigError: With the offending key path when the file does not validate.
    """
    try:
        data = read_yaml(path)
    except FileNotFoundError:
        raise ConfigError("file not found", str(path))
    except yaml.YAMLError as e:
        raise ConfigError(f"invalid YAML: {e}", str(path))
    if not isinstance(data, dict):
        raise ConfigError("expected a mapping at the top level", "<root>")
    try:
        return SemigroupConfig(**data)
    except ValidationError as e:
        error = e.errors()[0]
        key = ".".join(str(part) for part in error["loc"]) or "<root>"
        raise ConfigError(error["msg"], key)


def build_pair(config: SemigroupConfig) -> AmbientPair:
    """Resolve a catalog id or build an inline definition, applying metadata overrides."""
    overrides = config.metadata.model_dump(exclude_none=True, exclude_defaults=True)
    if config.family is not None:
        amb = resolve_family(config.family)
        if not overrides and config.name is None:
            return amb
        metadata = amb.metadata.model_copy(update=overrides)
        return AmbientPair(config.name or amb.family_id, amb.model, amb.generators, metadata)

    kind = GroupKind(config.ambient)
    rank = config.rank if kind is GroupKind.FREE else config.dimension or 0
    group = AmbientGroup(kind, rank)
    generators = []
    for position, text in enumerate(config.generators):
        try:
            generators.append(parse_element(text, group))
        except ValueError as e:
            raise ConfigError(str(e), f"generators[{position}]")
    family_id = config.name or f"{kind.value}:{','.join(config.generators)}"
    listed = ", ".join(format_element(g) for g in generators)

    if kind is GroupKind.INTEGER:
        model = NumericalModel([g.payload for g in generators])
        description = f"numerical semigroup ⟨{listed}⟩ ⊂ ℤ"
        truncation = None
    else:
        model = BoundedModel(group, generators)
        description = f"⟨{listed}⟩ ⊆ {group.describe()}"
        truncation = (
            f"membership decided for products of at most {BOUNDED_MEMBERSHIP_RADIUS} generators; "
            "ideals compared on a finite window"
        )
    metadata = CatalogMetadata(
        description=description, ambient=group.describe(), truncation_note=truncation, **overrides
    )
    return AmbientPair(family_id, model, tuple(generators), metadata)


def list_catalog() -> pd.DataFrame:
    """One row per catalog family, parametrised ids shown with their parameter names."""
    examples = [
        ("free_product_naturals:n", "free_product_naturals:2"),
        ("free_product_naturals:inf", "free_product_naturals:inf"),
        ("cone_zk:k", "cone_zk:2"),
        ("naturals", "naturals"),
        ("numerical:a1,...,ak", "numerical:2,3"),
        ("axb_integers", "axb_integers"),
        ("trivial", "trivial"),
    ]
    rows = []
    for family_id, example in examples:
        metadata = resolve_family(example).metadata
        rows.append(
            {
                "family_id": family_id,
                "ambient": metadata.ambient,
                "description": metadata.description,
                "amenable": metadata.amenable,
                "amenability_citation": metadata.amenability_citation,
                "left_ore": metadata.left_ore,
                "topologically_free": metadata.topologically_free,
                "topological_freeness_citation": metadata.topological_freeness_citation,
                "proven": ", ".join(f"{k}: {v}" for k, v in metadata.proven.items()),
                "boundary_note": metadata.boundary_note,
            }
        )
    return pd.DataFrame(rows)


# Builders
def _free_product(family_id: str, argument: str) -> AmbientPair:
    truncation = None
    if argument == "inf":
        rank = INFINITE_RANK_TRUNCATION
        truncation = (
            f"countably many generators truncated to the first {rank}; "
            "all spectrum outputs are rank- and depth-relative"
        )
        boundary = "the boundary is the whole spectrum (Ω = ∂Ω); the boundary quotient is O_∞"
        description = "free product of countably many copies of the natural numbers inside F_∞"
    else:
        rank = _positive(argument, "free_product_naturals needs a rank n ≥ 1 or 'inf'")
        boundary = f"boundary quotient ≅ O_{rank}, the Toeplitz algebra modulo the defect 1 - Σ v_i v_i*"
        description = f"{rank}-fold free product of the natural numbers, ℕ₀^{{*{rank}}} ⊂ F_{rank}"
    metadata = CatalogMetadata(
        description=description,
        ambient=f"F_{'∞' if argument == 'inf' else rank}",
        amenable=True,
        amenability_citation=CUNTZ_CITATION,
        left_ore=rank == 1,
        proven={"ql": "prefix-order", "toeplitz": LATTICE_ORDER},
        topologically_free=True,
        topological_freeness_citation=FREE_G0_REASON,
        boundary_note=boundary,
        truncation_note=truncation,
    )
    generators = tuple(word_from_letters([i]) for i in range(1, rank + 1))
    return AmbientPair(family_id, FreeMonoidModel(rank), generators, metadata)


def _cone(family_id: str, argument: str) -> AmbientPair:
    try:
        dimension = int(argument)
    except ValueError:
        raise ConfigError("cone_zk needs a dimension k ≥ 0", "family")
    if dimension < 0:
        raise ConfigError("cone_zk needs a dimension k ≥ 0", "family")
    if dimension == 0:
        return _trivial(family_id, "")
    metadata = _commutative_metadata(
        description=f"the positive cone ℕ^{dimension} ⊂ ℤ^{dimension}",
        ambient=f"Z^{dimension}",
        citation=f"ℤ^{dimension} is abelian hence amenable",
        proven={"ql": LATTICE_ORDER, "ore": COMMUTATIVE, "reversible": COMMUTATIVE, "toeplitz": LATTICE_ORDER},
        boundary=f"one-point boundary; the boundary quotient is C*(ℤ^{dimension}) ≅ C(T^{dimension})",
    )
    generators = tuple(
        vector(*(1 if j == i else 0 for j in range(dimension))) for i in range(dimension)
    )
    return AmbientPair(family_id, ConeModel(dimension), generators, metadata)


def _naturals(family_id: str, argument: str) -> AmbientPair:
    if argument:
        raise ConfigError("naturals takes no parameter", "family")
    metadata = _commutative_metadata(
        description="the natural numbers ℕ ⊂ ℤ",
        ambient="Z",
        citation="ℤ is abelian hence amenable",
        proven={"ql": LATTICE_ORDER, "ore": COMMUTATIVE, "reversible": COMMUTATIVE, "toeplitz": LATTICE_ORDER},
        boundary="one-point boundary; the boundary quotient is C*(ℤ) ≅ C(T)",
    )
    return AmbientPair(family_id, NumericalModel([1]), (integer(1),), metadata)


def _numerical(family_id: str, argument: str) -> AmbientPair:
    try:
        values = [int(part) for part in argument.split(",") if part.strip()]
    except ValueError:
        raise ConfigError("numerical needs comma separated positive integers", "family")
    if not values:
        raise ConfigError("numerical needs comma separated positive integers", "family")
    model = NumericalModel(values)
    listed = ", ".join(str(a) for a in model.generators)
    metadata = _commutative_metadata(
        description=f"numerical semigroup ⟨{listed}⟩ ⊂ ℤ",
        ambient="Z",
        citation="ℤ is abelian hence amenable",
        proven={"ore": COMMUTATIVE, "reversible": COMMUTATIVE, "toeplitz": LEFT_ORE},
        boundary="one-point boundary; the boundary quotient is C*(ℤ) ≅ C(T)",
    )
    return AmbientPair(family_id, model, tuple(integer(a) for a in model.generators), metadata)


def _axb(family_id: str, argument: str) -> AmbientPair:
    primes = AXB_DEFAULT_PRIMES
    if argument:
        try:
            primes = tuple(int(part) for part in argument.split(","))
        except ValueError:
            raise ConfigError("axb_integers takes comma separated primes", "family")
        if any(p < 2 for p in primes):
            raise ConfigError("axb_integers takes comma separated primes", "family")
    listed = ", ".join(str(p) for p in primes)
    metadata = CatalogMetadata(
        description=(
            "ax+b semigroup over ℤ: form the semidirect product ℤ ⋊ ℤ^x of the additive group "
            "by the multiplicative monoid of nonzero integers, inside ℚ ⋊ ℚ^x"
        ),
        ambient="Q ⋊ Q^x",
        amenable=True,
        amenability_citation="ℚ ⋊ ℚ^x is solvable hence amenable",
        left_ore=True,
        proven={"ore": LEFT_ORE, "toeplitz": LEFT_ORE},
        topologically_free=True,
        topological_freeness_citation=AXB_FREENESS_REASON,
        boundary_note=(
            "boundary quotient is the ring C*-algebra of ℤ (J. Cuntz, C*-algebras associated "
            "with the ax+b-semigroup over ℕ, 2008)"
        ),
        truncation_note=f"ℤ^x is generated by -1 and all primes; balls use -1 and {listed}",
    )
    generators = (affine(1, 1), affine(0, -1)) + tuple(affine(0, p) for p in primes)
    return AmbientPair(family_id, AffineIntegerModel(), generators, metadata)


def _trivial(family_id: str, argument: str) -> AmbientPair:
    if argument:
        raise ConfigError("trivial takes no parameter", "family")
    metadata = CatalogMetadata(
        description="the trivial semigroup P = {e}",
        ambient="Z^0",
        amenable=True,
        amenability_citation="the trivial group is amenable",
        left_ore=True,
        proven={"ql": "trivial", "ore": "trivial", "reversible": "trivial", "toeplitz": "trivial"},
        topologically_free=True,
        topological_freeness_citation="G_0 is trivial",
        boundary_note="one-point boundary; the boundary quotient is ℂ",
    )
    return AmbientPair(family_id, ConeModel(0), (), metadata)


def _commutative_metadata(
    description: str, ambient: str, citation: str, proven: dict[str, str], boundary: str
) -> CatalogMetadata:
    return CatalogMetadata(
        description=description,
        ambient=ambient,
        amenable=True,
        amenability_citation=citation,
        left_ore=True,
        proven=proven,
        topologically_free=False,
        topological_freeness_citation="P is left reversible, so G_0 = G fixes the one-point boundary",
        boundary_note=boundary,
    )


def _positive(argument: str, message: str) -> int:
    try:
        value = int(argument)
    except ValueError:
        raise ConfigError(message, "family")
    if value < 1:
        raise ConfigError(message, "family")
    return value


_BUILDERS: dict[str, Callable[[str, str], AmbientPair]] = {
    "free_product_naturals": _free_product,
    "cone_zk": _cone,
    "naturals": _naturals,
    "numerical": _numerical,
    "axb_integers": _axb,
    "trivial": _trivial,
}

