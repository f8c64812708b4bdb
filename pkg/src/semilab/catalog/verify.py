import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

from pydantic import ValidationError

from semilab.ambient.elements import invert, is_identity, multiply
from semilab.ambient.pair import AmbientPair
from semilab.catalog.catalog import build_pair
from semilab.conditions import (
    compression_descriptor,
    is_disjoint_pair,
    is_ore_witness,
    letter_shape,
    replays_compression,
)
from semilab.config import DOSSIER_SCHEMA_VERSION, TOOL_VERSION
from semilab.errors import ConfigError, SemilabError
from semilab.groupoid import g0_probe, replays_local_boundary
from semilab.groupoid.dynamics import IN_G0
from semilab.hull import parse_word
from semilab.ideals import IdealFamily, closure_to_depth, independence_check, is_union_witness, replay_provenance
from semilab.ideals.ideal import ConstructibleIdeal, EmptyIdeal
from semilab.schemas import ConditionReport, Dossier
from semilab.spectrum import boundary_approx, enumerate_filters, is_filter, is_relative_ultrafilter
from semilab.utils import read_json

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessCheck:
    path: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    family_id: str
    depth: int
    checks: list[WitnessCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[WitnessCheck]:
        return [check for check in self.checks if not check.passed]


def load_dossier(path: Path) -> Dossier:
    """Read a Dossier file, warning when it was written by another version.

    Raises:
        ConfigError: If the file is missing or does not validate.
    """
    try:
        data = read_json(path)
    except FileNotFoundError:
        raise ConfigError("file not found", str(path))
    except ValueError as e:
        raise ConfigError(f"invalid JSON: {e}", str(path))
    try:
        dossier = Dossier.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        raise ConfigError(error["msg"], ".".join(str(part) for part in error["loc"]))
    if dossier.tool_version != TOOL_VERSION or dossier.schema_version != DOSSIER_SCHEMA_VERSION:
        logger.warning(
            "Dossier written by semilab %s (schema %d), verifying with %s (schema %d)",
            dossier.tool_version,
            dossier.schema_version,
            TOOL_VERSION,
            DOSSIER_SCHEMA_VERSION,
        )
    return dossier


class Verify:
    """Replay every witness embedded in a Dossier through the core modules.

    With ``depth`` above the recorded one, the recorded ideals must reappear in
    the deeper family; checks that depend on the exact family are skipped.

    Args:
        dossier (Dossier): The Dossier to check.
        depth (Optional[int]): Depth of the rebuilt family, the recorded one by default.
    """

    def __init__(self, dossier: Dossier, depth: Optional[int] = None):
        self.dossier = dossier
        self.depth = dossier.depth if depth is None else depth
        self.same_depth = self.depth == dossier.depth
        self.amb: AmbientPair = build_pair(dossier.semigroup)
        self.family: IdealFamily = closure_to_depth(self.amb, self.depth)
        self.report = VerificationReport(dossier.family_id, self.depth)

    def run(self) -> VerificationReport:
        self.check_family()
        self.check_independence()
        for position, condition in enumerate(self.dossier.conditions):
            self.check_condition(f"conditions[{position}]", condition)
        self.check_spectrum()
        self.check_dynamics()
        logger.info(
            "%s: %d checks, %d failures", self.dossier.family_id, len(self.report.checks), len(self.report.failures)
        )
        return self.report

    # Sections

    def check_family(self) -> None:
        summary = self.dossier.family
        replayed: list[ConstructibleIdeal] = []
        for i, (literal, steps) in enumerate(zip(summary.ideals, summary.provenance)):

            def replay(literal=literal, steps=steps) -> Optional[str]:
                replayed.append(EmptyIdeal())
                ideal = replay_provenance(self.amb, steps, replayed[:-1])
                replayed[-1] = ideal
                if self.amb.model.format_ideal(ideal) != literal:
                    return f"provenance yields {self.amb.model.format_ideal(ideal)}, recorded {literal}"
                if self.depth >= summary.depth and not summary.budget_exhausted and ideal not in self.family:
                    return "missing from the rebuilt family"
                return None

            self._check(f"family.ideals[{i}]", replay)
        if self.same_depth:
            self._check(
                "family.nonempty_count",
                lambda: None
                if self.family.nonempty_count == summary.nonempty_count
                else f"rebuilt {self.family.nonempty_count} ideals, recorded {summary.nonempty_count}",
            )

    def check_independence(self) -> None:
        recorded = self.dossier.independence
        model = self.amb.model
        if recorded.verdict == "Dependent":
            self._check(
                "independence",
                lambda: None
                if is_union_witness(
                    self.amb, model.parse_ideal(recorded.ideal), [model.parse_ideal(u) for u in recorded.union]
                )
                else f"{recorded.ideal} is not the union of {', '.join(recorded.union)}",
            )
        elif self.same_depth:
            verdict = independence_check(self.family).verdict
            self._check(
                "independence",
                lambda: None if verdict == recorded.verdict else f"rebuilt {verdict}, recorded {recorded.verdict}",
            )

    def check_condition(self, path: str, report: ConditionReport) -> None:
        if report.condition == "toeplitz":
            for position, certificate in enumerate(report.certificates):
                self._check(f"{path}.certificates[{position}]", lambda c=certificate: self._toeplitz(c))
        elif report.status == "Fails" and report.condition == "ql":
            self._check(f"{path}.witness", lambda: self._quasi_lattice(report))
        elif report.status == "Fails" and report.condition == "reversible":
            self._check(
                f"{path}.witness",
                lambda: None
                if is_disjoint_pair(self.amb, self.amb.parse(report.witness["p"]), self.amb.parse(report.witness["q"]))
                else "pP ∩ qP is not empty",
            )
        elif report.status == "Fails" and report.condition == "ore":
            self._check(f"{path}.witness", lambda: self._ore(report))

    def check_spectrum(self) -> None:
        spectrum = self.dossier.spectrum
        if not self.same_depth:
            return
        for position, members in enumerate(spectrum.boundary):

            def replay(members=members) -> Optional[str]:
                indices = [self.family.index_of(self.amb.model.parse_ideal(m)) for m in members]
                if None in indices:
                    return "a member is not in the rebuilt family"
                return None if is_filter(self.family, indices) else "members do not form a filter"

            self._check(f"spectrum.boundary[{position}]", replay)

        def counts() -> Optional[str]:
            filters = enumerate_filters(self.family)
            rebuilt = (
                len(filters),
                sum(is_relative_ultrafilter(self.family, f) for f in filters),
                len(boundary_approx(self.family, filters)),
            )
            recorded = (spectrum.filter_count, spectrum.ultrafilter_count, spectrum.boundary_size)
            return None if rebuilt == recorded else f"rebuilt counts {rebuilt}, recorded {recorded}"

        self._check("spectrum.counts", counts)

    def check_dynamics(self) -> None:
        model = self.amb.model
        for position, sample in enumerate(self.dossier.g0_samples):
            if sample.verdict != "NotInG0":
                continue

            def replay(sample=sample) -> Optional[str]:
                g, translate = self.amb.parse(sample.g), self.amb.parse(sample.translate)
                witness = model.parse_ideal(sample.witness)
                if translate not in (g, invert(g)) or witness.is_empty:
                    return "translate must be g or g⁻¹ and the witness nonempty"
                if not model.intersect(model.cap_translate(translate, model.full()), witness).is_empty:
                    return f"{sample.translate}·P meets {sample.witness}"
                return None

            self._check(f"g0_samples[{position}]", replay)

        for position, evidence in enumerate(self.dossier.top_free):
            if evidence.verdict == "MovedWitness":
                self._check(f"top_free[{position}]", lambda e=evidence: self._moved(e))

        local = self.dossier.local_boundary
        if local.verdict == "Witness":
            self._check(
                "local_boundary",
                lambda: None
                if replays_local_boundary(
                    self.family,
                    self.amb.parse(local.x),
                    self.amb.parse(local.p),
                    self.amb.parse(local.q),
                    self.amb.parse(local.g_prime),
                )
                else "not a strict compression",
            )

    # Helper functions

    def _check(self, path: str, replay: Callable[[], Optional[str]]) -> None:
        try:
            failure = replay()
        except (SemilabError, ValueError, KeyError, TypeError) as e:
            failure = f"{type(e).__name__}: {e}"
        if failure is not None:
            logger.warning("%s: %s", path, failure)
        self.report.checks.append(WitnessCheck(path, failure is None, failure or ""))

    def _toeplitz(self, certificate) -> Optional[str]:
        g = self.amb.parse(certificate.g)
        if certificate.result == "ZeroCase":
            return None if compression_descriptor(self.amb, g).is_zero else "compression is not zero"
        if certificate.result != "Decomposition":
            return None
        letters = parse_word(self.amb, certificate.word)
        if not replays_compression(self.amb, g, letters):
            return f"{certificate.word} does not multiply to the compression of {certificate.g}"
        if letters and letter_shape(letters) != certificate.shape:
            return f"shape {letter_shape(letters)}, recorded {certificate.shape}"
        return None

    def _quasi_lattice(self, report: ConditionReport) -> Optional[str]:
        amb, model, witness = self.amb, self.amb.model, report.witness
        if report.sub_condition == "QL0":
            u = amb.parse(witness["unit"])
            return None if not is_identity(u) and amb.is_in_p(u) and amb.is_in_p(invert(u)) else "not a unit"
        if report.sub_condition == "QL2":
            meet = model.intersect(model.principal(amb.parse(witness["p"])), model.principal(amb.parse(witness["q"])))
        else:
            meet = model.cap_translate(amb.parse(witness["g"]), model.full())
        if meet.is_empty or model.principal_generator(meet) is not None:
            return f"{model.format_ideal(meet)} is empty or principal"
        if model.format_ideal(meet) != witness["intersection"]:
            return f"intersection is {model.format_ideal(meet)}, recorded {witness['intersection']}"
        return None

    def _ore(self, report: ConditionReport) -> Optional[str]:
        amb, witness = self.amb, report.witness
        g = amb.parse(witness["g"])
        if "p" in witness:
            p, q = amb.parse(witness["p"]), amb.parse(witness["q"])
            if not (amb.is_in_p(p) and amb.is_in_p(q)) or multiply(p, invert(q)) != g:
                return f"{witness['g']} is not {witness['p']}·{witness['q']}⁻¹"
        return None if is_ore_witness(amb, g, report.budget) else f"{witness['g']} has a left quotient"

    def _moved(self, evidence) -> Optional[str]:
        model = self.amb.model
        g, k = self.amb.parse(evidence.g), self.amb.parse(evidence.shift)
        if g0_probe(self.family, g).verdict != IN_G0:
            return f"{evidence.g} is not in G_0 to budget"
        members = [model.parse_ideal(m) for m in evidence.filter]
        if not members:
            return "empty filter"
        base = members[0]
        for member in members[1:]:
            base = model.intersect(base, member)
        x = model.parse_ideal(evidence.base)

        def holds(ideal: ConstructibleIdeal) -> bool:
            return not ideal.is_empty and not base.is_empty and model.is_subset(base, ideal)

        left = model.cap_translate(k, x)
        right = model.cap_translate(multiply(g, k), x)
        return None if holds(left) != holds(right) else "the character and its translate agree on k·X"


def verify_dossier(path: Path, depth: Optional[int] = None) -> VerificationReport:
    return Verify(load_dossier(path), depth).run()
