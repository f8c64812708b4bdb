import logging
import random
import time
from pathlib import Path
from typing import Optional

from tqdm import tqdm

from semilab.ambient.elements import GroupElement, is_identity
from semilab.ambient.pair import AmbientPair
from semilab.ambient.parsing import format_element
from semilab.config import DOSSIER_SCHEMA_VERSION, TOOL_VERSION
from semilab.conditions import ore_probe, quasi_lattice_probe, reversibility_probe, toeplitz_probe
from semilab.groupoid import (
    CharacterTable,
    check_identification,
    enumerate_arrows,
    g0_probe,
    kirchberg_checklist,
    local_boundary_witness,
    top_free_probe,
)
from semilab.groupoid.dynamics import IN_G0, G0Result, LocalBoundaryResult, TopFreeResult
from semilab.hull import HullEnumeration, format_isometry, format_word, hull_enumerate
from semilab.ideals import IdealFamily, closure_to_depth, independence_check
from semilab.ideals.closure import FULL_INDEX
from semilab.ideals.independence import INDEPENDENT, IndependenceResult
from semilab.schemas import (
    AnalysisConfig,
    ConditionReport,
    Dossier,
    FamilySummary,
    G0Sample,
    GroupoidSummary,
    HullSummary,
    IndependenceReport,
    LocalBoundaryReport,
    SemigroupConfig,
    SpectrumSummary,
    TopFreeEvidence,
)
from semilab.spectrum import (
    BasicOpen,
    Filter,
    boundary_approx,
    enumerate_filters,
    format_filter,
    invariant_subset_check,
    is_relative_ultrafilter,
    smallest_basic_open,
)
from semilab.utils import save_json

logger = logging.getLogger(__name__)


class Analyze:
    """Run every probe on one semigroup and collect the results into a Dossier.

    Stages run in a fixed order: closure, independence, conditions, hull,
    spectrum, groupoid, dynamics, checklist. Each stage reads what the earlier
    ones stored on the instance.

    Args:
        amb (AmbientPair): The semigroup.
        source (SemigroupConfig): Definition recorded in the Dossier for replay.
        settings (AnalysisConfig): Depth, bounds, seed and output switches.
    """

    def __init__(self, amb: AmbientPair, source: SemigroupConfig, settings: Optional[AnalysisConfig] = None):
        self.amb = amb
        self.source = source
        self.settings = settings or AnalysisConfig()

        self.family: Optional[IdealFamily] = None
        self.independence: Optional[IndependenceResult] = None
        self.conditions: list[ConditionReport] = []
        self.hull: Optional[HullEnumeration] = None
        self.filters: list[Filter] = []
        self.ultrafilters: list[Filter] = []
        self.boundary: list[Filter] = []
        self.invariance: str = ""
        self.groupoid: Optional[GroupoidSummary] = None
        self.g0_results: list[G0Result] = []
        self.top_free: list[TopFreeResult] = []
        self.local_boundary: Optional[LocalBoundaryResult] = None

    def run(self) -> Dossier:
        """Run all stages and return the Dossier."""
        stages = [
            ("closure", self.build_family),
            ("independence", self.check_independence),
            ("conditions", self.probe_conditions),
            ("hull", self.enumerate_hull),
            ("spectrum", self.compute_spectrum),
            ("groupoid", self.check_groupoid),
            ("dynamics", self.probe_dynamics),
        ]
        start_time = time.perf_counter()
        for name, stage in tqdm(stages, desc=self.amb.family_id, disable=not self.settings.progress):
            stage()
            logger.info("%s: %s stage done", self.amb.family_id, name)
        dossier = self.to_dossier()
        if self.settings.timing:
            dossier.wall_clock = round(time.perf_counter() - start_time, 3)
        return dossier

    def save(self, dossier: Dossier, path: Path) -> Path:
        save_json(dossier.model_dump(mode="json"), path)
        logger.info("Dossier for %s written to %s", dossier.family_id, path)
        return path

    # Stages

    def build_family(self) -> IdealFamily:
        self.family = closure_to_depth(self.amb, self.settings.depth)
        return self.family

    def check_independence(self) -> IndependenceResult:
        self.independence = independence_check(self.family)
        return self.independence

    def probe_conditions(self) -> list[ConditionReport]:
        bound = self.settings.bound
        self.conditions = [
            toeplitz_probe(self.amb, bound, self.settings.toeplitz_budget),
            quasi_lattice_probe(self.amb, bound),
            ore_probe(self.amb, bound),
            reversibility_probe(self.amb, bound),
        ]
        return self.conditions

    def enumerate_hull(self) -> HullEnumeration:
        self.hull = hull_enumerate(self.amb, self.settings.hull_depth)
        return self.hull

    def compute_spectrum(self) -> list[Filter]:
        self.filters = enumerate_filters(self.family)
        self.ultrafilters = [f for f in self.filters if is_relative_ultrafilter(self.family, f)]
        self.boundary = boundary_approx(self.family, self.filters)
        self.invariance = invariant_subset_check(self.family, self.boundary, self.settings.margin).verdict
        return self.boundary

    def check_groupoid(self) -> GroupoidSummary:
        arrows = enumerate_arrows(self.family, self.hull.nonzero, self.filters)
        table = CharacterTable(self.family, self.settings.hull_depth)
        check = check_identification(self.family, arrows, table)
        self.groupoid = GroupoidSummary(
            depth=self.settings.hull_depth,
            arrow_count=len(arrows),
            phi_well_defined=check.well_defined,
            phi_injective=check.injective,
            phi_composable=check.composable,
            character_identity=check.character_identity,
        )
        return self.groupoid

    def probe_dynamics(self) -> None:
        bound, margin = self.settings.bound, self.settings.margin
        self.g0_results = [g0_probe(self.family, g) for g in self.sample_elements()]
        self.top_free = [
            top_free_probe(self.family, result.g, self.boundary, bound, margin)
            for result in self.g0_results
            if result.verdict == IN_G0
        ]
        self.local_boundary = local_boundary_witness(self.family, self.witness_open_set(), self.boundary, bound)

    # Helper functions

    def sample_elements(self) -> list[GroupElement]:
        """Seeded sample of nontrivial elements of the group ball, in ball order."""
        ball = [g for g in self.amb.group_ball(self.settings.bound) if not is_identity(g)]
        if len(ball) <= self.settings.samples:
            return ball
        chosen = set(random.Random(self.settings.seed).sample(range(len(ball)), self.settings.samples))
        return [g for position, g in enumerate(ball) if position in chosen]

    def witness_open_set(self) -> BasicOpen:
        """Smallest basic open of the first boundary ultrafilter, or all of the spectrum."""
        for f in self.boundary:
            if is_relative_ultrafilter(self.family, f):
                return smallest_basic_open(self.family, f)
        return BasicOpen(FULL_INDEX)

    def to_dossier(self) -> Dossier:
        amb, family, settings = self.amb, self.family, self.settings
        reversibility = next(report for report in self.conditions if report.condition == "reversible")
        checklist = kirchberg_checklist(
            family, settings.bound, reversibility=reversibility, evidence=self.top_free, margin=settings.margin
        )
        notes = [note for note in (amb.metadata.truncation_note, amb.metadata.boundary_note) if note]
        if not amb.exact:
            notes.append("bounded model: every answer is read off a finite window")
        return Dossier(
            schema_version=DOSSIER_SCHEMA_VERSION,
            tool_version=TOOL_VERSION,
            family_id=amb.family_id,
            semigroup=self.source,
            description=amb.metadata.description,
            ambient=amb.metadata.ambient,
            generators=[format_element(g) for g in amb.generators],
            exact=amb.exact,
            depth=settings.depth,
            bound=settings.bound,
            seed=settings.seed,
            margin=settings.margin,
            hull_depth=settings.hull_depth,
            toeplitz_budget=settings.toeplitz_budget,
            family=FamilySummary(
                depth=family.depth,
                nonempty_count=family.nonempty_count,
                truncated=family.truncated,
                budget_exhausted=family.budget_exhausted,
                stabilized_at=family.stabilized_at,
                ideals=family.formatted(),
                provenance=[list(steps) for steps in family.provenance],
                levels=list(family.levels),
            ),
            independence=IndependenceReport(
                verdict=self.independence.verdict,
                ideal=None if self.independence.ideal is None else family.format(self.independence.ideal),
                union=[family.format(j) for j in self.independence.union],
                bounded=self.independence.bounded,
            ),
            conditions=self.conditions,
            hull=HullSummary(
                depth=self.hull.depth,
                size=len(self.hull.nonzero),
                truncated=self.hull.truncated,
                abstract_faithful=self.independence.verdict == INDEPENDENT,
                elements=[format_isometry(amb, s) for s in self.hull.elements],
                words=[format_word(s.word) if not s.is_zero else "0" for s in self.hull.elements],
            ),
            spectrum=SpectrumSummary(
                depth_label=f"relative to the depth-{family.depth} family of {family.nonempty_count} ideals",
                filter_count=len(self.filters),
                ultrafilter_count=len(self.ultrafilters),
                boundary_size=len(self.boundary),
                boundary=[format_filter(family, f) for f in self.boundary],
                invariance=self.invariance,
                margin=settings.margin,
            ),
            groupoid=self.groupoid,
            g0_samples=[self._g0_sample(result) for result in self.g0_results],
            top_free=[self._top_free_evidence(result) for result in self.top_free],
            local_boundary=self._local_boundary_report(),
            checklist=checklist,
            notes=notes,
        )

    def _g0_sample(self, result: G0Result) -> G0Sample:
        return G0Sample(
            g=format_element(result.g),
            verdict=result.verdict,
            translate=None if result.translate is None else format_element(result.translate),
            witness=None if result.witness is None else self.family.format(result.witness),
        )

    def _top_free_evidence(self, result: TopFreeResult) -> TopFreeEvidence:
        evidence = TopFreeEvidence(g=format_element(result.g), verdict=result.verdict)
        if result.filter is not None:
            evidence.filter = format_filter(self.family, result.filter)
            evidence.shift = format_element(result.shift)
            evidence.base = self.family.format(result.base)
        return evidence

    def _local_boundary_report(self) -> LocalBoundaryReport:
        result = self.local_boundary
        report = LocalBoundaryReport(verdict=result.verdict)
        if result.x is not None:
            report.x = format_element(result.x)
            report.p = format_element(result.p)
            report.q = format_element(result.q)
            report.g_prime = format_element(result.g_prime)
            report.delta = self.amb.model.format_ideal(result.delta)
        return report
