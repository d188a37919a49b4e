"""
Lemma Service - Runs every structural check over families of Kummer sets.

The family is either every inclusion-maximal Kummer set of a single factor
(exhaustive mode) or the standard basis of the shape.
"""

from typing import Iterable, Optional, Tuple

from src.application.dtos.kummer_dtos import BlockRow, CheckResult, LemmaReport
from src.application.services.brute_force import enumerate_maximal_sets
from src.application.services.construction import standard_basis
from src.application.services.graph_checks import (
    a_priori_block_configurations,
    build_graph,
    check_arrow_path,
    check_edge_trichotomy,
    check_forbidden_quads,
    classify_block,
    graph_from_phases,
    run_core_checks,
)
from src.application.services.kummer_criterion import is_kummer_set
from src.common.constants.graph_constants import GraphDegree
from src.common.exceptions.exceptions import UnsupportedDegreeError
from src.common.utils.logger import get_logger, log_lemma_event
from src.domain.models.algebra import AlgebraShape, ExponentVector

logger = get_logger(__name__)

KUMMER_CERTIFIED = "kummer_certified"


def block_table() -> Iterable[BlockRow]:
    """Classification of the 8 a-priori block configurations."""
    for config in a_priori_block_configurations():
        block = classify_block(config)
        quad = check_forbidden_quads(graph_from_phases(config))
        yield BlockRow((config[0][3], config[1][2], config[1][3]), block.value, not quad.ok)


def check_set(shape: AlgebraShape, members: Tuple[ExponentVector, ...], report: LemmaReport) -> None:
    """Certify one set and run every graph check on it."""
    violation = is_kummer_set(shape, members)
    report.record(members, CheckResult(
        KUMMER_CERTIFIED,
        None if violation is None else tuple(range(len(members))),
        "" if violation is None else f"fails with multiplicities {violation.multiplicities}"))
    graph = build_graph(shape, members)
    for result in run_core_checks(graph):
        report.record(members, result)
    report.record(members, check_edge_trichotomy(graph))
    report.record(members, check_arrow_path(graph))


def run_lemma_suite(shape: AlgebraShape, exhaustive: bool = False,
                    sets: Optional[Iterable[Tuple[ExponentVector, ...]]] = None) -> LemmaReport:
    """
    Run the structural checks.

    Args:
        shape: Degree-4 algebra shape
        exhaustive: Use every maximal Kummer set (n=1 only) instead of the standard basis
        sets: Explicit family, overrides both modes

    Returns:
        LemmaReport with per-check counts and the block table

    Raises:
        UnsupportedDegreeError: If d != 4
        CapacityError: If exhaustive mode is asked for n >= 2
    """
    if shape.degree != GraphDegree.SUPPORTED:
        raise UnsupportedDegreeError(f"{GraphDegree.UNSUPPORTED_MESSAGE}, got d={shape.degree}")
    if sets is None:
        sets = enumerate_maximal_sets(shape) if exhaustive else [standard_basis(shape)]
    report = LemmaReport()
    for members in sets:
        if len(members) < 2:
            continue
        report.instances += 1
        check_set(shape, tuple(members), report)
    report.blocks = list(block_table())

    for name, count in report.violations.items():
        level = "WARNING" if count else "DEBUG"
        log_lemma_event(logger, name, f"{count} violations over {report.checked[name]} sets", level)
    logger.info(f"lemma suite on {shape.label}: {report.instances} sets, "
                f"{report.total_violations} violations, {report.admissible_blocks}/8 admissible blocks")
    return report
