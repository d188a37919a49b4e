"""
CLI Commands - argparse surface of Kummer Lab.

Each command handler takes the parsed arguments and the application
configuration and returns an exit code (see ExitCodes). Reports go to
stdout; logs go to the log file and, with --verbose, to stderr.
"""

import argparse
from typing import Callable, List

from src.application.dtos.kummer_dtos import MultisetSpec
from src.application.dtos.search_dtos import SearchConfig
from src.application.services.brute_force import enumerate_maximal_sets
from src.application.services.construction import standard_basis
from src.application.services.graph_checks import build_graph
from src.application.services.kummer_criterion import is_kummer_set, symmetric_coefficient
from src.application.services.lemma_service import run_lemma_suite
from src.application.services.search_service import max_kummer_dimension
from src.common.config.app_config import AppConfig
from src.common.constants.app_constants import AppInfo, ExitCodes, LogSettings
from src.common.constants.search_constants import SearchDefaults
from src.common.utils.logger import get_logger
from src.domain.models.algebra import AlgebraShape, product_exponent
from src.infrastructure.export.dot_exporter import write_dot
from src.infrastructure.persistence.basis_document import BasisDocument, write_json

logger = get_logger(__name__)

Handler = Callable[[argparse.Namespace, AppConfig], int]


def _multiplicities(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("at least one multiplicity is required")
    return values


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number of seconds, got {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"timeout must be positive, got {text}")
    return value


def _format_vectors(vectors) -> str:
    return " ".join(str(v) for v in vectors)


def cmd_construct(args: argparse.Namespace, config: AppConfig) -> int:
    """Write the standard basis of V_n as a basis document."""
    shape = AlgebraShape(args.d, args.n)
    document = BasisDocument(shape, standard_basis(shape))
    document.save(args.out)
    logger.info(f"constructed {len(document.basis)} monomials for {shape.label}")
    return ExitCodes.OK


def cmd_check(args: argparse.Namespace, config: AppConfig) -> int:
    """Run the Kummer criterion on a basis document."""
    document = BasisDocument.load(args.file)
    violation = is_kummer_set(document.shape, document.basis)
    if args.json:
        write_json(None, {
            "d": document.shape.degree,
            "n": document.shape.factors,
            "size": len(document.basis),
            "kummer": violation is None,
            "violation": None if violation is None else violation.to_dict(),
        })
    elif violation is None:
        print(f"Kummer: yes ({len(document.basis)} monomials, {document.shape.label})")
    else:
        print("Kummer: no")
        print(f"subset: {_format_vectors(violation.subset)}")
        print(f"multiplicities: {tuple(violation.multiplicities)}")
        print(f"c = {violation.coefficient.render()}  {violation.coefficient.to_list()}")
        print(f"exponent: {violation.exponent}")
    return ExitCodes.OK if violation is None else ExitCodes.VIOLATION


def cmd_graph(args: argparse.Namespace, config: AppConfig) -> int:
    """Emit the DOT graph of a degree-4 basis."""
    document = BasisDocument.load(args.file)
    graph = build_graph(document.shape, document.basis)
    write_dot(graph, args.dot)
    return ExitCodes.OK


def cmd_coeff(args: argparse.Namespace, config: AppConfig) -> int:
    """Symmetric-product coefficient of the document's monomials."""
    document = BasisDocument.load(args.file)
    spec = MultisetSpec(document.basis, tuple(args.mults))
    c = symmetric_coefficient(document.shape, spec)
    exponent = product_exponent(document.shape, spec.items)
    print(f"c = {c.render()}")
    print(f"coefficient: {c.to_list()}")
    print(f"exponent: {exponent}")
    print(f"scalar product: {'yes' if exponent.is_zero() else 'no'}")
    return ExitCodes.OK


def cmd_search(args: argparse.Namespace, config: AppConfig) -> int:
    """Maximum Kummer-set search."""
    shape = AlgebraShape(args.d, args.n)
    search_config = SearchConfig.from_settings(
        config.search,
        use_symmetry=False if args.no_symmetry else None,
        symmetry_depth=args.symmetry_depth,
        deterministic=True if args.deterministic else None,
        time_budget=args.timeout,
        target=args.target,
        max_workers=1 if args.deterministic else args.workers,
    )
    result = max_kummer_dimension(shape, search_config)
    print(f"max = {result.max_size}")
    print(f"complete: {'yes' if result.complete else 'no'} ({result.stop_reason})")
    print(f"witness: {_format_vectors(result.witness)}")
    print(f"nodes: {result.explored_nodes}")
    print(f"time: {int(round(result.elapsed * 1000))} ms")
    if args.json:
        write_json(args.json, result.to_dict())
    return ExitCodes.OK if result.complete else ExitCodes.INCOMPLETE


def cmd_verify_lemmas(args: argparse.Namespace, config: AppConfig) -> int:
    """Run the structural-check suite."""
    shape = AlgebraShape(args.d, args.n)
    report = run_lemma_suite(shape, exhaustive=args.exhaustive)
    source = "maximal Kummer sets" if args.exhaustive else "standard basis"
    print(f"{report.instances} sets checked ({source}, {shape.label})")
    for name in report.checked:
        print(f"  {name}: {report.violations[name]} violations / {report.checked[name]} sets")
    for members, result in report.failures:
        print(f"  FAIL {result.check} on {_format_vectors(members)}: {result.detail}")
    print(f"blocks: {report.admissible_blocks} admissible of {len(report.blocks)}")
    for row in report.blocks:
        agreement = "" if row.consistent else "  (disagrees with forbidden_quads)"
        print(f"  {row.orientations} -> {row.block_type}{agreement}")
    print(f"total violations: {report.total_violations}")
    if args.json:
        write_json(args.json, report.to_dict())
    return ExitCodes.OK if report.total_violations == 0 else ExitCodes.VIOLATION


def cmd_enumerate(args: argparse.Namespace, config: AppConfig) -> int:
    """List every inclusion-maximal Kummer set (n=1)."""
    shape = AlgebraShape(args.d, args.n)
    sets = enumerate_maximal_sets(shape)
    print(f"{len(sets)} maximal Kummer sets ({shape.label})")
    for members in sets:
        print(f"  [{len(members)}] {_format_vectors(members)}")
    if args.json:
        write_json(args.json, {
            "d": shape.degree,
            "n": shape.factors,
            "sets": [[list(v.entries) for v in members] for members in sets],
        })
    return ExitCodes.OK


def _add_shape(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--d", type=int, required=True, help="degree d >= 2")
    parser.add_argument("--n", type=int, required=True, help="number of tensor factors n >= 1")


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with every subcommand."""
    parser = argparse.ArgumentParser(
        prog=AppInfo.PROG,
        description="Monomial Kummer subspaces of tensor products of cyclic algebras.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {AppInfo.VERSION}")
    parser.add_argument("--verbose", action="store_true", help="log to stderr as well")
    parser.add_argument("--log-level", choices=LogSettings.LEVELS, default=None)
    parser.add_argument("--config", default=None, help="configuration JSON file")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("construct", help="write the standard dn+1 basis")
    _add_shape(p)
    p.add_argument("--out", default=None, help="output path (stdout if omitted)")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("check", help="test whether a basis spans a Kummer space")
    p.add_argument("--file", required=True)
    p.add_argument("--json", action="store_true", help="print a JSON report")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("graph", help="DOT graph of a d=4 basis")
    p.add_argument("--file", required=True)
    p.add_argument("--dot", default=None, help="output path (stdout if omitted)")
    p.set_defaults(handler=cmd_graph)

    p = sub.add_parser("coeff", help="symmetric-product coefficient")
    p.add_argument("--file", required=True)
    p.add_argument("--mults", type=_multiplicities, required=True, help="e.g. 2,1,1")
    p.set_defaults(handler=cmd_coeff)

    p = sub.add_parser("search", help="largest monomial Kummer set")
    _add_shape(p)
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--symmetry-depth", type=int, choices=SearchDefaults.SYMMETRY_DEPTHS, default=None)
    p.add_argument("--deterministic", action="store_true", help="single process, fixed order")
    p.add_argument("--timeout", type=_positive_float, default=None, help="time budget in seconds")
    p.add_argument("--target", type=int, default=None, help="stop once a set this large is found")
    p.add_argument("--workers", type=int, default=None, help="worker process cap")
    p.add_argument("--json", default=None, metavar="PATH", help="write the result as JSON")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("verify-lemmas", help="run the d=4 structural checks")
    _add_shape(p)
    p.add_argument("--exhaustive", action="store_true", help="all maximal Kummer sets (n=1)")
    p.add_argument("--json", default=None, metavar="PATH")
    p.set_defaults(handler=cmd_verify_lemmas)

    p = sub.add_parser("enumerate", help="all maximal Kummer sets (n=1)")
    _add_shape(p)
    p.add_argument("--json", default=None, metavar="PATH")
    p.set_defaults(handler=cmd_enumerate)
    return parser
