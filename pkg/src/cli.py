"""
Command-line interface for jcolour.

Usage:
    python -m src.cli compute --family cycle --n 6
    python -m src.cli compute --graph "K1,4" --mode internal
    python -m src.cli derive --graph P5 --kind middle
    python -m src.cli combine --left K1 --right C6 --kind corona
    python -m src.cli extremal --family complete --n 4 --k 3
    python -m src.cli repair --graph C5
    python -m src.cli table --family cycle --from 3 --to 12
    python -m src.cli verify --config config/default_corpus.json --export-md report.md
    python -m src.cli cache stats

Exit status: 0 success, 1 hard claim failure, 2 usage error, 3 scale refusal.
"""

import argparse
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from src.colouring.base import count_proper_colourings, format_colouring, is_proper, parse_colouring
from src.colouring.chromatic import chromatic_number
from src.db import ProfileCache
from src.errors import ColouringError, GraphError, HarnessError, ScaleLimitExceeded
from src.exporters import BONDING_COLUMNS, TABLE_COLUMNS, MarkdownExporter, TXTExporter, write_report, write_rows
from src.extremal import Semantics, bonding_profile, bonding_result, minimal_repair
from src.graph import (
    CombineKind,
    DerivativeKind,
    Graph,
    GraphFamily,
    GraphFormat,
    GraphSpec,
    combine,
    derive,
    parse_graph,
    parse_graph_spec,
    serialize_graph,
)
from src.rainbow import JProfile, RainbowMode, j_profile, rainbow_neighbourhood_number, validate_rainbow_colouring
from src.settings import DEFAULT_CACHE_PATH, DEFAULT_WORKERS, LOG_LEVEL, MAX_SWEEP_ORDER
from src.verify import CorpusConfig, run_verification
from src.version import get_version_info

logger = logging.getLogger(__name__)

MODE_CHOICES = {
    "all": [RainbowMode.ALL_VERTICES],
    "internal": [RainbowMode.INTERNAL_ONLY],
    "both": [RainbowMode.ALL_VERTICES, RainbowMode.INTERNAL_ONLY],
}
MODE_SYMBOL = {RainbowMode.ALL_VERTICES: "J", RainbowMode.INTERNAL_ONLY: "J*"}


# ============================================================================
# Input and output helpers
# ============================================================================

def resolve_graph(args) -> Tuple[str, Graph]:
    """
    Build the input graph from exactly one of --graph, --family or --input.

    Returns:
        (instance label, graph)
    """
    chosen = [name for name in ("graph", "family", "input") if getattr(args, name, None) is not None]
    if len(chosen) != 1:
        raise ValueError("exactly one of --graph, --family or --input is required")

    if args.graph is not None:
        spec = parse_graph_spec(args.graph)
        return spec.label(), spec.build()
    if args.family is not None:
        spec = GraphSpec.member(args.family, n=args.n, m=args.m, seed=args.seed, edge_probability=args.p)
        return spec.label(), spec.build()

    path = Path(args.input)
    if not path.exists():
        raise FileNotFoundError(f"Graph file not found: {args.input}")
    return path.name, parse_graph(path.read_text(encoding="utf-8"), args.input_format)


def emit(args, text: Callable[[], str], payload: Callable[[], Any],
         csv_columns: Sequence[str], csv_rows: Callable[[], List[dict]]) -> None:
    """Render in the requested format and write to --output or stdout."""
    if args.format == "json":
        content = json.dumps(payload(), indent=2, ensure_ascii=False) + "\n"
    elif args.format == "csv":
        buffer = io.StringIO()
        write_rows(buffer, csv_columns, csv_rows())
        content = buffer.getvalue()
    else:
        content = text()

    if args.output:
        Path(args.output).parent.mkdir(parents=True, exist_ok=True)
        Path(args.output).write_text(content, encoding="utf-8")
        logger.info(f"Output written to: {args.output}")
    else:
        sys.stdout.write(content)


def _witness(profile: JProfile, k: Optional[int]) -> Optional[str]:
    if k is None or k not in profile.witnesses:
        return None
    return format_colouring(profile.witnesses[k])


def _indented(block: str, prefix: str = "    ") -> List[str]:
    return [prefix + line for line in block.splitlines()]


def _ks(values: List[int]) -> str:
    return " ".join(str(k) for k in values) or "none"


def _graph_payload(label: str, graph: Graph) -> dict:
    return {
        "instance": label,
        "order": graph.order,
        "size": graph.size,
        "edges": [list(edge) for edge in graph.edges()],
        "graph6": serialize_graph(graph, GraphFormat.GRAPH6) if graph.order else "",
    }


def _emit_graph(args, label: str, graph: Graph) -> None:
    text_format = GraphFormat.GRAPH6 if args.as_graph6 else GraphFormat.EDGE_LIST

    def text() -> str:
        content = serialize_graph(graph, text_format)
        return content if content.endswith("\n") else content + "\n"

    emit(
        args,
        text=text,
        payload=lambda: _graph_payload(label, graph),
        csv_columns=["u", "v"],
        csv_rows=lambda: [{"u": u, "v": v} for u, v in graph.edges()],
    )


# ============================================================================
# compute
# ============================================================================

def _profiles(graph: Graph, modes: List[RainbowMode], cache_path: Optional[str]) -> Dict[RainbowMode, JProfile]:
    if not cache_path:
        return {mode: j_profile(graph, mode) for mode in modes}
    with ProfileCache(cache_path) as cache:
        return {mode: cache.get_or_compute(graph, mode) for mode in modes}


def _check_colouring(graph: Graph, path: str) -> dict:
    """Parse a colouring file and test it against the graph."""
    colouring = parse_colouring(Path(path).read_text(encoding="utf-8"), order=graph.order)
    return {
        "k": colouring.k,
        "proper": is_proper(graph, colouring),
        "J": validate_rainbow_colouring(graph, colouring, RainbowMode.ALL_VERTICES),
        "J*": validate_rainbow_colouring(graph, colouring, RainbowMode.INTERNAL_ONLY),
    }


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_compute(args):
    """χ, r_χ, J-profiles and witnesses of one graph."""
    label, graph = resolve_graph(args)
    logger.info(f"Computing {label} (n={graph.order}, p={graph.size})")

    chi = chromatic_number(graph)
    rainbow = chi_colourings = None
    if 1 <= graph.order <= MAX_SWEEP_ORDER:
        rainbow = rainbow_neighbourhood_number(graph)
        chi_colourings = count_proper_colourings(graph, chi.number)
    profiles = _profiles(graph, MODE_CHOICES[args.mode], args.cache)
    check = _check_colouring(graph, args.colouring) if args.colouring else None

    def payload() -> dict:
        return {
            "instance": label,
            "order": graph.order,
            "size": graph.size,
            "chi": chi.number,
            "chi_colouring": list(chi.colouring.colour_of),
            "proper_chi_colourings": chi_colourings,
            "r_chi": None if rainbow is None else {
                "canonical": rainbow.canonical,
                "canonical_vertices": rainbow.canonical_vertices,
                "minimum": rainbow.minimum,
                "maximum": rainbow.maximum,
                "colourings_examined": rainbow.colourings_examined,
            },
            "profiles": {
                MODE_SYMBOL[mode]: {
                    **profile.to_summary(),
                    "upper_bound": profile.upper_bound,
                    "convention_applied": profile.convention_applied,
                    "witness": _witness(profile, profile.j_value),
                }
                for mode, profile in profiles.items()
            },
            "colouring_check": check,
        }

    def text() -> str:
        lines = [
            f"Instance: {label}",
            f"Order: {graph.order}  Size: {graph.size}",
            f"chi = {chi.number}",
        ]
        if rainbow is not None:
            lines.append(
                f"r_chi = {rainbow.canonical} (chi-minus colouring), "
                f"range {rainbow.minimum}..{rainbow.maximum} over {rainbow.colourings_examined} colourings"
            )
            lines.append(f"proper chi-colourings = {chi_colourings}")
        for mode, profile in profiles.items():
            symbol = MODE_SYMBOL[mode]
            value = "inadmissible" if profile.j_value is None else profile.j_value
            lines.append(f"{symbol} = {value}")
            lines.append(f"  feasible k: {_ks(profile.feasible_k)}")
            witness = _witness(profile, profile.j_value)
            if witness is not None:
                lines.append("  witness:")
                lines.extend(_indented(witness))
            if profile.convention_applied:
                lines.append("  (edgeless graph: value fixed by convention)")
        if check is not None:
            lines.append(
                f"Colouring check: k = {check['k']}, proper = {_yes(check['proper'])}, "
                f"J-colouring = {_yes(check['J'])}, J*-colouring = {_yes(check['J*'])}"
            )
        return "\n".join(lines) + "\n"

    def csv_rows() -> List[dict]:
        j = profiles.get(RainbowMode.ALL_VERTICES)
        j_star = profiles.get(RainbowMode.INTERNAL_ONLY)
        return [_table_row(label, graph, chi.number, j, j_star)]

    emit(args, text, payload, TABLE_COLUMNS, csv_rows)
    return 0


def _table_row(label: str, graph: Graph, chi: int, j: Optional[JProfile], j_star: Optional[JProfile]) -> dict:
    return {
        "instance": label,
        "order": graph.order,
        "size": graph.size,
        "chi": chi,
        "j": "" if j is None else (j.j_value if j.admissible else "inadmissible"),
        "j_star": "" if j_star is None else (j_star.j_value if j_star.admissible else "inadmissible"),
        "j_feasible": "" if j is None else _ks(j.feasible_k),
        "j_star_feasible": "" if j_star is None else _ks(j_star.feasible_k),
    }


# ============================================================================
# derive / combine
# ============================================================================

def cmd_derive(args):
    label, graph = resolve_graph(args)
    kind = DerivativeKind(args.kind)
    derived = derive(graph, kind)
    logger.info(f"{kind.value} of {label}: n={derived.order}, p={derived.size}")
    _emit_graph(args, f"{kind.value}({label})", derived)
    return 0


def cmd_combine(args):
    left, right = parse_graph_spec(args.left), parse_graph_spec(args.right)
    kind = CombineKind(args.kind)
    combined = combine(left.build(), right.build(), kind)
    spec = left.combined(right, kind)
    logger.info(f"{spec.label()}: n={combined.order}, p={combined.size}")
    _emit_graph(args, spec.label(), combined)
    return 0


# ============================================================================
# extremal / repair
# ============================================================================

def _edges_text(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges or []) or "-"


def cmd_extremal(args):
    """Bonding variables for one k, or the full bonding profile."""
    label, graph = resolve_graph(args)
    semantics = Semantics(args.semantics)

    if args.k is not None:
        result = bonding_result(graph, args.k, semantics, args.workers)

        def text() -> str:
            if not result.defined:
                return f"{label}: admits no J-colouring; bonding variables undefined\n"
            return "\n".join([
                f"Instance: {label}  k = {result.k}  semantics = {semantics.value}",
                f"r- = {'unreachable' if result.r_minus is None else result.r_minus}"
                f"  witness: {_edges_text(result.r_minus_witness)}",
                f"r+ = {'unreachable' if result.r_plus is None else result.r_plus}"
                f"  witness: {_edges_text(result.r_plus_witness)}",
            ]) + "\n"

        def csv_rows() -> List[dict]:
            return [{
                "k": result.k,
                "r_minus": result.r_minus,
                "r_plus": result.r_plus,
                "semantics": semantics.value,
                "witness_edges": " ".join(f"{u}-{v}" for u, v in result.r_minus_witness or []),
            }]

        emit(args, text, lambda: {"instance": label, **result.model_dump(mode="json")}, BONDING_COLUMNS, csv_rows)
        return 0

    profile = bonding_profile(graph, semantics, args.workers)
    emit(
        args,
        text=lambda: _bonding_text(label, profile),
        payload=lambda: {"instance": label, **profile.model_dump(mode="json")},
        csv_columns=BONDING_COLUMNS,
        csv_rows=profile.to_csv_rows,
    )
    return 0


def _bonding_text(label: str, profile) -> str:
    if not profile.defined:
        return f"{label}: admits no J-colouring; bonding variables undefined\n"
    lines = [
        f"Instance: {label}  J = {profile.j_value}  semantics = {profile.semantics.value}",
        f"{'k':>3} {'r-':>4} {'r+':>4} {'step':>5} {'total':>6}  r- witness",
    ]
    for row in profile.rows:
        result = row.result
        lines.append(
            f"{result.k:>3} {_cell(result.r_minus):>4} {_cell(result.r_plus):>4} "
            f"{_cell(row.step_removed):>5} {_cell(row.cumulative):>6}  {_edges_text(result.r_minus_witness)}"
        )
    return "\n".join(lines) + "\n"


def _cell(value: Optional[int]) -> str:
    return "-" if value is None else str(value)


def cmd_repair(args):
    """Minimum edge removal that makes the graph admit a J-colouring."""
    label, graph = resolve_graph(args)
    repair = minimal_repair(graph, args.workers)
    repaired = graph.without_edges(repair.edges)
    profile = bonding_profile(repaired, args.semantics, args.workers) if args.profile else None

    def text() -> str:
        lines = [f"Instance: {label}"]
        if repair.already_admissible:
            lines.append(f"Already admits a J-colouring (J = {repair.repaired_j})")
        else:
            lines.append(f"Removed {repair.size} edge(s): {_edges_text(repair.edges)}")
            lines.append(f"J after repair = {repair.repaired_j}")
        if repair.spanning_tree_bound is not None:
            lines.append(f"Spanning-tree bound p-(n-1) = {repair.spanning_tree_bound}")
        content = "\n".join(lines) + "\n"
        if profile is not None:
            content += "\n" + _bonding_text(f"{label} repaired", profile)
        return content

    def payload() -> dict:
        data = {"instance": label, **repair.model_dump(mode="json")}
        if profile is not None:
            data["repaired_profile"] = profile.model_dump(mode="json")
        return data

    emit(
        args, text, payload,
        BONDING_COLUMNS if profile is not None else ["edge"],
        (profile.to_csv_rows if profile is not None
         else lambda: [{"edge": f"{u}-{v}"} for u, v in repair.edges]),
    )
    return 0


# ============================================================================
# table
# ============================================================================

def cmd_table(args):
    """J / J* across a family range."""
    if args.start > args.stop:
        raise ValueError(f"--from {args.start} exceeds --to {args.stop}")
    rows, payload = [], []
    for n in range(args.start, args.stop + 1):
        spec = GraphSpec.member(args.family, n=n, m=args.m, seed=args.seed, edge_probability=args.p)
        graph = spec.build()
        j = j_profile(graph, RainbowMode.ALL_VERTICES)
        j_star = j_profile(graph, RainbowMode.INTERNAL_ONLY)
        rows.append(_table_row(spec.label(), graph, chromatic_number(graph).number, j, j_star))
        payload.append({"instance": spec.label(), "j": j.to_summary(), "j_star": j_star.to_summary()})

    def text() -> str:
        lines = [f"{'instance':<16} {'n':>3} {'p':>4} {'chi':>4} {'J':>13} {'J*':>13}"]
        for row in rows:
            lines.append(
                f"{row['instance']:<16} {row['order']:>3} {row['size']:>4} {row['chi']:>4} "
                f"{str(row['j']):>13} {str(row['j_star']):>13}"
            )
        return "\n".join(lines) + "\n"

    emit(args, text, lambda: payload, TABLE_COLUMNS, lambda: rows)
    return 0


# ============================================================================
# verify
# ============================================================================

def cmd_verify(args):
    """Run the claim harness; exit 1 on any refuted hard claim."""
    config = CorpusConfig.from_file(args.config) if args.config else CorpusConfig()
    overrides = {}
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.timings:
        overrides["timings"] = True
    if args.cache:
        overrides["cache_path"] = args.cache
    if overrides:
        config = CorpusConfig.model_validate({**config.model_dump(), **overrides})

    report = run_verification(config, claim_ids=args.claim)

    if args.export_md:
        output = MarkdownExporter().export(report, Path(args.export_md))
        logger.info(f"Markdown report exported to: {output}")
    if args.export_txt:
        output = TXTExporter().export(report, Path(args.export_txt))
        logger.info(f"TXT report exported to: {output}")

    def csv_content() -> str:
        buffer = io.StringIO()
        write_report(buffer, report, config.timings)
        return buffer.getvalue()

    if args.format == "json":
        content = report.to_json(timings=config.timings) + "\n"
    elif args.format == "csv":
        content = csv_content()
    else:
        content = TXTExporter().render(report)

    if args.output:
        Path(args.output).parent.mkdir(parents=True, exist_ok=True)
        Path(args.output).write_text(content, encoding="utf-8")
        summary = report.summary
        print("\n" + "=" * 60)
        print("VERIFICATION SUMMARY")
        print("=" * 60)
        print(f"Confirmed:      {summary.confirmed}")
        print(f"Refuted:        {summary.refuted} ({summary.hard_failures} hard)")
        print(f"Report-only:    {summary.report_only}")
        print(f"Not applicable: {summary.not_applicable}")
        print(f"Report written to: {args.output}")
        print("=" * 60)
    else:
        sys.stdout.write(content)

    return 0 if report.ok else 1


# ============================================================================
# cache
# ============================================================================

def cmd_cache_stats(args):
    with ProfileCache(args.cache) as cache:
        stats = cache.get_stats()

    print("\n" + "=" * 60)
    print("PROFILE CACHE STATISTICS")
    print("=" * 60)
    print(f"\nEntries:       {stats.total_entries}")
    print(f"Hits:          {stats.total_hits}")
    print(f"Misses:        {stats.total_misses}")
    print(f"Hit rate:      {stats.hit_rate * 100:.2f}%")
    print(f"Database size: {stats.cache_size_bytes / 1024:.1f} KB")
    print(f"Stale entries: {stats.stale_entries}")
    if stats.entries_by_mode:
        print("\nBy mode:")
        for mode, count in stats.entries_by_mode.items():
            print(f"  - {mode}: {count}")
    print("\n" + "=" * 60 + "\n")
    return 0


def cmd_cache_clear(args):
    if not args.force:
        confirm = input("Clear every cached profile? This cannot be undone (type 'yes'): ")
        if confirm.lower() != "yes":
            print("Cancelled")
            return 0
    with ProfileCache(args.cache) as cache:
        removed = cache.clear_all()
    print(f"\nCleared {removed} cached profiles\n")
    return 0


# ============================================================================
# Parser
# ============================================================================

def _add_output_args(parser: argparse.ArgumentParser, default_format: str):
    parser.add_argument("--format", choices=["json", "csv", "text"], default=default_format,
                        help=f"Output format (default: {default_format})")
    parser.add_argument("--output", "-o", help="Write output to this file instead of stdout")


def _add_graph_args(parser: argparse.ArgumentParser):
    source = parser.add_argument_group("graph source (exactly one)")
    source.add_argument("--graph", "-g", help='Graph name, e.g. "C6", "K1,4", "M(P5)", "K1 o C6"')
    source.add_argument("--family", choices=[f.value for f in GraphFamily], help="Standard family")
    source.add_argument("--input", "-i", help="Graph file")
    parser.add_argument("--n", type=int, help="Family order (number of leaves for star)")
    parser.add_argument("--m", type=int, help="Second part size for complete_bipartite")
    parser.add_argument("--seed", type=int, help="Seed for random_tree / random_graph")
    parser.add_argument("--p", type=float, default=0.5, help="Edge probability for random_graph")
    parser.add_argument("--input-format", choices=[f.value for f in GraphFormat],
                        default=GraphFormat.EDGE_LIST.value, help="Format of --input")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jcolour",
        description="Exact J / J* colouring solvers, graph operations and claim verification",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"jcolour {get_version_info()['display']}")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # compute
    parser_compute = subparsers.add_parser("compute", help="chi, r_chi, J and J* of a graph")
    _add_graph_args(parser_compute)
    parser_compute.add_argument("--mode", choices=list(MODE_CHOICES), default="both",
                                help="all = J, internal = J*, both (default)")
    parser_compute.add_argument("--colouring", metavar="FILE",
                                help="Check a colouring file ('k' header, then 'v colour' lines)")
    parser_compute.add_argument("--cache", nargs="?", const=DEFAULT_CACHE_PATH,
                                help=f"Use the profile cache (default path: {DEFAULT_CACHE_PATH})")
    _add_output_args(parser_compute, "text")
    parser_compute.set_defaults(func=cmd_compute)

    # derive
    parser_derive = subparsers.add_parser("derive", help="Derived graph (line, middle, total, ...)")
    _add_graph_args(parser_derive)
    parser_derive.add_argument("--kind", required=True, choices=[k.value for k in DerivativeKind])
    parser_derive.add_argument("--as-graph6", action="store_true", help="Text output as graph6")
    _add_output_args(parser_derive, "text")
    parser_derive.set_defaults(func=cmd_derive)

    # combine
    parser_combine = subparsers.add_parser("combine", help="Corona, join, cartesian product or union")
    parser_combine.add_argument("--left", required=True, help="Left operand graph name")
    parser_combine.add_argument("--right", required=True, help="Right operand graph name")
    parser_combine.add_argument("--kind", required=True, choices=[k.value for k in CombineKind])
    parser_combine.add_argument("--as-graph6", action="store_true", help="Text output as graph6")
    _add_output_args(parser_combine, "text")
    parser_combine.set_defaults(func=cmd_combine)

    # extremal
    parser_extremal = subparsers.add_parser("extremal", help="Rainbow bonding variables")
    _add_graph_args(parser_extremal)
    parser_extremal.add_argument("--k", type=int, help="Target J value (default: every k)")
    parser_extremal.add_argument("--semantics", choices=[s.value for s in Semantics],
                                 default=Semantics.PLAIN.value)
    parser_extremal.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    _add_output_args(parser_extremal, "text")
    parser_extremal.set_defaults(func=cmd_extremal)

    # repair
    parser_repair = subparsers.add_parser("repair", help="Minimum removal making a graph admissible")
    _add_graph_args(parser_repair)
    parser_repair.add_argument("--profile", action="store_true", help="Also bond the repaired graph")
    parser_repair.add_argument("--semantics", choices=[s.value for s in Semantics],
                               default=Semantics.PLAIN.value)
    parser_repair.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    _add_output_args(parser_repair, "text")
    parser_repair.set_defaults(func=cmd_repair)

    # table
    parser_table = subparsers.add_parser("table", help="J / J* across a family range")
    parser_table.add_argument("--family", required=True, choices=[f.value for f in GraphFamily])
    parser_table.add_argument("--from", dest="start", type=int, required=True)
    parser_table.add_argument("--to", dest="stop", type=int, required=True)
    parser_table.add_argument("--m", type=int)
    parser_table.add_argument("--seed", type=int)
    parser_table.add_argument("--p", type=float, default=0.5)
    _add_output_args(parser_table, "csv")
    parser_table.set_defaults(func=cmd_table)

    # verify
    parser_verify = subparsers.add_parser("verify", help="Run the claim verification harness")
    parser_verify.add_argument("--config", "-c", help="Corpus configuration (JSON)")
    parser_verify.add_argument("--claim", action="append", help="Only this claim id (repeatable)")
    parser_verify.add_argument("--workers", type=int, help="Claims evaluated in parallel")
    parser_verify.add_argument("--timings", action="store_true", help="Include runtimes in the report")
    parser_verify.add_argument("--cache", nargs="?", const=DEFAULT_CACHE_PATH, help="Use the profile cache")
    parser_verify.add_argument("--export-md", help="Export Markdown report to specified path")
    parser_verify.add_argument("--export-txt", help="Export TXT report to specified path")
    _add_output_args(parser_verify, "json")
    parser_verify.set_defaults(func=cmd_verify)

    # cache
    parser_cache = subparsers.add_parser("cache", help="Profile cache management")
    parser_cache.add_argument("--cache", default=DEFAULT_CACHE_PATH, help="Cache database path")
    cache_subparsers = parser_cache.add_subparsers(dest="cache_command", help="Cache subcommands")

    parser_cache_stats = cache_subparsers.add_parser("stats", help="Show cache statistics")
    parser_cache_stats.set_defaults(func=cmd_cache_stats)

    parser_cache_clear = cache_subparsers.add_parser("clear", help="Clear all cache entries")
    parser_cache_clear.add_argument("--force", "-f", action="store_true", help="Skip confirmation")
    parser_cache_clear.set_defaults(func=cmd_cache_clear)

    return parser


def _configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, LOG_LEVEL, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )


def cli_dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run the subcommand and map failures to exit codes.

    Returns:
        0 success, 1 hard claim failure, 2 usage error, 3 scale refusal
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if not args.command:
        parser.print_help()
        return 2
    if args.command == "cache" and not getattr(args, "cache_command", None):
        print("usage: jcolour cache [--cache PATH] {stats,clear}", file=sys.stderr)
        return 2

    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except ScaleLimitExceeded as e:
        logger.error(f"Refused: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 3
    except HarnessError as e:
        logger.error(f"Harness self-test failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (GraphError, ColouringError, ValidationError, ValueError, FileNotFoundError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    """Main CLI entry point."""
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
