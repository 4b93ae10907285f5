"""
Main entry point for Community-Veil.

Provides the command-line interface over detection, permanence scoring,
deception, recovery, evaluation and experiment sweeps.
"""

import argparse
import itertools
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from pydantic import ValidationError

from community_veil.community.detectors import DetectorRegistry, detect
from community_veil.community.structure import CommunityStructure
from community_veil.config import settings
from community_veil.editing.deception import neural
from community_veil.editing.greedy import EditRun
from community_veil.editing.recovery import r_neural
from community_veil.exceptions import CommunityVeilError, ConfigError, PartitionError
from community_veil.experiments.formatter import ReportFormatter
from community_veil.experiments.pipeline import (
    compute_budget,
    evaluate_state,
    resolve_target,
    run_pipeline,
)
from community_veil.experiments.sweep import sweep, write_aggregate
from community_veil.graph import Graph
from community_veil.metrics.spectral import spectral_distance
from community_veil.models import (
    ExperimentConfig,
    GraphFormat,
    GraphState,
    RecoveryMode,
)
from community_veil.permanence.cache import PermanenceCache
from community_veil.readers import load_graph, save_graph

logger = logging.getLogger(__name__)


def setup_logging(level: str | None = None) -> None:
    """Configure logging for the application."""
    log_level = getattr(logging, (level or settings.log_level).upper(), logging.INFO)

    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
        force=True,
    )


# ============================================================================
# Helpers
# ============================================================================


def _graph_format(value: str | None) -> GraphFormat | None:
    return GraphFormat(value) if value else None


def _load(path: str, graph_format: str | None = None, known_labels: Sequence[str] = ()) -> Graph:
    return load_graph(settings.resolve_dataset(Path(path)), _graph_format(graph_format), known_labels)


def _load_aligned(path: str, graph_format: str | None, original: Graph) -> Graph:
    """Load a modified graph so its node ids match ``original``."""
    g = _load(path, graph_format, original.labels)
    if g.labels != original.labels:
        raise ConfigError(
            f"{path} has nodes that are not in the original graph",
            original_nodes=original.node_count,
            nodes=g.node_count,
        )
    return g


def _emit(content: str, output: str | None) -> None:
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        logger.info(f"Written to {path}")
    else:
        sys.stdout.write(content)


def _summary(run: EditRun) -> str:
    return json.dumps(
        {
            "budget": run.budget,
            "applied": len(run.log),
            "terminated_early": run.terminated_early,
            "community": run.community_index,
            "initial_permanence": run.initial_permanence,
            "final_permanence": run.final_permanence,
        },
        indent=2,
        sort_keys=True,
    ) + "\n"


def _partition(args: argparse.Namespace, g: Graph) -> CommunityStructure:
    if getattr(args, "partition", None):
        path = Path(args.partition)
        try:
            text = path.read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise PartitionError("partition file is not valid UTF-8", path=str(path)) from e
        return CommunityStructure.parse_text(text, g)
    return detect(args.detector, g, args.seed)


def _experiment_config(**kwargs: object) -> ExperimentConfig:
    try:
        return ExperimentConfig.model_validate(kwargs)
    except ValidationError as e:
        raise ConfigError(
            "invalid experiment config",
            problems=[f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors()],
        ) from e


# ============================================================================
# Subcommands
# ============================================================================


def cmd_detect(args: argparse.Namespace) -> None:
    g = _load(args.graph, args.format)
    cs = detect(args.detector, g, args.seed)
    if args.output_format == "json":
        content = json.dumps(cs.to_label_lists(g), indent=2) + "\n"
    else:
        content = cs.to_text(g)
    _emit(content, args.output)


def cmd_perm(args: argparse.Namespace) -> None:
    g = _load(args.graph, args.format)
    cache = PermanenceCache.build(g, _partition(args, g))
    parts = [cache.parts[v] for v in g.nodes()]
    _emit(ReportFormatter.permanence_csv(g, parts, cache.graph_permanence), args.output)


def cmd_deceive(args: argparse.Namespace) -> None:
    g = _load(args.graph, args.format)
    cs = _partition(args, g)
    community = resolve_target(cs, args.target, g)
    budget = compute_budget(cs.communities[community], args.budget_frac)

    run = neural(g, cs, community, budget, full_recompute=args.full_recompute)

    save_graph(run.output_graph, Path(args.out_graph), _graph_format(args.out_format))
    if args.out_log:
        _emit(ReportFormatter.edit_log_json(run.log), args.out_log)
    sys.stdout.write(_summary(run))


def cmd_recover(args: argparse.Namespace) -> None:
    mode = RecoveryMode(args.mode)
    if args.orig_graph:
        original = _load(args.orig_graph, args.format)
        g_prime = _load_aligned(args.graph, args.format, original)
    elif mode == RecoveryMode.ORACLE:
        raise ConfigError("oracle recovery needs --orig-graph")
    else:
        original = None
        g_prime = _load(args.graph, args.format)

    # The target always comes from the partition of the original graph when one is given
    reference = original if original is not None else g_prime
    reference_cs = detect(args.detector, reference, args.seed)
    target = reference_cs.communities[resolve_target(reference_cs, args.target, reference)]
    budget = compute_budget(target, args.budget_frac)

    cs = reference_cs if mode == RecoveryMode.ORACLE else detect(args.detector, g_prime, args.seed)
    run = r_neural(g_prime, cs, target, budget, full_recompute=args.full_recompute)

    save_graph(run.output_graph, Path(args.out_graph), _graph_format(args.out_format))
    if args.out_log:
        _emit(ReportFormatter.edit_log_json(run.log, gain=True), args.out_log)
    sys.stdout.write(_summary(run))


def cmd_eval(args: argparse.Namespace) -> None:
    original = _load(args.graph, args.format)
    cs = detect(args.detector, original, args.seed)
    target = cs.communities[resolve_target(cs, args.target, original)]

    states = [(GraphState.ORIGINAL, original)]
    if args.deceived:
        states.append((GraphState.DECEIVED, _load_aligned(args.deceived, args.format, original)))
    if args.recovered:
        states.append((GraphState.RECOVERED, _load_aligned(args.recovered, args.format, original)))

    rows = [evaluate_state(tag, g, args.detector, args.seed, target) for tag, g in states]
    _emit(ReportFormatter.metrics_csv(rows), args.output)


def cmd_simdist(args: argparse.Namespace) -> None:
    original = _load(args.graph, args.format)
    distances = []
    if args.deceived:
        distances.append(
            spectral_distance(original, _load(args.deceived, args.format), args.energy, "G,G'")
        )
    if args.recovered:
        distances.append(
            spectral_distance(original, _load(args.recovered, args.format), args.energy, "G,G''")
        )
    if not distances:
        raise ConfigError("simdist needs --deceived and/or --recovered")
    _emit(ReportFormatter.simdist_json(distances), args.output)


def cmd_pipeline(args: argparse.Namespace) -> None:
    config = _experiment_config(
        graph_path=Path(args.graph),
        graph_format=args.format,
        detector=args.detector,
        seed=args.seed,
        target=args.target,
        budget_fraction=args.budget_frac,
        recovery_budget_fraction=args.recovery_budget_frac,
        recovery_mode=args.mode,
        energy=args.energy,
        full_recompute=args.full_recompute,
    )
    report = run_pipeline(config)
    _emit(
        ReportFormatter.format(report, args.output_format, include_timings=args.timings),
        args.output,
    )


def _parse_seeds(values: Sequence[str]) -> list[int]:
    seeds: list[int] = []
    for value in values:
        first, _, last = value.partition("-")
        try:
            seeds.extend(range(int(first), int(last) + 1) if last else [int(first)])
        except ValueError:
            raise ConfigError(f"invalid seed or seed range {value!r}") from None
    return seeds


def cmd_sweep(args: argparse.Namespace) -> None:
    configs = [
        _experiment_config(
            graph_path=Path(graph),
            graph_format=args.format,
            detector=detector,
            seed=seed,
            target=args.target,
            budget_fraction=args.budget_frac,
            recovery_mode=args.mode,
            energy=args.energy,
        )
        for graph, detector, seed in itertools.product(
            args.graphs, args.detectors, _parse_seeds(args.seeds)
        )
    ]
    result = sweep(configs, jobs=args.jobs)

    if args.out_dir:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
    else:
        settings.ensure_directories()
        out_dir = settings.output_dir
    for report in result.reports:
        name = f"{report.dataset}_{report.config.detector}_seed{report.config.seed}.json"
        (out_dir / name).write_text(ReportFormatter.to_json(report), encoding="utf-8")
    write_aggregate(result.reports, out_dir / "aggregate.csv")
    (out_dir / "failures.json").write_text(
        json.dumps([f.model_dump(mode="json") for f in result.failures], indent=2, sort_keys=True)
        + "\n",
        encoding="utf-8",
    )
    sys.stdout.write(
        json.dumps(
            {"reports": len(result.reports), "failures": len(result.failures), "out_dir": str(out_dir)},
            sort_keys=True,
        )
        + "\n"
    )


# ============================================================================
# Argument parsing
# ============================================================================


def _add_graph_args(parser: argparse.ArgumentParser, graph_help: str = "Graph file") -> None:
    parser.add_argument("--graph", required=True, help=graph_help)
    parser.add_argument("--format", choices=[f.value for f in GraphFormat], default=None,
                        help="Graph format (default: from file extension)")


def _add_detector_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--detector", choices=DetectorRegistry.names(),
                        default=settings.default_detector, help="Community detector")
    parser.add_argument("--seed", type=int, default=settings.default_seed, help="Detector seed")


def _add_edit_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--target", default="largest", help="largest | index:K | nodes:a,b,c")
    parser.add_argument("--budget-frac", type=float, default=settings.budget_fraction,
                        help="Budget as a fraction of the target size")
    parser.add_argument("--full-recompute", action="store_true",
                        default=settings.full_recompute,
                        help="Score graph permanence from scratch (slow, for checking)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="community-veil",
        description="Community-Veil: permanence-based community deception and recovery",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  community-veil detect --graph dolphins.gml
  community-veil deceive --graph dolphins.gml --out-graph g1.gml --out-log deceive.json
  community-veil recover --graph g1.gml --orig-graph dolphins.gml --out-graph g2.gml
  community-veil pipeline --graph dolphins.gml --output-format text
  community-veil sweep --graphs dolphins.gml adjnoun.gml --seeds 1-10 --jobs 4
        """,
    )
    parser.add_argument("--log-level", default=None, help="Override the configured log level")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Detect command
    detect_parser = subparsers.add_parser("detect", help="Detect communities")
    _add_graph_args(detect_parser)
    _add_detector_args(detect_parser)
    detect_parser.add_argument("--output-format", choices=["text", "json"], default="text")
    detect_parser.add_argument("--output", "-o", help="Output file")
    detect_parser.set_defaults(handler=cmd_detect)

    # Permanence command
    perm_parser = subparsers.add_parser("perm", help="Per-vertex permanence as CSV")
    _add_graph_args(perm_parser)
    _add_detector_args(perm_parser)
    perm_parser.add_argument("--partition", help="Community file (one line per community)")
    perm_parser.add_argument("--output", "-o", help="Output file")
    perm_parser.set_defaults(handler=cmd_perm)

    # Deceive command
    deceive_parser = subparsers.add_parser("deceive", help="Hide a community (NEURAL)")
    _add_graph_args(deceive_parser)
    _add_detector_args(deceive_parser)
    _add_edit_args(deceive_parser)
    deceive_parser.add_argument("--partition", help="Community file instead of detection")
    deceive_parser.add_argument("--out-graph", required=True, help="Deceived graph file")
    deceive_parser.add_argument("--out-format", choices=[f.value for f in GraphFormat], default=None)
    deceive_parser.add_argument("--out-log", help="Edit log JSON")
    deceive_parser.set_defaults(handler=cmd_deceive)

    # Recover command
    recover_parser = subparsers.add_parser("recover", help="Recover a community (R-NEURAL)")
    _add_graph_args(recover_parser, graph_help="Deceived graph file")
    _add_detector_args(recover_parser)
    _add_edit_args(recover_parser)
    recover_parser.add_argument("--orig-graph", help="Original graph (required for oracle mode)")
    recover_parser.add_argument("--mode", choices=[m.value for m in RecoveryMode],
                                default=settings.recovery_mode)
    recover_parser.add_argument("--out-graph", required=True, help="Recovered graph file")
    recover_parser.add_argument("--out-format", choices=[f.value for f in GraphFormat], default=None)
    recover_parser.add_argument("--out-log", help="Edit log JSON")
    recover_parser.set_defaults(handler=cmd_recover)

    # Eval command
    eval_parser = subparsers.add_parser("eval", help="M/C/PQ table for G, G', G''")
    _add_graph_args(eval_parser, graph_help="Original graph file")
    _add_detector_args(eval_parser)
    eval_parser.add_argument("--deceived", help="Deceived graph file")
    eval_parser.add_argument("--recovered", help="Recovered graph file")
    eval_parser.add_argument("--target", default="largest", help="Target selector for visibility")
    eval_parser.add_argument("--output", "-o", help="Output file")
    eval_parser.set_defaults(handler=cmd_eval)

    # Simdist command
    simdist_parser = subparsers.add_parser("simdist", help="Spectral distance to G")
    _add_graph_args(simdist_parser, graph_help="Original graph file")
    simdist_parser.add_argument("--deceived", help="Deceived graph file")
    simdist_parser.add_argument("--recovered", help="Recovered graph file")
    simdist_parser.add_argument("--energy", type=float, default=settings.energy_threshold)
    simdist_parser.add_argument("--output", "-o", help="Output file")
    simdist_parser.set_defaults(handler=cmd_simdist)

    # Pipeline command
    pipeline_parser = subparsers.add_parser("pipeline", help="Detect, deceive, recover, evaluate")
    _add_graph_args(pipeline_parser)
    _add_detector_args(pipeline_parser)
    _add_edit_args(pipeline_parser)
    pipeline_parser.add_argument("--recovery-budget-frac", type=float, default=None)
    pipeline_parser.add_argument("--mode", choices=[m.value for m in RecoveryMode],
                                 default=settings.recovery_mode)
    pipeline_parser.add_argument("--energy", type=float, default=settings.energy_threshold)
    pipeline_parser.add_argument("--output-format", choices=["json", "text", "csv"], default="json")
    pipeline_parser.add_argument("--timings", action="store_true", help="Keep timings in JSON")
    pipeline_parser.add_argument("--output", "-o", help="Output file")
    pipeline_parser.set_defaults(handler=cmd_pipeline)

    # Sweep command
    sweep_parser = subparsers.add_parser("sweep", help="Run many pipelines and aggregate")
    sweep_parser.add_argument("--graphs", nargs="+", required=True, help="Graph files")
    sweep_parser.add_argument("--format", choices=[f.value for f in GraphFormat], default=None)
    sweep_parser.add_argument("--detectors", nargs="+", choices=DetectorRegistry.names(),
                              default=[settings.default_detector])
    sweep_parser.add_argument("--seeds", nargs="+", default=["1-10"],
                              help="Seeds or inclusive ranges, e.g. 1-10 42")
    sweep_parser.add_argument("--target", default="largest")
    sweep_parser.add_argument("--budget-frac", type=float, default=settings.budget_fraction)
    sweep_parser.add_argument("--mode", choices=[m.value for m in RecoveryMode],
                              default=settings.recovery_mode)
    sweep_parser.add_argument("--energy", type=float, default=settings.energy_threshold)
    sweep_parser.add_argument("--jobs", type=int, default=1, help="Worker processes")
    sweep_parser.add_argument("--out-dir", help="Report directory (default: output_dir)")
    sweep_parser.set_defaults(handler=cmd_sweep)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """
    Parse ``argv`` and execute the chosen subcommand.

    Returns:
        Process exit code: 0 on success, 1 on a library error (JSON on stderr)
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    handler: Callable[[argparse.Namespace], None] | None = getattr(args, "handler", None)
    if handler is None:
        parser.print_help()
        return 0

    setup_logging(args.log_level)
    try:
        handler(args)
    except CommunityVeilError as e:
        sys.stderr.write(json.dumps(e.to_dict(), sort_keys=True, default=str) + "\n")
        return 1
    except FileNotFoundError as e:
        payload = {"error": "FileNotFoundError", "message": str(e), "path": str(e.filename)}
        sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")
        return 1
    return 0


def cli() -> None:
    """Command-line interface entry point."""
    sys.exit(run())


if __name__ == "__main__":
    cli()
