"""Command line front end.

    strongties analyze --policy 0/3C --alpha 0.9
    strongties simulate sample --dist china --n 157 --alpha 0.92 --seed 7
    strongties simulate evolve --policy 1C --n 200 --alpha 0.9 --generations 1
    strongties gw --policy 0/3C --alpha 0.9 --runs 10000
    strongties compare --alpha 0.92
"""

import argparse
import logging
import sys
from pathlib import Path

from strongties import __version__
from strongties.branching.criticality import classify, extinction_probability
from strongties.branching.derived import derive_child_dist, offspring_dist
from strongties.branching.process import (
    Caps,
    TreeKind,
    level_means,
    simulate_many,
    survival_frequency,
)
from strongties.cli.config import (
    ExperimentConfig,
    load_config_file,
    resolve_config,
)
from strongties.cli.report import analytics, dumps, header, render_text, write_document
from strongties.errors import ConfigError, NoConvergence, PopulationDied
from strongties.graph.export import ExportFormat, export_network
from strongties.graph.metrics import compute_metrics
from strongties.graph.network import build_network
from strongties.math.sampling import stream
from strongties.netgen.evolve import run_policy_experiment
from strongties.netgen.sample import sample_population
from strongties.policy.builtin import Policy, builtin_policy
from strongties.policy.dist import MarriageRatio, expected_population_ratio, mean_children

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_STATE = 3

DEFAULTS = {
    "analyze": {"runs": 0, "max_levels": 500, "max_nodes": 10**6},
    "sample": {"n": 200, "format": "edge-csv", "out": "out"},
    "evolve": {"n": 200, "generations": 1, "utilization": 1.0, "format": "edge-csv",
               "out": "out"},
    "gw": {"runs": 1000, "max_levels": 500, "max_nodes": 10**6, "trajectories": False},
    "compare": {"alpha": 0.9},
}

LEVELS_REPORTED = 11


def _require_alpha(alpha: MarriageRatio | None) -> MarriageRatio:

    if alpha is None:
        raise ConfigError("a marriage ratio is required (--alpha)")
    return alpha


def _emit(cfg: ExperimentConfig, doc: dict, name: str, as_json: bool, text: str = "") -> None:
    """Write the document into the output directory and print it."""

    if cfg.out is not None:
        write_document(Path(cfg.out) / name, doc)

    sys.stdout.write(dumps(doc) if as_json else render_text(doc) + text)


def cmd_analyze(cfg: ExperimentConfig, as_json: bool = False, jobs: int = 1) -> int:
    """Report derived distribution, mu, class and extinction probability."""

    inputs = cfg.inputs()
    alpha = _require_alpha(inputs.alpha)

    doc = header(cfg) | analytics(inputs.dist, alpha)
    if cfg.runs:
        caps = Caps(cfg.max_levels, cfg.max_nodes)
        doc["survival_frequency"] = survival_frequency(
            inputs.dist, alpha, cfg.runs, caps, cfg.seed, jobs
        )

    _emit(cfg, doc, "analysis.json", as_json)
    return EXIT_OK


def _generation_entry(index: int, population, network, metrics, fmt: ExportFormat,
                      out: Path) -> dict:
    """Export one generation's network and return its metrics entry."""

    name = f"generation_{index}.{fmt.extension}"
    out.mkdir(parents=True, exist_ok=True)
    (out / name).write_bytes(export_network(network, fmt))
    logger.info("wrote %s", out / name)

    return {
        "generation": index,
        "graph": name,
        "alpha_realized": population.alpha_realized,
        **metrics.to_dict(),
    }


def cmd_simulate(cfg: ExperimentConfig, as_json: bool = False) -> int:
    """Sample or evolve populations and write their networks and metrics."""

    inputs = cfg.inputs()
    alpha = _require_alpha(inputs.alpha)
    fmt = ExportFormat.parse(cfg.format)
    out = Path(cfg.out)
    rng = stream(cfg.seed)

    status, code = "ok", EXIT_OK
    entries = []

    if cfg.mode == "sample":
        population = sample_population(inputs.dist, alpha, cfg.n, rng)
        network = build_network(population)
        entries.append(_generation_entry(0, population, network, compute_metrics(network),
                                         fmt, out))
    else:
        try:
            results = run_policy_experiment(cfg.n, inputs.dist, alpha, cfg.generations, rng,
                                            cfg.utilization)
        except PopulationDied as exc:
            logger.error("%s", exc)
            results = exc.partial
            status, code = "population_died", EXIT_STATE

        for r in results:
            entries.append(_generation_entry(r.population.generation_index, r.population,
                                             r.network, r.metrics, fmt, out))

    doc = header(cfg) | {"status": status, "generations": entries}
    text = "".join(
        f"generation {e['generation']}: nodes={e['node_count']} "
        f"sibling_edges={e['sibling_edge_count']} marital_edges={e['marital_edge_count']} "
        f"components={e['component_count']} largest={e['largest_component_size']}\n"
        for e in entries
    )
    _emit(cfg, doc, "metrics.json", as_json, text)

    return code


def cmd_gw(cfg: ExperimentConfig, as_json: bool = False, jobs: int = 1) -> int:
    """Run branching trees and compare survival with the analytic prediction.

    With a marriage ratio the distribution is a family size distribution and
    strong-ties trees are grown; without one it is used directly as the
    offspring distribution of a Galton-Watson tree.
    """

    inputs = cfg.inputs()

    if inputs.alpha is not None:
        kind = TreeKind.STRONG_TIES
        dist = derive_child_dist(inputs.dist, inputs.alpha)
    elif cfg.policy is not None:
        raise ConfigError("a policy needs a marriage ratio (--alpha)")
    else:
        kind = TreeKind.GALTON_WATSON
        dist = offspring_dist(inputs.dist.weights)

    caps = Caps(cfg.max_levels, cfg.max_nodes)
    outcomes = simulate_many(kind, dist, cfg.runs, cfg.seed, caps, jobs)
    q = extinction_probability(dist)
    survived = sum(o.survived for o in outcomes)

    doc = header(cfg) | {
        "mode": "strong-ties" if kind == TreeKind.STRONG_TIES else "galton-watson",
        "a": list(dist.a),
        "mu": dist.mu,
        "class": classify(dist).cls.name.lower(),
        "runs": cfg.runs,
        "survival_frequency": survived / cfg.runs,
        "extinct_runs": sum(o.extinct for o in outcomes),
        "truncated_runs": survived,
        "extinction_probability": q,
        "predicted_survival": 1.0 - (q * q if kind == TreeKind.STRONG_TIES else q),
        "mean_z": level_means(outcomes, min(LEVELS_REPORTED, cfg.max_levels + 1)),
    }
    if cfg.trajectories:
        doc["trajectories"] = [list(o.z) for o in outcomes]

    _emit(cfg, doc, "gw.json", as_json)
    return EXIT_OK


def cmd_compare(cfg: ExperimentConfig, as_json: bool = False) -> int:
    """Compare all built-in policies at one marriage ratio."""

    alpha = MarriageRatio(cfg.alpha)
    rows = []
    for policy in Policy:
        p = builtin_policy(policy)
        derived = derive_child_dist(p, alpha)
        rows.append({
            "policy": policy.value,
            "mean_children": mean_children(p),
            "population_ratio": expected_population_ratio(p, alpha),
            "mu": derived.mu,
            "class": classify(derived).cls.name.lower(),
            "extinction_probability": extinction_probability(derived),
        })

    doc = header(cfg) | {"alpha": alpha.alpha, "policies": rows}

    head = " Policy | Children | Pop. ratio |     mu | Class         | Extinction "
    table = "-" * len(head) + "\n" + head + "\n" + "-" * len(head) + "\n"
    for r in rows:
        table += (
            f" {r['policy']:>6} | {r['mean_children']:8.3f} | {r['population_ratio']:10.4f} |"
            f" {r['mu']:6.3f} | {r['class']:<13} | {r['extinction_probability']:10.4f}\n"
        )

    _emit(cfg, doc, "compare.json", as_json, table)
    return EXIT_OK


def _add_inputs(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--policy", help="built-in policy: 1C, 0/2C, 2C, 0/3C, C++")
    group.add_argument("--dist", help="china, india, a policy name or comma-separated weights")
    parser.add_argument("--alpha", type=float, help="marriage ratio in [0, 1]")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, help="unsigned 64-bit seed (random if omitted)")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--json", action="store_true", help="print JSON to stdout")
    parser.add_argument("--config", help="YAML file with default option values")


def _add_caps(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--runs", type=int, help="number of Monte Carlo runs")
    parser.add_argument("--max-levels", dest="max_levels", type=int,
                        help="level cap standing in for survival")
    parser.add_argument("--max-nodes", dest="max_nodes", type=int,
                        help="node cap standing in for survival")
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers (-1: all cores)")


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser."""

    parser = argparse.ArgumentParser(
        prog="strongties",
        description="Fragmentation of strong-ties social networks under population control.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="analytic branching results")
    _add_inputs(analyze)
    _add_caps(analyze)
    _add_common(analyze)

    simulate = commands.add_parser("simulate", help="generate strong-ties networks")
    modes = simulate.add_subparsers(dest="mode", required=True)
    for mode in ("sample", "evolve"):
        sub = modes.add_parser(mode)
        _add_inputs(sub)
        sub.add_argument("--n", type=int, help="population size")
        sub.add_argument("--format", choices=[f.value for f in ExportFormat])
        if mode == "evolve":
            sub.add_argument("--generations", type=int)
            sub.add_argument("--utilization", type=float,
                             help="probability that each allowed child is born")
        _add_common(sub)

    gw = commands.add_parser("gw", help="Monte Carlo branching trees")
    _add_inputs(gw)
    _add_caps(gw)
    gw.add_argument("--trajectories", action="store_true", default=None,
                    help="include every run's level sizes")
    _add_common(gw)

    compare = commands.add_parser("compare", help="compare built-in policies")
    compare.add_argument("--alpha", type=float)
    _add_common(compare)

    return parser


def _setup_logging(verbosity: int) -> None:

    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    """Run the command line tool and return its exit code."""

    args = build_parser().parse_args(argv)
    _setup_logging(args.verbose)

    command = args.mode if args.command == "simulate" else args.command
    handlers = {
        "analyze": lambda cfg: cmd_analyze(cfg, args.json, args.jobs),
        "sample": lambda cfg: cmd_simulate(cfg, args.json),
        "evolve": lambda cfg: cmd_simulate(cfg, args.json),
        "gw": lambda cfg: cmd_gw(cfg, args.json, args.jobs),
        "compare": lambda cfg: cmd_compare(cfg, args.json),
    }

    try:
        file_options = load_config_file(args.config) if args.config else None
        cfg = resolve_config(args.command, vars(args), file_options, DEFAULTS[command])
        return handlers[command](cfg)
    except (ValueError, ConfigError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NoConvergence as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_STATE


if __name__ == "__main__":
    sys.exit(main())
