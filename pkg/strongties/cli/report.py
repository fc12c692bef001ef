"""Report documents written and printed by the command line tool."""

import json
import logging
from pathlib import Path

from strongties import __version__
from strongties.branching.criticality import classify, extinction_probability
from strongties.branching.derived import critical_alpha, derive_child_dist, mu_closed_form
from strongties.cli.config import ExperimentConfig
from strongties.policy.dist import (
    ChildCountDist,
    MarriageRatio,
    expected_population_ratio,
    mean_children,
)

logger = logging.getLogger(__name__)

TOOL = "strongties"


def header(cfg: ExperimentConfig) -> dict:
    """Return the fields every output document starts with."""
    return {"tool": TOOL, "version": __version__, "config": cfg.to_dict(), "seed": cfg.seed}


def analytics(f: ChildCountDist, alpha: MarriageRatio) -> dict:
    """Return analytic results for a family size distribution and ratio."""

    derived = derive_child_dist(f, alpha)
    crit = classify(derived)
    q = extinction_probability(derived)

    return {
        "distribution": list(f.weights),
        "alpha": alpha.alpha,
        "mean_children": mean_children(f),
        "population_ratio": expected_population_ratio(f, alpha),
        "a": list(derived.a),
        "residual_folded": derived.residual_folded,
        "mu": derived.mu,
        "mu_closed_form": mu_closed_form(f, alpha),
        "class": crit.cls.name.lower(),
        "degenerate": crit.degenerate,
        "extinction_probability": q,
        # the root couple survives if either of its two subtrees does
        "survival_probability": 1.0 - q * q,
        "critical_alpha": critical_alpha(f),
    }


def dumps(doc) -> str:
    """Serialize a document as stable JSON."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_document(path: Path, doc) -> None:
    """Write a JSON document."""

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(doc), encoding="utf-8")
    logger.info("wrote %s", path)


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    return str(value)


def render_text(doc: dict, skip=("config", "trajectories", "generations", "policies")) -> str:
    """Render the scalar and vector fields of a document, one per line."""

    lines = [f"{key}: {_fmt(value)}" for key, value in doc.items() if key not in skip]
    return "\n".join(lines) + "\n"
