"""CSV emission for experiment results.

``curves.csv`` has one row per (algorithm, noise level, step)::

    algorithm,model,n,noise_param,t,I_t_meanlog,I_t_logmean,
    I_t_per_node_meanlog,I_t_per_node_logmean,I_t_meanlog_std,
    zero_delta_count,samples,equal_edge_fraction_mean

``content.csv`` has one row per (algorithm, noise level)::

    algorithm,model,n,noise_param,estimator,I,t_star,I_per_node,
    I_meanlog,t_star_meanlog,I_logmean,t_star_logmean,equal_edge_fraction_mean

Reals are written with 12 significant digits; undefined values are empty.
"""
from __future__ import annotations

import csv
import io
import math
import os
from pathlib import Path

from .config import EstimatorMode
from .estimator import EstimatorError, ExperimentResult

CURVE_COLUMNS = [
    "algorithm", "model", "n", "noise_param", "t",
    "I_t_meanlog", "I_t_logmean", "I_t_per_node_meanlog", "I_t_per_node_logmean",
    "I_t_meanlog_std", "zero_delta_count", "samples", "equal_edge_fraction_mean",
]
CONTENT_COLUMNS = [
    "algorithm", "model", "n", "noise_param", "estimator", "I", "t_star", "I_per_node",
    "I_meanlog", "t_star_meanlog", "I_logmean", "t_star_logmean", "equal_edge_fraction_mean",
]


def fmt(x) -> str:
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    if isinstance(x, (int,)) and not isinstance(x, bool):
        return str(x)
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.12g}"


def _content(result, alg, i, mode):
    try:
        c = result.curve(alg, i, mode)
        return c.info_content, c.t_star
    except EstimatorError:
        return math.nan, None


def curve_rows(result: ExperimentResult):
    cfg = result.config
    n = cfg.n
    for alg in cfg.algorithms:
        for i, noise in enumerate(cfg.noise_grid):
            agg = result.aggregates[alg, i]
            frac = result.equal_fraction.get(i)
            for t in range(agg.meanlog.size):
                ml, lm = float(agg.meanlog[t]), float(agg.logmean[t])
                yield [alg.value, cfg.model.model.value, n, fmt(noise), t + 1,
                       fmt(ml), fmt(lm), fmt(ml / n), fmt(lm / n), fmt(float(agg.meanlog_std[t])),
                       int(agg.zero_delta[t]), agg.samples, fmt(frac)]


def content_rows(result: ExperimentResult):
    cfg = result.config
    for alg in cfg.algorithms:
        for i, noise in enumerate(cfg.noise_grid):
            ml, tml = _content(result, alg, i, EstimatorMode.MEAN_LOG)
            lm, tlm = _content(result, alg, i, EstimatorMode.LOG_MEAN)
            best, t_star = (ml, tml) if cfg.estimator is EstimatorMode.MEAN_LOG else (lm, tlm)
            yield [alg.value, cfg.model.model.value, cfg.n, fmt(noise), cfg.estimator.value,
                   fmt(best), fmt(t_star), fmt(best / cfg.n),
                   fmt(ml), fmt(tml), fmt(lm), fmt(tlm), fmt(result.equal_fraction.get(i))]


def _render(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    return buf.getvalue()


def write_results(result: ExperimentResult, out_dir) -> tuple[Path, Path]:
    """Write both CSV files; nothing is left behind if rendering fails."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    payload = {
        out / "curves.csv": _render(CURVE_COLUMNS, curve_rows(result)),
        out / "content.csv": _render(CONTENT_COLUMNS, content_rows(result)),
    }
    for path, text in payload.items():
        tmp = path.with_suffix(".csv.tmp")
        tmp.write_text(text, encoding="utf-8")
    for path in payload:
        os.replace(path.with_suffix(".csv.tmp"), path)
    return tuple(payload)


def summary(result: ExperimentResult) -> str:
    cfg = result.config
    lines = [f"model={cfg.model.model.value} n={cfg.n} trials={cfg.trials} estimator={cfg.estimator.value}"]
    header = "noise".rjust(10) + "".join(a.value.rjust(11) for a in cfg.algorithms)
    lines.append("information content per node (bits/n)")
    lines.append(header)
    for i, noise in enumerate(cfg.noise_grid):
        cells = []
        for alg in cfg.algorithms:
            best, _ = _content(result, alg, i, cfg.estimator)
            cells.append(fmt(round(best / cfg.n, 4)) if not math.isnan(best) else "nan")
        lines.append(fmt(noise).rjust(10) + "".join(c.rjust(11) for c in cells))
    return "\n".join(lines)
