from dataclasses import replace
from pathlib import Path
from typing import List

import numpy as np
import pandas as pd
from loguru import logger

from betaproc.cli.config import HASH_EXCLUDED, ExperimentConfig
from betaproc.cli.plots import plot_table
from betaproc.errors import ConfigError, QuadratureError, StoreError
from betaproc.kernels.domain import rho
from betaproc.kernels.repository import make_kernel, series_discrepancy, stationarity_integral_check
from betaproc.laws.domain import LIMIT_KINDS, LimitLaw
from betaproc.laws.repository import limit_moments
from betaproc.matproc.repository import (
    hermite_init,
    laguerre_init,
    sample_path,
    scale_by_sqrt_n,
    wishart_of,
)
from betaproc.spectral.repository import (
    empirical_eigen_measure,
    singular_value_measure,
    spectral_measure,
    wishart_sqrt_measure,
)
from betaproc.store.domain import ResultStore
from betaproc.store.repository import CsvResultStore, JsonResultStore, make_store
from betaproc.verify.domain import ConvergenceCurve, DistanceReport, VerifyReport
from betaproc.verify.repository import (
    bessel_exactness_check,
    chapman_kolmogorov_check,
    eigen_jpdf_check,
    entry_law_check,
    folding_check,
    limit_law_convergence,
    moment_identity_check,
    replicate_rng,
    scaled_entry_convergence,
    spectral_empirical_closeness,
    weight_law_check,
)

STATIONARITY_TOLERANCE = 1e-7
SERIES_TOLERANCE = 1e-6


def _write_table(store: ResultStore, name: str, frame: pd.DataFrame, meta: dict = None) -> Path:
    answer = store.save_table(name, frame, meta)
    if not answer.ok:
        raise StoreError(answer.error)
    logger.info(f"wrote {answer.data}")
    return answer.data


def _write_record(store: ResultStore, name: str, record: dict, meta: dict = None) -> Path:
    answer = store.save_record(name, record, meta)
    if not answer.ok:
        raise StoreError(answer.error)
    logger.info(f"wrote {answer.data}")
    return answer.data


def _spectra(process: str, state) -> list:
    """(name, measure, limit law) of the √n-scaled matrix of a sampled state."""
    if process == "hermite":
        scaled = scale_by_sqrt_n(state.entries)
        return [("eigenvalues", empirical_eigen_measure(scaled), "semicircle"),
                ("spectral", spectral_measure(scaled), "semicircle")]
    scaled = scale_by_sqrt_n(state.entries)
    if process == "laguerre":
        return [("singular_values", singular_value_measure(scaled), "quarter"),
                ("spectral", wishart_sqrt_measure(scaled), "quarter")]
    wishart = wishart_of(scaled)
    return [("eigenvalues", empirical_eigen_measure(wishart), "mp"),
            ("spectral", spectral_measure(wishart), "mp")]


def cmd_sample(config: ExperimentConfig) -> List[Path]:
    """
    Writes one matrix snapshot per time of the t-grid.

    Hermite, Laguerre and Wishart processes start at the zero matrix and
    are advanced exactly from one grid time to the next. With `spectra`
    each snapshot also gets the eigenvalue and spectral-weight tables of the
    √n-scaled matrix. The one-dimensional processes write `replicates`
    exact paths started at the first x0 in one long table (t, replicate, value).
    """
    store = make_store(config.output_format, config.output_dir, config.config_hash)
    times = np.unique(np.asarray(config.t_grid, dtype=float))
    rng = replicate_rng(config.seed, 0)
    base = {"process": config.process, "beta": config.beta, "seed": config.seed}
    if config.process in ("ou", "bessel"):
        kernel = make_kernel(config.process, config.bessel if config.process == "bessel" else config.clock)
        count = config.replicates
        path = kernel.sample_path(np.full(count, config.x0_grid[0]), times, rng)
        frame = pd.DataFrame({"t": np.repeat(times, count), "replicate": np.tile(np.arange(count), times.size),
                              "value": path.reshape(-1)})
        return [_write_table(store, f"sample_{config.process}_paths", frame, base)]

    if config.process == "hermite":
        state = hermite_init(config.n, config.beta, rng, config.clock)
    else:
        state = laguerre_init(config.n, config.beta, config.a, rng, config.clock)
        base["a"] = config.a
    written = []
    for index, state in enumerate(sample_path(state, times)):
        meta = {**base, "n": config.n, "t": state.t, "rho": rho(state.t, config.clock)}
        matrix = wishart_of(state) if config.process == "wishart" else state.entries
        written.append(_write_table(store, f"sample_{config.process}_t{index}", matrix.to_frame(), meta))
        if config.spectra:
            for name, measure, law in _spectra(config.process, state):
                written.append(_write_table(store, f"{name}_{config.process}_t{index}", measure.to_frame(),
                                            {**meta, "limit_law": law}))
    return written


def _add_distance(report: VerifyReport, name: str, distance: DistanceReport):
    report.add(name, distance.metric, distance.value, distance.reference, None, distance.passed)
    report.details[name] = distance.to_dict()


def _add_curve(report: VerifyReport, name: str, curve: ConvergenceCurve, store: ResultStore):
    _write_table(store, f"curve_{name}", curve.to_frame(), {"metric": curve.metric})
    report.add(f"{name}_median_decreasing", curve.metric, curve.medians[-1], curve.medians[0], None,
               curve.is_decreasing())
    report.details[name] = curve.to_dict()


def _verify_moments(config: ExperimentConfig, report: VerifyReport):
    identity = moment_identity_check(config.n, config.k, config.replicates, config.seed)
    report.checks.extend(identity.checks)
    rho_value = rho(config.t_grid[0], config.clock)
    for kind in LIMIT_KINDS:
        law = LimitLaw(kind, rho_value)
        for order in range(1, max(config.k, 2) + 1):
            try:
                value = limit_moments(law, order)
                report.add(f"{kind}_moment_{order}", "operator_vs_quadrature", value, passed=True)
            except QuadratureError as e:
                logger.warning(str(e))
                report.add(f"{kind}_moment_{order}", "operator_vs_quadrature", float("nan"), passed=False)


def run_experiment(config: ExperimentConfig, store: ResultStore) -> VerifyReport:
    """Runs the verification named by `config.experiment` and collects its checks."""
    report = VerifyReport(config.experiment,
                          details={"config": config.model_dump(exclude=HASH_EXCLUDED), "kind": config.resolved_kind})
    kind, clock = config.resolved_kind, config.clock
    common = {"replicates": config.replicates, "seed": config.seed, "threads": config.threads, "clock": clock}
    for index, t in enumerate(config.t_grid):
        tag = f"t{index}"
        if config.experiment == "weights":
            t_alt = config.t_grid[1] if len(config.t_grid) > 1 else None
            _add_distance(report, "weights", weight_law_check(kind, config.n, config.beta, config.k, t, t_alt=t_alt,
                                                              a=config.a, alpha=config.alpha, **common))
            break
        if config.experiment == "converge":
            curve = scaled_entry_convergence(kind, config.k, t, config.beta, config.a, config.n_grid,
                                             epsilon=config.epsilon, **common)
            _add_curve(report, f"{kind}_k{config.k}_{tag}", curve, store)
        elif config.experiment == "limit-law":
            curve = limit_law_convergence(kind, t, config.beta, config.a, config.n_grid, **common)
            _add_curve(report, f"{kind}_{tag}", curve, store)
        elif config.experiment == "entry-density":
            _add_distance(report, f"entries_{tag}", entry_law_check(config.process, config.n, config.beta, t,
                                                                    a=config.a, alpha=config.alpha, **common))
        elif config.experiment == "closeness":
            _add_distance(report, f"closeness_{tag}", spectral_empirical_closeness(
                config.process, config.n, config.beta, t, config.epsilon, a=config.a, **common))
        elif config.experiment == "eigen-jpdf":
            checks = eigen_jpdf_check(config.process, config.beta, t, a=config.a, alpha=config.alpha, **common)
            report.checks.extend(replace(check, name=f"{check.name}_{tag}") for check in checks.checks)
        elif config.experiment == "stationarity":
            params = config.bessel if config.process == "bessel" else clock
            kernel = make_kernel(config.process, params)
            for position, x in enumerate(config.x_grid):
                value = stationarity_integral_check(t, x, params, kind=config.process)
                expected = kernel.stationary_density(x)
                report.add(f"stationarity_{tag}_x{position}", "integral", value, expected, STATIONARITY_TOLERANCE,
                           abs(value - expected) <= STATIONARITY_TOLERANCE)
        elif config.experiment == "series-check":
            result = series_discrepancy(t, config.x0_grid, config.x_grid, config.bessel, config.n_terms,
                                        SERIES_TOLERANCE)
            report.add(f"corrected_series_{tag}", "max_abs_deviation", result["corrected_deviation"], 0.0,
                       SERIES_TOLERANCE, result["corrected_deviation"] <= SERIES_TOLERANCE)
            report.add(f"paper_series_{tag}", "max_abs_deviation", result["paper_deviation"], 0.0)
            report.details[f"series_{tag}"] = result
        elif config.experiment == "kernel":
            samples, x0 = config.replicates, config.x0_grid[0]
            if config.process == "bessel":
                _add_distance(report, f"exactness_{tag}", bessel_exactness_check(
                    config.delta, t, samples, config.seed, config.alpha, clock))
            _add_distance(report, f"chapman_kolmogorov_{tag}", chapman_kolmogorov_check(
                config.process, x0, 0.5 * t, 0.5 * t, samples, config.seed, config.delta, config.alpha, clock))
        elif config.experiment == "moments":
            _verify_moments(config, report)
            break
        elif config.experiment == "folding":
            report.checks.extend(folding_check(config.replicates, config.seed).checks)
            break
        else:
            raise ConfigError(f"experiment: '{config.experiment}' is not a verification, use the sample command")
    return report


def cmd_verify(config: ExperimentConfig) -> int:
    """
    Runs one verification and writes its report.

    The JSON report is always written; with the csv format the checks are
    also written as a table. Returns 0 when every asserted check passed and
    1 otherwise.
    """
    store = make_store(config.output_format, config.output_dir, config.config_hash)
    report = run_experiment(config, store)
    reports = JsonResultStore(config.output_dir, config.config_hash)
    _write_record(reports, f"report_{config.experiment}", report.to_dict())
    if isinstance(store, CsvResultStore):
        _write_table(store, f"report_{config.experiment}", report.to_frame())
    failed = [check.name for check in report.checks if check.passed is False]
    if failed:
        logger.error(f"{config.experiment}: {len(failed)} check(s) failed: {', '.join(failed)}")
        return 1
    logger.info(f"{config.experiment}: all {len(report.checks)} check(s) passed")
    return 0


def cmd_plot(inputs, output_dir) -> List[Path]:
    """
    Renders one SVG per input table.

    Measure tables (lambda, weight) become histograms with the limit density
    named in their metadata; curve tables become log-log median plots.
    """
    if not inputs:
        raise StoreError("plot needs at least one input file")
    written = []
    for source in map(Path, inputs):
        store = JsonResultStore(output_dir) if source.suffix == ".json" else CsvResultStore(output_dir)
        answer = store.load_table(source)
        if not answer.ok:
            raise StoreError(answer.error)
        frame, meta = answer.data
        path = plot_table(frame, meta, Path(output_dir) / f"{source.stem}.svg")
        logger.info(f"wrote {path}")
        written.append(path)
    return written


def cmd_config_template(path) -> Path:
    """Writes an INI file holding every field with its default value."""
    path = ExperimentConfig().to_ini(path)
    logger.info(f"wrote {path}")
    return path
