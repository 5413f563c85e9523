from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

from betaproc.errors import StoreError  # noqa: E402
from betaproc.laws.domain import LimitLaw  # noqa: E402
from betaproc.laws.repository import limit_density  # noqa: E402

MEASURE_COLUMNS = {"lambda", "weight"}
CURVE_COLUMNS = {"n", "median_distance", "q25", "q75"}

plt.rcParams["svg.hashsalt"] = "betaproc"


def _save(figure, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    figure.savefig(path, format="svg", metadata={"Date": None})
    plt.close(figure)
    return path


def plot_measure(frame: pd.DataFrame, meta: dict, path: Path, bins: int = 60) -> Path:
    """Weighted histogram of an atomic measure, with the limit density when `meta` names one."""
    points = frame["lambda"].to_numpy(dtype=float)
    weights = frame["weight"].to_numpy(dtype=float)
    figure, axis = plt.subplots(figsize=(6.0, 4.0))
    law = None
    if meta.get("limit_law") and meta.get("rho"):
        law = LimitLaw(meta["limit_law"], float(meta["rho"]))
    lower, upper = law.support if law else (points.min(), points.max())
    lower, upper = min(lower, points.min()), max(upper, points.max())
    axis.hist(points, bins=np.linspace(lower, upper, bins + 1), weights=weights, density=True,
              color="0.75", edgecolor="0.4", label="measure")
    if law is not None:
        grid = np.linspace(*law.support, 801)
        if law.kind == "mp":
            grid = grid[1:]
        axis.plot(grid, limit_density(law, grid), color="C0", label=f"{law.kind} (rho={law.rho:.4g})")
        axis.set_xlim(*law.support)
    axis.set_xlabel("x")
    axis.set_ylabel("density")
    axis.legend()
    return _save(figure, path)


def plot_curve(frame: pd.DataFrame, meta: dict, path: Path) -> Path:
    """Median distance against n on log-log axes with the interquartile band."""
    n = frame["n"].to_numpy(dtype=float)
    figure, axis = plt.subplots(figsize=(6.0, 4.0))
    axis.fill_between(n, frame["q25"], frame["q75"], color="C0", alpha=0.25, label="q25-q75")
    axis.plot(n, frame["median_distance"], "o-", color="C0", label="median")
    if "value" in frame:
        axis.plot(n, frame["value"], "s--", color="C1", label="exceedance")
    axis.set_xscale("log")
    axis.set_yscale("log")
    axis.set_xlabel("n")
    axis.set_ylabel(meta.get("metric", "distance"))
    axis.legend()
    return _save(figure, path)


def plot_table(frame: pd.DataFrame, meta: dict, path: Path) -> Path:
    """
    Dispatches on the table columns.

    Raises:
        StoreError: If the table is empty or neither a measure nor a curve.
    """
    if frame.empty:
        raise StoreError(f"{path}: nothing to plot, the input table is empty")
    columns = set(frame.columns)
    if MEASURE_COLUMNS <= columns:
        return plot_measure(frame, meta, path)
    if CURVE_COLUMNS <= columns:
        return plot_curve(frame, meta, path)
    raise StoreError(f"{path}: unrecognized table schema {sorted(columns)}")
