from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from betaproc.errors import DomainError

METRICS = ("ks", "sup_cdf", "bounded_lipschitz", "moment_vector", "exceedance")


@dataclass
class DistanceReport:
    """
    A distance between a sampled quantity and its reference.

    Attributes:
    ----------
    metric : str
        One of 'ks', 'sup_cdf', 'bounded_lipschitz', 'moment_vector', 'exceedance'.
    value : float
        The measured distance, ≥ 0.
    n : int
        Matrix size.
    replicates : int
        Number of Monte Carlo replicates.
    seed : int
        Master seed.
    reference : float, optional
        Reference value the measurement is held against.
    p_value : float, optional
        Test p-value, for KS reports.
    passed : bool, optional
        Verdict, when the report carries one.
    details : dict
        Secondary statistics.
    """
    metric: str
    value: float
    n: int
    replicates: int
    seed: int
    reference: Optional[float] = None
    p_value: Optional[float] = None
    passed: Optional[bool] = None
    details: Dict = field(default_factory=dict)

    def __post_init__(self):
        if self.metric not in METRICS:
            raise DomainError(f"unknown metric '{self.metric}'")
        if not self.value >= 0:
            raise DomainError(f"distance must be nonnegative, got {self.value}")
        if self.metric == "bounded_lipschitz" and self.value > 2.0 + 1e-12:
            raise DomainError(f"bounded-Lipschitz distance cannot exceed 2, got {self.value}")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class ConvergenceCurve:
    """
    Median distances (with quartiles) over an increasing grid of sizes n.

    `values` holds a per-n scalar such as an exceedance probability when the
    experiment has one; `extras` holds further per-n series.
    """
    metric: str
    n_values: List[int]
    medians: List[float]
    q25: List[float]
    q75: List[float]
    replicates: List[int]
    seed: int
    values: Optional[List[float]] = None
    extras: Dict[str, List[float]] = field(default_factory=dict)

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.n_values, self.n_values[1:])):
            raise DomainError(f"n-values must be strictly increasing, got {self.n_values}")
        if not len(self.medians) == len(self.q25) == len(self.q75) == len(self.n_values):
            raise DomainError("every curve column needs one entry per n")

    @property
    def slope(self) -> float:
        """Least-squares slope of log median against log n; nan with fewer than two usable points."""
        n = np.asarray(self.n_values, dtype=float)
        medians = np.asarray(self.medians, dtype=float)
        usable = medians > 0
        if usable.sum() < 2:
            return float("nan")
        return float(np.polyfit(np.log(n[usable]), np.log(medians[usable]), 1)[0])

    def is_decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.medians, self.medians[1:]))

    def to_frame(self) -> pd.DataFrame:
        columns = {"n": self.n_values, "median_distance": self.medians, "q25": self.q25, "q75": self.q75}
        if self.values is not None:
            columns["value"] = self.values
        for name, series in sorted(self.extras.items()):
            columns[name] = series
        return pd.DataFrame(columns)

    def to_dict(self) -> dict:
        record = asdict(self)
        record["slope"] = self.slope
        return record


@dataclass
class CheckResult:
    """
    One named check: statistic, measured value, reference, tolerance, verdict.

    `passed` is None for checks that are reported without being asserted.
    """
    name: str
    statistic: str
    value: float
    reference: Optional[float] = None
    tolerance: Optional[float] = None
    passed: Optional[bool] = None


@dataclass
class VerifyReport:
    experiment: str
    checks: List[CheckResult] = field(default_factory=list)
    details: Dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed is not False for check in self.checks)

    def add(self, name: str, statistic: str, value: float, reference: float = None,
            tolerance: float = None, passed: bool = None) -> CheckResult:
        check = CheckResult(name, statistic, float(value),
                            None if reference is None else float(reference),
                            None if tolerance is None else float(tolerance),
                            None if passed is None else bool(passed))
        self.checks.append(check)
        return check

    def to_dict(self) -> dict:
        return {"experiment": self.experiment, "passed": self.passed,
                "checks": [asdict(check) for check in self.checks], "details": self.details}

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(check) for check in self.checks],
                            columns=["name", "statistic", "value", "reference", "tolerance", "passed"])
