"""Core data containers: time series, lag structures, normalizers, datasets.

All containers are frozen dataclasses holding read-only float64 arrays, so
they are safe to share across parallel workers.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import numpy as np

from ._validation import as_float_vector, readonly

MAX_LAG = 20


@dataclass(frozen=True)
class TimeSeries:
    """One input/output record in physical units.

    Parameters
    ----------
    name : str
        Identifier (benchmark id, split name, ...).
    u : ndarray
        Input samples.
    y : ndarray
        Output samples, same length as ``u``.
    sample_time : float
        Sampling interval in seconds, > 0.
    """

    name: str
    u: np.ndarray
    y: np.ndarray
    sample_time: float

    def __post_init__(self):
        u = readonly(as_float_vector(self.u, "u"))
        y = readonly(as_float_vector(self.y, "y"))
        if len(u) != len(y):
            raise ValueError(f"u and y lengths differ: {len(u)} vs {len(y)}")
        if len(u) < 1:
            raise ValueError("empty series")
        if not self.sample_time > 0:
            raise ValueError(f"sample_time must be > 0, got {self.sample_time}")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "y", y)

    def __len__(self) -> int:
        return len(self.u)

    def slice(self, start: int, stop: int, name: str | None = None) -> "TimeSeries":
        return TimeSeries(
            name=name if name is not None else self.name,
            u=self.u[start:stop],
            y=self.y[start:stop],
            sample_time=self.sample_time,
        )


@dataclass(frozen=True)
class LagStructure:
    """Lagged-output / lagged-input counts for regressor construction.

    ``n_y`` counts lagged outputs y[t-1..t-n_y]; ``n_u`` counts inputs
    u[t..t-n_u+1] including the current sample.
    """

    n_y: int
    n_u: int

    def __post_init__(self):
        if not (isinstance(self.n_y, (int, np.integer)) and isinstance(self.n_u, (int, np.integer))):
            raise TypeError("lag counts must be integers")
        if self.n_y < 0 or self.n_u < 1:
            raise ValueError(f"need n_y >= 0 and n_u >= 1, got ({self.n_y}, {self.n_u})")
        if self.n_y > MAX_LAG or self.n_u > MAX_LAG:
            raise ValueError(f"lags are bounded by {MAX_LAG}, got ({self.n_y}, {self.n_u})")
        object.__setattr__(self, "n_y", int(self.n_y))
        object.__setattr__(self, "n_u", int(self.n_u))

    @property
    def p(self) -> int:
        """Number of startup samples consumed before the first target."""
        return max(self.n_y, self.n_u)

    @property
    def width(self) -> int:
        """Regressor width excluding the bias column."""
        return self.n_y + self.n_u


@dataclass(frozen=True)
class Normalizer:
    """Affine train-set statistics applied/inverted around every model.

    ``mode`` is ``"mean_only"`` (scales fixed at 1) or ``"zscore"``
    (population standard deviation). Constant channels keep scale 1 and set
    the corresponding flag.
    """

    mode: str
    u_mean: float
    y_mean: float
    u_scale: float = 1.0
    y_scale: float = 1.0
    u_constant: bool = False
    y_constant: bool = False

    def __post_init__(self):
        if self.mode not in ("mean_only", "zscore"):
            raise ValueError(f"unknown normalizer mode {self.mode!r}")
        if not (self.u_scale > 0 and self.y_scale > 0):
            raise ValueError("scales must be positive")

    def apply_u(self, u) -> np.ndarray:
        return (np.asarray(u, dtype=float) - self.u_mean) / self.u_scale

    def apply_y(self, y) -> np.ndarray:
        return (np.asarray(y, dtype=float) - self.y_mean) / self.y_scale

    def invert_u(self, u) -> np.ndarray:
        return np.asarray(u, dtype=float) * self.u_scale + self.u_mean

    def invert_y(self, y) -> np.ndarray:
        return np.asarray(y, dtype=float) * self.y_scale + self.y_mean

    def apply(self, ts: TimeSeries) -> TimeSeries:
        return TimeSeries(ts.name, self.apply_u(ts.u), self.apply_y(ts.y), ts.sample_time)

    def invert(self, ts: TimeSeries) -> TimeSeries:
        return TimeSeries(ts.name, self.invert_u(ts.u), self.invert_y(ts.y), ts.sample_time)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "Normalizer":
        return cls(**d)


VALID_BENCHMARK_IDS = ("silverbox", "wiener_hammerstein", "emps", "cascaded_tanks", "ced")


@dataclass(frozen=True)
class BenchmarkDataset:
    """A benchmark's train/validation/test splits plus reporting metadata.

    The validation split is carved out of the benchmark's training material;
    test records are named (e.g. silverbox has multisine / arrow_full /
    arrow_no_extrap).
    """

    benchmark_id: str
    train: TimeSeries
    validation: TimeSeries
    tests: dict[str, TimeSeries] = field(default_factory=dict)
    report_unit: str = ""
    report_scale: float = 1.0

    def __post_init__(self):
        if self.benchmark_id not in VALID_BENCHMARK_IDS:
            raise ValueError(
                f"unknown benchmark_id {self.benchmark_id!r}; expected one of {VALID_BENCHMARK_IDS}"
            )
        if self.report_scale not in (1, 1.0, 1000, 1000.0, 1e3):
            raise ValueError(f"report_scale must be 1 or 10^3, got {self.report_scale}")
