"""Dataset ingestion: CSV loading, manifests, splits, normalization, regressors.

External formats (see README):
  * series CSV: header row, one sample per line, decimal point, no
    thousands separators; input/output column names given by a schema.
  * dataset manifest: YAML listing benchmark_id, file paths per split,
    sample_time, report_unit, report_scale and the column schema.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np
import yaml

from .datatypes import BenchmarkDataset, LagStructure, Normalizer, TimeSeries

MANIFEST_VERSION = 1


def load_csv(path, schema: dict[str, str], sample_time: float, name: str | None = None) -> TimeSeries:
    """Read one series from a CSV file.

    Parameters
    ----------
    path : str or Path
        File to read.
    schema : dict
        Column mapping with keys ``"u"`` and ``"y"`` naming the input and
        output columns.
    sample_time : float
        Sampling interval in seconds.

    Raises
    ------
    FileNotFoundError, ValueError
        Missing file/column, non-numeric cells (reported with row index) and
        header-only files.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"dataset file not found: {path}")
    for key in ("u", "y"):
        if key not in schema:
            raise ValueError(f"schema must map {key!r} to a column name")
    u_vals: list[float] = []
    y_vals: list[float] = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValueError(f"empty series: {path} has no header row")
        for key in ("u", "y"):
            if schema[key] not in reader.fieldnames:
                raise ValueError(
                    f"missing column {schema[key]!r} in {path}; found {reader.fieldnames}"
                )
        for i, row in enumerate(reader):
            try:
                u_vals.append(float(row[schema["u"]]))
                y_vals.append(float(row[schema["y"]]))
            except (TypeError, ValueError) as exc:
                raise ValueError(f"non-numeric cell at data row {i} of {path}: {exc}") from exc
    if not u_vals:
        raise ValueError(f"empty series: {path} contains a header but no samples")
    return TimeSeries(
        name=name if name is not None else path.stem,
        u=np.array(u_vals),
        y=np.array(y_vals),
        sample_time=sample_time,
    )


def write_csv(path, ts: TimeSeries, schema: dict[str, str] | None = None) -> None:
    """Write a series in the package CSV format (inverse of load_csv)."""
    schema = schema or {"u": "u", "y": "y"}
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([schema["u"], schema["y"]])
        for u, y in zip(ts.u, ts.y):
            writer.writerow([repr(float(u)), repr(float(y))])


def split_train_val(ts: TimeSeries, val_fraction: float = 0.2, min_segment: int = 2) -> tuple[TimeSeries, TimeSeries]:
    """Split a record into a training head and a contiguous validation tail.

    Contiguity preserves the dynamics; concatenating the two segments
    reconstructs ``ts`` exactly.
    """
    if not 0.0 < val_fraction < 1.0:
        raise ValueError(f"val_fraction must lie in (0, 1), got {val_fraction}")
    n = len(ts)
    n_val = int(round(n * val_fraction))
    n_train = n - n_val
    if n_train < min_segment or n_val < min_segment:
        raise ValueError(
            f"segment too short: split of length-{n} series at {val_fraction} "
            f"gives train {n_train} / validation {n_val} (minimum {min_segment})"
        )
    train = ts.slice(0, n_train, name=f"{ts.name}:train")
    val = ts.slice(n_train, n, name=f"{ts.name}:validation")
    return train, val


def fit_normalizer(train: TimeSeries, mode: str = "zscore") -> Normalizer:
    """Estimate normalization statistics from the training record only.

    ``zscore`` uses the population (1/N) standard deviation; a constant
    channel keeps scale 1 and raises its flag.
    """
    if len(train) < 1:
        raise ValueError("empty series")
    u_mean = float(np.mean(train.u))
    y_mean = float(np.mean(train.y))
    u_scale = y_scale = 1.0
    u_const = y_const = False
    if mode == "zscore":
        u_std = float(np.std(train.u))
        y_std = float(np.std(train.y))
        if u_std > 0.0:
            u_scale = u_std
        else:
            u_const = True
        if y_std > 0.0:
            y_scale = y_std
        else:
            y_const = True
    elif mode != "mean_only":
        raise ValueError(f"unknown normalizer mode {mode!r}")
    return Normalizer(
        mode=mode,
        u_mean=u_mean,
        y_mean=y_mean,
        u_scale=u_scale,
        y_scale=y_scale,
        u_constant=u_const,
        y_constant=y_const,
    )


def lagged_regressors(y: np.ndarray, u: np.ndarray, n_y: int, n_u: int) -> tuple[np.ndarray, np.ndarray]:
    """Raw lagged-regressor matrix without bias column or lag-bound checks.

    Row t (t = p..N-1, p = max(n_y, n_u)) is
    [y[t-1], ..., y[t-n_y], u[t], ..., u[t-n_u+1]] with target y[t].
    """
    y = np.asarray(y, dtype=float)
    u = np.asarray(u, dtype=float)
    n = len(y)
    p = max(n_y, n_u)
    if n <= p:
        raise ValueError(f"series of length {n} is too short for lag depth {p}")
    rows = n - p
    H = np.empty((rows, n_y + n_u))
    for k in range(1, n_y + 1):
        H[:, k - 1] = y[p - k : n - k]
    for k in range(n_u):
        H[:, n_y + k] = u[p - k : n - k]
    targets = y[p:n]
    return H, targets


def build_hankel(ts: TimeSeries, lags: LagStructure) -> tuple[np.ndarray, np.ndarray]:
    """Hankel regressor matrix of lagged outputs/inputs plus a bias column.

    Returns ``(H, targets)`` where H has ``len(ts) - lags.p`` rows and
    ``lags.width + 1`` columns, the last being constant one.
    """
    H, targets = lagged_regressors(ts.y, ts.u, lags.n_y, lags.n_u)
    bias = np.ones((H.shape[0], 1))
    return np.hstack([H, bias]), targets


def regressor_row(y_hist: np.ndarray, u_hist: np.ndarray, lags: LagStructure, bias: bool = True) -> np.ndarray:
    """One regressor row from history windows ending at the current step.

    ``y_hist`` holds y[t-p..t-1] and ``u_hist`` holds u[t-p+1..t], both of
    length ``lags.p``; layout matches build_hankel.
    """
    p = lags.p
    row = np.empty(lags.width + (1 if bias else 0))
    for k in range(1, lags.n_y + 1):
        row[k - 1] = y_hist[p - k]
    for k in range(lags.n_u):
        row[lags.n_y + k] = u_hist[p - 1 - k]
    if bias:
        row[-1] = 1.0
    return row


# --- manifest handling -------------------------------------------------------

_REQUIRED_ENTRY_KEYS = ("benchmark_id", "sample_time", "train", "tests")


def load_manifest(path) -> dict:
    """Parse and validate a dataset manifest file."""
    path = Path(path)
    with open(path) as fh:
        doc = yaml.safe_load(fh)
    if not isinstance(doc, dict) or "benchmarks" not in doc:
        raise ValueError(f"manifest {path} must be a mapping with a 'benchmarks' list")
    version = doc.get("manifest_version", 1)
    if version != MANIFEST_VERSION:
        raise ValueError(f"unsupported manifest_version {version}")
    for entry in doc["benchmarks"]:
        for key in _REQUIRED_ENTRY_KEYS:
            if key not in entry:
                raise ValueError(f"manifest entry missing {key!r}: {entry}")
    doc["_root"] = path.parent
    return doc


def dataset_from_manifest(manifest: dict, benchmark_id: str, val_fraction: float = 0.2) -> BenchmarkDataset:
    """Materialize one benchmark's splits from a parsed manifest."""
    entry = None
    for cand in manifest["benchmarks"]:
        if cand["benchmark_id"] == benchmark_id:
            entry = cand
            break
    if entry is None:
        raise KeyError(f"benchmark {benchmark_id!r} not in manifest")
    root = Path(manifest.get("_root", "."))
    schema = entry.get("columns", {"u": "u", "y": "y"})
    sample_time = float(entry["sample_time"])

    def _load(rel, name):
        return load_csv(root / rel, schema, sample_time, name=name)

    full_train = _load(entry["train"], f"{benchmark_id}:train")
    train, validation = split_train_val(full_train, val_fraction)
    tests = {
        name: _load(rel, f"{benchmark_id}:{name}") for name, rel in entry["tests"].items()
    }
    return BenchmarkDataset(
        benchmark_id=benchmark_id,
        train=train,
        validation=validation,
        tests=tests,
        report_unit=entry.get("report_unit", ""),
        report_scale=float(entry.get("report_scale", 1)),
    )
