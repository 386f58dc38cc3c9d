"""Input validation helpers shared by estimators and data containers."""

from __future__ import annotations

import numpy as np


class NotFittedError(RuntimeError):
    """Raised when a simulate/predict method is called before fit."""


def as_float_vector(x, name: str = "x") -> np.ndarray:
    """Coerce to a 1-D float64 array, rejecting non-finite entries."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        arr = arr.reshape(-1) if arr.size == max(arr.shape, default=0) else arr
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise ValueError(f"{name} contains a non-finite value at index {bad}")
    return arr


def as_float_matrix(x, name: str = "A") -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def check_is_fitted(estimator, attribute: str = "model_") -> None:
    if getattr(estimator, attribute, None) is None:
        raise NotFittedError(
            f"{type(estimator).__name__} is not fitted; call fit() first"
        )


def readonly(arr: np.ndarray) -> np.ndarray:
    """Return a non-writeable float64 copy (immutability for fitted records)."""
    out = np.array(arr, dtype=float, copy=True)
    out.setflags(write=False)
    return out
