"""Domain types for multitarget states and the per-pair cost construction.

A multitarget state with a fixed, known number of targets is an ordered
sequence of per-target state vectors; the position of a target in the
sequence is its implicit label.  The labelled distance between two such
states combines a base metric on the per-target state space with a constant
penalty for every pair matched across different positions.

All types are immutable after construction and validate their invariants
eagerly (non-finite values are rejected up front, never propagated), so
instances can be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, InvalidCost, NonFiniteValue

__all__ = [
    "TargetState",
    "MultiTargetState",
    "BaseMetric",
    "parse_base_metric",
    "LospaParams",
    "Permutation",
    "CostMatrix",
    "base_distance",
    "build_cost_matrix",
]


def _as_readonly(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class TargetState:
    """State vector of a single target (e.g. a position in metres).

    Args:
        coords: 1-D real vector of dimension >= 1; entries must be finite.
    """

    coords: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coords, dtype=float)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError(f"target state must be a 1-D vector, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise NonFiniteValue("target state contains NaN or infinity")
        object.__setattr__(self, "coords", _as_readonly(arr))

    @property
    def dim(self) -> int:
        return self.coords.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TargetState):
            return NotImplemented
        return np.array_equal(self.coords, other.coords)

    def __hash__(self) -> int:
        return hash(self.coords.tobytes())

    def __repr__(self) -> str:
        return f"TargetState({self.coords.tolist()})"


@dataclass(frozen=True, eq=False)
class MultiTargetState:
    """Ordered sequence of per-target states sharing one state dimension.

    The sequence position of each target is its implicit label: position j
    of one state is compared against position j of another when deciding
    whether a pairing is "correctly labelled".
    """

    targets: tuple[TargetState, ...]

    def __post_init__(self):
        targets = tuple(self.targets)
        if len(targets) < 1:
            raise ValueError("a multitarget state needs at least one target")
        dim = targets[0].dim
        for j, tgt in enumerate(targets):
            if tgt.dim != dim:
                raise DimensionMismatch(
                    f"target 0 has dimension {dim} but target {j} has dimension {tgt.dim}"
                )
        object.__setattr__(self, "targets", targets)

    @classmethod
    def from_points(cls, points: Iterable[Sequence[float] | float]) -> "MultiTargetState":
        """Build from an iterable of coordinate vectors (bare scalars mean 1-D)."""
        states = []
        for pt in points:
            if np.isscalar(pt):
                pt = [pt]
            states.append(TargetState(np.asarray(pt, dtype=float)))
        return cls(tuple(states))

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "MultiTargetState":
        """Build from a (t, n_x) array, one row per target."""
        arr = np.asarray(arr, dtype=float)
        if arr.ndim != 2:
            raise ValueError(f"expected a (t, n_x) array, got shape {arr.shape}")
        return cls(tuple(TargetState(row) for row in arr))

    def as_array(self) -> np.ndarray:
        """Return the (t, n_x) array of stacked per-target states."""
        return np.stack([tgt.coords for tgt in self.targets])

    @property
    def num_targets(self) -> int:
        return len(self.targets)

    @property
    def state_dim(self) -> int:
        return self.targets[0].dim

    def __len__(self) -> int:
        return len(self.targets)

    def __iter__(self):
        return iter(self.targets)

    def __getitem__(self, j: int) -> TargetState:
        return self.targets[j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiTargetState):
            return NotImplemented
        return self.targets == other.targets

    def __hash__(self) -> int:
        return hash(self.targets)

    def __repr__(self) -> str:
        return f"MultiTargetState({[tgt.coords.tolist() for tgt in self.targets]})"


@dataclass(frozen=True)
class BaseMetric:
    """Per-target distance on the state space: Euclidean or a general q-norm.

    Any q >= 1 gives a valid metric; q = 2 is the Euclidean distance and the
    default.  ``name`` only affects how the metric is spelled in reports.
    """

    q: float = 2.0
    name: str = "euclidean"

    def __post_init__(self):
        if not (math.isfinite(self.q) and self.q >= 1.0):
            raise ValueError(f"q-norm exponent must satisfy q >= 1, got {self.q}")
        if self.name not in ("euclidean", "pnorm"):
            raise ValueError(f"unknown base metric name {self.name!r}")

    @classmethod
    def euclidean(cls) -> "BaseMetric":
        return cls()

    @classmethod
    def pnorm(cls, q: float) -> "BaseMetric":
        return cls(q=float(q), name="pnorm")

    def describe(self) -> str:
        """Spelling used on the CLI and in report files."""
        if self.name == "euclidean":
            return "euclidean"
        return f"pnorm:{self.q:g}"

    def distance(self, x: np.ndarray, y: np.ndarray) -> float:
        return float(np.linalg.norm(x - y, ord=self.q))

    def pairwise(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """All-pairs distances between rows of two (t, n_x) arrays."""
        return np.linalg.norm(xs[:, None, :] - ys[None, :, :], ord=self.q, axis=2)


def parse_base_metric(text: str) -> BaseMetric:
    """Parse the CLI spelling: ``euclidean`` or ``pnorm:<q>``."""
    if text == "euclidean":
        return BaseMetric.euclidean()
    if text.startswith("pnorm:"):
        try:
            q = float(text.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad q-norm exponent in {text!r}") from None
        return BaseMetric.pnorm(q)
    raise ValueError(f"unknown base metric {text!r}; expected 'euclidean' or 'pnorm:<q>'")


@dataclass(frozen=True)
class LospaParams:
    """Parameters of the labelled distance.

    Args:
        p: order exponent, 1 <= p < infinity.
        alpha: labelling-error penalty, in the units of the base metric;
            alpha > 0 gives the labelled metric, alpha = 0 degenerates to
            plain OSPA without cut-off (localization only).
        base_metric: per-target distance on the state space.
    """

    p: float = 2.0
    alpha: float = 1.0
    base_metric: BaseMetric = field(default_factory=BaseMetric.euclidean)

    def __post_init__(self):
        if not (math.isfinite(self.p) and self.p >= 1.0):
            raise ValueError(f"order exponent must satisfy 1 <= p < inf, got {self.p}")
        if not (math.isfinite(self.alpha) and self.alpha >= 0.0):
            raise ValueError(f"alpha must be finite and >= 0, got {self.alpha}")

    def with_alpha(self, alpha: float) -> "LospaParams":
        return LospaParams(p=self.p, alpha=alpha, base_metric=self.base_metric)


@dataclass(frozen=True)
class Permutation:
    """Bijection on {0, ..., t-1}, stored as the image tuple (0-based).

    ``mapping[j] = k`` pairs position j of the first state with position k
    of the second.
    """

    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(v) for v in self.mapping)
        t = len(mapping)
        if t < 1 or sorted(mapping) != list(range(t)):
            raise ValueError(f"not a permutation of 0..{t - 1}: {mapping}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, t: int) -> "Permutation":
        return cls(tuple(range(t)))

    @property
    def is_identity(self) -> bool:
        return all(j == k for j, k in enumerate(self.mapping))

    def __len__(self) -> int:
        return len(self.mapping)

    def __iter__(self):
        return iter(self.mapping)

    def __getitem__(self, j: int) -> int:
        return self.mapping[j]


@dataclass(frozen=True, eq=False)
class CostMatrix:
    """Square matrix of per-pair matching costs.

    ``entries[j, k]`` is the cost of pairing target j of the first state with
    target k of the second: base distance to the p-th power, plus alpha**p
    when j != k (wrong label).
    """

    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise InvalidCost(f"cost matrix must be square and non-empty, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise InvalidCost("cost matrix contains NaN or infinity")
        if np.any(arr < 0.0):
            raise InvalidCost("cost matrix contains negative entries")
        object.__setattr__(self, "entries", _as_readonly(arr))

    @property
    def size(self) -> int:
        return self.entries.shape[0]


def _require_same_dim(x: TargetState, y: TargetState) -> None:
    if x.dim != y.dim:
        raise DimensionMismatch(
            f"state dimensions differ: first is {x.dim}, second is {y.dim}"
        )


def base_distance(x: TargetState, y: TargetState, params: LospaParams) -> float:
    """Distance between two single-target states under the selected base metric.

    Satisfies the metric axioms (identity, symmetry, triangle inequality) for
    any q-norm with q >= 1.

    Raises:
        DimensionMismatch: if the two states have different dimensions.
    """
    _require_same_dim(x, y)
    return params.base_metric.distance(x.coords, y.coords)


def build_cost_matrix(
    A: MultiTargetState, B: MultiTargetState, params: LospaParams
) -> CostMatrix:
    """Per-pair matching costs between two multitarget states.

    Entry (j, k) is ``b(a_j, b_k)**p + alpha**p * (0 if j == k else 1)``:
    the localization cost of the pairing plus the flat labelling penalty for
    matching across positions.

    Raises:
        DimensionMismatch: if the two states differ in target count or
            state dimension.
    """
    if A.num_targets != B.num_targets:
        raise DimensionMismatch(
            f"target counts differ: first has {A.num_targets}, second has {B.num_targets}"
        )
    if A.state_dim != B.state_dim:
        raise DimensionMismatch(
            f"state dimensions differ: first is {A.state_dim}, second is {B.state_dim}"
        )
    dist = params.base_metric.pairwise(A.as_array(), B.as_array())
    costs = dist**params.p
    if params.alpha > 0.0:
        t = A.num_targets
        costs = costs + params.alpha**params.p * (1.0 - np.eye(t))
    return CostMatrix(costs)
