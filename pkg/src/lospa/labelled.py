"""Explicit-label representation of a multitarget state.

A labelled set carries (state, label) pairs with unique integer labels and no
meaningful element order.  When both sets use the same labels, the labelled
distance over sets equals the vector distance after arranging both by any
common label order, so :func:`lospa_sets` reduces to the vector computation.

Labels are integers by design: the labelling penalty only ever tests labels
for equality, and exact equality on floats is fragile.  Storage order is
irrelevant; instances are immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import DimensionMismatch, LospaParams, MultiTargetState, TargetState
from .errors import DuplicateLabel, LabelMismatch
from .metric import lospa

__all__ = ["LabelledTarget", "LabelledSet", "from_vector", "to_vector", "lospa_sets"]


@dataclass(frozen=True)
class LabelledTarget:
    """A single target state with its immutable label."""

    state: TargetState
    label: int

    def __post_init__(self):
        object.__setattr__(self, "label", int(self.label))


@dataclass(frozen=True, eq=False)
class LabelledSet:
    """Unordered collection of labelled targets with pairwise-distinct labels."""

    elements: tuple[LabelledTarget, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        if len(elements) < 1:
            raise ValueError("a labelled set needs at least one element")
        labels = [el.label for el in elements]
        if len(set(labels)) != len(labels):
            dupes = sorted({l for l in labels if labels.count(l) > 1})
            raise DuplicateLabel(f"labels must be unique, repeated: {dupes}")
        dim = elements[0].state.dim
        for el in elements:
            if el.state.dim != dim:
                raise DimensionMismatch(
                    f"all states must share one dimension; found {dim} and {el.state.dim}"
                )
        object.__setattr__(self, "elements", elements)

    @property
    def labels(self) -> frozenset[int]:
        return frozenset(el.label for el in self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def state_dim(self) -> int:
        return self.elements[0].state.dim

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        # Unordered semantics: compare as sets of (label, state) pairs.
        if not isinstance(other, LabelledSet):
            return NotImplemented
        return set(self.elements) == set(other.elements)

    def __hash__(self) -> int:
        return hash(frozenset(self.elements))


def from_vector(X: MultiTargetState, labels: Sequence[int]) -> LabelledSet:
    """Attach explicit labels to a multitarget state, position by position.

    Element j of the result carries state j of ``X`` and ``labels[j]``.

    Raises:
        DimensionMismatch: if ``labels`` does not have one entry per target.
        DuplicateLabel: if two labels coincide.
    """
    labels = [int(l) for l in labels]
    if len(labels) != X.num_targets:
        raise DimensionMismatch(
            f"{X.num_targets} targets but {len(labels)} labels"
        )
    return LabelledSet(
        tuple(LabelledTarget(state=s, label=l) for s, l in zip(X.targets, labels))
    )


def to_vector(S: LabelledSet, label_order: Sequence[int]) -> MultiTargetState:
    """Arrange a labelled set into a multitarget state by the given label order.

    ``label_order`` must be exactly the labels of ``S``; position j of the
    result holds the state labelled ``label_order[j]``.

    Raises:
        LabelMismatch: if ``label_order`` misses a label or names an unknown one.
    """
    order = [int(l) for l in label_order]
    by_label = {el.label: el.state for el in S.elements}
    unknown = [l for l in order if l not in by_label]
    if unknown:
        raise LabelMismatch(f"labels not in the set: {unknown}")
    if len(order) != len(by_label) or len(set(order)) != len(order):
        missing = sorted(set(by_label) - set(order))
        raise LabelMismatch(f"label order must cover every label exactly once; missing: {missing}")
    return MultiTargetState(tuple(by_label[l] for l in order))


def lospa_sets(A: LabelledSet, B: LabelledSet, params: LospaParams) -> float:
    """Labelled distance between two labelled sets over the same labels.

    Equivalent to the vector-domain distance after arranging both sets by any
    common label order; the choice of order does not matter because it
    permutes both sides identically.

    Raises:
        LabelMismatch: if the two sets do not carry identical label sets.
        DimensionMismatch: if state dimensions differ.
    """
    if A.labels != B.labels:
        only_a = sorted(A.labels - B.labels)
        only_b = sorted(B.labels - A.labels)
        raise LabelMismatch(
            f"label sets differ: only in first {only_a}, only in second {only_b}"
        )
    order = sorted(A.labels)
    return lospa(to_vector(A, order), to_vector(B, order), params).distance
