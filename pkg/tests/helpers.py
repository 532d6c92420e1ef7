"""Shared test utilities, most importantly an independent reference oracle.

``enum_lospa`` and ``enum_min_assignment`` deliberately avoid numpy, scipy
and the library under test: plain Python floats, ``math`` and literal
enumeration of every permutation.  Golden values in the tests were frozen
from these functions.
"""

import itertools
import math

from lospa import MultiTargetState


def qnorm_dist(x, y, q=2.0):
    """q-norm distance between two coordinate sequences (pure Python)."""
    return sum(abs(a - b) ** q for a, b in zip(x, y)) ** (1.0 / q)


def enum_min_assignment(C):
    """Minimum-cost pairing of a square cost matrix by literal enumeration.

    Returns (total, perm) with the total accumulated left-to-right; among
    ties the lexicographically smallest permutation wins.
    """
    t = len(C)
    best_total, best_perm = None, None
    for phi in itertools.permutations(range(t)):
        total = 0.0
        for j in range(t):
            total += C[j][phi[j]]
        if best_total is None or total < best_total:
            best_total, best_perm = total, phi
    return best_total, best_perm


def enum_lospa(A, B, p, alpha, q=2.0):
    """Labelled distance by literal enumeration over all pairings.

    A and B are lists of per-target coordinate lists.
    """
    t = len(A)
    C = [
        [
            qnorm_dist(A[j], B[k], q) ** p + alpha**p * (0.0 if j == k else 1.0)
            for k in range(t)
        ]
        for j in range(t)
    ]
    total, _ = enum_min_assignment(C)
    return (total / t) ** (1.0 / p)


def mts(points):
    """MultiTargetState from a list of coordinate lists (or bare scalars)."""
    return MultiTargetState.from_points(points)


def random_points(rng, t, nx, scale=20.0):
    """t random coordinate lists of length nx, as plain Python floats."""
    return [[float(v) for v in rng.uniform(-scale, scale, size=nx)] for _ in range(t)]


def csv_text(steps, t, nx, sidecar=True, header=None):
    """Render trajectory steps as CSV file text.

    ``steps`` is a list of (k, points) with points a list of t coordinate
    lists of length nx.
    """
    lines = []
    if sidecar:
        lines.append(f"# t={t} nx={nx}")
    if header is None:
        names = [f"x_{i}_{j}" for i in range(1, t + 1) for j in range(1, nx + 1)]
        header = ",".join(["k"] + names)
    lines.append(header)
    for k, points in steps:
        flat = [repr(float(v)) for point in points for v in point]
        lines.append(",".join([str(k)] + flat))
    return "\n".join(lines) + "\n"


def json_doc(steps, t, nx):
    """Trajectory steps as the dict form of the JSON file format."""
    return {
        "t": t,
        "nx": nx,
        "steps": [{"k": k, "targets": points} for k, points in steps],
    }


# The worked 3-target example: truth, the three estimates, and how many
# targets each estimate places in another target's slot.
TRUTH_POINTS = [-10.0, 0.0, 10.0]
ESTIMATE_POINTS = [
    [-10.1, 0.1, 10.1],
    [0.1, -10.1, 10.1],
    [10.1, -10.1, 0.1],
]
WRONG_PAIRINGS = [0, 2, 3]


def expected_table_value(row, alpha):
    """Closed-form labelled distance for estimate ``row`` (1-based) at alpha."""
    return math.sqrt(0.1**2 + WRONG_PAIRINGS[row - 1] * alpha**2 / 3.0)
