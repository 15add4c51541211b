"""Maximal negativity of X states with a prescribed spectrum.

For a descending spectrum (lam_1, ..., lam_6), the optimal assignment of
eigenvalues to X blocks yields the closed-form ceiling

    -lam_4 - lam_6 + sqrt((lam_4 - lam_6)^2 + (lam_1 - lam_5)^2),

attained by an explicit X state.  The module also carries the brute-force
index-pair enumeration used as an independent oracle for that assignment, and
the three scalar inequalities underpinning it.
"""

import itertools

import numpy as np

from . import _kernels
from .linalg import TOL, random_spectrum
from .xstate import XState

__all__ = [
    "validate_spectrum",
    "s_value",
    "best_sequence_bruteforce",
    "n_x_lambda",
    "construct_spectrum_xmems",
    "lemma1_check",
    "random_spectrum",
]

OPTIMAL_SEQUENCE = (4, 6, 1, 5)


def validate_spectrum(lam):
    """Check a 6-vector is a descending probability spectrum; return it."""
    lam = np.asarray(lam, dtype=float)
    if lam.shape != (6,):
        raise ValueError(f"spectrum must have shape (6,), got {lam.shape}")
    if np.any(lam < -TOL.psd_slack):
        raise ValueError("spectrum entries must be nonnegative")
    if np.any(np.diff(lam) > TOL.psd_slack):
        raise ValueError("spectrum must be descending")
    if abs(lam.sum() - 1.0) > TOL.trace:
        raise ValueError(f"spectrum sums to {lam.sum()}, expected 1")
    return lam


def s_value(lam, seq):
    """-(lam_i + lam_j) + sqrt((lam_i - lam_j)^2 + (lam_k - lam_l)^2).

    seq is a 1-based index quadruple (i, j, k, l) with disjoint pairs.
    """
    lam = validate_spectrum(lam)
    i, j, k, el = seq
    if len({i, j, k, el}) != 4:
        raise ValueError(f"indices must be distinct, got {seq}")
    return float(_kernels.spectrum_pair_value(lam, i - 1, j - 1, k - 1, el - 1))


def all_sequences():
    """All 90 quadruples (i, j, k, l), 1-based, i<j, k<l, pairs disjoint."""
    out = []
    for i, j in itertools.combinations(range(1, 7), 2):
        rest = [m for m in range(1, 7) if m not in (i, j)]
        for k, el in itertools.combinations(rest, 2):
            out.append((i, j, k, el))
    return out


def best_sequence_bruteforce(lam):
    """Exhaustive argmax of s_value over all 90 sequences.

    Returns (sequence, value); ties resolve to the lexicographically smallest
    sequence.  For any spectrum the winning value equals s_value at (4,6,1,5).
    """
    lam = validate_spectrum(lam)
    best_seq, best_val = None, -np.inf
    for seq in all_sequences():
        i, j, k, el = seq
        v = float(_kernels.spectrum_pair_value(lam, i - 1, j - 1, k - 1, el - 1))
        if v > best_val:
            best_seq, best_val = seq, v
    return best_seq, best_val


def n_x_lambda(lam):
    """Maximal negativity over X states of spectrum lam (may be negative).

    A negative value means no X state with this spectrum is entangled.
    """
    lam = validate_spectrum(lam)
    return float(
        -lam[3] - lam[5] + np.sqrt((lam[3] - lam[5]) ** 2 + (lam[0] - lam[4]) ** 2)
    )


def construct_spectrum_xmems(lam):
    """Explicit X state of spectrum lam attaining max(0, n_x_lambda(lam)).

    Block 1 carries (lam_4, lam_6) diagonally, block 2 carries (lam_2, lam_3),
    and block 3 mixes (lam_1, lam_5) maximally on the anti-diagonal.
    """
    lam = validate_spectrum(lam)
    a = np.array([lam[3], lam[1], 0.5 * (lam[0] + lam[4])])
    b = np.array([lam[5], lam[2], 0.5 * (lam[0] + lam[4])])
    r = np.array([0.0, 0.0, 0.5 * (lam[0] - lam[4])])
    return XState(a=a, b=b, r=r)


def lemma1_check(a, b, c, slack=1e-12):
    """The three scalar inequalities behind the optimal-assignment proof.

    All must hold for nonnegative a, b, c; returns a 3-tuple of booleans with
    additive slack on each comparison.
    """
    if a < 0 or b < 0 or c < 0:
        raise ValueError("a, b, c must be nonnegative")
    lhs1 = a + np.sqrt((a + b) ** 2 + (b + c) ** 2)
    rhs1 = np.sqrt(b**2 + (a + b + c) ** 2)
    lhs2 = np.sqrt((b + a) ** 2 + (c + a) ** 2)
    rhs2 = np.sqrt(b**2 + c**2) + a
    lhs3 = np.sqrt(b**2 + c**2) + a
    rhs3 = np.sqrt((b + a) ** 2 + c**2)
    return (lhs1 >= rhs1 - slack, lhs2 >= rhs2 - slack, lhs3 >= rhs3 - slack)
