"""X-form qubit-qutrit density matrices.

An X state is nonzero only on the main- and anti-diagonals.  In the m = 3a + b
basis it is parametrized by twelve reals: diagonal entries a_k (upper-left
half) and b_k (lower-right half), anti-diagonal magnitudes r_k and phases
phi_k, for k = 1, 2, 3.  Block k couples basis states (k-1) and (6-k).

Validity requires sum_k (a_k + b_k) = 1 and r_k <= sqrt(a_k b_k); the second
condition is exactly positive semidefiniteness of the 2x2 block k.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .linalg import TOL

__all__ = [
    "XState",
    "XStateError",
    "XSpectra",
    "from_matrix",
    "x_spectra",
    "x_negativity",
    "count_negative_pt_eigs",
    "random_xstate",
]

# Indices (row, col) of the anti-diagonal entry r_k e^{-i phi_k} for k=1,2,3.
_OFFDIAG = ((0, 5), (1, 4), (2, 3))


class XStateError(ValueError):
    """Raised when the twelve X-state parameters violate a validity condition."""


@dataclass(frozen=True)
class XState:
    """Parameters of a 2x3 X state. Arrays of shape (3,); phi in radians."""

    a: np.ndarray
    b: np.ndarray
    r: np.ndarray
    phi: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        for name in ("a", "b", "r", "phi"):
            arr = np.asarray(getattr(self, name), dtype=float)
            if arr.shape != (3,):
                raise XStateError(f"{name} must have shape (3,), got {arr.shape}")
            object.__setattr__(self, name, arr)
        self.validate()

    def validate(self, tol=TOL.psd_slack):
        if np.any(self.a < -tol) or np.any(self.b < -tol) or np.any(self.r < -tol):
            raise XStateError("a, b, r must be nonnegative")
        total = float(np.sum(self.a) + np.sum(self.b))
        if abs(total - 1.0) > TOL.trace:
            raise XStateError(f"normalization sum(a) + sum(b) = {total}, expected 1")
        bound = np.sqrt(self.a * self.b)
        for k in range(3):
            if self.r[k] > bound[k] + tol:
                raise XStateError(
                    f"positivity violated in block {k + 1}: "
                    f"r = {self.r[k]} > sqrt(a*b) = {bound[k]}"
                )

    def to_matrix(self):
        """Dense 6x6 density matrix with the X sparsity pattern."""
        rho = np.zeros((6, 6), dtype=complex)
        for k in range(3):
            i, j = _OFFDIAG[k]
            rho[i, i] = self.a[k]
            rho[j, j] = self.b[k]
            off = self.r[k] * np.exp(-1j * self.phi[k])
            rho[i, j] = off
            rho[j, i] = np.conj(off)
        return rho

    def params9(self):
        """Flat (a1..a3, b1..b3, r1..r3) vector for the numeric kernels."""
        return np.concatenate([self.a, self.b, self.r])

    def to_dict(self):
        """Flat JSON-friendly record with keys a1..a3, b1..b3, r1..r3, phi1..phi3."""
        out = {}
        for name, arr in (("a", self.a), ("b", self.b), ("r", self.r), ("phi", self.phi)):
            for k in range(3):
                out[f"{name}{k + 1}"] = float(arr[k])
        return out

    @classmethod
    def from_dict(cls, d):
        vals = {
            name: np.array([d[f"{name}{k + 1}"] for k in range(3)], dtype=float)
            for name in ("a", "b", "r", "phi")
        }
        return cls(**vals)


def from_matrix(rho, tol=1e-12):
    """Recover X-state parameters from a density matrix with X sparsity.

    Raises XStateError listing offending entries if the matrix has support
    outside the X pattern.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (6, 6):
        raise XStateError(f"expected a 6x6 matrix, got shape {rho.shape}")
    mask = np.zeros((6, 6), dtype=bool)
    for i in range(6):
        mask[i, i] = True
        mask[i, 5 - i] = True
    bad = [(i, j) for i in range(6) for j in range(6) if not mask[i, j] and abs(rho[i, j]) > tol]
    if bad:
        raise XStateError(f"matrix is not in X form; nonzero off-pattern entries at {bad}")
    a = np.array([rho[i, i].real for i, _ in _OFFDIAG])
    b = np.array([rho[j, j].real for _, j in _OFFDIAG])
    r = np.array([abs(rho[i, j]) for i, j in _OFFDIAG])
    phi = np.array(
        [-np.angle(rho[i, j]) if r[k] > 0 else 0.0 for k, (i, j) in enumerate(_OFFDIAG)]
    )
    return XState(a=a, b=b, r=r, phi=phi)


@dataclass(frozen=True)
class XSpectra:
    """Closed-form eigenvalues of an X state and of its partial transpose.

    state_eigs[k] = (lam_k^-, lam_k^+); pt_eigs likewise.  d[k] = (b_k - a_k)/2.
    """

    state_eigs: np.ndarray
    pt_eigs: np.ndarray
    d: np.ndarray

    def state_values(self):
        return np.sort(self.state_eigs.ravel())

    def pt_values(self):
        return np.sort(self.pt_eigs.ravel())


def x_spectra(x):
    """Eigenvalues of an X state and its partial transpose, in closed form.

    Block k of the state has eigenvalues (a_k + b_k)/2 +- sqrt(r_k^2 + d_k^2);
    the partial transpose swaps r_1 and r_3, giving block-k eigenvalues
    (a_k + b_k)/2 +- sqrt(r_{4-k}^2 + d_k^2).  Phases drop out entirely.
    """
    d = 0.5 * (x.b - x.a)
    mean = 0.5 * (x.a + x.b)
    half = np.sqrt(x.r**2 + d**2)
    half_pt = np.sqrt(x.r[::-1] ** 2 + d**2)
    state = np.stack([mean - half, mean + half], axis=1)
    pt = np.stack([mean - half_pt, mean + half_pt], axis=1)
    return XSpectra(state_eigs=state, pt_eigs=pt, d=d)


def x_negativity(x):
    """Closed-form negativity of an X state.

    Only the minus-branch PT eigenvalues of blocks 1 and 3 can be negative,
    and at most one of them is, so the negativity reduces to
    2 * max(0, -lam'_1-, -lam'_3-).
    """
    vals = _kernels.x_negativity_batch(x.params9()[None, :])
    return float(vals[0])


def count_negative_pt_eigs(x, threshold=-1e-12):
    """Number of negative partial-transpose eigenvalues (always 0 or 1).

    Two simultaneous negatives would contradict the positivity constraints
    r_1 <= sqrt(a_1 b_1), r_3 <= sqrt(a_3 b_3); an internal assertion guards
    against that.
    """
    eigs = _kernels.x_pt_minus_eigs(x.params9()[None, :])[0]
    count = int(np.sum(eigs < threshold))
    assert count <= 1, f"two negative PT eigenvalues {eigs} for a valid X state"
    return count


def random_xstate(rng, boundary_prob=0.1):
    """Random valid X state: simplex diagonal, r_k a uniform fraction of its
    positivity bound (occasionally exactly on the bound), uniform phases."""
    w = rng.exponential(size=6)
    w /= w.sum()
    a, b = w[:3].copy(), w[3:].copy()
    frac = rng.uniform(0.0, 1.0, size=3)
    frac[rng.uniform(size=3) < boundary_prob] = 1.0
    r = frac * np.sqrt(a * b)
    phi = rng.uniform(0.0, 2.0 * np.pi, size=3)
    return XState(a=a, b=b, r=r, phi=phi)
