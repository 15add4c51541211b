"""Maximal X-state negativity at fixed purity, under spectral side constraints.

Three closed-form curves and matching state constructions:

* rank 2, P in [1/2, 1):        N = (1 + f) / 2,  f = sqrt(2P - 1)
* rank 3, P in [1/3, 1):        N = (1 + g) / 3,  g = sqrt(6P - 2)
* triply degenerate smallest eigenvalue, P in (1/5, 1): two branches split at
  P = 3/8; below it N = (5h - 1) / 3 with h = sqrt(6P/5 - 1/5), above it the
  rank-3 curve.

Optimality of each curve is certified numerically by explicit dual-feasible
matrices for the corresponding semidefinite program (verify_certificate); at
the domain endpoints P = 1/2 (rank 2) and P = 1/3 (rank 3) the dual matrix is
only asymptotically positive semidefinite along a one-parameter family, and
the report flags that.

hedemann_negativity evaluates the earlier candidate curve from the literature
for comparison; its printed low-purity branch has a negative radicand on most
of (1/5, 3/8), in which case None is returned rather than a complex value.
"""

from dataclasses import dataclass, field, asdict

import numpy as np

from .linalg import eig_hermitian
from .spectrum import construct_spectrum_xmems

__all__ = [
    "P_MAX",
    "n_x_p_rank2",
    "n_x_p_rank3",
    "n_x_p_deg",
    "construct_rank2",
    "construct_rank3",
    "construct_deg",
    "deg_spectrum",
    "hedemann_negativity",
    "CertificateReport",
    "verify_certificate",
]

# Domain endpoints are open at 1; P = 1 is meaningful only as a limit.
P_MAX = 1.0 - 1e-9
DEG_SPLIT = 3.0 / 8.0


def _check_domain(P, lo, name, lo_open=False):
    if (P < lo or (lo_open and P <= lo)) or P >= 1.0:
        bracket = "(" if lo_open else "["
        raise ValueError(f"purity {P} outside {name} domain {bracket}{lo}, 1)")


def _f(P):
    return np.sqrt(2.0 * P - 1.0)


def _g(P):
    return np.sqrt(6.0 * P - 2.0)


def _h(P):
    return np.sqrt(6.0 * P / 5.0 - 1.0 / 5.0)


def n_x_p_rank2(P):
    """Maximal negativity of rank-2 X states of purity P in [1/2, 1)."""
    _check_domain(P, 0.5, "rank-2")
    return float(0.5 * (1.0 + _f(P)))


def n_x_p_rank3(P):
    """Maximal negativity of rank-3 X states of purity P in [1/3, 1)."""
    _check_domain(P, 1.0 / 3.0, "rank-3")
    return float((1.0 + _g(P)) / 3.0)


def n_x_p_deg(P):
    """Maximal negativity of X states of purity P in (1/5, 1) whose smallest
    eigenvalue is triply degenerate.  Continuous at the branch point 3/8."""
    _check_domain(P, 0.2, "degenerate", lo_open=True)
    if P < DEG_SPLIT:
        return float((-1.0 + 5.0 * _h(P)) / 3.0)
    return float((1.0 + _g(P)) / 3.0)


def rank2_spectrum(P):
    _check_domain(P, 0.5, "rank-2")
    l1 = 0.5 * (1.0 + _f(P))
    return np.array([l1, 1.0 - l1, 0.0, 0.0, 0.0, 0.0])


def rank3_spectrum(P):
    _check_domain(P, 1.0 / 3.0, "rank-3")
    l1 = (1.0 + _g(P)) / 3.0
    l2 = (2.0 - _g(P)) / 6.0
    return np.array([l1, l2, l2, 0.0, 0.0, 0.0])


def deg_spectrum(P):
    _check_domain(P, 0.2, "degenerate", lo_open=True)
    if P < DEG_SPLIT:
        h = _h(P)
        l1 = (1.0 + 4.0 * h) / 6.0
        l2 = (1.0 + h) / 6.0
        ld = (1.0 - 2.0 * h) / 6.0
    else:
        g = _g(P)
        l1 = (1.0 + g) / 3.0
        l2 = (2.0 - g) / 6.0
        ld = 0.0
    return np.array([l1, l2, l2, ld, ld, ld])


def construct_rank2(P):
    """Rank-2 X state of purity P attaining n_x_p_rank2(P)."""
    return construct_spectrum_xmems(rank2_spectrum(P))


def construct_rank3(P):
    """Rank-3 X state of purity P attaining n_x_p_rank3(P)."""
    return construct_spectrum_xmems(rank3_spectrum(P))


def construct_deg(P):
    """Triply-degenerate-bottom X state of purity P attaining n_x_p_deg(P)."""
    return construct_spectrum_xmems(deg_spectrum(P))


def hedemann_negativity(P):
    """Earlier candidate maximal-negativity curve, evaluated literally.

    On [3/8, 1) it coincides with n_x_p_deg.  On (1/5, 3/8) the printed
    expression involves sqrt((-1+e)^2 - 25 e^2 / 4) with e = sqrt(40P/7 - 8/7),
    whose radicand is negative for P above roughly 3/14; None is returned
    there instead of a non-real value.
    """
    _check_domain(P, 0.2, "comparison-curve", lo_open=True)
    if P >= DEG_SPLIT:
        return float((1.0 + _g(P)) / 3.0)
    e = np.sqrt(40.0 * P / 7.0 - 8.0 / 7.0)
    radicand = (-1.0 + e) ** 2 - 6.25 * e * e
    if radicand < 0.0:
        return None
    return float(0.2 * (-1.0 + e + np.sqrt(radicand)))


# ---------------------------------------------------------------------------
# Dual-certificate verification
# ---------------------------------------------------------------------------

THEOREMS = ("rank2", "rank3", "deg")


def _primal_data(theorem_id, P):
    """Constraint matrices F_i, linear objective c, optimal variables, and the
    negativity value of the corresponding SDP formulation."""
    if theorem_id == "rank2":
        _check_domain(P, 0.5, "rank-2")
        F0 = np.diag([1.0, 0.5, P - 1.0])
        F1 = np.array([[-1.0, 0, 0], [0, 0, 1.0], [0, 1.0, 2.0]])
        l1 = 0.5 * (1.0 + _f(P))
        return [F0, F1], np.array([-1.0]), np.array([l1]), n_x_p_rank2(P)
    if theorem_id == "rank3":
        _check_domain(P, 1.0 / 3.0, "rank-3")
        F0 = np.zeros((4, 4))
        F0[0, 0] = 1.0
        F0[1:3, 1:3] = [[2.0 / 3.0, -1.0 / 3.0], [-1.0 / 3.0, 2.0 / 3.0]]
        F0[3, 3] = P - 1.0
        F1 = np.zeros((4, 4))
        F1[0, 0] = -1.0
        F1[1, 3] = F1[3, 1] = 1.0
        F1[3, 3] = 2.0
        F2 = np.zeros((4, 4))
        F2[0, 0] = -1.0
        F2[2, 3] = F2[3, 2] = 1.0
        F2[3, 3] = 2.0
        l1 = (1.0 + _g(P)) / 3.0
        l2 = (2.0 - _g(P)) / 6.0
        return [F0, F1, F2], np.array([-1.0, 0.0]), np.array([l1, l2]), n_x_p_rank3(P)
    if theorem_id == "deg":
        _check_domain(P, 0.2, "degenerate", lo_open=True)
        F0 = np.zeros((5, 5))
        F0[0, 0] = 1.0
        F0[1:4, 1:4] = -1.0 / 6.0
        F0[1:4, 1:4] += np.eye(3)  # diagonal 5/6, off-diagonal -1/6
        F0[4, 4] = P - 1.0 / 3.0
        Fs = [F0]
        for i in range(3):
            Fi = np.zeros((5, 5))
            Fi[0, 0] = -1.0
            Fi[1 + i, 4] = Fi[4, 1 + i] = 1.0
            Fi[4, 4] = 2.0 / 3.0
            Fs.append(Fi)
        lam = deg_spectrum(P)
        return Fs, np.array([-2.0, -1.0, -1.0]), lam[:3], n_x_p_deg(P)
    raise ValueError(f"unknown theorem id {theorem_id!r}; expected one of {THEOREMS}")


def _dual_matrix(theorem_id, P, z=None):
    """Dual-feasible matrix for the given theorem and purity.

    For the boundary purities (rank2 at P = 1/2, rank3 at P = 1/3) the matrix
    depends on a free parameter z and is PSD only in the z -> infinity limit;
    pass z to evaluate a member of the family.
    """
    if theorem_id == "rank2":
        if _is_boundary(theorem_id, P):
            z = 1.0 if z is None else z
            return np.array([[0, 0, 0], [0, z, 0.5 - z], [0, 0.5 - z, z - 1.0]])
        f = _f(P)
        return np.array(
            [
                [0, 0, 0],
                [0, 1.0 + f / 2.0 + 1.0 / (2.0 * f), -0.5 * (1.0 + 1.0 / f)],
                [0, -0.5 * (1.0 + 1.0 / f), 1.0 / (2.0 * f)],
            ]
        )
    if theorem_id == "rank3":
        if _is_boundary(theorem_id, P):
            z = 1.0 if z is None else z
            return np.array(
                [
                    [0, 0, 0, 0],
                    [0, z, z - 0.5, -z + 0.5],
                    [0, z - 0.5, z - 1.0, -z + 1.0],
                    [0, -z + 0.5, -z + 1.0, z - 1.0],
                ]
            )
        g = _g(P)
        return np.array(
            [
                [0, 0, 0, 0],
                [0, 1.0 + g / 4.0 + 1.0 / g, 0.5 + 1.0 / g, -0.5 - 1.0 / g],
                [0, 0.5 + 1.0 / g, 1.0 / g, -1.0 / g],
                [0, -0.5 - 1.0 / g, -1.0 / g, 1.0 / g],
            ]
        )
    if theorem_id == "deg":
        if P < DEG_SPLIT:
            h = _h(P)
            w = 2.0 / 3.0 + h + 1.0 / (9.0 * h)
            u = 0.5 + h / 2.0 + 1.0 / (9.0 * h)
            v = 1.0 / 3.0 + h / 4.0 + 1.0 / (9.0 * h)
            s = -1.0 - 1.0 / (3.0 * h)
            t = -0.5 - 1.0 / (3.0 * h)
            Z = np.array(
                [
                    [0, 0, 0, 0, 0],
                    [0, w, u, u, s],
                    [0, u, v, v, t],
                    [0, u, v, v, t],
                    [0, s, t, t, 1.0 / h],
                ]
            )
            return Z
        g = _g(P)
        w = 4.0 / 9.0 + g / 9.0 + 4.0 / (9.0 * g)
        u = 1.0 / 9.0 - g / 18.0 + 4.0 / (9.0 * g)
        v = -2.0 / 9.0 + g / 36.0 + 4.0 / (9.0 * g)
        s = -1.0 / 3.0 - 2.0 / (3.0 * g)
        t = 1.0 / 6.0 - 2.0 / (3.0 * g)
        Z = np.array(
            [
                [4.0 / 3.0 - 2.0 / (3.0 * g), 0, 0, 0, 0],
                [0, w, u, u, s],
                [0, u, v, v, t],
                [0, u, v, v, t],
                [0, s, t, t, 1.0 / g],
            ]
        )
        return Z
    raise ValueError(f"unknown theorem id {theorem_id!r}")


def _asymptotic_lambda_minus(theorem_id, z):
    """Smaller nonzero eigenvalue of the boundary-case dual family at z.

    rank2: z - 1/2 - sqrt(z^2 - z + 1/2)            = -(1/4) / (z - 1/2 + sqrt(...))
    rank3: 3z/2 - 1 - (sqrt(3)/2) sqrt(3z^2 - 4z + 2) = -(1/2) / (3z/2 - 1 + ...)

    Both are negative for all z and tend to 0 from below as z grows.
    """
    if theorem_id == "rank2":
        root = np.sqrt(z * z - z + 0.5)
        return float(-0.25 / (z - 0.5 + root))
    if theorem_id == "rank3":
        root = 0.5 * np.sqrt(3.0) * np.sqrt(3.0 * z * z - 4.0 * z + 2.0)
        return float(-0.5 / (1.5 * z - 1.0 + root))
    raise ValueError(f"no asymptotic certificate for theorem {theorem_id!r}")


def asymptotic_lambda_plus(theorem_id, z):
    """Larger nonzero eigenvalue of the boundary-case dual family at z."""
    if theorem_id == "rank2":
        return float(z - 0.5 + np.sqrt(z * z - z + 0.5))
    if theorem_id == "rank3":
        return float(1.5 * z - 1.0 + 0.5 * np.sqrt(3.0) * np.sqrt(3.0 * z * z - 4.0 * z + 2.0))
    raise ValueError(f"no asymptotic certificate for theorem {theorem_id!r}")


def _is_boundary(theorem_id, P, tol=1e-12):
    return (theorem_id == "rank2" and abs(P - 0.5) <= tol) or (
        theorem_id == "rank3" and abs(P - 1.0 / 3.0) <= tol
    )


@dataclass
class CertificateReport:
    """Numerical verification record for one (theorem, purity) certificate."""

    theorem_id: str
    P: float
    primal_feasible: bool
    primal_min_eig: float
    dual_trace_residuals: list
    dual_psd_margin: float
    asymptotic: bool
    duality_gap: float
    asymptotic_tail: list = field(default_factory=list)
    verified: bool = False

    def to_dict(self):
        return asdict(self)


def verify_certificate(theorem_id, P, tol=1e-10, strict=True):
    """Check the optimality certificate of one closed-form curve at purity P.

    Verifies (a) primal feasibility of the closed-form spectrum, (b) the dual
    trace conditions, (c) positive semidefiniteness of the dual matrix (or its
    asymptotic limit for the two boundary purities), and (d) a vanishing gap
    between primal and dual objective values.  With strict=True an AssertionError
    is raised if any check fails; either way the full report is returned.
    """
    Fs, c, x, value = _primal_data(theorem_id, P)
    Fx = Fs[0] + sum(xi * Fi for xi, Fi in zip(x, Fs[1:]))
    w, _ = eig_hermitian(Fx)
    primal_min = float(w[0])
    primal_feasible = primal_min >= -tol
    primal_obj = float(c @ x)

    asymptotic = _is_boundary(theorem_id, P)
    Z = _dual_matrix(theorem_id, P)
    residuals = [float(np.trace(Fi @ Z) - ci) for Fi, ci in zip(Fs[1:], c)]
    gap = abs(primal_obj - (-float(np.trace(Fs[0] @ Z))))

    tail = []
    if asymptotic:
        # PSD only in the limit: the lone negative eigenvalue must shrink to 0
        # monotonically along z, all others staying nonnegative.  Evaluated in
        # rationalized form; the naive difference cancels catastrophically.
        for z in (1e3, 1e6, 1e9):
            tail.append(_asymptotic_lambda_minus(theorem_id, z))
        margin = tail[-1]
        psd_ok = (
            all(t < 0.0 for t in tail)
            and tail[0] < tail[1] < tail[2]
            and tail[2] > -1e-6
            and all(asymptotic_lambda_plus(theorem_id, z) >= 0.0 for z in (1e3, 1e6, 1e9))
        )
    else:
        wz, _ = eig_hermitian(Z)
        margin = float(wz[0])
        psd_ok = margin >= -tol

    report = CertificateReport(
        theorem_id=theorem_id,
        P=float(P),
        primal_feasible=primal_feasible,
        primal_min_eig=primal_min,
        dual_trace_residuals=residuals,
        dual_psd_margin=margin,
        asymptotic=asymptotic,
        duality_gap=float(gap),
        asymptotic_tail=tail,
    )
    report.verified = (
        primal_feasible
        and psd_ok
        and all(abs(rr) <= tol for rr in residuals)
        and gap <= tol
    )
    if strict and not report.verified:
        raise AssertionError(
            f"certificate check failed for {theorem_id} at P={P}: {report.to_dict()}"
        )
    # The dual objective equals the primal one, which maps back to the curve
    # value: a transcription bug in the fixture matrices would surface here.
    assert abs(abs(primal_obj) - (value if theorem_id != "deg" else value + 1.0)) <= 1e-9
    return report
