"""Rotational constant-mean-curvature catenoids in H^2 x R.

Thin Python layer over the C++ core in ``hcat._core``. Functions returning
reports (``certify``, ``verify_strips``, ``verify_appendix_case``) hand back
plain dictionaries decoded from the same JSON the command-line tool writes.
"""

import json

from ._core import (  # noqa: F401
    CertificationFailure,
    CmcParams,
    ConvergenceError,
    DomainError,
    IoError,
    PreconditionError,
    __version__,
    b_inverse,
    classify_circle_intersection,
    d0_equation_lhs,
    f_closed,
    g_residual,
    gap,
    hyp_distance,
    integrand,
    j_bound_witness,
    j_remainder,
    lambda_,
    necksize,
    profile,
    revolve,
    run_cli,
    separation_lower_bound,
    solve_d0,
    translate_along_geodesic,
)
from . import _core


def certify(H, d1, d2=None, t_max=50.0, grid_step=0.05):
    """Disjointness certificate for (H, d1, d2); d2 defaults to the solved threshold."""
    threshold = d2 is None
    if threshold:
        d2 = solve_d0(H, d1)
    return json.loads(_core._certify_json(H, d1, d2, t_max, grid_step, threshold))


def verify_strips(certificate, t_max=50.0, step=0.1, d_points=20):
    """Strip, shifted-neck and intermediate-catenoid reports for a certificate dict."""
    return json.loads(_core._strips_json(json.dumps(certificate), t_max, step, d_points))


def verify_appendix_case(H, d):
    return json.loads(_core._appendix_json(H, d))
