"""Exact symbolic calculus for strict higher gauge theory.

2-connections over differential crossed modules, their fake and 2-curvatures,
Chern-Simons and transgression forms, and exact verification suites for the
descent identities. All arithmetic is exact rational; residuals that verify do
so as identically-zero polynomial forms.
"""

from higauge._core import (  # noqa: F401
    Connection,
    Form,
    Gauge,
    HigaugeError,
    Module,
    Pairing,
    __version__,
    act,
    alpha_form,
    alpha_push,
    b_form,
    bianchi_residuals,
    bracket,
    builtin_modules,
    chern_weil_residual,
    connection,
    cov_d,
    cs_descent_residual,
    cs_form,
    curvature_covariance_residuals,
    curvatures,
    d,
    descent_residual,
    eq1_residual,
    gauge_compose,
    gauge_from_json,
    gauge_transform,
    gwzw_exactness_residual,
    gwzw_form,
    load_module,
    random_connection,
    random_gauge,
    run_suites,
    symmetrized_trace_pairing,
    transgression_form,
    wedge,
    wzw_closed_form_coefficient,
    wzw_contraction,
    wzw_term,
    zero_connection,
)
