"""Wright-type hypergeometric functions and dual evaluation of Euler-type integrals."""

import json as _json

from ._wrightlab import (
    ConfigError,
    DivergenceError,
    DomainError,
    EulerIntegralSpec,
    EvaluationError,
    GeneratingIntegralSpec,
    MaxTermsError,
    NonConvergenceError,
    NumericError,
    OverflowError,
    PoleError,
    QuadratureResult,
    SeriesResult,
    __version__,
    appell_f1,
    appell_f3,
    beta,
    catalog,
    gamma,
    gegenbauer,
    generating_spec,
    humbert_phi2,
    lauricella_fd,
    lauricella_spec,
    log_gamma,
    mittag_leffler,
    pfq,
    pochhammer,
    theorem1_spec,
    theorem2_spec,
    theorem3_spec,
    theorem4_spec,
    verify_json,
    wright_psi,
)


def verify(config=None, jobs=1):
    """Run the verification grid and return the report as a dict.

    ``config`` is a dict in the same shape as the CLI's JSON config file.
    """
    text = verify_json(_json.dumps(config or {}), jobs)
    return _json.loads(text)
