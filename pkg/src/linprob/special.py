"""Distribution functions used to turn test statistics into p-values.

The incomplete beta and gamma kernels come from the compiled ``_ckernels``
extension when it was built, otherwise from the pure-Python ``_pykernels``.
Set ``LINPROB_BACKEND=python`` to force the fallback. The active backend is
exposed as :data:`BACKEND`.

p-values are ordinary floats. Results below the smallest positive normal
double are returned as :data:`P_FLOOR`; use :func:`is_saturated` to detect
them.
"""

from __future__ import annotations

import math
import os
import sys
from statistics import NormalDist

from .errors import DomainError

if os.environ.get("LINPROB_BACKEND", "").lower() == "python":
    from . import _pykernels as _kernels

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _kernels

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _pykernels as _kernels

        BACKEND = "python"

P_FLOOR = sys.float_info.min
_STD_NORMAL = NormalDist()
_SQRT1_2 = math.sqrt(0.5)


def is_saturated(p: float) -> bool:
    """True if ``p`` hit the underflow floor."""
    return p <= P_FLOOR


def _saturate(p):
    return P_FLOOR if p < P_FLOOR else p


def _check_df(df):
    if not (df > 0.0) or math.isinf(df):
        raise DomainError(f"degrees of freedom must be positive and finite, got {df!r}")


def log_gamma(x: float) -> float:
    """ln Gamma(x) for finite x > 0."""
    if not (x > 0.0) or math.isinf(x):
        raise DomainError(f"log_gamma requires finite x > 0, got {x!r}")
    return math.lgamma(x)


def log_beta(a: float, b: float) -> float:
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"log_beta requires a, b > 0, got {a!r}, {b!r}")
    return _kernels.log_beta(a, b)


def reg_incomplete_beta(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function I_x(a, b)."""
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"shape parameters must be positive, got a={a!r}, b={b!r}")
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"x must lie in [0, 1], got {x!r}")
    return _kernels.betainc(a, b, x, 1.0 - x)


def reg_lower_gamma(s: float, x: float) -> float:
    """Regularized lower incomplete gamma function P(s, x)."""
    if not (s > 0.0):
        raise DomainError(f"s must be positive, got {s!r}")
    if not (x >= 0.0):
        raise DomainError(f"x must be nonnegative, got {x!r}")
    return _kernels.gammainc(s, x)[0]


def reg_upper_gamma(s: float, x: float) -> float:
    """Regularized upper incomplete gamma function Q(s, x) = 1 - P(s, x)."""
    if not (s > 0.0):
        raise DomainError(f"s must be positive, got {s!r}")
    if not (x >= 0.0):
        raise DomainError(f"x must be nonnegative, got {x!r}")
    return _kernels.gammainc(s, x)[1]


def normal_cdf(z: float) -> float:
    """Standard normal CDF."""
    if math.isnan(z):
        raise DomainError("z must not be NaN")
    return 0.5 * math.erfc(-z * _SQRT1_2)


def normal_sf(z: float) -> float:
    """Standard normal upper tail 1 - Phi(z), accurate for large z."""
    if math.isnan(z):
        raise DomainError("z must not be NaN")
    return 0.5 * math.erfc(z * _SQRT1_2)


def normal_quantile(q: float) -> float:
    """Inverse of :func:`normal_cdf` for 0 < q < 1."""
    if not (0.0 < q < 1.0):
        raise DomainError(f"quantile level must lie strictly between 0 and 1, got {q!r}")
    return _STD_NORMAL.inv_cdf(q)


def student_t_two_sided_p(t: float, df: float) -> float:
    """Two-sided tail probability P(|T| >= |t|) of Student's t with ``df``."""
    _check_df(df)
    if math.isnan(t):
        raise DomainError("t must not be NaN")
    if math.isinf(t):
        return P_FLOOR
    t2 = t * t
    if t2 == 0.0:
        return 1.0
    # I_x(df/2, 1/2) with x = df/(df+t^2); both x and 1-x formed directly
    denom = df + t2
    p = _kernels.betainc(0.5 * df, 0.5, df / denom, t2 / denom)
    return _saturate(min(p, 1.0))


def chi_square_upper_p(x2: float, df: float) -> float:
    """Upper tail P(X >= x2) of the chi-square distribution with ``df``."""
    _check_df(df)
    if not (x2 >= 0.0):
        raise DomainError(f"chi-square statistic must be nonnegative, got {x2!r}")
    if math.isinf(x2):
        return P_FLOOR
    return _saturate(_kernels.gammainc(0.5 * df, 0.5 * x2)[1])
