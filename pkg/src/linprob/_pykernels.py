"""Pure-Python numerical kernels.

Mirror of ``_ckernels.pyx``; selected at import when the compiled module is
unavailable. Inputs are assumed validated by :mod:`linprob.special`.
"""

import math

EPS = 1e-16
TINY = 1e-300
MAXIT = 100_000
HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
STIRLING_MIN = 10.0


def stirling_correction(x):
    """lgamma(x) minus its Stirling approximation, for x >= 10."""
    r = 1.0 / (x * x)
    return (
        1.0 / 12.0
        - r * (1.0 / 360.0
        - r * (1.0 / 1260.0
        - r * (1.0 / 1680.0
        - r * (1.0 / 1188.0
        - r * (691.0 / 360360.0)))))
    ) / x


def log_beta(a, b):
    """ln B(a, b), avoiding cancellation between large lgamma terms."""
    if a < b:
        a, b = b, a
    if b >= STIRLING_MIN:
        s = a + b
        return (
            HALF_LOG_2PI
            - 0.5 * math.log(s)
            + (a - 0.5) * math.log1p(-b / s)
            + (b - 0.5) * math.log(b / s)
            + stirling_correction(a)
            + stirling_correction(b)
            - stirling_correction(s)
        )
    if a >= STIRLING_MIN:
        s = a + b
        # lgamma(a) - lgamma(a + b) by Stirling, then add lgamma(b)
        ratio = (
            -(a - 0.5) * math.log1p(b / a)
            - b * math.log(s)
            + b
            + stirling_correction(a)
            - stirling_correction(s)
        )
        return math.lgamma(b) + ratio
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def _betacf(a, b, x):
    # modified Lentz evaluation of the incomplete beta continued fraction
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < TINY:
        d = TINY
    d = 1.0 / d
    h = d
    for m in range(1, MAXIT + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < TINY:
            d = TINY
        c = 1.0 + aa / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < TINY:
            d = TINY
        c = 1.0 + aa / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < EPS:
            return h
    raise ArithmeticError(f"incomplete beta fraction did not converge (a={a}, b={b}, x={x})")


def betainc(a, b, x, y):
    """Regularized incomplete beta I_x(a, b); ``y`` must equal ``1 - x``.

    Passing ``y`` separately keeps full relative precision when x is close
    to 1 and the caller knows 1 - x exactly.
    """
    if x <= 0.0:
        return 0.0
    if y <= 0.0:
        return 1.0
    log_front = a * math.log(x) + b * math.log(y) - log_beta(a, b)
    if x < (a + 1.0) / (a + b + 2.0):
        return math.exp(log_front) * _betacf(a, b, x) / a
    return 1.0 - math.exp(log_front) * _betacf(b, a, y) / b


def gammainc(s, x):
    """Regularized incomplete gamma pair ``(P(s, x), Q(s, x))``."""
    if x <= 0.0:
        return 0.0, 1.0
    log_front = s * math.log(x) - x - math.lgamma(s)
    if x < s + 1.0:
        ap = s
        term = total = 1.0 / s
        for _ in range(MAXIT):
            ap += 1.0
            term *= x / ap
            total += term
            if abs(term) < abs(total) * EPS:
                p = total * math.exp(log_front)
                return p, 1.0 - p
        raise ArithmeticError(f"incomplete gamma series did not converge (s={s}, x={x})")
    b = x + 1.0 - s
    c = 1.0 / TINY
    d = 1.0 / b
    h = d
    for i in range(1, MAXIT + 1):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < TINY:
            d = TINY
        c = b + an / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < EPS:
            q = math.exp(log_front) * h
            return 1.0 - q, q
    raise ArithmeticError(f"incomplete gamma fraction did not converge (s={s}, x={x})")
