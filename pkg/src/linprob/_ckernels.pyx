# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels; same API and algorithms as ``_pykernels``."""

from libc.math cimport exp, fabs, lgamma, log, log1p, M_PI

cdef double EPS = 1e-16
cdef double TINY = 1e-300
cdef long MAXIT = 100000
cdef double HALF_LOG_2PI = 0.5 * log(2.0 * M_PI)
cdef double STIRLING_MIN = 10.0


cpdef double stirling_correction(double x):
    cdef double r = 1.0 / (x * x)
    return (
        1.0 / 12.0
        - r * (1.0 / 360.0
        - r * (1.0 / 1260.0
        - r * (1.0 / 1680.0
        - r * (1.0 / 1188.0
        - r * (691.0 / 360360.0)))))
    ) / x


cpdef double log_beta(double a, double b):
    cdef double s, t
    if a < b:
        t = a
        a = b
        b = t
    if b >= STIRLING_MIN:
        s = a + b
        return (
            HALF_LOG_2PI
            - 0.5 * log(s)
            + (a - 0.5) * log1p(-b / s)
            + (b - 0.5) * log(b / s)
            + stirling_correction(a)
            + stirling_correction(b)
            - stirling_correction(s)
        )
    if a >= STIRLING_MIN:
        s = a + b
        return lgamma(b) + (
            -(a - 0.5) * log1p(b / a)
            - b * log(s)
            + b
            + stirling_correction(a)
            - stirling_correction(s)
        )
    return lgamma(a) + lgamma(b) - lgamma(a + b)


cdef double _betacf(double a, double b, double x) except? -1.0:
    cdef double qab = a + b
    cdef double qap = a + 1.0
    cdef double qam = a - 1.0
    cdef double c = 1.0
    cdef double d = 1.0 - qab * x / qap
    cdef double h, aa, delta
    cdef long m
    cdef double m2
    if fabs(d) < TINY:
        d = TINY
    d = 1.0 / d
    h = d
    for m in range(1, MAXIT + 1):
        m2 = 2.0 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if fabs(d) < TINY:
            d = TINY
        c = 1.0 + aa / c
        if fabs(c) < TINY:
            c = TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if fabs(d) < TINY:
            d = TINY
        c = 1.0 + aa / c
        if fabs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < EPS:
            return h
    raise ArithmeticError(f"incomplete beta fraction did not converge (a={a}, b={b}, x={x})")


cpdef double betainc(double a, double b, double x, double y) except? -1.0:
    cdef double log_front
    if x <= 0.0:
        return 0.0
    if y <= 0.0:
        return 1.0
    log_front = a * log(x) + b * log(y) - log_beta(a, b)
    if x < (a + 1.0) / (a + b + 2.0):
        return exp(log_front) * _betacf(a, b, x) / a
    return 1.0 - exp(log_front) * _betacf(b, a, y) / b


cpdef tuple gammainc(double s, double x):
    cdef double log_front, ap, term, total, p, q, b, c, d, h, an, delta
    cdef long i
    if x <= 0.0:
        return 0.0, 1.0
    log_front = s * log(x) - x - lgamma(s)
    if x < s + 1.0:
        ap = s
        term = 1.0 / s
        total = term
        for i in range(MAXIT):
            ap += 1.0
            term *= x / ap
            total += term
            if fabs(term) < fabs(total) * EPS:
                p = total * exp(log_front)
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
        if fabs(d) < TINY:
            d = TINY
        c = b + an / c
        if fabs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < EPS:
            q = exp(log_front) * h
            return 1.0 - q, q
    raise ArithmeticError(f"incomplete gamma fraction did not converge (s={s}, x={x})")
