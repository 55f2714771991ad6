"""Independent high-precision references used to freeze expected values.

Nothing here imports ``corrbeta``.
"""

import mpmath

mpmath.mp.dps = 50


def loggamma_stirling(x, shift=30, terms=30):
    """ln Gamma(x) by upward recurrence then the Stirling series."""
    x = mpmath.mpf(x)
    acc = mpmath.mpf(0)
    while x < shift:
        acc -= mpmath.log(x)
        x += 1
    s = (x - mpmath.mpf(1) / 2) * mpmath.log(x) - x + mpmath.log(2 * mpmath.pi) / 2
    for k in range(1, terms + 1):
        b = mpmath.bernoulli(2 * k)
        s += b / (2 * k * (2 * k - 1) * x ** (2 * k - 1))
    return acc + s


def alpha3(c1, c2, c3, r):
    c1, c2, c3, r = map(mpmath.mpf, (c1, c2, c3, r))
    return (r * mpmath.sqrt(c1 * c2 * c3 * (c1 + c2 - c3)) + c1 * c3) / (c1 + c2)


def alphas(c1, c2, c3, r):
    a3 = alpha3(c1, c2, c3, r)
    c1, c2, c3 = map(mpmath.mpf, (c1, c2, c3))
    return (c2 - c3 + a3, c1 - a3, c3 - a3, a3)


def johnk_eps(shapes):
    shapes = [mpmath.mpf(a) for a in shapes]
    num = mpmath.fprod(a * mpmath.gamma(a) for a in shapes)
    g = mpmath.fsum(shapes)
    return num / (g * mpmath.gamma(g))


def incbeta_quad(x, a, b):
    f = lambda t: t ** (a - 1) * (1 - t) ** (b - 1)
    return mpmath.quad(f, [0, x]) / mpmath.quad(f, [0, 1])


def max_r_scan(c1, c2, c3, step=1e-6):
    """Largest r on a grid of the given step with all four shapes positive."""
    import math

    k4 = math.sqrt(c1 * c2 * c3 * (c1 + c2 - c3))
    last = 0.0
    for k in range(int(round(1 / step))):
        r = k * step
        a3 = (r * k4 + c1 * c3) / (c1 + c2)
        if min(c2 - c3 + a3, c1 - a3, c3 - a3, a3) > 0:
            last = r
        else:
            break
    return last
