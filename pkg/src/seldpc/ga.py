"""Gaussian-approximation message statistics.

`phi(m)` is one minus the expected tanh(u/2) of a consistent Gaussian message
u ~ N(m, 2m); `psi` is the matching inverse, psi(r) = phi^{-1}(1 - r).  Both
are the workhorses of density evolution, so accuracy and speed both matter.

phi is evaluated through the exact reformulation

    phi(x) = e^{-x/4} / (2 sqrt(pi x)) * integral sech(u/2) e^{-u^2/(4x)} du,

obtained from the defining integral by the substitution u = x + 2 sqrt(x) t
followed by recentring; the integrand is positive, even and smooth, so there
is no 1 - E[tanh] cancellation and log(phi) stays finite far beyond the range
where phi itself underflows.  Small x uses Gauss-Hermite nodes, large x
Gauss-Legendre on the half-line; both branches agree to ~1e-13 in log(phi).

The popular closed-form approximation (exp(-0.4527 x^0.86 + 0.0218) below 10,
asymptotic tail above) is provided as an opt-in fast mode because essentially
all published GA threshold figures trace back to it.
"""

import numpy as np
from scipy.special import roots_hermite, roots_legendre

_GH_NODES = 301
_GL_NODES = 400
_BRANCH_X = 6.0     # Gauss-Hermite below, Gauss-Legendre above
_U_MAX = 90.0       # sech(u/2) < 3e-20 beyond this
_SQRT_PI = np.sqrt(np.pi)

_gh_t, _gh_w = roots_hermite(_GH_NODES)
_gl_t, _gl_w = roots_legendre(_GL_NODES)
_gl_u = 0.5 * _U_MAX * (_gl_t + 1.0)
_gl_uw = 0.5 * _U_MAX * _gl_w * (1.0 / np.cosh(_gl_u / 2.0))

PSI_CAP = 1.0e4     # means above this are clamped by psi


def log_phi(x):
    """Natural log of phi, elementwise; accepts scalars or arrays, x >= 0."""
    x = np.asarray(x, dtype=np.float64)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    if (x < 0).any():
        raise ValueError("phi domain is x >= 0")
    out = np.zeros_like(x)
    lo = (x > 0) & (x <= _BRANCH_X)
    if lo.any():
        xs = x[lo]
        s = (1.0 / np.cosh(np.sqrt(xs)[:, None] * _gh_t[None, :])) @ _gh_w
        out[lo] = -xs / 4.0 + np.log(s / _SQRT_PI)
    hi = x > _BRANCH_X
    if hi.any():
        xh = x[hi]
        ihalf = np.exp(-(_gl_u[None, :] ** 2) / (4.0 * xh[:, None])) @ _gl_uw
        out[hi] = -xh / 4.0 + np.log(ihalf / np.sqrt(np.pi * xh))
    return out[0] if scalar else out


def phi(x):
    """phi(x) = 1 - E[tanh(u/2)], u ~ N(x, 2x); phi(0) = 1, strictly decreasing."""
    return np.exp(log_phi(x))


# psi inverts log_phi through a bracketing table plus secant refinement.
_TAB_KNOTS = np.logspace(-9.0, np.log10(PSI_CAP * 1.05), 2000)
_tab_logphi = None


def _table():
    global _tab_logphi
    if _tab_logphi is None:
        _tab_logphi = log_phi(_TAB_KNOTS)
    return _tab_logphi


def psi(r):
    """The mean m >= 0 with phi(m) = 1 - r, for r in (0, 1]; output capped at
    PSI_CAP (phi is far below any working tolerance there anyway)."""
    r = np.asarray(r, dtype=np.float64)
    scalar = r.ndim == 0
    r = np.atleast_1d(r)
    if (r <= 0).any() or (r > 1).any():
        raise ValueError("psi domain is 0 < r <= 1")
    tab = _table()
    m = np.empty_like(r)

    tiny = r < 1e-8
    m[tiny] = 2.0 * r[tiny] * (1.0 + r[tiny])   # phi(x) = 1 - x/2 + x^2/4 + O(x^3)

    with np.errstate(divide="ignore"):
        y = np.where(r < 1.0, np.log1p(-r), -np.inf)
    capped = ~tiny & (y <= tab[-1])
    m[capped] = PSI_CAP

    mid = ~(tiny | capped)
    if mid.any():
        ym = y[mid]
        idx = np.clip(np.searchsorted(-tab, -ym), 1, len(_TAB_KNOTS) - 1)
        a, b = _TAB_KNOTS[idx - 1], _TAB_KNOTS[idx]
        fa, fb = tab[idx - 1] - ym, tab[idx] - ym
        xm = a - fa * (b - a) / (fb - fa)
        for _ in range(60):
            fm = log_phi(xm) - ym
            below = fm <= 0.0
            b = np.where(below, xm, b)
            fb = np.where(below, fm, fb)
            a = np.where(below, a, xm)
            fa = np.where(below, fa, fm)
            done = (np.abs(fm) <= 1e-13) | ((b - a) <= 1e-13 * b)
            if done.all():
                break
            sec = a - fa * (b - a) / (fb - fa)
            inside = (sec > a) & (sec < b)
            xm = np.where(done, xm, np.where(inside, sec, 0.5 * (a + b)))
        m[mid] = xm
    return m[0] if scalar else m


# --- closed-form fast mode -------------------------------------------------


def phi_approx(x):
    """Closed-form phi approximation (clipped to <= 1); the convention behind
    the usual published GA threshold values."""
    x = np.asarray(x, dtype=np.float64)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    if (x < 0).any():
        raise ValueError("phi domain is x >= 0")
    safe = np.maximum(x, 1e-300)
    small = np.exp(-0.4527 * safe ** 0.86 + 0.0218)
    large = np.sqrt(np.pi / safe) * np.exp(-safe / 4.0) * (1.0 - 10.0 / (7.0 * safe))
    out = np.minimum(np.where(x < 10.0, small, large), 1.0)
    out[x == 0.0] = 1.0
    return out[0] if scalar else out


def psi_approx(r):
    """Inverse of phi_approx by bisection; shares psi's domain and cap."""
    r = np.asarray(r, dtype=np.float64)
    scalar = r.ndim == 0
    r = np.atleast_1d(r)
    if (r <= 0).any() or (r > 1).any():
        raise ValueError("psi domain is 0 < r <= 1")
    lo = np.zeros_like(r)
    hi = np.full_like(r, PSI_CAP)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        above = phi_approx(mid) > 1.0 - r
        lo = np.where(above, mid, lo)
        hi = np.where(above, hi, mid)
    return 0.5 * (lo + hi)[0] if scalar else 0.5 * (lo + hi)
