"""Numerical integration: adaptive Gauss-Kronrod quadrature on finite and
semi-infinite intervals with declared endpoint singularities, and the
improper plane integral giving the total area of a flat conical-metric
sphere, cross-validated by an importance-sampled Monte-Carlo estimator.

The area integrand prod_j |z - p_j|^(2 beta_j) is integrable at each p_j
(beta_j > -1) and decays like |z|^-4 (sum beta_j = -2).  The plane is split
with a smooth partition of unity into

* a polar patch around each singularity, where the radial direction is
  integrated with a Gauss-Jacobi rule carrying the exact weight
  s^(2 beta_j + 1) (the change of variable u = s^(2b+2)/(2b+2) absorbs
  the power law; the Jacobi rule is that substitution composed with a rule
  exact for the induced measure),
* the exterior of a large disk, mapped by w = 1/z, where the degree
  condition makes the transformed integrand smooth at w = 0, and
* the remaining windowed region, integrated in polar coordinates by an
  iterated scheme: adaptive Gauss-Kronrod radially, spectrally convergent
  periodic trapezoid in the angle.

All schemes are deterministic for fixed inputs: panel selection uses a
worst-first heap with sequence-number tie-breaking, and final sums are
compensated (math.fsum) in a fixed order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import fsum, inf, isfinite, log, pi

import numpy as np
from scipy.special import roots_jacobi

from . import kernels
from .errors import ConfigurationError, ConvergenceError, DomainError

__all__ = [
    "FlatSphereConfig",
    "QuadratureReport",
    "flat_sphere_area",
    "flat_sphere_area_mc",
    "integrate_adaptive",
]

# (G7, K15) Gauss-Kronrod pair, positive half written out (QUADPACK values).
_K15_NODES_HALF = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_K15_WEIGHTS_HALF = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_G7_WEIGHTS_HALF = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

_XGK = np.array([-x for x in _K15_NODES_HALF[:-1]] + [0.0] + [x for x in reversed(_K15_NODES_HALF[:-1])])
_WGK = np.array(list(_K15_WEIGHTS_HALF[:-1]) + [_K15_WEIGHTS_HALF[-1]] + list(reversed(_K15_WEIGHTS_HALF[:-1])))
_WG = np.zeros(15)
_WG[1:14:2] = list(_G7_WEIGHTS_HALF[:-1]) + [_G7_WEIGHTS_HALF[-1]] + list(reversed(_G7_WEIGHTS_HALF[:-1]))

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureReport:
    """Result of a quadrature with its accounting."""

    value: float
    error_estimate: float
    evaluations: int
    converged: bool


def _gk15_panel(f, a: float, b: float):
    """One Gauss-Kronrod step on [a, b]: (K15 value, error estimate)."""
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)
    x = c + h * _XGK
    fx = np.asarray(f(x), dtype=float)
    resk = float(_WGK @ fx)
    resg = float(_WG @ fx)
    resabs = float(_WGK @ np.abs(fx))
    resasc = float(_WGK @ np.abs(fx - 0.5 * resk))
    err = abs(resk - resg) * h
    resasc *= h
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    err = max(err, 50.0 * _EPS * resabs * h)
    return resk * h, err


def integrate_adaptive(
    f,
    a: float,
    b: float,
    tol: float,
    *,
    left_exponent: float = 0.0,
    right_exponent: float = 0.0,
    initial_breakpoints=None,
    max_panels: int = 4000,
) -> QuadratureReport:
    """Adaptive Gauss-Kronrod integral of a vectorized callable on (a, b).

    ``b`` may be ``math.inf``.  ``left_exponent`` (resp. ``right_exponent``)
    declares integrable power-law behaviour f ~ (x - a)^g at a finite
    endpoint with g > -1; the substitution u = (x - a)^(g + 1) then renders
    the integrand bounded there.  Non-convergence is reported through
    ``converged=False``, never as a silently wrong value.
    """
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if not a < b:
        raise DomainError(f"empty interval [{a}, {b}]")
    if left_exponent <= -1.0 or right_exponent <= -1.0:
        raise DomainError("endpoint exponents must exceed -1")

    counter = [0]

    def counted(g):
        def wrapped(x):
            counter[0] += len(x)
            return g(x)

        return wrapped

    pieces = []  # (transformed f, lo, hi, breakpoints in transformed variable)
    if b == inf:
        if right_exponent != 0.0:
            raise DomainError("right endpoint exponent requires a finite endpoint")
        mid = a + 1.0
        if left_exponent != 0.0:
            pieces.append(_left_substituted(f, a, mid, left_exponent))
        else:
            pieces.append((f, a, mid, ()))
        pieces.append(_mapped_semi_infinite(f, mid))
    else:
        if left_exponent != 0.0 and right_exponent != 0.0:
            mid = 0.5 * (a + b)
            pieces.append(_left_substituted(f, a, mid, left_exponent))
            pieces.append(_right_substituted(f, mid, b, right_exponent))
        elif left_exponent != 0.0:
            pieces.append(_left_substituted(f, a, b, left_exponent))
        elif right_exponent != 0.0:
            pieces.append(_right_substituted(f, a, b, right_exponent))
        else:
            bks = tuple(x for x in (initial_breakpoints or ()) if a < x < b)
            pieces.append((f, a, b, bks))

    heap = []
    seq = 0
    panels = {}  # splittable, addressed from the heap
    frozen = []  # panels at the width floor, kept out of the heap

    def push(g, left, right):
        nonlocal seq
        val, err = _gk15_panel(g, left, right)
        mid = 0.5 * (left + right)
        if err == 0.0 or mid - left < 1e-15 * (abs(left) + abs(right) + 1.0):
            frozen.append((left, right, val, err))
        else:
            panels[seq] = (left, right, val, err, g)
            heapq.heappush(heap, (-err, seq))
            seq += 1

    for g, lo, hi, bks in pieces:
        g = counted(g)
        edges = [lo, *sorted(bks), hi]
        for left, right in zip(edges[:-1], edges[1:]):
            push(g, left, right)

    while True:
        total_err = fsum(p[3] for p in panels.values()) + fsum(p[3] for p in frozen)
        if total_err <= tol:
            converged = True
            break
        if len(panels) + len(frozen) >= max_panels or not heap:
            converged = False
            break
        _, idx = heapq.heappop(heap)
        left, right, _, _, g = panels.pop(idx)
        mid = 0.5 * (left + right)
        push(g, left, mid)
        push(g, mid, right)

    ordered = sorted(
        [p[:4] for p in panels.values()] + frozen, key=lambda p: (p[0], p[1])
    )
    value = fsum(p[2] for p in ordered)
    error = fsum(p[3] for p in ordered)
    return QuadratureReport(value, error, counter[0], converged and error <= tol)


def _left_substituted(f, a, b, g):
    """u = (x - a)^(g+1) on [a, b]; integrand f(x) dx -> smooth in u."""
    k = g + 1.0
    u_hi = (b - a) ** k

    def fu(u):
        x = a + u ** (1.0 / k)
        return f(x) * (u ** (1.0 / k - 1.0)) / k

    return fu, 0.0, u_hi, ()


def _right_substituted(f, a, b, g):
    k = g + 1.0
    u_hi = (b - a) ** k

    def fu(u):
        x = b - u ** (1.0 / k)
        return f(x) * (u ** (1.0 / k - 1.0)) / k

    return fu, 0.0, u_hi, ()


def _mapped_semi_infinite(f, a):
    """x = a + t/(1-t) maps [a, inf) to t in [0, 1)."""

    def ft(t):
        om = 1.0 - t
        x = a + t / om
        return f(x) / (om * om)

    return ft, 0.0, 1.0, ()


# ----------------------------------------------------------------------
# Flat conical metrics on the sphere: total area
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class FlatSphereConfig:
    """n >= 3 distinct plane singularities p_j with orders beta_j summing to -2.

    Defines the flat conical metric  prod_j |z - p_j|^(2 beta_j) |dz|^2 .
    """

    points: tuple
    orders: tuple

    def __init__(self, points, orders):
        object.__setattr__(self, "points", tuple(complex(p) for p in points))
        object.__setattr__(self, "orders", tuple(float(b) for b in orders))
        self._validate()

    def _validate(self):
        n = len(self.points)
        if n < 3:
            raise ConfigurationError(f"need at least 3 singular points, got {n}")
        if len(self.orders) != n:
            raise ConfigurationError("points and orders must have equal length")
        if any(b <= -1.0 for b in self.orders):
            raise ConfigurationError("every order must exceed -1")
        if abs(fsum(self.orders) + 2.0) > 1e-12:
            raise ConfigurationError(f"orders must sum to -2, got {fsum(self.orders)!r}")
        for i in range(n):
            for j in range(i + 1, n):
                if abs(self.points[i] - self.points[j]) <= 1e-10:
                    raise ConfigurationError(f"points {i} and {j} coincide")

    def patch_radii(self):
        """Half the minimum pairwise distance per point, capped at 1."""
        radii = []
        for j, pj in enumerate(self.points):
            d = min(abs(pj - pi_) for i, pi_ in enumerate(self.points) if i != j)
            radii.append(min(1.0, 0.5 * d))
        return radii

    def outer_radius(self):
        radii = self.patch_radii()
        return 4.0 * max(1.0, max(abs(p) + r for p, r in zip(self.points, radii)))


def _window(t):
    """C^inf step: 1 for t <= 1/2, 0 for t >= 1, exp-smooth between."""
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    out[t <= 0.5] = 1.0
    mid = (t > 0.5) & (t < 1.0)
    tm = t[mid]
    hi = np.exp(-1.0 / (1.0 - tm))
    lo = np.exp(-1.0 / (tm - 0.5))
    out[mid] = hi / (hi + lo)
    return out


def _density(cfg: FlatSphereConfig, x, y, skip=None):
    px = [p.real for j, p in enumerate(cfg.points) if j != skip]
    py = [p.imag for j, p in enumerate(cfg.points) if j != skip]
    orders = [b for j, b in enumerate(cfg.orders) if j != skip]
    return kernels.product_density(x, y, px, py, orders)


def _patch_term(cfg: FlatSphereConfig, j: int, radius: float, tol: float):
    """Windowed patch integral around p_j via Gauss-Jacobi x trapezoid.

    integral over s in (0, r], phi in [0, 2 pi) of
        window(s/r) * prod_{i != j} |p_j + s e^{i phi} - p_i|^(2 b_i)
        * s^(2 b_j + 1) ds dphi.
    Both directions are doubled until the change drops below tol.
    """
    pj = cfg.points[j]
    alpha = 2.0 * cfg.orders[j] + 1.0
    scale = (0.5 * radius) ** (alpha + 1.0)

    def tensor(n_rad, n_ang):
        x, w = roots_jacobi(n_rad, 0.0, alpha)
        s = radius * 0.5 * (x + 1.0)
        win = _window(s / radius)
        phi = 2.0 * pi * np.arange(n_ang) / n_ang
        ss, pp = np.meshgrid(s, phi, indexing="ij")
        zx = pj.real + ss * np.cos(pp)
        zy = pj.imag + ss * np.sin(pp)
        vals = _density(cfg, zx.ravel(), zy.ravel(), skip=j).reshape(n_rad, n_ang)
        ang_mean = vals.mean(axis=1)
        return scale * 2.0 * pi * float(w @ (win * ang_mean)), n_rad * n_ang

    n_rad, n_ang = 12, 32
    prev, evals = tensor(n_rad, n_ang)
    total_evals = evals
    while True:
        n_rad, n_ang = 2 * n_rad, 2 * n_ang
        cur, evals = tensor(n_rad, n_ang)
        total_evals += evals
        err = abs(cur - prev)
        if err <= tol:
            return cur, err, total_evals, True
        prev = cur
        if n_rad > 800:
            return cur, err, total_evals, False


def _theta_mean(fn, r: float, tol: float, cap: int = 1 << 14):
    """Mean over theta in [0, 2 pi) by trapezoid doubling (reuses points)."""
    m = 32
    vals = fn(r, 2.0 * pi * np.arange(m) / m)
    mean = float(vals.mean())
    evals = m
    while m < cap:
        new = fn(r, 2.0 * pi * (np.arange(m) + 0.5) / m)
        evals += m
        mean2 = 0.5 * (mean + float(new.mean()))
        m *= 2
        if abs(mean2 - mean) <= tol:
            return mean2, evals, True
        mean = mean2
    return mean, evals, False


def _polar_iterated(fn, r_hi: float, tol: float):
    """integral over the polar rectangle [0, r_hi] x [0, 2 pi) of fn(r, theta) r dr dtheta.

    Outer: adaptive Gauss-Kronrod in r.  Inner: periodic trapezoid mean.
    """
    inner_tol = tol / (4.0 * pi * r_hi * r_hi)
    evals = [0]
    inner_ok = [True]

    def radial(rs):
        out = np.empty_like(rs)
        for i, r in enumerate(rs):
            mean, n, ok = _theta_mean(fn, float(r), inner_tol)
            evals[0] += n
            inner_ok[0] = inner_ok[0] and ok
            out[i] = 2.0 * pi * r * mean
        return out

    rep = integrate_adaptive(radial, 0.0, r_hi, tol / 2.0, max_panels=600)
    return rep.value, rep.error_estimate + pi * r_hi * r_hi * inner_tol, evals[0], rep.converged and inner_ok[0]


def flat_sphere_area(cfg: FlatSphereConfig, tol: float = 1e-8) -> QuadratureReport:
    """Total area of the plane under prod_j |z - p_j|^(2 beta_j).

    Smooth partition of unity: per-singularity polar patches (Gauss-Jacobi
    radial weight), exterior chart w = 1/z around infinity, and the
    windowed middle region in polar coordinates about the origin.
    """
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    radii = cfg.patch_radii()
    big_r = cfg.outer_radius()
    n = len(cfg.points)
    tol_piece = tol / (n + 2)

    values, errors, evals, ok = [], [], 0, True

    for j, rj in enumerate(radii):
        v, e, ne, c = _patch_term(cfg, j, rj, tol_piece)
        values.append(v)
        errors.append(e)
        evals += ne
        ok = ok and c

    # Exterior chart: w = 1/z on |w| <= 2/R.  With q_i = 1/p_i,
    # prod |1 - p_i w|^(2 b_i) = prod |p_i|^(2 b_i) * prod |w - q_i|^(2 b_i)
    # over the nonzero p_i; zero points contribute the factor 1.
    qx, qy, qb = [], [], []
    prefactor = 0.0
    for p, b in zip(cfg.points, cfg.orders):
        if p != 0:
            q = 1.0 / p
            qx.append(q.real)
            qy.append(q.imag)
            qb.append(b)
            prefactor += 2.0 * b * log(abs(p))
    pref = np.exp(prefactor)

    def exterior(r, theta):
        u = r * np.cos(theta)
        v = r * np.sin(theta)
        t = np.full_like(theta, 1.0 / (r * big_r) if r > 0 else inf)
        wfac = 1.0 - _window(t)
        return pref * wfac * kernels.product_density(u, v, qx, qy, qb)

    v, e, ne, c = _polar_iterated(exterior, 2.0 / big_r, tol_piece)
    values.append(v)
    errors.append(e)
    evals += ne
    ok = ok and c

    px = np.array([p.real for p in cfg.points])
    py = np.array([p.imag for p in cfg.points])
    rad = np.array(radii)

    def middle(r, theta):
        x = r * np.cos(theta)
        y = r * np.sin(theta)
        bracket = _window(np.full_like(theta, r / big_r))
        for xj, yj, rj in zip(px, py, rad):
            bracket = bracket - _window(np.hypot(x - xj, y - yj) / rj)
        out = np.zeros_like(bracket)
        live = bracket != 0.0
        if np.any(live):
            out[live] = bracket[live] * _density(cfg, x[live], y[live])
        return out

    v, e, ne, c = _polar_iterated(middle, big_r, tol_piece)
    values.append(v)
    errors.append(e)
    evals += ne
    ok = ok and c

    value = fsum(values)
    error = fsum(errors)
    if not isfinite(value):
        raise ConvergenceError("area integral produced a non-finite value")
    return QuadratureReport(value, error, evals, ok and error <= tol)


def flat_sphere_area_mc(cfg: FlatSphereConfig, samples: int, seed: int):
    """Importance-sampled Monte-Carlo oracle for flat_sphere_area.

    Mixture proposal: half the mass on a heavy-tailed global component with
    density 1/(pi (1+|z|^2)^2) (matches the |z|^-4 decay), the rest split
    over per-singularity patch components with radial density
    proportional to s^(2 b_j + 1) (matches each local power law).  The
    integrand-over-proposal ratio is bounded, so the reported standard
    error is an honest CLT estimate.  Deterministic for a fixed seed.
    """
    if samples < 10**4:
        raise DomainError(f"need at least 1e4 samples, got {samples}")
    rng = np.random.default_rng(seed)
    n = len(cfg.points)
    radii = np.array(cfg.patch_radii())
    orders = np.array(cfg.orders)
    px = np.array([p.real for p in cfg.points])
    py = np.array([p.imag for p in cfg.points])

    lam0 = 0.5
    lamj = 0.5 / n

    u_comp = rng.random(samples)
    # floor avoids the measure-zero draw u = 0 (a sample exactly on a center)
    u_rad = np.maximum(rng.random(samples), 1e-300)
    u_ang = rng.random(samples)
    theta = 2.0 * pi * u_ang

    w = np.empty(samples)

    # Patch components.  The self power-law of the integrand and of the
    # patch proposal cancel symbolically; dividing them numerically would
    # overflow when the radial draw s underflows the position resolution
    # (z rounds onto the center).  Other patch densities vanish here since
    # the patch disks are disjoint.
    for j in range(n):
        sel = (u_comp >= lam0 + j * lamj) & (u_comp < lam0 + (j + 1) * lamj)
        bj = orders[j]
        expo = 1.0 / (2.0 * bj + 2.0)
        s = radii[j] * u_rad[sel] ** expo
        xj = px[j] + s * np.cos(theta[sel])
        yj = py[j] + s * np.sin(theta[sel])
        f_other = kernels.product_density(
            xj, yj, np.delete(px, j), np.delete(py, j), np.delete(orders, j)
        )
        q0 = lam0 / (pi * (1.0 + xj * xj + yj * yj) ** 2)
        s_neg_pow = s ** (-2.0 * bj)  # harmless: -> 0 as s -> 0 for bj < 0
        q_over_self = q0 * s_neg_pow + lamj * (2.0 * bj + 2.0) / (
            2.0 * pi * radii[j] ** (2.0 * bj + 2.0)
        )
        w[sel] = f_other / q_over_self

    # Global heavy-tailed component: plain ratio (no overflow away from the
    # centers; the radial draw cannot land exactly on one).
    gsel = u_comp < lam0
    r_glob = np.sqrt(u_rad[gsel] / (1.0 - u_rad[gsel]))
    xg = r_glob * np.cos(theta[gsel])
    yg = r_glob * np.sin(theta[gsel])
    q = lam0 / (pi * (1.0 + xg * xg + yg * yg) ** 2)
    for j in range(n):
        s = np.hypot(xg - px[j], yg - py[j])
        inside = s < radii[j]
        bj = orders[j]
        dens = np.zeros(xg.shape)
        dens[inside] = (2.0 * bj + 2.0) * s[inside] ** (2.0 * bj) / (
            2.0 * pi * radii[j] ** (2.0 * bj + 2.0)
        )
        q += lamj * dens
    w[gsel] = kernels.product_density(xg, yg, px, py, orders) / q

    if not np.all(np.isfinite(w)):
        raise ConvergenceError("Monte-Carlo weights overflowed; degenerate configuration")
    estimate = float(np.mean(w))
    stderr = float(np.std(w, ddof=1) / np.sqrt(samples))
    return estimate, stderr
