"""Airy functions, roots of the Airy cross-product and the separable modes
that vanish on both lines of a symmetric strip.

Ai and Bi are summed from their Maclaurin series in extended precision
(mpmath), which is exact up to rounding for the bounded range used here.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import mpmath
import numpy as np

AIRY_RANGE = 12.0
DEFAULT_DIGITS = 30
SCAN_STEP = 0.05


class AiryRangeError(ValueError):
    """Argument outside the range where the series is trusted."""


@dataclass(frozen=True)
class AiryPair:
    ai: float
    bi: float
    ai_prime: float
    bi_prime: float

    def wronskian(self) -> float:
        return self.ai * self.bi_prime - self.ai_prime * self.bi


@dataclass(frozen=True)
class Eigenvalue:
    mu: float
    half_width: float
    residual: float
    scale: float


@dataclass(frozen=True)
class Eigenmode:
    mu: float
    half_width: float
    c1: float = 0.0
    c2: float = 1.0


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int

    def __post_init__(self):
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError("grid bounds must satisfy min < max")
        if self.nx < 2 or self.ny < 2:
            raise ValueError("grid needs at least 2 points per axis")

    @property
    def hx(self) -> float:
        return (self.x_max - self.x_min) / (self.nx - 1)

    @property
    def hy(self) -> float:
        return (self.y_max - self.y_min) / (self.ny - 1)

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        return (np.linspace(self.x_min, self.x_max, self.nx),
                np.linspace(self.y_min, self.y_max, self.ny))

    def refined(self) -> GridSpec:
        """Same box with both spacings halved."""
        return GridSpec(self.x_min, self.x_max, self.y_min, self.y_max,
                        2 * self.nx - 1, 2 * self.ny - 1)


def working_digits() -> int:
    raw = os.environ.get("TRISTRIP_PRECISION")
    if not raw:
        return DEFAULT_DIGITS
    digits = int(raw)
    if digits < 16:
        raise ValueError("TRISTRIP_PRECISION must be at least 16")
    return digits


def _series(z):
    """f, g and their derivatives at mpf ``z``; caller sets the precision."""
    z3 = z**3
    eps = mpmath.mpf(10) ** (-mpmath.mp.dps)
    f = t = mpmath.mpf(1)
    g = s = z
    fp = mpmath.mpf(0)
    gp = w = mpmath.mpf(1)
    u = z**2 / 6  # t_k / z, the derivative of f's k-th term is 3k u
    k = 0
    while True:
        r_f = (3 * k + 2) * (3 * k + 3)
        r_g = (3 * k + 3) * (3 * k + 4)
        if k:
            u = u * z3 / r_f
        t = t * z3 / r_f
        s = s * z3 / r_g
        w = w * z3 / r_g
        k += 1
        f += t
        g += s
        fp += 3 * k * u
        gp += (3 * k + 1) * w
        decreasing = abs(z3) < (3 * k + 2) * (3 * k + 3)
        small = max(abs(t), abs(s), abs(3 * k * u), abs((3 * k + 1) * w))
        if decreasing and small <= eps * max(abs(f), abs(g), abs(fp), abs(gp), 1):
            return f, fp, g, gp


def _airy_mp(z: float):
    if not abs(z) <= AIRY_RANGE:
        raise AiryRangeError(f"|z| = {abs(z):g} exceeds the supported Airy range {AIRY_RANGE:g}")
    guard = int(0.58 * abs(float(z)) ** 1.5) + 5
    with mpmath.workdps(working_digits() + guard):
        zz = mpmath.mpf(z)
        c1 = mpmath.mpf(3) ** (-mpmath.mpf(2) / 3) / mpmath.gamma(mpmath.mpf(2) / 3)
        c2 = mpmath.mpf(3) ** (-mpmath.mpf(1) / 3) / mpmath.gamma(mpmath.mpf(1) / 3)
        f, fp, g, gp = _series(zz)
        r3 = mpmath.sqrt(3)
        ai = c1 * f - c2 * g
        bi = r3 * (c1 * f + c2 * g)
        aip = c1 * fp - c2 * gp
        bip = r3 * (c1 * fp + c2 * gp)
        return +ai, +bi, +aip, +bip


def airy_eval(z: float) -> AiryPair:
    """Ai, Bi and their derivatives at a real ``z`` with ``|z| <= 12``."""
    ai, bi, aip, bip = _airy_mp(z)
    return AiryPair(float(ai), float(bi), float(aip), float(bip))


def _cross_mp(z):
    ai_m, bi_m, _, _ = _airy_mp(-z)
    ai_p, bi_p, _, _ = _airy_mp(z)
    return ai_m * bi_p - ai_p * bi_m


def cross_product(mu: float, a: float) -> float:
    """Ai(-mu a) Bi(mu a) - Ai(mu a) Bi(-mu a)."""
    if mu < 0 or a <= 0:
        raise ValueError("need mu >= 0 and a > 0")
    return float(_cross_mp(mu * a))


def _bisect(lo: float, hi: float, f_lo, a: float, tol: float) -> float:
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        f_mid = _cross_mp(mid * a)
        if f_mid == 0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_eigenvalues(a: float, count: int) -> list[Eigenvalue]:
    """The first ``count`` positive roots in mu of the Airy cross-product.

    Roots are bracketed on a uniform scan of mu*a with step 0.05 and refined
    by bisection down to floating-point resolution.
    """
    if a <= 0:
        raise ValueError("half-width a must be positive")
    if count < 1:
        raise ValueError("count must be at least 1")
    step = SCAN_STEP / a
    roots: list[Eigenvalue] = []
    k = 1
    lo = step
    f_lo = _cross_mp(lo * a)
    while len(roots) < count:
        hi = (k + 1) * step
        if hi * a > AIRY_RANGE:
            raise AiryRangeError(
                f"only {len(roots)} of {count} roots lie within the supported Airy range |mu a| <= {AIRY_RANGE:g}")
        f_hi = _cross_mp(hi * a)
        if f_lo == 0 or (f_lo > 0) != (f_hi > 0):
            scale = float(max(abs(f_lo), abs(f_hi)))
            mu = lo if f_lo == 0 else _bisect(lo, hi, f_lo, a, tol=1e-15 * hi)
            roots.append(Eigenvalue(mu, a, cross_product(mu, a), scale))
        lo, f_lo = hi, f_hi
        k += 1
    return roots


def _y_factor(mode: Eigenmode, y: float) -> float:
    a, mu = mode.half_width, mode.mu
    ai_m, bi_m, _, _ = _airy_mp(-mu * a)
    ai_y, bi_y, _, _ = _airy_mp(mu * y)
    return float(bi_y * ai_m - ai_y * bi_m)


def _x_factor(mode: Eigenmode, x):
    k = mode.mu**1.5
    return mode.c1 * np.sin(k * x) + mode.c2 * np.cos(k * x)


def eigenmode_value(mode: Eigenmode, x: float, y: float) -> float:
    """(c1 sin(mu^1.5 x) + c2 cos(mu^1.5 x)) (Bi(mu y) Ai(-mu a) - Ai(mu y) Bi(-mu a))."""
    if abs(y) > mode.half_width:
        raise ValueError("y lies outside the strip")
    if mode.c1 == 0 and mode.c2 == 0:
        return 0.0
    return float(_x_factor(mode, x) * _y_factor(mode, y))


def eigenmode_grid(mode: Eigenmode, xs, ys) -> np.ndarray:
    """Mode values on the tensor grid, indexed ``[iy, ix]``."""
    xs, ys = np.asarray(xs, float), np.asarray(ys, float)
    if np.any(np.abs(ys) > mode.half_width):
        raise ValueError("grid extends outside the strip")
    if mode.c1 == 0 and mode.c2 == 0:
        return np.zeros((ys.size, xs.size))
    yf = np.array([_y_factor(mode, y) for y in ys])
    return np.outer(yf, _x_factor(mode, xs))


def y_factor_scale(mode: Eigenmode, samples: int = 201) -> float:
    """Largest |y-factor| on a uniform sample of [-a, a]."""
    ys = np.linspace(-mode.half_width, mode.half_width, samples)
    return max(abs(_y_factor(mode, y)) for y in ys)


def tricomi_fd_residual(values: np.ndarray, grid: GridSpec) -> float:
    """max |y D2x u + D2y u| over interior nodes, centered differences."""
    if grid.nx < 3 or grid.ny < 3:
        raise ValueError("need at least 3 points per axis for second differences")
    xs, ys = grid.axes()
    u = values
    d2x = (u[1:-1, 2:] - 2 * u[1:-1, 1:-1] + u[1:-1, :-2]) / grid.hx**2
    d2y = (u[2:, 1:-1] - 2 * u[1:-1, 1:-1] + u[:-2, 1:-1]) / grid.hy**2
    res = ys[1:-1, None] * d2x + d2y
    return float(np.max(np.abs(res))) if res.size else 0.0


def eigenmode_residual(mode: Eigenmode, grid: GridSpec) -> float:
    """Finite-difference Tricomi residual of ``mode`` on ``grid``."""
    xs, ys = grid.axes()
    return tricomi_fd_residual(eigenmode_grid(mode, xs, ys), grid)


def convergence_ratios(residual_fn, grid: GridSpec, levels: int = 3) -> list[float]:
    """Ratios of successive residuals under repeated mesh halving."""
    values = []
    for _ in range(levels):
        values.append(residual_fn(grid))
        grid = grid.refined()
    return [values[i] / values[i + 1] for i in range(len(values) - 1)]
