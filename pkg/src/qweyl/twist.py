"""The cylinder-twist element t = w z and its verification suites.

The twist factors through the Weyl element w and a Borel part
z = q^(-H^2/8) zhat, where zhat = sum_m beta_m q^(-Hm/4) Y^m is driven by
the coefficient recursion

    beta_{a+1} = (beta_a beta_1 + beta_{a-1} (q^-1 - 1) q^((1-a)/2)) / [a+1]

with beta_0 = 1 and beta_1 a free parameter of the solution family.
Everything here is exact over Q(x); the only numeric op is the comparison
against the known closed-form matrices in dimensions 2, 3, 4, whose
entries involve square roots and therefore live outside Q(x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .qring import ONE, ZERO, RingElem, q_binomial, q_factorial, q_int, q_power
from .repn import QMatrix, h_power, h_squared_eighth, irrep, kron
from .reports import Check, Report, matrix_check
from .rmat import (
    cartan_factor,
    conjugated_r,
    drinfeld_u,
    r21,
    r_inverse,
    r_matrix,
    series_coeff,
)

VARIANTS = ("standard", "w_inverse", "k_conjugate", "u_conjugate", "affine")


def _as_ring(v):
    if isinstance(v, RingElem):
        return v
    if isinstance(v, (int, Fraction)):
        return RingElem.from_rational(v)
    raise TypeError("beta1 must be a RingElem, int or Fraction")


@dataclass(frozen=True)
class TwistConfig:
    """Selects a member of the solution family.

    beta1 is the free coefficient; variant picks one of the known
    transformed solutions; alpha (a half-integer) only applies to the
    K-conjugated variant, where it must keep K^alpha inside Q(x).
    """

    beta1: RingElem
    variant: str = "standard"
    alpha: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "beta1", _as_ring(self.beta1))
        if self.variant not in VARIANTS:
            raise ValueError("unknown variant %r (choose from %s)"
                             % (self.variant, ", ".join(VARIANTS)))
        if self.variant == "k_conjugate":
            if self.alpha is None:
                raise ValueError("k_conjugate needs an alpha")
            alpha = Fraction(self.alpha)
            if (2 * alpha).denominator != 1:
                raise ValueError("alpha must be a half-integer, got %s" % alpha)
            object.__setattr__(self, "alpha", alpha)
        elif self.alpha is not None:
            raise ValueError("alpha is only meaningful for the k_conjugate variant")


@dataclass(frozen=True)
class CoeffTable:
    """Twist coefficients beta_m, beta'_m = beta_m [m]! and inverse
    coefficients alpha_m, indexed 0..N."""

    beta1: RingElem
    betas: tuple
    beta_primes: tuple
    alphas: tuple


@lru_cache(maxsize=None)
def beta_coeffs(n_max, beta1):
    """Coefficient tables up to index n_max for the given beta_1."""
    beta1 = _as_ring(beta1)
    betas = [ONE]
    if n_max >= 1:
        betas.append(beta1)
    qm1 = q_power(-1) - ONE
    for a in range(1, n_max):
        nxt = (betas[a] * beta1
               + betas[a - 1] * qm1 * q_power(Fraction(1 - a, 2))) / q_int(a + 1)
        betas.append(nxt)
    beta_primes = [betas[m] * q_factorial(m) for m in range(n_max + 1)]
    alphas = [ONE]
    for a in range(1, n_max + 1):
        acc = ZERO
        for m in range(1, a + 1):
            acc = acc + betas[m] * alphas[a - m] * q_power(Fraction(-m * (a - m), 2))
        alphas.append(-acc)
    return CoeffTable(beta1=beta1, betas=tuple(betas),
                      beta_primes=tuple(beta_primes), alphas=tuple(alphas))


@lru_cache(maxsize=None)
def series_coeff_B(n):
    """B_n = (1-q^-1)^n/[n]! q^(n(n-1)/4) (-q^(1/2))^n q^(-n^2/2)."""
    return series_coeff(n) * (-q_power(Fraction(1, 2))) ** n \
        * q_power(Fraction(-n * n, 2))


def bracket_coeff(a, b, n):
    """The two-index series coefficient tying the primed recursion to the
    doubled sum; zero for negative n."""
    if n < 0:
        return ZERO
    return (q_binomial(a, n) * q_binomial(b, n) * q_factorial(n)
            * q_power(Fraction(-n * (a + b), 2))
            * q_power(Fraction(3 * n, 4) + Fraction(n * n, 4))
            * (q_power(-1) - ONE) ** n)


# ---------------------------------------------------------------------------
# the twist matrices


def _borel_series(d, coeffs):
    """sum_m coeffs[m] q^(-Hm/4) Y^m on the d-dim irrep (truncates at d-1)."""
    ypow = QMatrix.identity(d)
    total = QMatrix.zeros(d)
    y = irrep(d).Y
    for m in range(d):
        if m:
            ypow = ypow * y
        term = h_power(d, Fraction(-m, 4)) * ypow
        total = total + term.scale(coeffs[m])
    return total


@lru_cache(maxsize=None)
def zhat(d, beta1):
    """The unipotent Borel factor of the twist."""
    table = beta_coeffs(d - 1, _as_ring(beta1))
    return _borel_series(d, table.betas)


@lru_cache(maxsize=None)
def zhat_inverse(d, beta1):
    """Inverse of zhat via the coefficient recursion
    alpha_a = -sum_{m=1..a} beta_m alpha_{a-m} q^(-m(a-m)/2), alpha_0 = 1."""
    table = beta_coeffs(d - 1, _as_ring(beta1))
    return _borel_series(d, table.alphas)


@lru_cache(maxsize=None)
def z_elem(d, beta1):
    """z = q^(-H^2/8) zhat."""
    return h_squared_eighth(d, -1) * zhat(d, _as_ring(beta1))


@lru_cache(maxsize=None)
def weyl_w(d):
    """The Weyl element in the d-dim irrep: the antidiagonal intertwiner
    with w e_k = omega_k e_{d-1-k}, omega_k = -q^(-1/2) [k][d-k] omega_{k-1},
    normalized by omega_0 = q^(-(d-1)^2/8).

    The intertwining relations fix w up to one scalar; this normalization
    puts the corner of t = w z at q^(-(d-1)^2/4) in every dimension.
    """
    omega = [RingElem.x_power(-(d - 1) ** 2)]
    factor = -q_power(Fraction(-1, 2))
    for k in range(1, d):
        omega.append(factor * q_int(k) * q_int(d - k) * omega[k - 1])
    entries = [[ZERO] * d for _ in range(d)]
    for k in range(d):
        entries[d - 1 - k][k] = omega[k]
    return QMatrix(entries)


@lru_cache(maxsize=None)
def twist_t(d, config):
    """The cylinder-twist matrix in the d-dim irrep for the given family member."""
    z = z_elem(d, config.beta1)
    if config.variant == "standard":
        return weyl_w(d) * z
    if config.variant == "w_inverse":
        return weyl_w(d).inverse() * z
    if config.variant == "k_conjugate":
        k_alpha = h_power(d, config.alpha / 4)
        return weyl_w(d) * k_alpha * z * k_alpha
    if config.variant == "u_conjugate":
        u = drinfeld_u(d)
        return weyl_w(d) * u * z * u
    if config.variant == "affine":
        w = weyl_w(d)
        t = w * z
        return w.inverse() * t * w
    raise ValueError("unknown variant %r" % config.variant)


# ---------------------------------------------------------------------------
# coproducts


@lru_cache(maxsize=None)
def coproduct_zhat(da, db, beta1):
    """Coproduct of zhat on V_a (x) V_b via the closed double sum

    sum_m sum_i beta_m [m over i] (q^(H(i-2m)/4) Y^i) (x) (q^(H(i-m)/4) Y^(m-i)).
    """
    beta1 = _as_ring(beta1)
    m_max = (da - 1) + (db - 1)
    table = beta_coeffs(m_max, beta1)
    ya = irrep(da).Y
    yb = irrep(db).Y
    ypow_a = [QMatrix.identity(da)]
    for _ in range(da - 1):
        ypow_a.append(ypow_a[-1] * ya)
    ypow_b = [QMatrix.identity(db)]
    for _ in range(db - 1):
        ypow_b.append(ypow_b[-1] * yb)
    total = QMatrix.zeros(da * db)
    for m in range(m_max + 1):
        for i in range(max(0, m - (db - 1)), min(m, da - 1) + 1):
            leg1 = h_power(da, Fraction(i - 2 * m, 4)) * ypow_a[i]
            leg2 = h_power(db, Fraction(i - m, 4)) * ypow_b[m - i]
            coeff = table.betas[m] * q_binomial(m, i)
            total = total + kron(leg1, leg2).scale(coeff)
    return total


@lru_cache(maxsize=None)
def coproduct_z(da, db, beta1):
    """Coproduct of z: (q^(-H^2/8) (x) q^(-H^2/8)) q^(-H(x)H/4) coproduct(zhat)."""
    beta1 = _as_ring(beta1)
    gauss = kron(h_squared_eighth(da, -1), h_squared_eighth(db, -1))
    return gauss * cartan_factor(da, db, -1) * coproduct_zhat(da, db, beta1)


def coproduct_t(da, db, config):
    """Coproduct of the standard twist: R^-1 (w (x) w) coproduct(z)."""
    if config.variant != "standard":
        raise ValueError("coproduct is only available for the standard twist")
    ww = kron(weyl_w(da), weyl_w(db))
    return r_inverse(da, db) * ww * coproduct_z(da, db, config.beta1)


# ---------------------------------------------------------------------------
# verification suites


def four_braid_sides(da, db, ta, tb, affine=False):
    """Both sides of the cylinder braid equation for given twist matrices.

    Ordinary form:  R21 t2 R t1  vs  t1 R21 t2 R.
    Affine form:    R t2 R21 t1  vs  t1 R t2 R21.
    """
    t1 = kron(ta, QMatrix.identity(db))
    t2 = kron(QMatrix.identity(da), tb)
    r = r_matrix(da, db)
    rt = r21(da, db)
    if affine:
        lhs = r * t2 * rt * t1
        rhs = t1 * r * t2 * rt
    else:
        lhs = rt * t2 * r * t1
        rhs = t1 * rt * t2 * r
    return lhs, rhs


def braid_form_sides(d, t, affine=False):
    """Both sides of the equivalent braid-matrix form on V_d (x) V_d."""
    from .rmat import braid_matrix
    b = braid_matrix(d)
    if affine:
        f = kron(QMatrix.identity(d), t)
    else:
        f = kron(t, QMatrix.identity(d))
    return f * b * f * b, b * f * b * f


def verify_four_braid(da, db, config):
    """Check the cylinder braid equation (and the braid-matrix form when
    the dimensions agree) for the configured twist."""
    affine = config.variant == "affine"
    ta = twist_t(da, config)
    tb = twist_t(db, config)
    lhs, rhs = four_braid_sides(da, db, ta, tb, affine=affine)
    label = "affine" if affine else "cylinder"
    checks = [matrix_check(
        "%s braid equation on V%d (x) V%d (%s)" % (label, da, db, config.variant),
        lhs, rhs)]
    if da == db:
        bl, br = braid_form_sides(da, ta, affine=affine)
        checks.append(matrix_check(
            "braid-matrix form on V%d (x) V%d (%s)" % (da, db, config.variant),
            bl, br))
    return Report(title="four-braid d=(%d,%d) %s" % (da, db, config.variant),
                  checks=tuple(checks))


def verify_zdelta(da, db, beta1):
    """Check the coproduct condition on z and its unipotent reformulation."""
    beta1 = _as_ring(beta1)
    za = z_elem(da, beta1)
    zb = z_elem(db, beta1)
    z1 = kron(za, QMatrix.identity(db))
    z2 = kron(QMatrix.identity(da), zb)
    lhs = coproduct_z(da, db, beta1)
    rhs = z2 * conjugated_r(da, db) * z1
    checks = [matrix_check("coproduct condition for z on V%d (x) V%d" % (da, db),
                           lhs, rhs)]

    zh_a = zhat(da, beta1)
    zh_b = zhat(db, beta1)
    fa = irrep(da).F
    fb = irrep(db).F
    fpow_a = [QMatrix.identity(da)]
    fpow_b = [QMatrix.identity(db)]
    for _ in range(min(da, db) - 1):
        fpow_a.append(fpow_a[-1] * fa)
        fpow_b.append(fpow_b[-1] * fb)
    series = QMatrix.zeros(da * db)
    for n in range(min(da, db)):
        leg1 = h_power(da, Fraction(-n, 2)) * fpow_a[n]
        series = series + kron(leg1, fpow_b[n]).scale(series_coeff_B(n))
    rhs_hat = cartan_factor(da, db, 1) \
        * kron(QMatrix.identity(da), zh_b) \
        * cartan_factor(da, db, -1) \
        * series \
        * kron(zh_a, QMatrix.identity(db))
    checks.append(matrix_check(
        "unipotent coproduct equation on V%d (x) V%d" % (da, db),
        coproduct_zhat(da, db, beta1), rhs_hat))
    return Report(title="zdelta d=(%d,%d)" % (da, db), checks=tuple(checks))


def verify_bform(max_sum, beta1):
    """Check that the doubled coefficient sum depends only on a + b, that
    both index-shift recurrences hold, and the original coefficient
    equation in the unprimed coefficients."""
    beta1 = _as_ring(beta1)
    table = beta_coeffs(max_sum, beta1)
    checks = []

    bad = []
    for a in range(max_sum + 1):
        for b in range(max_sum + 1 - a):
            acc = ZERO
            for n in range(min(a, b) + 1):
                acc = acc + (bracket_coeff(a, b, n)
                             * table.beta_primes[a - n] * table.beta_primes[b - n])
            if acc != table.beta_primes[a + b]:
                bad.append("(a=%d,b=%d)" % (a, b))
    checks.append(Check(
        name="doubled sum reproduces beta'_(a+b) for a+b <= %d" % max_sum,
        ok=not bad, detail=", ".join(bad[:3])))

    bad = []
    qq = q_power(1)
    for a in range(7):
        for b in range(7):
            for n in range(max(a, b) + 2):
                qn = q_power(Fraction(-n, 1))
                lhs_a = bracket_coeff(a + 1, b, n)
                rhs_a = qn * (bracket_coeff(a, b, n)
                              + (q_power(n - b) - qq) * bracket_coeff(a, b, n - 1))
                if lhs_a != rhs_a:
                    bad.append("a-shift (a=%d,b=%d,n=%d)" % (a, b, n))
                lhs_b = bracket_coeff(a, b + 1, n)
                rhs_b = qn * (bracket_coeff(a, b, n)
                              + (q_power(n - a) - qq) * bracket_coeff(a, b, n - 1))
                if lhs_b != rhs_b:
                    bad.append("b-shift (a=%d,b=%d,n=%d)" % (a, b, n))
    checks.append(Check(name="index-shift recurrences for a, b <= 6",
                        ok=not bad, detail=", ".join(bad[:3])))

    bad = []
    for a in range(max_sum + 1):
        for b in range(max_sum + 1 - a):
            lhs = table.betas[a + b] * q_factorial(a + b) \
                / (q_factorial(a) * q_factorial(b))
            acc = ZERO
            for n in range(min(a, b) + 1):
                acc = acc + (series_coeff_B(n) * table.betas[a - n] * table.betas[b - n]
                             * q_power(Fraction(n * n, 2) - Fraction(n * (a + b - 1), 2)))
            if lhs != acc:
                bad.append("(a=%d,b=%d)" % (a, b))
    checks.append(Check(
        name="coefficient equation in the unprimed coefficients, a+b <= %d" % max_sum,
        ok=not bad, detail=", ".join(bad[:3])))
    return Report(title="coefficient identities (beta1 = %s)" % beta1,
                  checks=tuple(checks))


def verify_coproduct(max_dim, beta1):
    """Check the coproduct law for the twist, coproduct(t) = R^-1 t2 R t1,
    and the counit value read off from the one-dimensional representation."""
    beta1 = _as_ring(beta1)
    cfg = TwistConfig(beta1=beta1)
    checks = []
    for da in range(1, max_dim + 1):
        for db in range(1, max_dim + 1):
            lhs = coproduct_t(da, db, cfg)
            t1 = kron(twist_t(da, cfg), QMatrix.identity(db))
            t2 = kron(QMatrix.identity(da), twist_t(db, cfg))
            rhs = r_inverse(da, db) * t2 * r_matrix(da, db) * t1
            checks.append(matrix_check(
                "twist coproduct law on V%d (x) V%d" % (da, db), lhs, rhs))
    checks.append(matrix_check("counit of the twist is 1",
                               twist_t(1, cfg), QMatrix.identity(1)))
    return Report(title="twist coproduct", checks=tuple(checks))


def verify_inverse(max_dim, beta1):
    """Check zhat * zhat^-1 = zhat^-1 * zhat = identity for d <= max_dim."""
    beta1 = _as_ring(beta1)
    checks = []
    for d in range(1, max_dim + 1):
        ident = QMatrix.identity(d)
        zh = zhat(d, beta1)
        zinv = zhat_inverse(d, beta1)
        checks.append(matrix_check("zhat inverse (right) d=%d" % d, zh * zinv, ident))
        checks.append(matrix_check("zhat inverse (left) d=%d" % d, zinv * zh, ident))
    return Report(title="unipotent factor inversion", checks=tuple(checks))


# ---------------------------------------------------------------------------
# numeric comparison against the known closed-form matrices (dims 2, 3, 4)


def _ref_matrix_2(q, b1):
    return np.array([
        [-b1 * q ** -0.5, -q ** -0.75],
        [q ** -0.25, 0.0],
    ])


def _ref_matrix_3(q, b1):
    root = math.sqrt(q + 1)
    return np.array([
        [(1 - q + q * b1 ** 2) / q ** 2, q ** -1.75 * root * b1, q ** -2.0],
        [-q ** -1.25 * b1 * root, -1 / q, 0.0],
        [1 / q, 0.0, 0.0],
    ])


def _ref_matrix_4(q, b1):
    g = math.sqrt(1 + q + q * q)
    return np.array([
        [-q ** -3.5 * b1 * (1 + q - 2 * q * q + q * q * b1 ** 2),
         q ** -3.75 * g * (q - 1 - q * b1 ** 2),
         -q ** -3.5 * g * b1,
         -q ** -3.75],
        [q ** -3.25 * g * (1 - q + q * b1 ** 2),
         q ** -2.5 * (1 + q) * b1,
         q ** -2.25,
         0.0],
        [-q ** -2.5 * g * b1, -q ** -1.75, 0.0, 0.0],
        [q ** -2.25, 0.0, 0.0, 0.0],
    ])


REFERENCE_MATRICES = {2: _ref_matrix_2, 3: _ref_matrix_3, 4: _ref_matrix_4}


def symmetric_basis_matrix(d, beta1, q0):
    """The twist evaluated at q0 in the mirror-symmetric basis.

    The exact core works in the basis where the lowering operator has unit
    entries; the displayed closed forms live in the basis where raising and
    lowering have equal square-root entries.  The bridge is the diagonal
    D_0 = 1, D_{k+1} = D_k / sqrt([k+1][d-1-k]) together with the overall
    scale 1/[d-1]!, which restores the corner normalization q^(-(d-1)^2/4).
    """
    beta1 = _as_ring(beta1)
    t_num = twist_t(d, TwistConfig(beta1=beta1)).evaluate(q0)
    coupling = [q_int(k + 1).evaluate(q0).real * q_int(d - 1 - k).evaluate(q0).real
                for k in range(d - 1)]
    dvec = [1.0]
    for k in range(d - 1):
        dvec.append(dvec[-1] / math.sqrt(coupling[k]))
    dvec = np.array(dvec)
    scale = 1.0 / q_factorial(d - 1).evaluate(q0).real
    return scale * (t_num / dvec[:, None]) * dvec[None, :]


def compare_reference_matrix(d, beta1_value, q0):
    """Max-abs entrywise residual against the known d-dimensional matrix."""
    if d not in REFERENCE_MATRICES:
        raise ValueError("closed-form matrices are known for d in {2, 3, 4}")
    if not (q0 > 0) or q0 == 1:
        raise ValueError("q0 must be a positive real other than 1")
    b1 = Fraction(beta1_value)
    got = symmetric_basis_matrix(d, RingElem.from_rational(b1), q0)
    want = REFERENCE_MATRICES[d](float(q0), float(b1))
    return float(np.max(np.abs(got - want)))


def verify_reference_matrices(beta1_values=(0, 1, 2), q0_values=(0.7, 1.3),
                              tol=1e-9):
    """Residual checks against all three known closed-form matrices."""
    checks = []
    for d in sorted(REFERENCE_MATRICES):
        for b1 in beta1_values:
            for q0 in q0_values:
                res = compare_reference_matrix(d, b1, q0)
                checks.append(Check(
                    name="closed-form matrix d=%d beta1=%s q0=%s" % (d, b1, q0),
                    ok=res < tol, detail="residual %.3e" % res))
    return Report(title="closed-form matrix comparison", checks=tuple(checks))
