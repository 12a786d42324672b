"""The R-matrix and its relatives on tensor products of irreducibles.

The universal element is evaluated through the finite series
q^(H (x) H / 4) * sum_n (1-q^-1)^n / [n]! * q^(n(n-1)/4) * E^n (x) F^n,
which truncates by nilpotency at n = min(da, db) - 1.  The Cartan factor
is realized through weight projectors on each tensor leg.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qring import ONE, RingElem, q_factorial, q_power
from .repn import QMatrix, flip, irrep, kron, weight_projector


def weights_of(d):
    return irrep(d).weights


@lru_cache(maxsize=None)
def cartan_factor(da, db, sign=1):
    """q^(sign * H (x) H / 4) on V_a (x) V_b, summed over weight projectors."""
    total = QMatrix.zeros(da * db)
    for m in weights_of(da):
        pm = weight_projector(da, m)
        for mp in weights_of(db):
            block = kron(pm, weight_projector(db, mp))
            total = total + block.scale(RingElem.x_power(sign * 2 * m * mp))
    return total


@lru_cache(maxsize=None)
def series_coeff(n):
    """(1 - q^-1)^n / [n]! * q^(n(n-1)/4)."""
    return ((ONE - q_power(-1)) ** n / q_factorial(n)) \
        * q_power(Fraction(n * (n - 1), 4))


@lru_cache(maxsize=None)
def _gen_powers(d, which, count):
    r = irrep(d)
    base = {"E": r.E, "F": r.F, "Y": r.Y, "X": r.X}[which]
    powers = [QMatrix.identity(d)]
    for _ in range(count):
        powers.append(powers[-1] * base)
    return powers


@lru_cache(maxsize=None)
def r_matrix(da, db):
    """(pi_a (x) pi_b) applied to the universal R element."""
    if da < 1 or db < 1:
        raise ValueError("dimensions must be positive")
    nmax = min(da, db) - 1
    epow = _gen_powers(da, "E", nmax)
    fpow = _gen_powers(db, "F", nmax)
    series = QMatrix.zeros(da * db)
    for n in range(nmax + 1):
        series = series + kron(epow[n], fpow[n]).scale(series_coeff(n))
    return cartan_factor(da, db, 1) * series


@lru_cache(maxsize=None)
def r_inverse(da, db):
    """R^-1, computed by exact linear solve."""
    return r_matrix(da, db).inverse()


@lru_cache(maxsize=None)
def r21(da, db):
    """R with its tensor legs exchanged, as an operator on V_a (x) V_b."""
    return flip(db, da) * r_matrix(db, da) * flip(da, db)


@dataclass(frozen=True)
class RFamily:
    da: int
    db: int
    R: QMatrix
    Rinv: QMatrix
    R21: QMatrix


@lru_cache(maxsize=None)
def r_family(da, db):
    return RFamily(da=da, db=db, R=r_matrix(da, db),
                   Rinv=r_inverse(da, db), R21=r21(da, db))


@lru_cache(maxsize=None)
def braid_matrix(d):
    """B = P R on V_d (x) V_d; satisfies the Yang-Baxter braid relation."""
    return flip(d, d) * r_matrix(d, d)


@lru_cache(maxsize=None)
def conjugated_r(da, db):
    """The exchanged R-matrix conjugated by the Weyl element on the second leg.

    Built from the closed form
    q^(-H (x) H / 4) * sum_n c_n (-q^(1/2))^n F^n (x) F^n
    rather than from an explicit Weyl matrix.
    """
    nmax = min(da, db) - 1
    fa = _gen_powers(da, "F", nmax)
    fb = _gen_powers(db, "F", nmax)
    series = QMatrix.zeros(da * db)
    msign = -q_power(Fraction(1, 2))
    for n in range(nmax + 1):
        coeff = series_coeff(n) * msign ** n
        series = series + kron(fa[n], fb[n]).scale(coeff)
    return cartan_factor(da, db, -1) * series


@lru_cache(maxsize=None)
def drinfeld_u(d):
    """The Drinfeld element: multiply the antipoded second leg of R by the first.

    R is expanded as a finite sum of pure tensors via weight projectors;
    the antipode acts on generators by S(H) = -H, S(X) = -q^(1/2) X,
    S(Y) = -q^(-1/2) Y, so S(F^n P_m) has matrix S(F)^n P_{-m} with
    S(F) = -q^(-1/2) Y K.  Conjugation by the result implements S^2.
    """
    r = irrep(d)
    nmax = d - 1
    epow = _gen_powers(d, "E", nmax)
    sf = (r.Y * r.K).scale(-q_power(Fraction(-1, 2)))
    sfpow = [QMatrix.identity(d)]
    for _ in range(nmax):
        sfpow.append(sfpow[-1] * sf)
    total = QMatrix.zeros(d)
    for n in range(nmax + 1):
        cn = series_coeff(n)
        for m in weights_of(d):
            alpha = weight_projector(d, m) * epow[n]
            if alpha.is_zero:
                continue
            for mp in weights_of(d):
                scalar = cn * RingElem.x_power(2 * m * mp)
                s_beta = sfpow[n] * weight_projector(d, -mp)
                if s_beta.is_zero:
                    continue
                total = total + (s_beta * alpha).scale(scalar)
    return total


_COPRODUCTS = {
    "X": lambda a, b: kron(a.X, b.K) + kron(a.Kinv, b.X),
    "Y": lambda a, b: kron(a.Y, b.K) + kron(a.Kinv, b.Y),
    "H": lambda a, b: kron(a.H, QMatrix.identity(b.dim))
    + kron(QMatrix.identity(a.dim), b.H),
    "K": lambda a, b: kron(a.K, b.K),
    "Kinv": lambda a, b: kron(a.Kinv, b.Kinv),
}


def coproduct_gen(da, db, name):
    """(pi_a (x) pi_b) of the coproduct of a generator."""
    return _COPRODUCTS[name](irrep(da), irrep(db))


def coproduct_gen_op(da, db, name):
    """The flipped coproduct of a generator."""
    p_ab = flip(da, db)
    p_ba = flip(db, da)
    return p_ba * coproduct_gen(db, da, name) * p_ab
