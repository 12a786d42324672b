"""Tensor representations of the type-B braid group on n strands.

The generator acting on the first tensor factor is the cylinder-twist
matrix; the remaining generators are the braid matrix on adjacent factors.
The module builds the generator bundle, checks all defining relations
exactly, and evaluates arbitrary braid words.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .qring import RingElem
from .repn import QMatrix, kron
from .reports import Check, Report, matrix_check
from .rmat import braid_matrix
from .twist import TwistConfig, twist_t

DEFAULT_MAX_EXACT_DIM = 256


def max_exact_dim():
    """Row-count ceiling for exact bundles; override with QW_MAX_EXACT_DIM."""
    value = os.environ.get("QW_MAX_EXACT_DIM")
    return int(value) if value else DEFAULT_MAX_EXACT_DIM


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators tau_0 .. tau_{n-1} with exponents +-1."""

    n: int
    letters: tuple

    def __post_init__(self):
        for idx, exp in self.letters:
            if not 0 <= idx < self.n:
                raise ValueError("generator index %d out of range for %d strands"
                                 % (idx, self.n))
            if exp not in (1, -1):
                raise ValueError("exponent must be +1 or -1, got %r" % (exp,))

    @classmethod
    def parse(cls, text, n):
        """Parse whitespace-separated generator indices; a trailing apostrophe
        marks an inverse, e.g. \"0 1 0' 1\"."""
        letters = []
        for tok in text.split():
            exp = 1
            if tok.endswith("'"):
                exp = -1
                tok = tok[:-1]
            letters.append((int(tok), exp))
        return cls(n=n, letters=tuple(letters))


class RepBundle:
    """Generator matrices of the type-B braid group on V_d^(x n).

    Treated as immutable; generator inverses are computed on first use.
    """

    def __init__(self, d, n, generators):
        self.d = d
        self.n = n
        self.generators = tuple(generators)
        self._inverses = {}

    def generator(self, i, exp=1):
        if exp == 1:
            return self.generators[i]
        if i not in self._inverses:
            self._inverses[i] = self.generators[i].inverse()
        return self._inverses[i]

    @property
    def dim(self):
        return self.d ** self.n


def zbn_generators(d, n, config):
    """The bundle with tau_0 = t (x) 1...1 and tau_i the braid matrix on
    legs (i, i+1).  Exact mode refuses bundles above the size ceiling."""
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    size = d ** n
    ceiling = max_exact_dim()
    if size > ceiling:
        raise ValueError(
            "exact bundle of %d rows exceeds the ceiling %d "
            "(set QW_MAX_EXACT_DIM to raise it, or evaluate numerically)"
            % (size, ceiling))
    t = twist_t(d, config)
    b = braid_matrix(d)
    gens = []
    g0 = t
    for _ in range(n - 1):
        g0 = kron(g0, QMatrix.identity(d))
    gens.append(g0)
    for i in range(1, n):
        g = b
        for _ in range(i - 1):
            g = kron(QMatrix.identity(d), g)
        for _ in range(n - i - 1):
            g = kron(g, QMatrix.identity(d))
        gens.append(g)
    return RepBundle(d=d, n=n, generators=gens)


def zbn_generators_numeric(d, n, q0, config):
    """Generator matrices evaluated at q = q0, as numpy arrays.  Not subject
    to the exact-mode size ceiling."""
    t = twist_t(d, config).evaluate(q0)
    b = braid_matrix(d).evaluate(q0)
    eye = np.eye(d, dtype=complex)
    gens = []
    g0 = t
    for _ in range(n - 1):
        g0 = np.kron(g0, eye)
    gens.append(g0)
    for i in range(1, n):
        g = b
        for _ in range(i - 1):
            g = np.kron(eye, g)
        for _ in range(n - i - 1):
            g = np.kron(g, eye)
        gens.append(g)
    return gens


def relation_report(bundle):
    """Exact check of the four defining relation families on a bundle."""
    gens = bundle.generators
    n = bundle.n
    checks = []

    bad = []
    for i in range(1, n):
        for j in range(i + 2, n):
            if gens[i] * gens[j] != gens[j] * gens[i]:
                bad.append("(%d,%d)" % (i, j))
    checks.append(Check(name="far commutation among braid generators",
                        ok=not bad, detail=", ".join(bad)))

    bad = []
    for i in range(1, n - 1):
        lhs = gens[i] * gens[i + 1] * gens[i]
        rhs = gens[i + 1] * gens[i] * gens[i + 1]
        if lhs != rhs:
            bad.append("(%d,%d)" % (i, i + 1))
    checks.append(Check(name="braid relation on adjacent generators",
                        ok=not bad, detail=", ".join(bad)))

    if n >= 2:
        lhs = gens[0] * gens[1] * gens[0] * gens[1]
        rhs = gens[1] * gens[0] * gens[1] * gens[0]
        checks.append(matrix_check("type-B relation with the cylinder generator",
                                   lhs, rhs))

    bad = []
    for i in range(2, n):
        if gens[0] * gens[i] != gens[i] * gens[0]:
            bad.append("i=%d" % i)
    checks.append(Check(name="cylinder generator commutes with distant braids",
                        ok=not bad, detail=", ".join(bad)))
    return Report(title="type-B relations d=%d n=%d" % (bundle.d, bundle.n),
                  checks=tuple(checks))


def verify_zbn_relations(d, n, config):
    if n < 2:
        raise ValueError("relation suite needs at least 2 strands")
    return relation_report(zbn_generators(d, n, config))


def eval_braid_word(word, bundle):
    """Ordered product of the word's generator matrices; empty word gives
    the identity."""
    if word.n != bundle.n:
        raise ValueError("word on %d strands does not fit a bundle on %d"
                         % (word.n, bundle.n))
    result = QMatrix.identity(bundle.dim)
    for idx, exp in word.letters:
        result = result * bundle.generator(idx, exp)
    return result


def verify_affine_relation(d, beta1_or_config):
    """Check the shifted cylinder relation satisfied by the conjugated twist
    on V_d (x) V_d: (1 (x) F) B (1 (x) F) B = B (1 (x) F) B (1 (x) F)."""
    if isinstance(beta1_or_config, TwistConfig):
        beta1 = beta1_or_config.beta1
    else:
        beta1 = beta1_or_config
    tbar = twist_t(d, TwistConfig(beta1=beta1, variant="affine"))
    b = braid_matrix(d)
    f2 = kron(QMatrix.identity(d), tbar)
    lhs = f2 * b * f2 * b
    rhs = b * f2 * b * f2
    return Report(title="affine relation d=%d" % d,
                  checks=(matrix_check("affine cylinder relation on V%d (x) V%d"
                                       % (d, d), lhs, rhs),))
