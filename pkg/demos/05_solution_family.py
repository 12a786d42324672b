#!/usr/bin/env python3
"""The family of twist solutions and its coefficient combinatorics.

Beyond the free coefficient beta_1, known transformations produce further
solutions: multiplying by the inverse Weyl element, conjugating the Borel
factor by K^alpha, conjugating by the Drinfeld element, and conjugating
the whole twist by w (which satisfies the shifted, affine-type relation).
"""

from fractions import Fraction

from qweyl import (
    ONE,
    RingElem,
    TwistConfig,
    beta_coeffs,
    verify_affine_relation,
    verify_bform,
    verify_four_braid,
    verify_inverse,
)

print("== coefficient tables for beta1 = 0 ==")
table = beta_coeffs(6, RingElem.from_rational(0))
for m, b in enumerate(table.betas):
    print("beta_%d  =" % m, b)
print("(odd coefficients vanish when beta1 = 0)")

print()
print("== the doubled-sum identity behind the recursion ==")
report = verify_bform(8, ONE)
for line in report.lines():
    print(" ", line)

print()
print("== inverse of the unipotent factor ==")
print(verify_inverse(6, RingElem.x_power(4)).summary())

print()
print("== variant solutions ==")
variants = [
    TwistConfig(beta1=ONE, variant="w_inverse"),
    TwistConfig(beta1=ONE, variant="k_conjugate", alpha=Fraction(1, 2)),
    TwistConfig(beta1=ONE, variant="k_conjugate", alpha=Fraction(-1, 2)),
    TwistConfig(beta1=ONE, variant="u_conjugate"),
    TwistConfig(beta1=ONE, variant="affine"),
]
for config in variants:
    label = config.variant
    if config.alpha is not None:
        label += " (alpha = %s)" % config.alpha
    ok = all(verify_four_braid(d, d, config).ok for d in (1, 2, 3))
    print("%-28s %s" % (label, "pass" if ok else "FAIL"))

print()
print("== the conjugated twist and the affine relation ==")
for d in (1, 2, 3):
    print("d = %d:" % d, "pass" if verify_affine_relation(d, ONE).ok else "FAIL")
