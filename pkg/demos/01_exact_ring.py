#!/usr/bin/env python3
"""A tour of the coefficient field Q(x), where x stands for q^(1/8).

Every fractional power of q that shows up in the twist construction has
denominator dividing 8, so working with integer powers of x keeps the
whole theory inside one rational-function field.
"""

from fractions import Fraction

from qweyl import ONE, Q, RingElem, X, q_binomial, q_factorial, q_int, q_power

x = RingElem.x_power

print("== powers of q ==")
print("q          =", Q, "           (that is x^8)")
print("q^(1/2)    =", q_power(Fraction(1, 2)))
print("q^(-3/4)   =", q_power(Fraction(-3, 4)), "      (an entry of the 2-dim twist)")

print()
print("== quantum integers ==")
for n in range(1, 5):
    print("[%d] =" % n, q_int(n))
print("[2]! [3] =", q_factorial(2) * q_int(3), " = [3]!:",
      q_factorial(2) * q_int(3) == q_factorial(3))

print()
print("== exact division in the field ==")
a = Q - Q.inverse()                      # q - q^-1
b = q_power(Fraction(1, 2)) - q_power(Fraction(-1, 2))
print("(q - q^-1) / (q^(1/2) - q^(-1/2)) =", a / b, " (this is [2])")

print()
print("== Gaussian binomials ==")
print("[4 over 2] =", q_binomial(4, 2))
lhs = q_binomial(5, 2)
rhs = q_power(Fraction(-2, 2)) * q_binomial(4, 2) \
    + q_power(Fraction(5 - 2, 2)) * q_binomial(4, 1)
print("index-shift recurrence at (a, n) = (4, 2):", lhs == rhs)

print()
print("== the numeric bridge ==")
two = q_int(2)
print("[2] at q = 1   ->", two.evaluate(1.0).real, "  (classical limit)")
print("[2] at q = 0.49 ->", two.evaluate(0.49).real, " (= 0.7 + 1/0.7)")

print()
print("== rational functions stay exact ==")
e = ONE / (X - ONE) + ONE / (X + ONE)
print("1/(x-1) + 1/(x+1) =", e)
print("times (x^2 - 1):   ", e * (X * X - ONE))
