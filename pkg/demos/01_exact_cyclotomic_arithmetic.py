"""Exact arithmetic in the cyclotomic rings and the formal-parameter extension.

Every value is a pair (or quadruple) of exact rationals; nothing is ever
rounded.  The ring knows its minimal relation, so products reduce on the fly.
"""

from fractions import Fraction

from crystref import Ring

# Gaussian integers: r = 4, xi = i
r4 = Ring(4)
one, i = r4.one(), r4.xi()
print("(1 + i)(1 - i)         =", (one + i) * (one - i))
print("1 / (1 - i)            =", (one - i).inverse())

# Eisenstein-flavoured arithmetic: r = 3, xi = w with w^2 + w + 1 = 0
r3 = Ring(3)
w = r3.xi()
print("(1 - w)(1 - w^2)       =", (r3.one() - w) * (r3.one() - w * w))
print("1 / (1 - w)            =", (r3.one() - w).inverse())

# the hexagonal ring r = 6 satisfies xi^2 = xi - 1; (1 - xi) is a unit
r6 = Ring(6)
xi = r6.xi()
print("xi^2 (r = 6)           =", r6.root(2), "  <- this is e^{2 pi i/3}")
print("1 / (1 - xi) (r = 6)   =", (r6.one() - xi).inverse())

# powers wrap around exactly
for m in range(7):
    print(f"xi^{m} =", r6.root(m), end="   ")
print()

# the formal parameter: degree-one polynomials, never multiplied together
r2a = Ring(2, alpha=True)
al = r2a.formal()
x = r2a.rational(Fraction(3, 2)) + al * Fraction(1, 2)     # (3 + al)/2
y = r2a.one() - al
print("(3 + al)/2 + (1 - al)  =", x + y)
print("2 * (3 + al)/2         =", x * 2)
print("coordinates of (3+al)/2:", x.coordinates())
