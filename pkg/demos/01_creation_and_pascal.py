"""
Creation matrix, Pascal matrix, and the exponential link
========================================================

The whole package hangs on one nilpotent matrix.  This script builds it,
shows the finite exponential series, and checks the Pascal semigroup law
by hand before trusting it anywhere else.
"""

from fractions import Fraction

from hyperappell import creation_matrix, nilpotent_exp, pascal_matrix, tri_inverse

# H has the row index on the subdiagonal and zeros everywhere else.
# Acting on the monomial column (1, x, x^2, ...) it differentiates.
h = creation_matrix(5)
print("H =")
print(h)

# Nilpotency: the order is 6, so H^6 = O while H^5 still has one entry.
# exp(H t) is therefore a finite sum, no analysis needed.
print("\nH^5 is zero:", h.power(5).is_zero())
print("H^6 is zero:", h.power(6).is_zero())

# The exponential of H t is exactly the generalized Pascal matrix P(t):
# binomials times powers of t below the unit diagonal.
t = Fraction(1)
p1 = pascal_matrix(t, 5)
print("\nP(1) =")
print(p1)
print("\nexp(H) == P(1):", nilpotent_exp(h, t) == p1)

# Pascal matrices form a one-parameter group: P(a) P(b) = P(a+b).
a, b = Fraction(2, 3), Fraction(-1, 4)
print("P(2/3) P(-1/4) == P(5/12):", pascal_matrix(a, 5) @ pascal_matrix(b, 5) == pascal_matrix(a + b, 5))

# In particular P(t) is invertible with inverse P(-t).
print("P(1)^-1 == P(-1):", tri_inverse(p1) == pascal_matrix(Fraction(-1), 5))
