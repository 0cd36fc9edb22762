"""
Truncated hypercomplex exponential
==================================

Exp(x) is the series sum phi_k(x) / k!.  Truncation keeps everything
rational.  On the real line it is the plain exponential's partial sum;
at n = 1 it converges to cos|x1| + e1 sin|x1| on the vertical axis.
"""

import math
from fractions import Fraction

from hyperappell import Paravector, exp_truncated

# Real line: the vector part is zero, so Exp reduces to sum x0^k / k!.
x = Paravector(1, (0, 0))
for order in (2, 4, 8, 16):
    value = exp_truncated(x, order)
    approx = float(value.scalar_part())
    print(f"order {order:2d}: Exp(1) = {value.scalar_part()} ~ {approx:.12f}")
print(f"            e      ~ {math.e:.12f}")

# Vertical axis at n = 1: Exp(e1) should approach cos 1 + e1 sin 1.
y = Paravector(0, (1,))
value = exp_truncated(y, 20)
scalar = float(value.scalar_part())
e1_part = float(value.coefficient((1,)))
print(f"\nExp(e1) at order 20 ~ {scalar:.12f} + {e1_part:.12f} e1")
print(f"cos 1, sin 1        ~ {math.cos(1):.12f}, {math.sin(1):.12f}")

# A genuinely hypercomplex point: n = 2, x = 1/2 + e1 - e2 / 3.
z = Paravector(Fraction(1, 2), (Fraction(1), Fraction(-1, 3)))
value = exp_truncated(z, 12)
print("\nExp(1/2 + e1 - e2/3) at order 12 =", value)
print("decimal parts:",
      ", ".join(f"{blade}: {float(coeff):.9f}" for blade, coeff in
                (("1", value.scalar_part()),
                 ("e1", value.coefficient((1,))),
                 ("e2", value.coefficient((2,))))))
