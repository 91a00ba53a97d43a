"""Odd-degree isogenies from rational matrices.

Matrices with odd-denominator entries and positive odd-unit determinant act on
the upper half-plane; each one yields an isogeny of odd degree between the CM
lattices of the moved point and the original, and that degree never changes
the parity of the endomorphism ring.
"""

import random
from fractions import Fraction

from cmparity import (
    RatMatrix2,
    TauExact,
    in_odd_group,
    moebius,
    odd_isogeny,
    parity_of_tau,
    parity_transport_check,
)

base = TauExact(1, 0, 1)  # tau = i

print("== three matrices and their isogenies ==")
for entries in ((3, 0, 0, 5), (1, 1, 0, 3), (Fraction(3, 5), 0, 0, 1)):
    m = RatMatrix2(*(Fraction(e) for e in entries))
    iso = odd_isogeny(m, base)
    moved = moebius(m, base)
    print(
        f"  entries={tuple(str(e) for e in m.entries())}: "
        f"moved point ({moved.a},{moved.b},{moved.c}), degree {iso.degree}, "
        f"multiplier {iso.u}"
    )

print()
print("== membership in the odd group ==")
for entries in ((3, 0, 0, 5), (Fraction(1, 2), 0, 0, 1), (2, 0, 0, 1), (1, 0, 0, -1)):
    m = RatMatrix2(*(Fraction(e) for e in entries))
    print(f"  {tuple(str(e) for e in m.entries())}: in group = {in_odd_group(m)}")

print()
print("== parity transport, sampled ==")
rng = random.Random(7)
checked = 0
while checked < 200:
    m = RatMatrix2(
        *(Fraction(rng.randint(-40, 40), rng.randrange(1, 16, 2)) for _ in range(4))
    )
    if not in_odd_group(m):
        continue
    a, b, c = rng.randint(1, 50), rng.randint(-50, 50), rng.randint(30, 80)
    if b * b - 4 * a * c >= 0:
        continue
    assert parity_transport_check(m, TauExact(a, b, c))
    checked += 1
print(f"  {checked} random (matrix, point) pairs: parity preserved every time")
print(f"  base parity: {parity_of_tau(base).value}; every image keeps it")
