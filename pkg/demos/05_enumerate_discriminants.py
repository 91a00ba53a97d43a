"""All real CM j-invariants of a given odd discriminant.

Saturated divisors of D (divisors coprime to their codivisor) below sqrt(|D|)
index the points; there are exactly 2^(number of prime factors - 1) of them,
every one sits on the line branch of the real locus, and all values land
strictly below 1728.
"""

from cmparity import (
    count_saturated_below_sqrt,
    enumerate_real_odd_cm,
    min_j_gap,
    saturated_divisors,
    t_representative,
)

print("== saturated divisors ==")
for n in (-15, -63, -1155, 12):
    print(f"  {n:>6}: {saturated_divisors(n)}")

print()
for D in (-3, -15, -63, -1155):
    points = enumerate_real_odd_cm(D)
    sats = count_saturated_below_sqrt(D)
    print(f"== D = {D}: {len(points)} real CM j-invariants "
          f"({sats} saturated divisors below sqrt({abs(D)})) ==")
    for p in points:
        rep = t_representative(p.tau)
        print(
            f"  beta={p.beta:>2}: tau=({p.tau.a},{p.tau.b},{p.tau.c})  "
            f"j={p.j_estimate:>18,.3f}  locus t={rep.t:.6f} "
            f"(= sqrt({abs(D)})/{2 * p.beta})"
        )
    if len(points) > 1:
        print(f"  smallest gap between j values: {min_j_gap(points):,.3f}")
    print()

print("the smallest j always belongs to beta=1 (the point of largest height),")
print("and every list lives inside [j(beta=1), 1728)")
