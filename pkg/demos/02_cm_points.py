"""Exact CM points and their multiplier rings.

A CM point is stored as the primitive integral triple (a, b, c) of its
quadratic equation. The ring of multipliers of the lattice [tau, 1] is
computed two ways: straight from the triple's discriminant, and by solving
the integrality conditions exactly; they must agree.
"""

from cmparity import (
    lattice_of_tau,
    multiplier_ring,
    order_of_tau,
    parity_of_tau,
    tau_from_beta,
)
from cmparity.cmpoints import TauExact

print("== classic points ==")
for triple in ((1, 0, 1), (1, -1, 1), (4, -4, 13), (3, -3, 2)):
    t = TauExact(*triple)
    direct = order_of_tau(t)
    solved = multiplier_ring(lattice_of_tau(t))
    assert direct == solved
    print(
        f"  tau={complex(t):.4f}  triple={triple}  disc={t.disc:>5}  "
        f"order={direct}  parity={parity_of_tau(t).value}"
    )

print()
print("== the half-shift family 1/2 + sqrt(D)/(2*beta) ==")
print("for odd beta, the order's discriminant follows a closed form:")
D = -63
for beta in (1, 3, 5, 7, 9, 21):
    t = tau_from_beta(D, beta)
    print(
        f"  D={D} beta={beta:>2}: triple=({t.a},{t.b},{t.c})  "
        f"disc={t.disc:>6}  parity={parity_of_tau(t).value}"
    )
print()
print("beta=1,7,9 keep discriminant -63 (beta coprime to its codivisor);")
print("beta=3,21 collapse to -7 because they share a factor with 63/beta;")
print("beta=5 does not divide 63 at all and the discriminant climbs to -1575")
