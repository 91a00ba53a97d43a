"""Orders in quadratic fields and their parity.

An order is pinned down by a squarefree integer d and a conductor f; its
discriminant is f^2 times the field discriminant. Whether that discriminant
is odd or even can be read off three independent ways, and they always agree.
"""

from cmparity import (
    canonical_generator,
    field_discriminant,
    order_discriminant,
    order_from_canonical,
    parity,
    quad_order,
    squarefree,
    trace_lattice,
)

print("== field discriminants ==")
for d in (-1, -2, -3, -7, 5, 13):
    sq = squarefree(d)
    print(f"  Q(sqrt({d:>3})): discriminant {field_discriminant(sq)}")

print()
print("== orders and their parity ==")
for d, f in ((-3, 1), (-1, 1), (-3, 2), (-3, 8), (-7, 3), (5, 2)):
    o = quad_order(d, f)
    disc = order_discriminant(o)
    trace = "Z" if trace_lattice(o) == 1 else "2Z"
    canon = canonical_generator(o)
    print(
        f"  d={d:>3} f={f}: disc={disc:>5}  parity={parity(o).value:<4} "
        f"trace image={trace:<2}  canonical {canon.kind.value}({canon.radicand})"
    )

print()
print("== canonical form round trip ==")
o = quad_order(-3, 8)
cf = canonical_generator(o)
print(f"  {o} -> {cf.kind.value}({cf.radicand}) -> {order_from_canonical(cf)}")

print()
print("the three parity computations (discriminant parity, trace lattice,")
print("canonical-generator shape) agree on every order; the test suite checks")
print("this exhaustively for |d| <= 500 and f <= 50")
