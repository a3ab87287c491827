"""Level one: graded decomposition numbers for e = 2 and e = 3.

Run with ``python3 demos/level_one.py``.
"""

from fockcanon.combinat import is_regular, partitions, pretty
from fockcanon.llt_level1 import auxiliary_vector, llt_canonical

# The auxiliary vector is a product of divided powers, one per ladder.
# For (5) at e = 2 it is not yet the canonical vector: (3,2) appears with
# coefficient 1, so G((3,2)) gets subtracted once.
A = auxiliary_vector((5,), 2, 0)
print("A((5)), e=2:")
for la in A.support():
    print(f"  {pretty(la):>10}  {A[la]}")

G = llt_canonical((5,), 2, 0)
print("G((5)), e=2:")
for la in G.support():
    print(f"  {pretty(la):>10}  {G[la]}")


def table(n, e):
    cols = [mu for mu in partitions(n) if is_regular(mu, e)]
    rows = list(partitions(n))
    vecs = {mu: llt_canonical(mu, e, 0) for mu in cols}
    width = max(len(pretty(((la,)))) for la in rows)
    print(f"\nn={n}, e={e}")
    print(" " * width, *(pretty((mu,)).rjust(8) for mu in cols))
    for la in rows:
        cells = [str(vecs[mu][(la,)] or ".") for mu in cols]
        print(pretty((la,)).ljust(width), *(c.rjust(8) for c in cells))


for e in (2, 3):
    table(5, e)

# Setting q = 1 recovers ordinary decomposition numbers
print("\ncolumn sums at q=1, n=5, e=2:")
for mu in partitions(5):
    if is_regular(mu, 2):
        v = llt_canonical(mu, 2, 0)
        print(f"  {pretty((mu,))}: {sum(c.evaluate(1) for _, c in v.items())}")
