"""The brute-force route: wedges, straightening and the bar involution.

Each multipartition becomes a decreasing sequence of integers.  Reversing a
long prefix and straightening it back gives the bar involution, and from the
bar involution the canonical basis follows by a triangular solve.
"""

from fockcanon.canonical import canonical_vector
from fockcanon.combinat import Charge, is_multiregular, multipartitions_up_to, parse_multipartition, pretty
from fockcanon.wedge_oracle import (
    bar_coefficients,
    default_length,
    encode,
    oracle_canonical,
    oracle_multicharge,
    wedge_algebra,
)

alg = wedge_algebra(2, 2)
print("[1] ^ [7] =", {k: str(v) for k, v in alg.straighten((1, 7)).items()})
print("[3] ^ [3] =", alg.straighten((3, 3)))

s = Charge((0, 0), 2)
mu = parse_multipartition("2,1|1")
sc = oracle_multicharge(s, 4)
print("\nmulticharge", sc.lifts, "prefix", encode(mu, sc, default_length(mu, sc)).entries)

print(f"\nbar(s_{pretty(mu)}):")
for la, c in bar_coefficients(mu, sc).items():
    print(f"  {pretty(la):>16}  {c}")

# Cross-check the recursive algorithm against the oracle, odd e included
for e, res, n in [(2, (0, 0), 4), (3, (0, 1), 4), (2, (0, 1, 1), 3)]:
    t = Charge(res, e)
    labels = [m for m in multipartitions_up_to(n, t.r) if is_multiregular(m, e)]
    bad = [m for m in labels if canonical_vector(m, e, t).vector != oracle_canonical(m, t)]
    print(f"e={e}, s={res}, |mu| <= {n}: {len(labels) - len(bad)}/{len(labels)} agree")
