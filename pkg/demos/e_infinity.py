"""The e = infinity mode.

Every multipartition counts as multiregular once e is large compared with the
sizes involved, and the result stops depending on e.  The library picks a
large e, recomputes at e + 1 and refuses to answer if the two disagree.
"""

from fockcanon.canonical import canonical_vector, canonical_vector_einf, einf_modulus
from fockcanon.combinat import parse_multipartition, pretty

mu = parse_multipartition("2,1|-|1")
charge = (0, 1, 0)

en = canonical_vector_einf(mu, charge)
print(f"G{pretty(mu)} for e = inf, charge {charge} (computed at e = {einf_modulus(charge, 4)}):")
for la in en.vector.support():
    print(f"  {pretty(la):>16}  {en[la]}")

for e in range(4, 9):
    same = canonical_vector(mu, e, charge).vector.terms == en.vector.terms
    print(f"e = {e}: {'same' if same else 'different'}")

# (1,1) is 2-singular but fine at e = inf
print(canonical_vector_einf(parse_multipartition("1,1"), (0,)).vector)
