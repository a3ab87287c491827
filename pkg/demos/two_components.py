"""Canonical basis vectors in a level-two Fock space, e = 2, s = (0, 0).

Walks through the recursion for ((4), -): the auxiliary vector built from
G((-,-)) by four divided powers, then the one stripping step.
"""

from fockcanon.canonical import canonical_basis_up_to, canonical_vector, decomposition_matrix
from fockcanon.combinat import Charge, ladder_decomposition, parse_multipartition, pretty
from fockcanon.fockspace import FockVector, apply_f_divided, weight_of

s = Charge((0, 0), 2)
mu = parse_multipartition("4|-")

ladders = ladder_decomposition(mu[0], s.e, s[1])
print("ladders of (4):", [(l.index, l.size, l.residue) for l in ladders])

A = FockVector.basis(((), ()), s)
for lad in ladders:
    A = apply_f_divided(A, lad.residue, lad.size)

print("\nA:")
for la in A.support():
    print(f"  {pretty(la):>16}  {A[la]}")

# A has coefficient 1 + q^2 at ((2,1),(1)): subtract G(((2,1),(1))) once
G21 = canonical_vector(parse_multipartition("2,1|1"), 2, s).vector
G4 = canonical_vector(mu, 2, s).vector
assert G4 == A - G21
print("\nG((4),-) = A - G((2,1),(1)):")
for la in G4.support():
    print(f"  {pretty(la):>16}  {G4[la]}")

# The whole weight block as a matrix
entries = canonical_basis_up_to(4, 2, s)
m = decomposition_matrix(entries, weight_of(mu, s))
print(f"\nweight block of {pretty(mu)}: {m.shape[0]} rows x {m.shape[1]} columns")
for la, row in zip(m.rows, m.to_lists()):
    print(f"  {pretty(la):>16} ", " ".join(f"{str(c) if c else '.':>8}" for c in row))
