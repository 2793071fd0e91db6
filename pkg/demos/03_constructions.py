"""
Diagonal strings and the XOR pair
=================================

For each n we pick the least string u of length n that no shorter program
prints from n. Pairing a hard string v with v xor u gives two strings that
are far apart for the time-bounded distance, while a short XOR program maps
one to the other.
"""

from infodist.constructions import diagonal_u, diagonal_violations, gap_sweep
from infodist.machine import StepBound

t = StepBound(8, 1, 16)
prime = t.scaled(2)

for n in range(2, 9):
    u = diagonal_u(n, prime)
    print(f"n={n} u={u} violations={diagonal_violations(n, u, prime)}")

print()
for r in gap_sweep(range(4, 9), t, prime):
    print(r.to_line())
    assert r.verify()

# On this machine the XOR witness itself runs inside the bound, so E^t can
# never exceed the witness length; the sweep shows the trend only.
