"""Finite abelian groups, symmetric cochains and their cohomology.

Run with ``python demos/groups_and_cohomology.py``.
"""

from __future__ import annotations

from abcross import (Cochain3Pair, GroupHom, SymCochain1, SymCochain2, Z, class_of, coboundary,
                     exact_decomposition, is_cohomologous, is_sym_3cocycle, oracle_enumerate,
                     smith_normal_form, sym_cohomology)

# Smith normal form and the kernel/cokernel of a map between cyclic groups.
U, S, V = smith_normal_form([[4, 2], [2, 2]])
print("SNF of [[4, 2], [2, 2]]:", S, " (U A V = S)")
d = GroupHom(Z(4), Z(2), [[1]])
dec = exact_decomposition(d)
print(f"Z/4 -> Z/2 (mod 2): ker {dec.ker}, coker {dec.coker}")

# Second symmetric cohomology of cyclic groups has order gcd(m, n).
for m, n in [(2, 2), (4, 6), (3, 4)]:
    H = sym_cohomology(2, Z(m), Z(n))
    print(f"H2_s(Z/{m}, Z/{n}) = {H.group}  (order {H.order})")

# A coboundary classifies to zero; the least 1-cochain with the same coboundary is returned.
g = SymCochain1.from_entries(Z(4), Z(4), {((1,),): (1,)})
dg = coboundary(g)
print("class of coboundary:", class_of(dg), " witness:", is_cohomologous(dg, SymCochain2.zero(Z(4), Z(4))))

# Degree three: the pair (xi, eta) with eta(1, 1) = 1 generates H3_s(Z/2, Z/2).
k = Cochain3Pair.from_entries(Z(2), Z(2), eta={((1,), (1,)): (1,)})
print("eta(1,1)=1 is a 3-cocycle:", bool(is_sym_3cocycle(k)), " class:", class_of(k))

# The brute-force enumerator agrees with the linear-algebra computation.
orc = oracle_enumerate(3, Z(2), Z(2))
print(f"oracle: {len(orc.tables)} cocycles in {orc.class_count} classes;",
      "library order:", sym_cohomology(3, Z(2), Z(2)).order)
