"""Extensions of B by Q of the type of a crossed module B -> D.

Run with ``python demos/extensions.py``.
"""

from __future__ import annotations

from abcross import (AbCrossedModule, GroupHom, Z, are_equivalent, canonical_extension,
                     classify_extensions, enumerate_extensions, functor_of_extension,
                     obstruction_class, partition_by_equivalence, pullback_extension,
                     total_group_type)

Z2 = Z(2)
ident = GroupHom.identity(Z2)

# Zero map Z/2 -> Z/2 with psi = id: two classes, total groups Z/2+Z/2 and Z/4.
M = AbCrossedModule.of(GroupHom(Z2, Z2, [[0]]))
print("obstruction class:", obstruction_class(M, Z2, ident))
res = classify_extensions(M, Z2, ident)
for label, E in zip(res.labels, res.extensions):
    print(f"  class {label}: f = {dict(E.f.entries())}, total group {total_group_type(E)}")

# The same count from brute force: every normal-form extension, grouped by equivalence.
found = enumerate_extensions(M, Z2, ident)
print(f"brute force: {len(found)} extensions in {len(partition_by_equivalence(found))} classes")

# Each extension is a functor out of the discrete category on Q, and back.
E = res.extensions[1]
F = functor_of_extension(E)
print("structure arrows of the twisted extension:", dict(F.tilde.entries()))

# With d injective there is exactly one class: the pullback of B -> D -> coker d.
M = AbCrossedModule.of(GroupHom(Z2, Z(4), [[2]]))
res = classify_extensions(M, Z2, ident)
pulled = pullback_extension(canonical_extension(M), ident)
print(f"Z/2 -x2-> Z/4: {len(res)} class, total {total_group_type(res.extensions[0])},",
      "equivalent to pullback:", are_equivalent(res.extensions[0], pulled) is not None)
