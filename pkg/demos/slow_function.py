"""The inverse of F_eps0 and the slowly growing function built from it."""
import random

from phlab.hierarchy import Budget
from phlab.slow import (
    cantor_pair,
    cantor_unpair,
    f_diamond,
    f_eps0_inverse_certified,
    slow_hierarchy_eval,
    slow_proof_shape,
)

cert = f_eps0_inverse_certified(10**100)
print("F_eps0^-1(10^100) =", cert.value, "check:", cert.check())
by_method = {}
for r in cert.refutations:
    by_method.setdefault(r.method, []).append(r.z)
for method, zs in sorted(by_method.items()):
    print(f"  refuted by {method}: z in {min(zs)}..{max(zs)} ({len(zs)} values)")

x = random.Random(0).getrandbits(4096)
print("F_eps0^-1(random 4096-bit x) =", f_eps0_inverse_certified(x).value)

print("F_diamond(0), F_diamond(1):", f_diamond(0), f_diamond(1))
print("F_diamond(2):", f_diamond(2, Budget(10**6)))
print("slow hierarchy at (0, 1), (1, 0), (w, 2):",
      slow_hierarchy_eval(0, 1), slow_hierarchy_eval(1, 0), slow_hierarchy_eval("w", 2))

for p in (cantor_pair(17, 1), cantor_pair(5, 2), 0):
    print(f"p = {p}: unpair {cantor_unpair(p)}, shape {slow_proof_shape(p).to_json()}")
