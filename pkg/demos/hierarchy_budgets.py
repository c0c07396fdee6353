"""Evaluating the fast-growing hierarchy under a resource budget.

Values explode quickly.  Evaluation keeps exact integers and stops as soon
as the running argument passes the cap; since the argument only grows, the
cap is then a certified lower bound on the true value.
"""
from phlab.hierarchy import Budget, FunctionBase, f_eps0_eval, fgh_eval, hierarchy_eval

for a, x in [(0, 5), (1, 4), (2, 3), ("w", 1)]:
    print(f"F_{a}({x}) =", fgh_eval(a, x))

out = fgh_eval("w", 2, Budget(max_value_bits=10**6))
print("F_w(2):", out)

print("F_eps0(0):", f_eps0_eval(0))
print("F_eps0(1):", f_eps0_eval(1))

# shrinking the cap never changes a completed answer, only when we give up
for bits in (4, 5, 6, 7):
    print(f"F_2(3) with {bits} bits:", fgh_eval(2, 3, Budget(bits)))

# the same recursion over another base
sq = FunctionBase(lambda n: n * n + 1, "n^2+1")
print("H_1(1) over n^2+1:", hierarchy_eval(sq, 1, 1, 1))

# a rewrite trace, one dict per step
print("trace of F_w(1):")
fgh_eval("w", 1, trace=lambda r: print("  ", r["step"], r["rule"], r["stack"], r["arg"]))
