"""Large homogeneous sets and the finite Paris-Harrington principle."""
from phlab.ramsey import Coloring, chain_links, find_witness, min_witness, ph_holds

c = Coloring(1, 3, 2, (0, 1, 1))
print("witness for colouring 011 of singletons, m = 2:", find_witness(c, 2))

for N in range(2, 7):
    v = ph_holds(2, 3, 2, N)
    desc = type(v).__name__
    if desc == "Fails":
        desc += " " + "".join(map(str, v.witness.colors))
    print(f"PH(k=2, m=3, n=2, N={N}):", desc)

print("least N for k=2, m=2, n=1:", min_witness(2, 2, 1).value)
for m in range(1, 7):
    print(f"least N for k=1, m={m}, n=1:", min_witness(1, m, 1).value)

for n in (14, 15, 18):
    print(f"inequality chain at n={n}:", chain_links(n))
