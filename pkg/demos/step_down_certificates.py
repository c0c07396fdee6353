"""The step-down relation a ->_n b and its compressed witnesses."""
from phlab.descent import certificate_size, certify_step_down, check_descent
from phlab.hierarchy import step_down
from phlab.ordinals import omega_stack, parse, render

path = step_down(parse("w^w"), 1, parse("0"))
print("w^w ->_1 0 by:", " , ".join(render(x) for x in path.ordinals))

# from w_5 at index 4 the literal descent to 2 is astronomically long;
# a certificate proves it with a handful of checkable rules
for m in range(1, 5):
    for n in range(1, 5):
        d = certify_step_down(omega_stack(m + 1), n, parse("2"))
        check_descent(d)
        print(f"w_{m + 1} ->_{n} 2: certificate with {certificate_size(d)} nodes")

print("3 ->_2 w?", certify_step_down(parse("3"), 2, parse("w")))
print("w ->_2 4?", certify_step_down(parse("w"), 2, parse("4")), "(the descent goes w, 3, 2, ...)")
