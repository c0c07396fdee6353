"""Ordinals below epsilon_0: parsing, arithmetic and the digit code."""
from phlab.ordinals import add, code_value, compare, encode_digits, mul_nat, omega_stack, parse, render

a = parse("w^w + w*2 + 1")
b = parse("1 + w")  # normalizes: the 1 is absorbed
print("a =", render(a))
print("1 + w =", render(b))
print("a + (w + 1) =", render(add(a, parse("w + 1"))))
print("(w + 1) * 3 =", render(mul_nat(parse("w + 1"), 3)))
print("compare(w^2, w*3 + 5) =", compare(parse("w^2"), parse("w*3 + 5")))

# towers: w_0 = 1, w_1 = w, w_2 = w^w, ...
for n in range(4):
    print(f"w_{n} =", render(omega_stack(n)))

# each tower level wraps the code in a 4 ... 3,1 pair of brackets
alpha = parse("w + 2")
for n in range(3):
    d = encode_digits(omega_stack(n, alpha))
    print(f"code of w_{n}^(w+2):", "".join(map(str, d)), "value", code_value(d))
