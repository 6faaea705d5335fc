"""Closed E-polynomials and the Betti numbers they encode.

Run:  python3 demos/01_e_polynomials.py
"""

from pwcheck import closed_e, euler_variant, make_params, variant_betti

for n, g in [(2, 2), (3, 2), (2, 3)]:
    params = make_params(n, g)
    poly = closed_e(params)
    print(f"n={n} g={g}  dim={params.dim}")
    print(f"  E = {poly}")

    weight = (2 * g - 2) * (2 * n * n + n - 3)
    print(f"  palindromic about weight {weight}: {poly.is_palindromic(weight)}")

    profile = variant_betti(params)
    for d, v in profile.items():
        print(f"  dim H^{d} = {v}")
    print(f"  Euler characteristic: {euler_variant(params)}")
    print()

# Everything is exact: coefficients are rationals that happen to be
# integers, and evaluation keeps them that way.
poly = closed_e(make_params(5, 2))
print("q = 1 gives the Euler number:", poly.eval_at(1))
print("q = 4 evaluates exactly:     ", poly.eval_at(4))
