"""Walk h^1(m*H - r*C) across the strip between the pencil roots.

Between r*lambda1 and r*lambda2 the first cohomology is the negated Euler
characteristic, a downward parabola in m that ends at small values near the
upper root; above the root it vanishes. The two highest twists below the
root are the ones the blowup inherits, and whether the very top one is 0
decides the regularity correction sigma(r).
"""

from regpowers import (
    cone_position,
    floor_r_lambda1,
    floor_r_lambda2,
    h_ideal_power,
    h_surface,
    sigma,
    validate_params,
)

params = validate_params(9, 1, 1)

for r in (1, 2, 5):
    low = floor_r_lambda1(params, r)
    top = floor_r_lambda2(params, r)
    print(f"r = {r}: strip twists m = {low + 1} .. {top}, sigma(r) = {sigma(params, r)}")
    for m in range(low + 1, top + 2):
        surface = h_surface(params, m, r, 1)
        ideal = h_ideal_power(params, m, r, 1)
        where = cone_position(params, m, r).value
        print(f"  m = {m:>3}  surface h1: {str(surface):<10}  ideal h1: {str(ideal):<10} ({where})")
    print()

print("the ideal-power values are only inherited at the top two twists;")
print("a zero at the very top (m = [r*lambda2]) is what makes r exceptional")
