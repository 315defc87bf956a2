"""Regularity of ideal-sheaf powers for the reference family (a, b, c) = (9, 1, 1).

The regularity follows reg(I^r) = [r*lambda2] + 1 + sigma(r) with
lambda2 = 9 + sqrt(2). The floor climbs with irrational slope, and at the
sparse exceptional exponents r = 1, 5, 29, 169, ... the correction bit
sigma drops to 0 and the value dips by one. Every row is cross-checked
against the independent twist scan, which never consults the closed form.
"""

from regpowers import reg_closed_form, reg_scan, validate_params

params = validate_params(9, 1, 1)

print(f"curve class ({params.a}, {params.b}, {params.c}), radicand d = {params.d}")
print()
print(f"{'r':>5}  {'[r*lambda2]':>11}  {'sigma':>5}  {'reg':>7}  {'scan':>7}")
for r in list(range(1, 13)) + [29, 30, 168, 169, 170]:
    record = reg_closed_form(params, r)
    scanned = reg_scan(params, r)
    assert scanned == record.reg
    note = "  <- exceptional" if record.is_exception else ""
    print(
        f"{record.r:>5}  {record.floor_r_lambda2:>11}  {record.sigma:>5}"
        f"  {record.reg:>7}  {scanned:>7}{note}"
    )

print()
print("both routes agree on every row; the dips land exactly on the")
print("exponents r with 2*r^2 - 1 a perfect square")
