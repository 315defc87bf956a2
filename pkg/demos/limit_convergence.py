"""Watch reg(I^r)/r converge to the irrational slope lambda2 = 9 + sqrt(2).

The gap reg(I^r) - r*lambda2 is an exact element of Z[sqrt(2)] pinned in
the open interval (0, 2), so reg/r approaches lambda2 at rate 2/r. All
digits printed below come from integer square roots of scaled integers;
no floating point is involved.
"""

from regpowers import isqrt, limit_gap, reg_closed_form, validate_params

DIGITS = 12
SCALE = 10**DIGITS


def show(p: int, q: int, d: int, r_div: int = 1) -> str:
    """Decimal rendering of (p + q*sqrt(d)) / r_div via scaled isqrt."""
    scaled = p * SCALE + q * isqrt(d * SCALE * SCALE)
    scaled //= r_div
    sign, scaled = ("-", -scaled) if scaled < 0 else ("", scaled)
    return f"{sign}{scaled // SCALE}.{scaled % SCALE:0{DIGITS}d}"


params = validate_params(9, 1, 1)
print("lambda2 =", show(params.a, 1, params.d))
print()
print(f"{'r':>6}  {'reg/r':<16}  {'gap = reg - r*lambda2':<24}  in (0,2)")
for r in (1, 2, 5, 29, 169, 1000, 10**4):
    record = reg_closed_form(params, r)
    gap = limit_gap(params, r)
    bracketed = gap.sign() == 1 and (gap - 2).sign() == -1
    print(
        f"{r:>6}  {show(record.reg, 0, params.d, r):<16}  "
        f"{str(gap):<24}  {bracketed}"
    )

print()
print("the gap never leaves (0, 2), so |reg/r - lambda2| <= 2/r -> 0,")
print("and the limit of reg/r is the irrational number 9 + sqrt(2)")
