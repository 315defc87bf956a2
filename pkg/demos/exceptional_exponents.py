"""Three portraits of the same exceptional set.

For the family with d = 2 the exponents where the regularity dips are,
equivalently:

  1. the r with 2*r^2 - 1 a perfect square,
  2. the r components of the solutions of s^2 - 2*r^2 = -1,
  3. the even-index terms of the recurrence q_0=1, q_1=2, q_m=2q_{m-1}+q_{m-2}.

The script computes all three independently and shows they coincide, then
demonstrates how sparse they are (q_{2n} >= 3^n) and exhibits a family
where the set is empty: d = 8, since 8*r^2 - 1 = 7 (mod 8) is never a
square.
"""

from regpowers import (
    exception_set,
    negative_pell_solutions,
    sparsity_check,
    sqrt2_denominators,
    validate_params,
)

R_MAX = 10**6

params = validate_params(9, 1, 1)
via_squares = exception_set(params, R_MAX)

via_pell = []
for solution in negative_pell_solutions(2, 20):
    if solution.r > R_MAX:
        break
    via_pell.append(solution.r)

qs = sqrt2_denominators(40)
via_recurrence = [qs[2 * n] for n in range(20) if qs[2 * n] <= R_MAX]

print(f"exceptional exponents up to {R_MAX}:")
print("  perfect-square scan :", via_squares)
print("  negative Pell       :", via_pell)
print("  recurrence, even idx:", via_recurrence)
assert via_squares == via_pell == via_recurrence

print()
print("sparsity: q_{2n} >= 3^n holds for n <= 15:", sparsity_check(15))
for n in (0, 3, 8, 15):
    print(f"  n = {n:>2}: q_{{2n}} = {qs[2 * n]} >= 3^{n} = {3**n}")

print()
never = validate_params(10, 2, 2)
print(f"family ({never.a}, {never.b}, {never.c}) has d = {never.d}:",
      f"exception set up to 1000 = {exception_set(never, 1000)}")
print("8*r^2 - 1 is 7 mod 8, and no square is; sigma(r) = 1 for every r")
