"""Continued fractions of sqrt(d) and solvability of s^2 - d*r^2 = -1.

The negative Pell equation is solvable exactly when the continued-fraction
period of sqrt(d) has odd length. The script prints the expansion, the
period parity and, where solutions exist, the first few of them together
with the convergents they come from.
"""

from regpowers import (
    cf_expand_sqrt,
    convergents,
    is_perfect_square,
    negative_pell_solutions,
    negative_pell_solvable,
)

print(f"{'d':>3}  {'cf of sqrt(d)':<22} {'period':>6}  solvable")
for d in range(2, 31):
    if is_perfect_square(d):
        continue
    cf = cf_expand_sqrt(d)
    print(f"{d:>3}  {str(cf):<22} {len(cf.period):>6}  {negative_pell_solvable(d)}")

print()
print("solutions for d = 2 (they are every second convergent of sqrt(2)):")
print("  convergents:", convergents(2, 7))
for solution in negative_pell_solutions(2, 4):
    check = solution.s**2 - 2 * solution.r**2
    print(f"  s = {solution.s:>4}, r = {solution.r:>4}:  s^2 - 2r^2 = {check}")

print()
print("solutions for d = 13 grow fast (one unit-square step each):")
for solution in negative_pell_solutions(13, 4):
    print(f"  s = {solution.s}, r = {solution.r}")
