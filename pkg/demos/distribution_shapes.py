"""How marginal skew shapes the conditional distribution of n11.

Word-pair tables are extremely skewed: the sample size dwarfs both word
counts. This script contrasts a skewed setting (where the pmf decreases
monotonically and the right-sided and two-sided tests coincide) with a
balanced one (where the pmf is symmetric and they differ).
"""

from exactlex import fisher_exact, hypergeom_distribution, make_table

print("Skewed: total=10000, row1=20, col1=10")
skewed = hypergeom_distribution(10000, 20, 10)
for k in skewed.support:
    bar = "#" * max(1, int(60 * skewed.pmf_at(k))) if skewed.pmf_at(k) > 1e-4 else ""
    print(f"  n11={k:2d}  {skewed.pmf_at(k):<12.3e} {bar}")

print("\nRight-sided vs two-sided on the skewed table:")
for n11 in (1, 2, 3):
    t = make_table(n11, 20 - n11, 10 - n11, 10000 - 30 + n11)
    f = fisher_exact(t)
    print(f"  n11={n11}: right={f.right_p:.6f}  two={f.two_sided_p:.6f}  (equal)")

print("\nBalanced: total=10000, row1=5000, col1=10")
balanced = hypergeom_distribution(10000, 5000, 10)
for k in balanced.support:
    bar = "#" * max(1, int(60 * balanced.pmf_at(k)))
    print(f"  n11={k:2d}  {balanced.pmf_at(k):<12.3e} {bar}")

t = make_table(8, 4992, 2, 4998)
f = fisher_exact(t)
print(f"\nObserving n11=8 here: right={f.right_p:.4f}  two={f.two_sided_p:.4f}  (different)")
