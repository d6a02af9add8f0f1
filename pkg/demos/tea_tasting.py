"""The classic tea-tasting experiment, end to end.

Eight cups of tea, four with milk poured first and four with tea poured
first; the taster sorts them into two groups of four. With every marginal
fixed at 4 there are only five possible outcomes (n11 = 0..4), so the whole
conditional distribution can be printed and every test compared on it.
"""

from exactlex import (
    association_measures,
    fisher_exact,
    hypergeom_distribution,
    likelihood_g2,
    make_table,
    mantel_haenszel_x2,
    pearson_x2,
    yates_x2,
)

dist = hypergeom_distribution(8, 4, 4)
print("Distribution of n11 with all marginals fixed at 4:")
for k in dist.support:
    print(f"  P(n11 = {k}) = {dist.pmf_at(k):.3f}")
print()

for n11 in (4, 3, 1, 0):
    t = make_table(n11, 4 - n11, 4 - n11, n11)
    f = fisher_exact(t)
    print(f"outcome n11 = {n11}  (table {t.cells})")
    print(f"  X^2 = {pearson_x2(t).statistic:.3f}  p = {pearson_x2(t).p_value:.3f}")
    print(f"  G^2 = {likelihood_g2(t).statistic:.3f}  p = {likelihood_g2(t).p_value:.3f}")
    print(f"  Yates = {yates_x2(t).statistic:.3f}  MH = {mantel_haenszel_x2(t).statistic:.3f}")
    print(f"  Fisher left/right/two = {f.left_p:.3f} / {f.right_p:.3f} / {f.two_sided_p:.3f}")
    m = association_measures(t)
    print(f"  phi = {m.phi:.3f}  CC = {m.contingency_coefficient:.3f}  V = {m.cramers_v:.3f}")
    print()

print("Note how n11 = 3 gives right p = .243: even a 3-of-4 performance is")
print("consistent with guessing more often than one in five experiments.")
