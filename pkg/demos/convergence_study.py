"""Refinement study of the pointwise error at (x, t) = (0.1, 0.02).

First the plain error on a fixed domain (-100, 100), then the same
quantity with the domain-truncation error removed by combining runs on
half widths (L, 2L, 4L). The extrapolated errors keep improving after
the plain ones flatten out against the truncation floor.
"""

import math

from levyfp import refinement_table, richardson_refinement_table

h_list = [0.1 / 2**m for m in range(5)]

print("fixed domain (-100, 100)")
print("h          error        order")
for row in refinement_table(h_list):
    order = "" if math.isnan(row["order"]) else f"{row['order']:.3f}"
    print(f"{row['h']:<10g} {row['error']:<12.4g} {order}")

print("\nwith domain extrapolation (100, 200, 400)")
print("h          error        order")
for row in richardson_refinement_table(h_list):
    order = "" if math.isnan(row["order"]) else f"{row['order']:.3f}"
    print(f"{row['h']:<10g} {row['error']:<12.4g} {order}")
