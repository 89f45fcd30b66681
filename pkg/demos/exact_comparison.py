"""Solve the driftless alpha=1 density and compare with the closed form.

The unit-intensity pure-jump case started from a point mass has the
exact density t / (pi (t**2 + x**2)). We seed with that profile at
t=0.01, march to t=0.1, and print the error at every output time.
"""

import numpy as np

from levyfp import cauchy_exact, cauchy_run, error_report, mass_integral

snapshots = []
final = cauchy_run(
    L=50.0,
    h=0.005,
    t_end=0.1,
    observe_times=[0.02, 0.05, 0.1],
    observer=snapshots.append,
)

print("t        max|err|     rel l2       mass")
for P in snapshots:
    rep = error_report(P, cauchy_exact)
    print(f"{P.time:<8g} {rep.max_abs:<12.4g} {rep.rel_l2:<12.4g} {mass_integral(P):.6f}")

x = final.grid.nodes
mid = np.abs(x) <= 2.0
print("\npeak value at t=0.1:", final.values[final.grid.J])
print("exact peak:          ", float(cauchy_exact(0.0, 0.1)))
print("nodes within |x|<=2: ", int(np.count_nonzero(mid)))
