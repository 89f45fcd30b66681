"""Density decay on an absorbing interval.

On (-1, 1) with the density pinned to zero outside, every jump that
leaves the interval kills its path, so the total mass decays. The
exterior-decay coefficient E_j makes that loss explicit in the
operator. We start from a uniform profile and watch the mass drain,
then sweep the stability index to see heavier tails die faster.
"""

import numpy as np

from levyfp import (
    Absorbing,
    DriftField,
    LevyParams,
    StepControl,
    Uniform,
    build_grid,
    evolve,
    mass_integral,
    prepare,
    sample_initial,
    select_dt_composite,
)

grid = build_grid(Absorbing(-1.0, 1.0), 0.005)
drift = DriftField.zero(grid)

params = LevyParams.create(alpha=1.0, eps=1.0, d=0.0)
ws = prepare(params, grid, drift)
P = sample_initial(Uniform(), grid)
dt = select_dt_composite(params, grid, drift)

print("alpha=1, uniform seed")
print("t      mass       center value")
snapshots = []
evolve(P, ws, StepControl(dt), 2.5, observe_times=[0.05, 0.2, 0.5, 2.5], observer=snapshots.append)
for Q in snapshots:
    print(f"{Q.time:<6g} {mass_integral(Q):<10.6f} {Q.values[grid.J]:.6f}")

print("\nmass left at t=0.25 per stability index")
for alpha in (0.1, 0.5, 1.0, 1.5, 1.9):
    params = LevyParams.create(alpha=alpha, eps=1.0, d=0.0)
    ws = prepare(params, grid, drift)
    P = sample_initial(Uniform(), grid)
    Q = evolve(P, ws, StepControl(select_dt_composite(params, grid, drift)), 0.25)
    print(f"alpha={alpha:<4g} mass={mass_integral(Q):.6f}")
