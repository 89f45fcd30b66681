"""A density seeded in one well of a bistable drift splits into two peaks.

Drift f(x) = x - x**3 pushes mass toward the stable points at +-1; jumps
carry mass over the barrier at 0. Starting from a Gaussian centered in
the left well, the density develops a second peak at +1 and approaches
a bimodal steady shape.
"""

import numpy as np

from levyfp import (
    DriftField,
    GaussianNormalized,
    LevyParams,
    Natural,
    StepControl,
    build_grid,
    evolve,
    prepare,
    sample_initial,
    select_dt_composite,
)

grid = build_grid(Natural(4.0), 0.02)
drift = DriftField.double_well(grid)


def peaks(values):
    idx = [
        i
        for i in range(1, values.size - 1)
        if values[i] > values[i - 1] and values[i] > values[i + 1]
    ]
    return [(float(grid.nodes[i]), float(values[i])) for i in idx]


for alpha in (0.5, 1.5):
    params = LevyParams.create(alpha=alpha, eps=1.0, d=0.1)
    ws = prepare(params, grid, drift)
    P = sample_initial(GaussianNormalized(variance=0.2, center=-1.0), grid)
    dt = select_dt_composite(params, grid, drift)
    print(f"alpha={alpha}")
    outs = []
    evolve(P, ws, StepControl(dt), 5.0, observe_times=[1.0, 2.5, 5.0], observer=outs.append)
    for Q in outs:
        tops = ", ".join(f"x={x:+.2f} (p={v:.3f})" for x, v in peaks(Q.values))
        print(f"  t={Q.time:<4g} peaks: {tops}")
