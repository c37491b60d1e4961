"""Entropy, purity, and concurrence along time, and how parameters move them.

Stronger coupling and wider disorder both speed up the loss of quantum
correlations; the distribution mean delta_o drops out of all three measures
entirely.  The first decoherence maximum lines up with the first purity
minimum.
"""

import numpy as np

from qcdyn import (
    CouplingModel,
    StaticNoiseParams,
    SystemParams,
    TimeGrid,
    sweep,
    time_series,
)
from qcdyn.svgchart import line_chart, save_chart

from _common import output_dir

out = output_dir()
print("Measure dynamics")
print("=" * 50)

params = SystemParams(lam=0.5, r=1.0)
noise = StaticNoiseParams(delta_m=1.0, delta_o=1.0)
grid = TimeGrid(0.0, 8.0, 401)

for model in CouplingModel:
    series = time_series(model, params, noise, grid)
    chart = line_chart(
        [
            ("decoherence", grid.times(), series.decoherence),
            ("purity", grid.times(), series.purity),
            ("concurrence", grid.times(), series.concurrence),
        ],
        title=f"measures, {model.value}",
        x_label="t",
        y_label="measure",
    )
    path = out / f"03_measures_{model.value}.svg"
    save_chart(path, chart)
    print(f"{model.value}: final (D, P, C) = "
          f"({series.decoherence[-1]:.4f}, {series.purity[-1]:.4f}, {series.concurrence[-1]:.4f})"
          f" -> {path.name}")

# extrema anti-correlation
series = time_series(CouplingModel.COMMON, params, noise, grid)
ts = grid.times()
d_max = int(np.argmax(series.decoherence[:250]))
p_min = int(np.argmin(series.purity[:250]))
print(f"\nfirst decoherence maximum at t = {ts[d_max]:.2f}, "
      f"first purity minimum at t = {ts[p_min]:.2f}")

# coupling sweep: decay onset moves earlier as lam grows
print("\ncoupling sweep (shared model):")
for lam, series in zip((0.2, 0.5, 0.8), sweep("lambda", (0.2, 0.5, 0.8), CouplingModel.COMMON, params, noise, grid)):
    below = ts[series.concurrence < 0.5]
    onset = below[0] if below.size else np.nan
    print(f"  lam = {lam}: concurrence first below 0.5 near t = {onset:.2f}")

print("\ndisorder-width sweep (shared model):")
for dm, series in zip((1.0, 2.0, 3.0), sweep("delta_m", (1.0, 2.0, 3.0), CouplingModel.COMMON, params, noise, grid)):
    below = ts[series.concurrence < 0.5]
    onset = below[0] if below.size else np.nan
    print(f"  delta_m = {dm}: concurrence first below 0.5 near t = {onset:.2f}")

# delta_o moves matrix elements but none of the measures
a = time_series(CouplingModel.COMMON, params, StaticNoiseParams(1.0, 0.3), TimeGrid(0.0, 4.0, 41))
b = time_series(CouplingModel.COMMON, params, StaticNoiseParams(1.0, 2.0), TimeGrid(0.0, 4.0, 41))
gap = np.abs(a.decoherence - b.decoherence).max()
print(f"\nmax decoherence difference between delta_o = 0.3 and 2.0: {gap:.2e}")
