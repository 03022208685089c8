# No-slip rolling: constant COM height, meandering COM path, phase structure.
#
# The center of mass stays at R*sin(pi/(2n)) for every n; the body-top height
# is constant only for odd n.  The horizontal COM path is a chain of
# congruent circular arcs curving alternately left and right.

import math
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from polycon import PolyconSpec, com_path, simulate_roll

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

fig, axes = plt.subplots(2, 1, figsize=(7, 5), sharex=False)
for n, color in ((3, "tab:blue"), (4, "tab:red")):
    trace = simulate_roll(PolyconSpec(n, 1.0), math.pi / 3600, 2.0)
    comz = trace.com[:, 2]
    print(f"n={n}: COM height {comz[0]:.6f} (spread {np.ptp(comz):.2e}), "
          f"top-height spread {np.ptp(trace.top_height):.2e}, "
          f"{trace.phase_abs.max() + 1} phases")
    axes[0].plot(trace.com[:, 0], trace.com[:, 1], color=color, label=f"n={n}")
    axes[1].plot(trace.alpha, trace.top_height, color=color, label=f"n={n}")

arcs = com_path(simulate_roll(PolyconSpec(3, 1.0), math.pi / 3600, 1.0))
print("n=3 COM arcs: radii", [round(a.radius, 6) for a in arcs],
      "turn signs", [a.turn_sign for a in arcs])

axes[0].set_xlabel("x")
axes[0].set_ylabel("y")
axes[0].set_title("COM path over two revolutions (meander)")
axes[0].axis("equal")
axes[0].legend()
axes[1].set_xlabel("rotation angle (rad)")
axes[1].set_ylabel("body top height")
axes[1].set_title("Top height: constant for odd n, oscillating for even n")
axes[1].legend()
fig.tight_layout()
fig.savefig(os.path.join(OUT, "rolling.png"), dpi=150)
print(f"wrote {OUT}/rolling.png")
