# Uniform antiprisms inscribed in the polycons.
#
# Cutting a polycon with two planes normal to its long axis meets the 2n
# conic edges in two twisted regular n-gons; the right cut height makes the
# connecting triangles equilateral.  n=2 hides a regular tetrahedron inside
# the sphericon, n=3 a regular octahedron inside the hexacon.

import os

from polycon import (PolyconSpec, antiprism_mesh, export_mesh,
                     inscribe_antiprism, integrate_mesh, volume)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

print(f"{'n':>3} {'side a':>12} {'circumradius b':>15} {'height h':>12} "
      f"{'antiprism vol':>14} {'polycon vol':>12}")
for n in range(2, 9):
    spec = PolyconSpec(n, 1.0)
    solid = inscribe_antiprism(spec)
    mesh = antiprism_mesh(solid)
    vol, _ = integrate_mesh(mesh)
    print(f"{n:>3} {solid.a:>12.8f} {solid.b:>15.8f} {solid.h:>12.8f} "
          f"{vol:>14.8f} {volume(spec):>12.8f}")
    if n in (2, 3):
        path = os.path.join(OUT, f"antiprism_n{n}.obj")
        export_mesh(mesh, "obj", path)
        print(f"    wrote {path}")
