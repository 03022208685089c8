# Printable flat templates of the single developable face.
#
# Each half-cone piece unrolls to a fan; chaining the 2n fans along their
# shared generating segments, fanning alternately left and right, yields the
# exact strip the solid covers while rolling.  Cut along the arcs, crease the
# straight seams, glue edge arcs pairwise.

import os

from polycon import (PolyconSpec, develop_piece, export_template,
                     layout_template, rolling_order, surface_area)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

for n in (2, 3, 4, 5):
    spec = PolyconSpec(n, 40.0)  # radius in millimetres
    patches = [develop_piece(spec, p, 256) for p in rolling_order(spec)]
    template = layout_template(spec, patches)
    svg = os.path.join(OUT, f"template_n{n}.svg")
    csvf = os.path.join(OUT, f"template_n{n}.csv")
    export_template(template, "svg", svg)
    export_template(template, "csv", csvf)
    print(f"n={n}: {len(patches)} patches, template area {template.area:.2f} mm^2 "
          f"(surface {surface_area(spec):.2f} mm^2) -> {svg}")
