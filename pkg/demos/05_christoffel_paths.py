"""
Christoffel words as lattice paths
==================================

Reading 0 as a step right and 1 as a step up, c_7 = 0010010100101 is the
closest lattice path below the segment from (0,0) to (8,5) and its reversal
the closest one above. Writes c7_lower.svg and c7_upper.svg next to this
script.
"""

from pathlib import Path

from fibwords.plot import plot_christoffel
from fibwords.words import christoffel_path

here = Path(__file__).parent
for kind in ("lower", "upper"):
    path = christoffel_path(7, kind)
    print(kind, path.word(), "ends at", path.end)
    print(plot_christoffel(7, kind, "ascii"))
    out = here / f"c7_{kind}.svg"
    out.write_text(plot_christoffel(7, kind, "svg"))
    print("wrote", out.name)
