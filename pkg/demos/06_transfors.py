"""Transfors: functor-like tables that shift dimension, and their conversion.

A degree-1 lax table between nerves arises from a chain homotopy: the
two chain maps give the images' outer faces, the homotopy fills the
transfor direction.  When the target's cones invert (so every image cell
is plainly invertible), the table is pseudo, and acting cellwise with
the block-swap permutation converts it to the oplax variant and back,
losslessly.
"""

import random

from cubeforge.adc import disk, with_group_cones_above
from cubeforge.nerve import NcModel
from cubeforge.transfor import (
    homotopy_lax_transfor,
    is_pseudo,
    random_homotopy_data,
    to_lax,
    to_oplax,
    validate_transfor,
)

src = NcModel(disk(1))
tgt = NcModel(with_group_cones_above(disk(2), 0))
rng = random.Random(3)

f_minus, f_plus, h = random_homotopy_data(src, tgt, rng)
F = homotopy_lax_transfor(src, tgt, f_minus, f_plus, h, dims=[0, 1], bound=1)
print("entries per dimension:", {n: len(v) for n, v in F.entries.items()})
print("lax equations hold:", validate_transfor(F).ok)
print("pseudo (recursion + direct spot check):",
      is_pseudo(F, direct_samples=2, rng=rng))

G = to_oplax(F)
print("converted table validates as oplax:", validate_transfor(G).ok)
print("converting back is the identity:", to_lax(G).same_table(F))

x = next(c for c in src.cells(0, 1))
print("\nimage of a vertex is a 1-cell of the target:")
FA = F.image(x)
print("  dim:", FA.dim, " top chain:", tgt.value(FA, "0"))
