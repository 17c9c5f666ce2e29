"""The three invertibility notions, their closed formulas, and the fold route.

Over a complex whose positive-degree cones are full groups, every nerve
cell inverts: the reversal inverse negates the chains sitting across the
chosen direction and flips the rest; the transposition inverse swaps two
directions.  Both closed formulas are re-derivable inside the category:
the transposition inverse is a three-band composite around the reversal
inverse of a fold, and inverses of composites/degeneracies/connections
follow closure formulas that this demo evaluates both ways.
"""

import random

from cubeforge.adc import disk, with_group_cones_above
from cubeforge.invert import (
    Comp,
    Leaf,
    is_plain_invertible,
    r_inverse_by_closure,
    t_inverse,
    verify_r_inverse,
)
from cubeforge.nerve import NcModel

groupy = NcModel(with_group_cones_above(disk(2), 0))
rng = random.Random(1)
cells = groupy.sample_cells(2, 6, 1, rng)

A = cells[0]
print("cell top:", groupy.value(A, "00"))
B = groupy.r_inverse(A, 1)
print("reversal inverse top:", groupy.value(B, "00"))
print("defining equations hold:", verify_r_inverse(groupy, A, B, 1))

T_closed = groupy.t_inverse(A, 1)
T_fold = t_inverse(groupy, A, 1)
print("transposition inverse: closed formula == fold route:",
      groupy.equal(T_closed, T_fold))

# a composable pair, inverted via the closure formula (order reverses)
by_face = {}
for C in cells:
    by_face.setdefault(groupy.face(C, 1, "-").payload, []).append(C)
for A in cells:
    partners = by_face.get(groupy.face(A, 1, "+").payload, [])
    if partners:
        C = partners[0]
        got = r_inverse_by_closure(groupy, Comp(1, Leaf(A), Leaf(C)), 1)
        expect = groupy.comp(groupy.r_inverse(C, 1), groupy.r_inverse(A, 1), 1)
        print("closure of a composite matches R(C) *_1 R(A):",
              groupy.equal(got, expect))
        break

# positive cones refuse: over the printed disk the basis 2-cell is stuck
plain = NcModel(disk(2))
stuck = next(c for c in plain.cells(2, 1) if any(plain.value(c, "00")))
print("\nplain disk(2): basis 2-cell plainly invertible?",
      is_plain_invertible(plain, stuck))
print("degenerate 2-cell plainly invertible?",
      is_plain_invertible(plain, plain.deg(plain.cells(1, 1)[0], 1)))
