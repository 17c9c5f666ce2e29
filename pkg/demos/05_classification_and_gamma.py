"""Classification by invertible dimensions, and the globular comparison.

A complex whose cones above degree p are full groups yields a nerve
where every cell above dimension p inverts; the classifier estimates the
least such p from bounded samples and attaches a witness when a
dimension fails.  Independently, globularizing the cubical nerve matches
the globular nerve cell-for-cell: both sides are enumerated under the
same coefficient bound and paired by their source/target towers.
"""

import random

from cubeforge.adc import disk, with_group_cones_above
from cubeforge.invert import classify_omega_p
from cubeforge.nerve import NcModel, gamma_vs_ng

for K in (disk(2), with_group_cones_above(disk(2), 1),
          with_group_cones_above(disk(2), 0)):
    model = NcModel(K)
    report = classify_omega_p(model, [1, 2], bound=1,
                              extra_random=20, rng=random.Random(0))
    print(f"== {K.name} ==")
    print(report.summary())
    print()

print("globular comparison (zero unmatched on both sides means the")
print("globularized cubical cells and the globular nerve agree):")
for K, n in ((disk(1), 1), (disk(2), 1), (disk(2), 2)):
    print(" ", gamma_vs_ng(K, n, 1))
