"""Build the basic complexes, take nerves, and let the axiom checker loose.

The cubical nerve of a complex K has, as n-cells, assignments of K-chains
to the sign sequences of length n (one chain per sequence, of degree equal
to its number of 0 symbols).  The face/degeneracy/connection operators act
by re-indexing sequences and the compositions split along a direction, so
every equation of the cubical-set and composition axioms can be checked by
brute force on enumerated samples.
"""

from cubeforge.adc import cube, disk, validate
from cubeforge.core import check_axioms
from cubeforge.nerve import NcModel

for K in (disk(1), disk(2), cube(1)):
    print(f"== {K.name} ==")
    print("complex valid:", validate(K).ok)
    model = NcModel(K)
    for n in range(3):
        cells = model.cells(n, 1)
        print(f"  {n}-cells with coefficients <= 1: {len(cells)}")
    report = check_axioms(model, 2, {n: model.cells(n, 1) for n in range(3)})
    print("  axiom families checked:", len(report.checked))
    print("  equation instances:", sum(report.checked.values()))
    print("  violations:", len(report.violations))
    print()

# What a 1-cell of the nerve of the walking arrow looks like: the
# assignment records both endpoints and the connecting chain.
model = NcModel(disk(1))
for cell in model.cells(1, 1):
    named = {name: model.value(cell, name) for _, name in model.elements(1)}
    print("1-cell:", named)
