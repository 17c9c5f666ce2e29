"""Folding squeezes a cube's content onto its first pair of faces.

The elementary fold in direction i composes a cell between two
connections; iterating them produces a cell all of whose side faces are
first-direction degeneracies, i.e. a globular cell in cubical clothing.
A cell is thin when the full fold is itself a degeneracy: thin cells
behave like identities, and two thin cells with the same shell are equal.
"""

from cubeforge.adc import disk
from cubeforge.core import fold_tail, in_deg_image, is_thin, phi, shell_key
from cubeforge.nerve import NcModel

model = NcModel(disk(2))

A = next(c for c in model.cells(2, 1) if any(model.value(c, "00")))
print("a 2-cell with top chain:", model.value(A, "00"))
folded = phi(model, A, 2)
print("after the full fold:")
for j in (1, 2):
    for a in "-+":
        face = model.face(folded, j, a)
        tag = "degenerate" if in_deg_image(model, face, 1) else "content"
        print(f"  face ({j}, {a}): {tag}")

x = next(c for c in model.cells(1, 1) if any(model.value(c, "0")))
print("\nthinness of the four basic raised cells over an arrow:")
for name, cell in [
    ("eps_1 x", model.deg(x, 1)),
    ("eps_2 x", model.deg(x, 2)),
    ("Gamma_1^- x", model.conn(x, 1, "-")),
    ("Gamma_1^+ x", model.conn(x, 1, "+")),
]:
    print(f"  {name}: thin = {is_thin(model, cell)}")
print(f"  the 2-cell above: thin = {is_thin(model, A)}")

# thin cells with equal shells coincide: the two transport identities give
# two different composites of connections with the same shell
lhs = model.comp(model.conn(x, 1, "+"), model.conn(x, 1, "-"), 1)
rhs = model.deg(x, 2)
print("\ntransport: Gamma+ *_1 Gamma- equals eps_2 on the nose:",
      model.equal(lhs, rhs))
print("same shell key:", shell_key(model, lhs) == shell_key(model, rhs))
