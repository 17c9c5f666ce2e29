"""Words over adjacent transpositions and their boundary calculus.

Deleting the i-th strand from a braid-like diagram of transpositions
gives the boundary of a word; on permutations the same operation is
characterised by a single re-indexing identity.  Reduced words are
canonicalised greedily by smallest descent, and any two reduced words of
the same permutation are connected by braid/commutation moves alone.
"""

from cubeforge.perms import (
    BCWord,
    Perm,
    TWord,
    boundary_perm,
    boundary_word,
    eval_bc_word,
    eval_word,
    length,
    min_rep,
    parse_word,
    rho,
)

w = parse_word("T1 T2")
print("word:", w, "evaluates to", eval_word(w).images)
for i in (1, 2, 3):
    print(f"  boundary in direction {i}:", str(boundary_word(w, i)) or "1")

longest = Perm((4, 3, 2, 1))
print("\nlongest element of S4:", longest.images)
print("  length:", length(longest))
print("  canonical reduced word:", min_rep(longest))

print("\nblock swaps:")
for n, m in ((2, 1), (1, 2), (2, 2)):
    p = rho(n, m)
    print(f"  rho({n},{m}) = {p.images}, undone by rho({m},{n}):",
          p.then(rho(m, n)).is_identity())
print("  boundary of rho(2,1) in direction 3:", boundary_perm(rho(2, 1), 3).images)

print("\nhyperoctahedral evaluation (signed permutations):")
for text in ("R1 R1", "T1 R1", "R2 T1"):
    s = eval_bc_word(parse_word(text, ambient=2))
    print(f"  {text}: images {s.images}")
