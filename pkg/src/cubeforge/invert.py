"""Invertibility of cubical cells: reversal, transposition, plain, and
permutation actions.

Three notions are implemented, all relative to a model's inverse oracle
(`CubModel.r_inverse`):

* reversal invertibility in a direction i ("is there B with
  A *_i B and B *_i A degenerate?") — verified generically, searched by
  the model;
* plain invertibility: reversal invertibility in direction 1 of the full
  fold, the dimension-wise condition classifying (omega, p)-models;
* transposition invertibility exchanging directions i and i+1, decided
  through the fold identity "A is transposition-invertible iff the
  i-fold of A is reversal-invertible in direction i".

Every constructor here is fail-closed: it checks the defining equations
of the inverse it built before returning it.  The index arithmetic is
delicate enough that silent corruption must be impossible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .core import (
    ALPHAS,
    Cell,
    CompositionError,
    CubModel,
    NotInvertible,
    OracleUnavailable,
    fold_tail,
    grid2,
    psi,
)
from .indices import DomainError, lower
from .perms import Perm, TWord, eval_word, length, min_rep


@dataclass(frozen=True)
class InverseWitness:
    """A checked inverse: what kind, for which cell, and the inverse itself."""

    kind: tuple
    subject: Cell
    witness: Cell
    checked: bool


# ---------------------------------------------------------------------------
# reversal (R) invertibility


def verify_r_inverse(model: CubModel, A: Cell, B: Cell, k: int) -> bool:
    """Do A and B compose to the two k-degenerate identities?"""
    try:
        left = model.comp(A, B, k)
        right = model.comp(B, A, k)
    except CompositionError:
        raise
    return model.equal(
        left, model.deg(model.face(A, k, "-"), k)
    ) and model.equal(right, model.deg(model.face(A, k, "+"), k))


def r_inverse(model: CubModel, A: Cell, k: int) -> Cell:
    """The model-supplied reversal inverse, re-verified before returning."""
    B = model.r_inverse(A, k)
    if not verify_r_inverse(model, A, B, k):
        raise NotInvertible(f"oracle returned a bad reversal inverse in direction {k}")
    return B


def r_witness(model: CubModel, A: Cell, k: int) -> InverseWitness:
    return InverseWitness(("R", k), A, r_inverse(model, A, k), True)


def is_r_invertible(model: CubModel, A: Cell, k: int) -> bool:
    return model.has_r_inverse(A, k)


def has_r_invertible_shell(model: CubModel, A: Cell, i: int) -> bool:
    """Face-wise reversal invertibility, with the displaced direction i_j."""
    if A.dim < 1:
        raise DomainError("shells need dimension >= 1")
    return all(
        model.has_r_inverse(model.face(A, j, a), lower(i, j))
        for j in range(1, A.dim + 1)
        if j != i
        for a in ALPHAS
    )


# ---------------------------------------------------------------------------
# the closure formulas: inverses of composites of eps/Gamma/comp trees


@dataclass(frozen=True)
class Leaf:
    cell: Cell
    inverses: Mapping[int, Cell] | None = None  # None: defer to the model


@dataclass(frozen=True)
class Comp:
    i: int
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Eps:
    i: int
    sub: "Expr"


@dataclass(frozen=True)
class Conn:
    i: int
    alpha: str
    sub: "Expr"


Expr = Union[Leaf, Comp, Eps, Conn]


def eval_expr(model: CubModel, expr: Expr) -> Cell:
    if isinstance(expr, Leaf):
        return expr.cell
    if isinstance(expr, Comp):
        return model.comp(eval_expr(model, expr.left), eval_expr(model, expr.right), expr.i)
    if isinstance(expr, Eps):
        return model.deg(eval_expr(model, expr.sub), expr.i)
    if isinstance(expr, Conn):
        return model.conn(eval_expr(model, expr.sub), expr.i, expr.alpha)
    raise DomainError(f"not an expression: {expr!r}")


def _leaf_inverse(model: CubModel, leaf: Leaf, k: int) -> Cell:
    if leaf.inverses is not None:
        if k not in leaf.inverses:
            raise DomainError(f"no component inverse supplied for direction {k}")
        return leaf.inverses[k]
    return model.r_inverse(leaf.cell, k)


def _closure(model: CubModel, expr: Expr, k: int) -> Cell:
    """The case analysis: reverse order along k, act componentwise elsewhere."""
    if isinstance(expr, Leaf):
        return _leaf_inverse(model, expr, k)
    if isinstance(expr, Comp):
        if expr.i == k:
            return model.comp(
                _closure(model, expr.right, k), _closure(model, expr.left, k), k
            )
        return model.comp(
            _closure(model, expr.left, k), _closure(model, expr.right, k), expr.i
        )
    if isinstance(expr, Eps):
        if expr.i == k:
            return eval_expr(model, expr)  # a degeneracy is its own inverse
        return model.deg(_closure(model, expr.sub, lower(k, expr.i)), expr.i)
    if isinstance(expr, Conn):
        i, alpha = expr.i, expr.alpha
        if k not in (i, i + 1):
            return model.conn(_closure(model, expr.sub, lower(k, i)), i, alpha)
        inner = eval_expr(model, expr.sub)
        inner_inv = _closure(model, expr.sub, i)
        if k == i:
            if alpha == "-":
                # composed along i (not i+1): the other gluing does not typecheck
                return model.comp(
                    model.deg(inner_inv, i + 1), model.conn(inner, i, "+"), i
                )
            return model.comp(
                model.conn(inner, i, "-"), model.deg(inner_inv, i + 1), i
            )
        if alpha == "-":
            return model.comp(
                model.deg(inner_inv, i), model.conn(inner, i, "+"), i + 1
            )
        return model.comp(
            model.conn(inner, i, "-"), model.deg(inner_inv, i), i + 1
        )
    raise DomainError(f"not an expression: {expr!r}")


def r_inverse_by_closure(model: CubModel, expr: Expr, k: int) -> Cell:
    """Assemble the reversal inverse of a composite from component inverses."""
    value = eval_expr(model, expr)
    candidate = _closure(model, expr, k)
    if not verify_r_inverse(model, value, candidate, k):
        raise NotInvertible(
            f"closure formula produced a bad inverse in direction {k}"
        )
    return candidate


# ---------------------------------------------------------------------------
# plain invertibility


def is_plain_invertible(model: CubModel, A: Cell) -> bool:
    """Reversal invertibility in direction 1 after the full fold."""
    if A.dim < 1:
        raise DomainError("plain invertibility needs dimension >= 1")
    try:
        return model.has_r_inverse(fold_tail(model, A), 1)
    except OracleUnavailable:
        raise
    except NotImplementedError as exc:  # pragma: no cover
        raise OracleUnavailable(str(exc))


def plain_witness(model: CubModel, A: Cell) -> InverseWitness:
    inv = r_inverse(model, fold_tail(model, A), 1)
    return InverseWitness(("plain",), A, inv, True)


# ---------------------------------------------------------------------------
# transposition (T) invertibility


def verify_t_inverse(model: CubModel, A: Cell, B: Cell, i: int) -> bool:
    """The two defining 2D equations of the transposition inverse."""
    for j, a in ((i, "-"), (i, "+"), (i + 1, "-"), (i + 1, "+")):
        other = i + 1 if j == i else i
        if not model.equal(model.face(B, j, a), model.face(A, other, a)):
            return False

    def braid(X: Cell, Y: Cell) -> bool:
        # [[corner+, Y], [X, corner-]] composed (rows *_i, columns *_{i+1})
        lhs = grid2(
            model,
            [
                [model.conn(model.face(Y, i, "-"), i, "+"), Y],
                [X, model.conn(model.face(X, i, "+"), i, "-")],
            ],
            i,
            i + 1,
        )
        rhs = model.comp(
            model.conn(model.face(X, i, "-"), i, "-"),
            model.conn(model.face(X, i + 1, "+"), i, "+"),
            i,
        )
        return model.equal(lhs, rhs)

    return braid(A, B) and braid(B, A)


def t_inverse(model: CubModel, A: Cell, i: int) -> Cell:
    """Build the transposition inverse through the fold.

    The candidate is the three-band composite around the reversal inverse
    of the i-fold: degenerate/connection bands on top and bottom, glued
    along direction i.  The defining equations are checked before the
    cell is returned.
    """
    if not 1 <= i <= A.dim - 1:
        raise DomainError(f"no transposition {i} on a {A.dim}-cell")
    mid = model.r_inverse(psi(model, A, i), i)
    top = model.comp(
        model.deg(model.face(A, i + 1, "-"), i),
        model.conn(model.face(A, i, "+"), i, "+"),
        i + 1,
    )
    bottom = model.comp(
        model.conn(model.face(A, i, "-"), i, "-"),
        model.deg(model.face(A, i + 1, "+"), i),
        i + 1,
    )
    candidate = model.comp(model.comp(top, mid, i), bottom, i)
    if not verify_t_inverse(model, A, candidate, i):
        raise NotInvertible(f"fold route produced a bad transposition inverse at {i}")
    return candidate


def is_t_invertible(model: CubModel, A: Cell, i: int) -> bool:
    """A is transposition-invertible at i iff its i-fold reverses at i."""
    if not 1 <= i <= A.dim - 1:
        return False
    return model.has_r_inverse(psi(model, A, i), i)


def t_witness(model: CubModel, A: Cell, i: int) -> InverseWitness:
    return InverseWitness(("T", i), A, t_inverse(model, A, i), True)


def has_t_invertible_shell(model: CubModel, A: Cell, i: int) -> bool:
    if A.dim < 2:
        raise DomainError("transposition shells need dimension >= 2")
    return all(
        is_t_invertible(model, model.face(A, j, a), lower(i, j))
        for j in range(1, A.dim + 1)
        if j not in (i, i + 1)
        for a in ALPHAS
    )


# ---------------------------------------------------------------------------
# permutation actions


def word_act(model: CubModel, A: Cell, word: TWord) -> Cell:
    """Apply a word of transpositions, rightmost letter first.

    Raises NotInvertible at the first failing letter, reporting the part
    of the word that was still pending.
    """
    for pos in range(len(word.letters) - 1, -1, -1):
        i = word.letters[pos]
        try:
            A = t_inverse(model, A, i)
        except NotInvertible as exc:
            pending = TWord(word.ambient, word.letters[: pos + 1])
            raise NotInvertible(
                f"letter T{i} failed with prefix '{pending}' pending: {exc}"
            )
    return A


def sigma_act(model: CubModel, A: Cell, sigma: Perm, word: TWord | None = None) -> Cell:
    """Act by a permutation through a reduced word (canonical by default).

    Any reduced word gives the same result (the braid and commutation
    moves are compatible with transposition inverses); passing `word`
    makes that independence testable.
    """
    if sigma.n != A.dim:
        raise DomainError(f"permutation of {sigma.n} cannot act on a {A.dim}-cell")
    if word is None:
        word = min_rep(sigma)
    elif eval_word(word) != sigma or len(word) != length(sigma):
        raise DomainError("word is not a reduced representative of the permutation")
    return word_act(model, A, word)


def is_sigma_invertible(model: CubModel, A: Cell, sigma: Perm) -> bool:
    try:
        sigma_act(model, A, sigma)
        return True
    except NotInvertible:
        return False


def sigma_witness(model: CubModel, A: Cell, sigma: Perm) -> InverseWitness:
    return InverseWitness(("sigma", sigma.images), A, sigma_act(model, A, sigma), True)


# ---------------------------------------------------------------------------
# (omega, p) classification


@dataclass
class DimEvidence:
    dim: int
    checked: int
    all_invertible: bool
    witness: object  # payload of a non-invertible cell, if any
    shell_route_agrees: bool
    t_shell_route_agrees: bool


@dataclass
class OmegaPReport:
    """Sample-based evidence for the least p with all higher cells invertible."""

    evidence: list[DimEvidence]
    bound: int
    extra_random: int
    seed: object

    @property
    def p_estimate(self) -> int:
        failing = [e.dim for e in self.evidence if not e.all_invertible]
        if failing:
            return max(failing)
        return min(e.dim for e in self.evidence) - 1 if self.evidence else 0

    @property
    def consistent(self) -> bool:
        return all(e.shell_route_agrees and e.t_shell_route_agrees for e in self.evidence)

    def summary(self) -> str:
        lines = [
            f"sample-based classification (bound {self.bound}, "
            f"{self.extra_random} random cells/dim, seed {self.seed}):"
        ]
        for e in self.evidence:
            status = "all invertible" if e.all_invertible else "non-invertible cell found"
            lines.append(f"  dim {e.dim}: {e.checked} cells, {status}")
            if e.witness is not None:
                lines.append(f"    witness: {e.witness!r}")
        lines.append(f"p-estimate: >= {self.p_estimate} (sample-based)")
        return "\n".join(lines)


def classify_omega_p(
    model: CubModel,
    dims: Sequence[int],
    *,
    bound: int = 1,
    extra_random: int = 0,
    rng=None,
) -> OmegaPReport:
    """Estimate the least p such that all sampled cells above p invert.

    For each dimension the primary condition is plain invertibility of
    every sampled cell (equivalently, of its full fold).  Two cross
    checks run on the same sample: cells with a reversal-invertible
    shell in direction 1 must reverse in direction 1, and (dimension
    >= 2) cells with a transposition-invertible shell at 1 must be
    transposition-invertible at 1.
    """
    evidence = []
    for n in sorted(dims):
        cells = list(model.cells(n, bound))
        if extra_random and rng is not None and hasattr(model, "sample_cells"):
            cells += model.sample_cells(n, extra_random, bound + 1, rng)
        witness = None
        all_inv = True
        shell_ok = True
        t_shell_ok = True
        for A in cells:
            plain = is_plain_invertible(model, A)
            if not plain and witness is None:
                all_inv = False
                witness = A.payload
            if has_r_invertible_shell(model, A, 1):
                if model.has_r_inverse(A, 1) != (plain and True):
                    shell_ok = False
            elif model.has_r_inverse(A, 1):
                shell_ok = False  # invertible cells always have invertible shells
            if n >= 2 and has_t_invertible_shell(model, A, 1):
                if is_t_invertible(model, A, 1) != plain:
                    t_shell_ok = False
        evidence.append(
            DimEvidence(n, len(cells), all_inv, witness, shell_ok, t_shell_ok)
        )
    return OmegaPReport(evidence, bound, extra_random, getattr(rng, "seed_value", None))
