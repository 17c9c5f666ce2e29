"""Executable nerves of augmented directed complexes.

A cubical nerve cell of dimension n over a complex K assigns to every
sign sequence s of length n a K-chain of degree equal to the number of
0-symbols in s, subject to three laws checked eagerly at construction:

* chain map: the K-boundary of the value at s equals the signed sum of
  the values at the faces of s (degrees above the top of K force zero
  values and turn the law into a linear constraint one level down);
* augmentation: every vertex value has augmentation 1;
* positivity: every value lies in the cone of its degree.

Faces, degeneracies and connections act by precomposition with the cube
co-structure maps; compositions split along the composition direction.
The globular nerve is the same story over the disk complexes.

Cells are immutable; payloads are tuples of coefficient tuples aligned
with a fixed ordering of the domain basis (by degree, then lexicographic
in the sequence), so equality and hashing are cheap.  Enumeration is the
only place where infinity appears: every consumer passes an explicit
coefficient bound, and reports restate it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .adc import Adc, Chain, cube, disk, vec_neg
from .core import (
    BudgetExceeded,
    Cell,
    CompositionError,
    CubModel,
    NotInvertible,
    phi,
)

DEBUG_VALIDATE = False


def _box_ranges(flags: Sequence[bool], bound: int) -> list[range]:
    return [
        range(0, bound + 1) if f else range(-bound, bound + 1) for f in flags
    ]


class _ChainSolver:
    """Bounded enumeration of chains with a prescribed boundary, cached."""

    def __init__(self, K: Adc):
        self.K = K
        self._cache: dict[tuple, tuple] = {}

    def vertex_chains(self, bound: int, aug: int = 1) -> tuple:
        key = ("aug", aug, bound)
        if key not in self._cache:
            out = []
            for combo in itertools.product(*_box_ranges(self.K.cone[0], bound)):
                if self.K.aug(combo) == aug:
                    out.append(tuple(combo))
            self._cache[key] = tuple(out)
        return self._cache[key]

    def chains_with_boundary(self, k: int, rhs: tuple, bound: int) -> tuple:
        """All degree-k cone chains v with d(v) = rhs and coefficients <= bound."""
        if k > self.K.top:
            return ((),) if not any(rhs) else ()
        key = (k, rhs, bound)
        if key not in self._cache:
            out = []
            for combo in itertools.product(*_box_ranges(self.K.cone[k], bound)):
                if self.K.d(k, combo) == rhs:
                    out.append(tuple(combo))
            self._cache[key] = tuple(out)
        return self._cache[key]


class _NerveBase(CubModel):
    """Shared machinery: assignment payloads over a graded domain basis."""

    def __init__(self, K: Adc, max_dim: int = 6):
        self.K = K
        self.max_dim = max_dim
        self.solver = _ChainSolver(K)
        self._domains: dict[int, Adc] = {}
        self._elements: dict[int, list[tuple[int, str]]] = {}
        self._index: dict[int, dict[str, int]] = {}
        self._cell_cache: dict[tuple[int, int], list[Cell]] = {}
        self._zeros: dict[int, tuple] = {}

    def domain(self, n: int) -> Adc:
        raise NotImplementedError

    def elements(self, n: int) -> list[tuple[int, str]]:
        """The domain basis of dimension-n cells as (degree, name) pairs."""
        if n not in self._elements:
            dom = self.domain(n)
            flat = [
                (k, name)
                for k in range(dom.top + 1)
                for name in dom.degrees[k]
            ]
            self._elements[n] = flat
            self._index[n] = {name: pos for pos, (k, name) in enumerate(flat)}
        return self._elements[n]

    def pos(self, n: int, name: str) -> int:
        self.elements(n)
        return self._index[n][name]

    def zero_chain(self, k: int) -> tuple:
        if k not in self._zeros:
            self._zeros[k] = (0,) * self.K.rank(k)
        return self._zeros[k]

    def value(self, A: Cell, name: str) -> tuple:
        return A.payload[self.pos(A.dim, name)]

    def make(self, n: int, values: Mapping[str, Sequence[int]],
             validate: bool = True) -> Cell:
        payload = tuple(
            tuple(values[name]) for _, name in self.elements(n)
        )
        cell = Cell(self, n, payload)
        if validate:
            problems = self.invalid_reasons(cell)
            if problems:
                raise ValueError("; ".join(problems))
        return cell

    def invalid_reasons(self, A: Cell) -> list[str]:
        dom = self.domain(A.dim)
        problems = []
        for pos, (k, name) in enumerate(self.elements(A.dim)):
            v = A.payload[pos]
            if len(v) != self.K.rank(k):
                problems.append(f"value at {name} has wrong rank for degree {k}")
                continue
            if not self.K.in_cone(k, v):
                problems.append(f"value at {name} escapes the cone")
            if k == 0:
                if self.K.aug(v) != 1:
                    problems.append(f"augmentation at {name} is not 1")
            else:
                rhs = self._boundary_rhs(A, dom, k, name)
                lhs = self.K.d(k, v) if k <= self.K.top else self.zero_chain(k - 1)
                if lhs != rhs:
                    problems.append(f"chain-map law fails at {name}")
        return problems

    def _boundary_rhs(self, A: Cell, dom: Adc, k: int, name: str) -> tuple:
        col = dom.basis_index(k, name)
        rhs = list(self.zero_chain(k - 1))
        if k - 1 <= self.K.top:
            for row, lowname in enumerate(dom.degrees[k - 1]):
                c = dom.boundary[k - 1][row][col]
                if c:
                    v = self.value(A, lowname)
                    for t in range(len(rhs)):
                        rhs[t] += c * v[t]
        return tuple(rhs)

    def _finish(self, n: int, payload: tuple) -> Cell:
        cell = Cell(self, n, payload)
        if DEBUG_VALIDATE:
            problems = self.invalid_reasons(cell)
            if problems:
                raise AssertionError("; ".join(problems))
        return cell

    # -- enumeration --------------------------------------------------------

    def cells(self, n: int, bound: int, budget: int = 2_000_000) -> list[Cell]:
        key = (n, bound)
        if key not in self._cell_cache:
            self._cell_cache[key] = list(
                self._search(n, bound, budget=budget, rng=None, limit=None)
            )
        return self._cell_cache[key]

    def sample_cells(self, n: int, count: int, bound: int, rng,
                     budget: int = 2_000_000) -> list[Cell]:
        """Seeded random cells: repeated randomized descent with backtracking."""
        out = []
        for _ in range(count):
            found = self._search(n, bound, budget=budget, rng=rng, limit=1)
            if not found:
                break
            out.append(found[0])
        return out

    def _plan(self, n: int) -> tuple[list[int], list[list[tuple[int, int]]]]:
        """Assignment order and boundary supports for the dimension-n search.

        Elements are placed as soon as every basis element in their
        boundary is placed (most-constrained first), which lets the
        search prune long before all vertices are chosen.
        """
        if not hasattr(self, "_plans"):
            self._plans: dict[int, tuple] = {}
        if n in self._plans:
            return self._plans[n]
        dom = self.domain(n)
        flat = self.elements(n)
        offs = [0]
        for k in range(dom.top + 1):
            offs.append(offs[-1] + dom.rank(k))
        supports: list[list[tuple[int, int]]] = []
        for k, name in flat:
            if k == 0:
                supports.append([])
                continue
            col = dom.basis_index(k, name)
            terms = []
            for row in range(dom.rank(k - 1)):
                c = dom.boundary[k - 1][row][col]
                if c:
                    terms.append((c, offs[k - 1] + row))
            supports.append(terms)
        placed: set[int] = set()
        order: list[int] = []
        by_pref = sorted(range(len(flat)), key=lambda p: (-flat[p][0], p))
        while len(order) < len(flat):
            for p in by_pref:
                if p not in placed and all(q in placed for _, q in supports[p]):
                    order.append(p)
                    placed.add(p)
                    break
        self._plans[n] = (order, supports)
        return self._plans[n]

    def _search(self, n: int, bound: int, budget: int, rng, limit) -> list[Cell]:
        flat = self.elements(n)
        order, supports = self._plan(n)
        nodes = 0
        out: list[Cell] = []
        values: list[tuple | None] = [None] * len(flat)
        ranks = [self.K.rank(flat[p][0] - 1) if flat[p][0] >= 1 else 0
                 for p in range(len(flat))]

        def candidates(pos: int) -> Sequence[tuple]:
            k, _ = flat[pos]
            if k == 0:
                cands = self.solver.vertex_chains(bound)
            else:
                rhs = [0] * ranks[pos]
                for c, q in supports[pos]:
                    v = values[q]
                    for t in range(len(rhs)):
                        rhs[t] += c * v[t]
                cands = self.solver.chains_with_boundary(k, tuple(rhs), bound)
            if rng is not None and len(cands) > 1:
                cands = list(cands)
                rng.shuffle(cands)
            return cands

        def descend(step: int) -> bool:
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"enumeration exceeded {budget} nodes")
            if step == len(order):
                out.append(self._finish(n, tuple(values)))
                return limit is not None and len(out) >= limit
            pos = order[step]
            for v in candidates(pos):
                values[pos] = v
                if descend(step + 1):
                    return True
            values[pos] = None
            return False

        descend(0)
        return out


# ---------------------------------------------------------------------------
# the cubical nerve


def _insert(s: str, i: int, sym: str) -> str:
    return s[: i - 1] + sym + s[i - 1:]


def _flip(s: str, i: int) -> str:
    sym = {"-": "+", "+": "-"}[s[i - 1]]
    return s[: i - 1] + sym + s[i:]


class NcModel(_NerveBase):
    """The cubical nerve of an augmented directed complex."""

    def __init__(self, K: Adc, max_dim: int = 6):
        super().__init__(K, max_dim)
        self._tables: dict[tuple, list] = {}

    def __repr__(self) -> str:
        return f"NcModel({self.K.name or 'K'})"

    def domain(self, n: int) -> Adc:
        if n not in self._domains:
            self._domains[n] = cube(n, self.K.d_convention)
        return self._domains[n]

    # -- operation tables -----------------------------------------------------

    def _table(self, kind: str, n: int, i: int, alpha: str = "") -> list:
        key = (kind, n, i, alpha)
        if key in self._tables:
            return self._tables[key]
        tab: list = []
        # deg/conn entries are either a source position (int) or the
        # pre-built zero chain of the killed position's degree
        if kind == "face":  # cells n -> n-1; positions over length-(n-1) seqs
            for k, u in self.elements(n - 1):
                tab.append(self.pos(n, _insert(u, i, alpha)))
        elif kind == "deg":  # cells n -> n+1
            for k, s in self.elements(n + 1):
                if s[i - 1] == "0":
                    tab.append(self.zero_chain(k))
                else:
                    tab.append(self.pos(n, s[: i - 1] + s[i:]))
        elif kind == "conn":  # cells n -> n+1, collapsing slots i, i+1
            from .adc import conn_collapse

            for k, s in self.elements(n + 1):
                sym = conn_collapse(s[i - 1: i + 1], alpha)
                if sym is None:
                    tab.append(self.zero_chain(k))
                else:
                    tab.append(self.pos(n, s[: i - 1] + sym + s[i + 1:]))
        elif kind == "comp":
            for k, s in self.elements(n):
                tab.append(s[i - 1])
        elif kind == "swap":  # transpose slots i, i+1
            for k, s in self.elements(n):
                t = s[: i - 1] + s[i] + s[i - 1] + s[i + 1:]
                tab.append(self.pos(n, t))
        self._tables[key] = tab
        return tab

    # -- the cubical operations ------------------------------------------------

    def face(self, A: Cell, i: int, alpha: str) -> Cell:
        if not (1 <= i <= A.dim and alpha in "-+"):
            raise ValueError(f"no face (i={i}, alpha={alpha}) on a {A.dim}-cell")
        tab = self._table("face", A.dim, i, alpha)
        return self._finish(A.dim - 1, tuple(A.payload[p] for p in tab))

    def deg(self, A: Cell, i: int) -> Cell:
        if not 1 <= i <= A.dim + 1:
            raise ValueError(f"no degeneracy slot {i} on a {A.dim}-cell")
        if A.dim + 1 > self.max_dim:
            raise ValueError("degeneracy exceeds the model dimension bound")
        tab = self._table("deg", A.dim, i)
        payload = A.payload
        return self._finish(
            A.dim + 1,
            tuple(payload[e] if type(e) is int else e for e in tab),
        )

    def conn(self, A: Cell, i: int, alpha: str) -> Cell:
        if not (1 <= i <= A.dim and alpha in "-+"):
            raise ValueError(f"no connection (i={i}, alpha={alpha}) on a {A.dim}-cell")
        if A.dim + 1 > self.max_dim:
            raise ValueError("connection exceeds the model dimension bound")
        tab = self._table("conn", A.dim, i, alpha)
        payload = A.payload
        return self._finish(
            A.dim + 1,
            tuple(payload[e] if type(e) is int else e for e in tab),
        )

    def comp(self, A: Cell, B: Cell, i: int) -> Cell:
        if A.dim != B.dim or not 1 <= i <= A.dim:
            raise ValueError("bad composition request")
        self.check_composable(A, B, i)
        tags = self._table("comp", A.dim, i)
        payload = []
        for pos, tag in enumerate(tags):
            if tag == "0":
                payload.append(
                    tuple(a + b for a, b in zip(A.payload[pos], B.payload[pos]))
                )
            elif tag == "-":
                payload.append(A.payload[pos])
            else:
                payload.append(B.payload[pos])
        return self._finish(A.dim, tuple(payload))

    # -- closed-form inverses ---------------------------------------------------

    def r_inverse(self, A: Cell, i: int) -> Cell:
        """The reversal inverse in direction i, when every slab chain flips."""
        if not 1 <= i <= A.dim:
            raise NotInvertible(f"no direction {i} on a {A.dim}-cell")
        payload = []
        for pos, (k, s) in enumerate(self.elements(A.dim)):
            if s[i - 1] == "0":
                neg = vec_neg(A.payload[pos])
                if not self.K.in_cone(k, neg):
                    raise NotInvertible(
                        f"value at {s} is not invertible in the cone"
                    )
                payload.append(neg)
            else:
                payload.append(A.payload[self.pos(A.dim, _flip(s, i))])
        return self._finish(A.dim, tuple(payload))

    def t_inverse(self, A: Cell, i: int) -> Cell:
        """The transposition inverse exchanging directions i and i+1."""
        if not 1 <= i <= A.dim - 1:
            raise NotInvertible(f"no transposition {i} on a {A.dim}-cell")
        swap = self._table("swap", A.dim, i)
        payload = []
        for pos, (k, s) in enumerate(self.elements(A.dim)):
            if s[i - 1] == "0" and s[i] == "0":
                neg = vec_neg(A.payload[pos])
                if not self.K.in_cone(k, neg):
                    raise NotInvertible(
                        f"value at {s} is not invertible in the cone"
                    )
                payload.append(neg)
            else:
                payload.append(A.payload[swap[pos]])
        return self._finish(A.dim, tuple(payload))

    def content(self, A: Cell) -> Chain:
        """The top value: the chain assigned to the all-0 sequence."""
        return Chain(A.dim, self.value(A, "0" * A.dim))


# ---------------------------------------------------------------------------
# the globular nerve


class NgModel(_NerveBase):
    """The globular nerve of a complex: cells over the disk complexes.

    This is not a cubical model; it exposes the globular operations
    directly (src, tgt, identity, comp over any level, inverse).
    """

    def __init__(self, K: Adc, max_dim: int = 6):
        super().__init__(K, max_dim)

    def __repr__(self) -> str:
        return f"NgModel({self.K.name or 'K'})"

    def domain(self, n: int) -> Adc:
        if n not in self._domains:
            self._domains[n] = disk(n, self.K.d_convention)
        return self._domains[n]

    # payload order for dimension n: s0, t0, s1, t1, ..., s_{n-1}, t_{n-1}, x

    def src(self, A: Cell) -> Cell:
        if A.dim == 0:
            raise ValueError("0-cells have no source")
        payload = A.payload[: 2 * (A.dim - 1)] + (A.payload[2 * (A.dim - 1)],)
        return self._finish(A.dim - 1, payload)

    def tgt(self, A: Cell) -> Cell:
        if A.dim == 0:
            raise ValueError("0-cells have no target")
        payload = A.payload[: 2 * (A.dim - 1)] + (A.payload[2 * (A.dim - 1) + 1],)
        return self._finish(A.dim - 1, payload)

    def identity(self, A: Cell) -> Cell:
        top = A.payload[-1]
        payload = A.payload[:-1] + (top, top, self.zero_chain(A.dim + 1))
        return self._finish(A.dim + 1, payload)

    def comp(self, A: Cell, B: Cell, k: int) -> Cell:
        """The composite over a shared k-dimensional boundary."""
        n = A.dim
        if B.dim != n or not 0 <= k < n:
            raise ValueError("bad globular composition request")
        for j in range(k):
            if (A.payload[2 * j] != B.payload[2 * j]
                    or A.payload[2 * j + 1] != B.payload[2 * j + 1]):
                raise CompositionError(f"towers differ below level {k}")
        if A.payload[2 * k + 1] != B.payload[2 * k]:
            raise CompositionError(f"target/source mismatch at level {k}")
        payload = list(A.payload)
        payload[2 * k + 1] = B.payload[2 * k + 1]
        for j in range(k + 1, n):
            payload[2 * j] = tuple(
                a + b for a, b in zip(A.payload[2 * j], B.payload[2 * j])
            )
            payload[2 * j + 1] = tuple(
                a + b for a, b in zip(A.payload[2 * j + 1], B.payload[2 * j + 1])
            )
        payload[-1] = tuple(a + b for a, b in zip(A.payload[-1], B.payload[-1]))
        return self._finish(n, tuple(payload))

    def inverse(self, A: Cell) -> Cell:
        """The two-sided inverse for the top composition, when it exists."""
        n = A.dim
        if n == 0:
            raise NotInvertible("0-cells are not composable")
        top = A.payload[-1]
        neg = vec_neg(top)
        if not self.K.in_cone(n, neg):
            raise NotInvertible("top chain is not invertible in the cone")
        payload = list(A.payload)
        payload[-1] = neg
        payload[2 * (n - 1)], payload[2 * n - 1] = (
            A.payload[2 * n - 1],
            A.payload[2 * (n - 1)],
        )
        B = self._finish(n, tuple(payload))
        left = self.comp(A, B, n - 1)
        right = self.comp(B, A, n - 1)
        if left != self.identity(self.src(A)) or right != self.identity(self.tgt(A)):
            raise NotInvertible("inverse candidate fails the defining equations")
        return B


# ---------------------------------------------------------------------------
# comparison of the globular view with the globular nerve


# ---------------------------------------------------------------------------
# serialization


def cell_to_json(model: _NerveBase, A: Cell) -> dict:
    """Serialize a nerve cell: named assignment plus the complex and flag."""
    from .adc import to_json_dict

    return {
        "kind": "cubical" if isinstance(model, NcModel) else "globular",
        "dim": A.dim,
        "assignment": {
            name: list(A.payload[pos])
            for pos, (_, name) in enumerate(model.elements(A.dim))
        },
        "adc": to_json_dict(model.K),
        "d_convention": model.K.d_convention,
    }


def cell_from_json(model: _NerveBase, data: dict) -> Cell:
    expected = "cubical" if isinstance(model, NcModel) else "globular"
    if data.get("kind", expected) != expected:
        raise ValueError(f"cell kind {data.get('kind')!r} does not fit the model")
    dim = int(data["dim"])
    values = {name: tuple(v) for name, v in data["assignment"].items()}
    return model.make(dim, values)


@dataclass
class MatchReport:
    adc_name: str
    dim: int
    bound: int
    cubical_cells: int
    globularized: int
    globular_cells: int
    unmatched_cubical: int
    unmatched_globular: int

    @property
    def ok(self) -> bool:
        return self.unmatched_cubical == 0 and self.unmatched_globular == 0

    def __str__(self) -> str:
        status = "OK" if self.ok else "MISMATCH"
        return (
            f"{status} {self.adc_name} dim {self.dim} bound {self.bound}: "
            f"{self.cubical_cells} cubical cells -> {self.globularized} globularized, "
            f"{self.globular_cells} globular cells, "
            f"unmatched {self.unmatched_cubical}/{self.unmatched_globular}"
        )


def globular_signature(model: NcModel, A: Cell) -> tuple:
    """The source/target tower and top chain of a globularized cell."""
    sig = []
    X = A
    tower = []
    while X.dim > 0:
        t_chain = model.value(model.face(X, 1, "+"), "0" * (X.dim - 1))
        X = model.face(X, 1, "-")
        s_chain = model.value(X, "0" * X.dim)
        tower.append((s_chain, t_chain))
    for s_chain, t_chain in reversed(tower):
        sig.append(s_chain)
        sig.append(t_chain)
    sig.append(model.value(A, "0" * A.dim))
    return tuple(sig)


def gamma_vs_ng(K: Adc, n: int, bound: int, budget: int = 2_000_000) -> MatchReport:
    """Match globularized cubical nerve cells against globular nerve cells.

    Both sides are enumerated independently under the same coefficient
    bound; matching is by the full source/target tower plus top chain.
    """
    from collections import Counter

    nc = NcModel(K)
    ng = NgModel(K)
    raw = nc.cells(n, bound, budget)
    images: dict[tuple, Cell] = {}
    for A in raw:
        g = phi(nc, A, n)
        images.setdefault(g.payload, g)
    nc_sigs = Counter(globular_signature(nc, g) for g in images.values())
    ng_sigs = Counter(B.payload for B in ng.cells(n, bound, budget))
    unmatched_nc = sum((nc_sigs - ng_sigs).values())
    unmatched_ng = sum((ng_sigs - nc_sigs).values())
    return MatchReport(
        adc_name=K.name or "K",
        dim=n,
        bound=bound,
        cubical_cells=len(raw),
        globularized=len(images),
        globular_cells=sum(ng_sigs.values()),
        unmatched_cubical=unmatched_nc,
        unmatched_globular=unmatched_ng,
    )
