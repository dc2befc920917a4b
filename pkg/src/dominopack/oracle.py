"""Exact maximum packings for small shapes by branch and bound.

Candidates are every domino whose kernel fits in the shape's kernel
domain.  Two candidates conflict when the exclusion rule rejects the pair,
so a maximum packing is a maximum independent set in the conflict graph.
The search keeps, per node, a bitmask of still-allowed candidates and a
bitmask of kernel-domain cells not yet covered by any chosen footprint;
since every further domino needs two fresh cells from that pool,
``chosen + free_cells // 2`` is an admissible bound (capped by the number
of allowed candidates).

The root branching is optionally restricted to candidates that are
minimal in their orbit under the shape's eight symmetries: any packing has
a symmetric image whose first candidate (in branch order) is such a
representative, so the optimum is unaffected while the tree shrinks.

Budgets cap nodes and wall time; an exhausted budget downgrades the result
to a certified lower bound (``proven`` false).
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

from .lattice import Shape, DIAMOND, SQUARE, kernel_domain, symmetry_maps
from .dominoes import (
    Configuration,
    Domino,
    HORIZONTAL,
    VERTICAL,
    footprint_cells,
    kernel_cells,
    transform_domino,
)
from .diamonds import build_diamond, diamond_capacity
from .squares import build_square

ENV_BUDGET = "DOMINO_ORACLE_BUDGET"
DEFAULT_MAX_NODES = 10**8
DEFAULT_MAX_SECONDS = 60.0


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS

    @staticmethod
    def default() -> "SearchBudget":
        raw = os.environ.get(ENV_BUDGET)
        if raw:
            return SearchBudget(max_nodes=int(raw))
        return SearchBudget()


@dataclass
class OracleResult:
    shape: Shape
    count: int
    witness: Configuration
    proven: bool
    nodes: int

    def proof_line(self) -> str:
        return (
            f"n={self.shape.n} optimum={self.count} "
            f"proven={str(self.proven).lower()} nodes={self.nodes}"
        )


def enumerate_candidates(shape: Shape) -> list[Domino]:
    """Every legal domino, row-major by anchor, horizontal before vertical."""
    domain = kernel_domain(shape)
    ordered = sorted(domain, key=lambda c: (-c.dy, c.dx))
    out = []
    for cell in ordered:
        east = (cell.dx + 2, cell.dy)
        north = (cell.dx, cell.dy + 2)
        if east in domain:
            out.append(Domino(cell, HORIZONTAL))
        if north in domain:
            out.append(Domino(cell, VERTICAL))
    return out


def _conflicts(a: Domino, b: Domino) -> bool:
    ka = kernel_cells(a)
    kb = kernel_cells(b)
    fa = footprint_cells(a)
    if kb[0] in fa or kb[1] in fa:
        return True
    fb = footprint_cells(b)
    return ka[0] in fb or ka[1] in fb


def _construction_hint(shape: Shape) -> Configuration | None:
    if shape.kind == DIAMOND:
        return build_diamond(shape.n)
    if shape.kind == SQUARE:
        return build_square(shape.n)
    return None


def _canonical_roots(candidates: list[Domino]) -> set[int]:
    """Candidates minimal in their symmetry orbit w.r.t. the branch order."""
    index_of = {d: i for i, d in enumerate(candidates)}
    roots = set()
    maps = symmetry_maps()
    for i, d in enumerate(candidates):
        if i == min(index_of[transform_domino(d, fn)] for fn in maps):
            roots.add(i)
    return roots


class _Search:
    def __init__(self, shape: Shape, budget: SearchBudget, symmetry: bool):
        self.shape = shape
        self.budget = budget
        domain = sorted(kernel_domain(shape), key=lambda c: (-c.dy, c.dx))
        cell_bit = {cell: 1 << k for k, cell in enumerate(domain)}
        self.full_cells = (1 << len(domain)) - 1

        def fp_mask(d: Domino) -> int:
            mask = 0
            for cell in footprint_cells(d):
                mask |= cell_bit.get(cell, 0)
            return mask

        # branch order = bit order: most-constraining (largest footprint) first,
        # so the next branch candidate is always the lowest set bit of `allowed`
        raw = enumerate_candidates(shape)
        ranked = sorted(
            ((-fp_mask(d).bit_count(), k) for k, d in enumerate(raw))
        )
        self.candidates = [raw[k] for _, k in ranked]
        m = len(self.candidates)
        self.fp_masks = [fp_mask(d) for d in self.candidates]
        self.conflict = [1 << i for i in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                if _conflicts(self.candidates[i], self.candidates[j]):
                    self.conflict[i] |= 1 << j
                    self.conflict[j] |= 1 << i
        self.roots = _canonical_roots(self.candidates) if symmetry else set(range(m))
        self.nodes = 0
        self.deadline = time.monotonic() + budget.max_seconds
        self.exhausted = False
        self.best = -1
        self.best_set: list[int] = []

    def seed(self, config: Configuration | None) -> None:
        if config is None:
            return
        index_of = {d: i for i, d in enumerate(self.candidates)}
        picks = [index_of[d] for d in config.dominos]
        if len(picks) > self.best:
            self.best = len(picks)
            self.best_set = picks

    def _tick(self) -> bool:
        self.nodes += 1
        if self.nodes >= self.budget.max_nodes:
            self.exhausted = True
        elif self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            self.exhausted = True
        return self.exhausted

    def _dfs(self, allowed: int, free: int, chosen: list[int]) -> None:
        if self._tick():
            return
        if allowed == 0:
            if len(chosen) > self.best:
                self.best = len(chosen)
                self.best_set = chosen.copy()
            return
        bound = len(chosen) + min(allowed.bit_count(), free.bit_count() // 2)
        if bound <= self.best:
            return
        low = allowed & -allowed
        pick = low.bit_length() - 1
        chosen.append(pick)
        self._dfs(allowed & ~self.conflict[pick], free & ~self.fp_masks[pick], chosen)
        chosen.pop()
        if self.exhausted:
            return
        self._dfs(allowed & ~low, free, chosen)

    def run(self) -> None:
        m = len(self.candidates)
        if m == 0:
            if self.best < 0:
                self.best = 0
                self.best_set = []
            self.nodes = 1
            return
        full = (1 << m) - 1
        # branch on the first chosen candidate, symmetry-restricted at the root
        excluded = 0
        for i in range(m):
            if self.exhausted:
                return
            if i in self.roots:
                allowed = full & ~excluded & ~self.conflict[i]
                free = self.full_cells & ~self.fp_masks[i]
                if self._tick():
                    return
                if 1 + min(allowed.bit_count(), free.bit_count() // 2) > self.best:
                    self._dfs(allowed, free, [i])
            excluded |= 1 << i
        if self.best < 0:
            self.best = 0
            self.best_set = []


def exact_max(
    shape: Shape,
    budget: SearchBudget | None = None,
    symmetry_reduction: bool = True,
    seed_hint: Configuration | None = None,
    use_construction_seed: bool = True,
) -> OracleResult:
    """Provably maximum packing of the shape, within the given budget.

    When the budget runs out the returned count is the best packing found
    (a valid lower bound) and ``proven`` is False.
    """
    budget = budget or SearchBudget.default()
    search = _Search(shape, budget, symmetry_reduction)
    if seed_hint is not None:
        search.seed(seed_hint)
    elif use_construction_seed:
        search.seed(_construction_hint(shape))
    search.run()
    witness = Configuration(
        shape, tuple(search.candidates[i] for i in sorted(search.best_set))
    )
    return OracleResult(
        shape=shape,
        count=search.best,
        witness=witness,
        proven=not search.exhausted,
        nodes=search.nodes,
    )


@dataclass
class SandwichReport:
    n: int
    psi: int
    psi_bar: int
    oracle_count: int
    proven: bool
    nodes: int
    consistent: bool
    notes: list[str] = field(default_factory=list)


def sandwich_check(n: int, budget: SearchBudget | None = None) -> SandwichReport:
    """Pin the true maximum between the constructive and extended capacities."""
    shape = Shape(DIAMOND, n)
    psi = diamond_capacity(n)
    from .bounds import upper_capacity  # local import to avoid a cycle

    bar = upper_capacity(n)
    result = exact_max(shape, budget=budget)
    notes = []
    ok = True
    if result.count < psi:
        ok = False
        notes.append(f"oracle found {result.count} below the construction {psi}")
    if result.proven:
        if result.count > bar:
            ok = False
            notes.append(f"proven maximum {result.count} exceeds the bound {bar}")
        if psi == bar and result.count != psi:
            ok = False
            notes.append(f"bounds coincide at {psi} but the maximum is {result.count}")
    else:
        notes.append("budget exhausted, count is a lower bound only")
        if result.count > bar:
            ok = False
            notes.append(f"witness with {result.count} exceeds the bound {bar}")
    return SandwichReport(
        n=n,
        psi=psi,
        psi_bar=bar,
        oracle_count=result.count,
        proven=result.proven,
        nodes=result.nodes,
        consistent=ok,
        notes=notes,
    )
