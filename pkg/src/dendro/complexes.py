"""Cell complexes of subtrees.

A complex is generated by finitely many trees sharing an ambient edge
alphabet; its cells are all iterated faces of the generators.  In the
regimes handled here a cell is determined by its edge set, so subcomplexes
are plain sets of frozensets with boolean algebra and face-closure checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .trees import Tree, TreeError, faces, subtree_from_edges

Cell = frozenset


def closure_cells(tree: Tree) -> dict[Cell, Tree]:
    """All iterated faces of a tree (including itself), keyed by edge set."""
    out: dict[Cell, Tree] = {tree.edges: tree}
    frontier = [tree]
    while frontier:
        t = frontier.pop()
        if not t.vertices:
            continue
        for f in faces(t):
            if f.subtree.edges not in out:
                out[f.subtree.edges] = f.subtree
                frontier.append(f.subtree)
    return out


class Complex:
    """The union of the closures of a finite family of generator trees."""

    def __init__(self, generators: Iterable[Tree]):
        self.generators = tuple(generators)
        if not self.generators:
            raise ValueError("a complex needs at least one generator")
        self.cells: dict[Cell, Tree] = {}
        for g in self.generators:
            for es, t in closure_cells(g).items():
                prev = self.cells.get(es)
                if prev is not None and prev != t:
                    raise ValueError(f"generators disagree on cell {sorted(es)}")
            self.cells.update(closure_cells(g))

    def tree_of(self, cell: Cell) -> Tree:
        try:
            return self.cells[frozenset(cell)]
        except KeyError:
            raise KeyError(f"not a cell of the complex: {sorted(cell)}") from None

    def has_cell(self, cell: Iterable[str]) -> bool:
        return frozenset(cell) in self.cells

    def closure(self, cell: Iterable[str]) -> frozenset[Cell]:
        return frozenset(closure_cells(self.tree_of(frozenset(cell))))

    def subcomplex(self, cells: Iterable[Iterable[str]]) -> "Subcomplex":
        return Subcomplex(self, frozenset(frozenset(c) for c in cells))

    def closure_subcomplex(self, cells: Iterable[Iterable[str]]) -> "Subcomplex":
        out: set[Cell] = set()
        for c in cells:
            out |= self.closure(c)
        return Subcomplex(self, frozenset(out))

    def full(self) -> "Subcomplex":
        return Subcomplex(self, frozenset(self.cells))

    def boundary(self, cell: Iterable[str]) -> "Subcomplex":
        t = self.tree_of(frozenset(cell))
        return self.closure_subcomplex([f.subtree.edges for f in faces(t)])

    def horn_subcomplex(self, cell: Iterable[str], omitted_key: tuple[str, str]) -> "Subcomplex":
        t = self.tree_of(frozenset(cell))
        kept = [f.subtree.edges for f in faces(t) if f.key != omitted_key]
        if len(kept) != len(faces(t)) - 1:
            raise TreeError(f"no face {omitted_key} on cell {sorted(t.edges)}")
        return self.closure_subcomplex(kept)


@dataclass(frozen=True)
class Subcomplex:
    ambient: Complex
    cells: frozenset[Cell] = field(default_factory=frozenset)

    def __post_init__(self):
        for c in self.cells:
            if c not in self.ambient.cells:
                raise ValueError(f"not an ambient cell: {sorted(c)}")

    def __contains__(self, cell: Iterable[str]) -> bool:
        return frozenset(cell) in self.cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells, key=lambda c: (len(c), sorted(c))))

    def __len__(self) -> int:
        return len(self.cells)

    def _same_ambient(self, other: "Subcomplex") -> None:
        if self.ambient is not other.ambient:
            raise ValueError("subcomplexes live in different ambient complexes")

    def union(self, other: "Subcomplex") -> "Subcomplex":
        self._same_ambient(other)
        return Subcomplex(self.ambient, self.cells | other.cells)

    def intersection(self, other: "Subcomplex") -> "Subcomplex":
        self._same_ambient(other)
        return Subcomplex(self.ambient, self.cells & other.cells)

    def difference(self, other: "Subcomplex") -> "Subcomplex":
        self._same_ambient(other)
        return Subcomplex(self.ambient, self.cells - other.cells)

    def __le__(self, other: "Subcomplex") -> bool:
        self._same_ambient(other)
        return self.cells <= other.cells

    def with_cells(self, cells: Iterable[Iterable[str]]) -> "Subcomplex":
        extra = self.ambient.closure_subcomplex(cells)
        return self.union(extra)

    def is_face_closed(self) -> bool:
        return not self.face_closure_violations()

    def face_closure_violations(self) -> list[tuple[Cell, Cell]]:
        """Pairs (cell, missing face cell) witnessing failure of closure."""
        bad = []
        for c in self.cells:
            t = self.ambient.cells[c]
            if not t.vertices:
                continue
            for f in faces(t):
                if f.subtree.edges not in self.cells:
                    bad.append((c, f.subtree.edges))
        return sorted(bad, key=lambda p: (sorted(p[0]), sorted(p[1])))

    def is_proper(self) -> bool:
        return self.cells < frozenset(self.ambient.cells)

    def maximal_cells(self) -> list[Cell]:
        covered: set[Cell] = set()
        for c in self.cells:
            t = self.ambient.cells[c]
            if t.vertices:
                covered.update(f.subtree.edges for f in faces(t))
        return sorted((c for c in self.cells if c not in covered),
                      key=lambda c: (len(c), sorted(c)))


def representable(tree: Tree) -> Complex:
    return Complex([tree])
