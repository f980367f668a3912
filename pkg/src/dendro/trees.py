"""Finite rooted trees with named edges: faces, horns, grafting, canonical forms.

Edges point towards the root: every vertex has an ordered tuple of input
edges (above it) and a single output edge (below it).  The tree eta has a
single edge and no vertices.  Input order is presentation-only; equality and
isomorphism quotient by reordering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


class TreeError(ValueError):
    """Raised for malformed trees or invalid tree operations."""


@dataclass(frozen=True)
class Vertex:
    inputs: tuple[str, ...]
    output: str

    @property
    def arity(self) -> int:
        return len(self.inputs)


class Tree:
    """A finite rooted tree with pairwise distinct edge names."""

    __slots__ = ("vertices", "root", "_above", "_below", "_edges", "_key",
                 "_norm", "_hash", "_vertex_outs")

    def __init__(self, vertices: Iterable[Vertex], root: str):
        vertices = tuple(vertices)
        above: dict[str, Vertex] = {}   # edge -> vertex whose output it is
        below: dict[str, Vertex] = {}   # edge -> vertex having it as input
        edges = {root}
        for v in vertices:
            if v.output in above:
                raise TreeError(f"edge {v.output!r} is the output of two vertices")
            above[v.output] = v
            edges.add(v.output)
            for e in v.inputs:
                if e in below:
                    raise TreeError(f"edge {e!r} is the input of two vertices")
                below[e] = v
                edges.add(e)
            if len(set(v.inputs)) != len(v.inputs):
                raise TreeError(f"vertex at {v.output!r} repeats an input edge")
        if root in below:
            raise TreeError(f"root {root!r} is the input of a vertex")
        for e in edges:
            if e != root and e not in below:
                raise TreeError(f"edge {e!r} is attached to no vertex below and is not the root")
        # connectivity: walk upward from the root
        seen: set[str] = set()
        stack = [root]
        while stack:
            e = stack.pop()
            seen.add(e)
            v = above.get(e)
            if v is not None:
                stack.extend(v.inputs)
        if seen != edges:
            raise TreeError(f"disconnected edges: {sorted(edges - seen)}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "_above", above)
        object.__setattr__(self, "_below", below)
        object.__setattr__(self, "_edges", frozenset(edges))
        object.__setattr__(self, "_key", None)
        object.__setattr__(self, "_norm", None)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_vertex_outs", frozenset(above))

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    # -- basic queries ------------------------------------------------------

    @property
    def edges(self) -> frozenset[str]:
        return self._edges

    def vertex_above(self, edge: str) -> Vertex | None:
        return self._above.get(edge)

    def vertex_below(self, edge: str) -> Vertex | None:
        return self._below.get(edge)

    @property
    def leaves(self) -> frozenset[str]:
        return frozenset(e for e in self._edges if e not in self._above)

    @property
    def inner_edges(self) -> frozenset[str]:
        return frozenset(e for e in self._edges if e in self._above and e in self._below)

    def is_linear(self) -> bool:
        return all(v.arity == 1 for v in self.vertices)

    def path_to_root(self, edge: str) -> tuple[str, ...]:
        """Edges from `edge` (inclusive) down to the root (inclusive)."""
        path = [edge]
        while path[-1] != self.root:
            path.append(self._below[path[-1]].output)
        return tuple(path)

    # -- equality up to input reordering -----------------------------------

    def _normal(self):
        if self._norm is None:
            object.__setattr__(self, "_norm", (self.root, frozenset(
                (frozenset(v.inputs), v.output) for v in self.vertices)))
        return self._norm

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        return self._normal() == other._normal()

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self._normal()))
        return self._hash

    def __repr__(self):
        if not self.vertices:
            return f"Tree(eta {self.root!r})"
        vs = ", ".join(f"({','.join(v.inputs)})->{v.output}" for v in self.vertices)
        return f"Tree([{vs}], root={self.root!r})"

    # -- canonical form / isomorphism --------------------------------------

    def canonical_key(self):
        """Shape invariant: equal keys iff the trees are isomorphic."""
        if self._key is None:
            object.__setattr__(self, "_key", self._edge_key(self.root))
        return self._key

    def _edge_key(self, edge: str):
        v = self._above.get(edge)
        if v is None:
            return ()
        return tuple(sorted(self._edge_key(e) for e in v.inputs))


ETA_EDGE = "e"


def eta(edge: str = ETA_EDGE) -> Tree:
    return Tree((), edge)


def corolla(n: int, leaves: Iterable[str] | None = None, root: str = "r") -> Tree:
    if n < 0:
        raise TreeError("corolla arity must be >= 0")
    leaves = tuple(leaves) if leaves is not None else tuple(f"l_{i}" for i in range(1, n + 1))
    if len(leaves) != n:
        raise TreeError(f"expected {n} leaf names, got {len(leaves)}")
    return Tree((Vertex(leaves, root),), root)


def linear(n: int, edges: Iterable[str] | None = None) -> Tree:
    """The linear tree with n unary vertices; edge i is the input of the
    vertex with output i+1, edge n is the root."""
    if n < 0:
        raise TreeError("linear length must be >= 0")
    names = tuple(edges) if edges is not None else tuple(str(i) for i in range(n + 1))
    if len(names) != n + 1:
        raise TreeError(f"expected {n + 1} edge names, got {len(names)}")
    vs = tuple(Vertex((names[i],), names[i + 1]) for i in range(n))
    return Tree(vs, names[n])


def extended_corolla(n: int, k: int) -> Tree:
    """Unary chain a_0,...,a_n over a (k+1)-ary root vertex with extra
    leaves b_1..b_k and root c.  For n = 0 this is the (k+1)-corolla."""
    if n < 0 or k < 0:
        raise TreeError("extended corolla parameters must be >= 0")
    a = [f"a_{i}" for i in range(n + 1)]
    b = [f"b_{i}" for i in range(1, k + 1)]
    vs = [Vertex((a[i],), a[i + 1]) for i in range(n)]
    vs.append(Vertex(tuple([a[n]] + b), "c"))
    return Tree(tuple(vs), "c")


def build_standard(kind: str, *args: int) -> Tree:
    builders = {"eta": lambda: eta(), "corolla": corolla, "linear": linear,
                "extended_corolla": extended_corolla}
    if kind not in builders:
        raise TreeError(f"unknown standard tree kind {kind!r}")
    return builders[kind](*args)


def c2(a: str = "a", b: str = "b", c: str = "c") -> Tree:
    return corolla(2, leaves=(a, b), root=c)


# -- edge classification ----------------------------------------------------

ROOT = "Root"
LEAF = "Leaf"
INNER = "Inner"


def classify_edges(tree: Tree) -> dict[str, str]:
    """Map each edge to Root, Leaf or Inner.  For eta the single edge is
    reported as Root (it is also a leaf; see `Tree.leaves`)."""
    kinds = {}
    for e in tree.edges:
        if e == tree.root:
            kinds[e] = ROOT
        elif tree.vertex_above(e) is None:
            kinds[e] = LEAF
        else:
            kinds[e] = INNER
    return kinds


# -- faces ------------------------------------------------------------------

INNER_FACE = "inner"
TOP_FACE = "top"
ROOT_FACE = "root"
COROLLA_FACE = "colour"


@dataclass(frozen=True)
class FaceDescriptor:
    """A codimension-one face of a tree.

    kind is one of inner/top/root/colour; label is the contracted inner edge,
    the output edge of the removed vertex, or the kept colour for one-vertex
    trees.  subtree is the face itself.
    """
    kind: str
    label: str
    subtree: Tree

    @property
    def key(self) -> tuple[str, str]:
        return (self.kind, self.label)


def _inner_face(tree: Tree, e: str) -> Tree:
    upper = tree.vertex_above(e)
    lower = tree.vertex_below(e)
    i = lower.inputs.index(e)
    merged = Vertex(lower.inputs[:i] + upper.inputs + lower.inputs[i + 1:], lower.output)
    vs = tuple(v for v in tree.vertices if v not in (upper, lower)) + (merged,)
    return Tree(vs, tree.root)


def _top_face(tree: Tree, v: Vertex) -> Tree:
    return Tree(tuple(w for w in tree.vertices if w != v), tree.root)


def _root_face(tree: Tree, v: Vertex) -> Tree:
    new_root = next(e for e in v.inputs if tree.vertex_above(e) is not None)
    return Tree(tuple(w for w in tree.vertices if w != v), new_root)


_FACES_CACHE: dict[Tree, list[FaceDescriptor]] = {}


def faces(tree: Tree) -> list[FaceDescriptor]:
    """All codimension-one faces.  Raises for eta, which has none."""
    cached = _FACES_CACHE.get(tree)
    if cached is not None:
        return cached
    out = _faces_uncached(tree)
    _FACES_CACHE[tree] = out
    return out


def _faces_uncached(tree: Tree) -> list[FaceDescriptor]:
    if not tree.vertices:
        raise TreeError("eta has no faces")
    if len(tree.vertices) == 1:
        return [FaceDescriptor(COROLLA_FACE, e, eta(e)) for e in sorted(tree.edges)]
    out = []
    for e in sorted(tree.inner_edges):
        out.append(FaceDescriptor(INNER_FACE, e, _inner_face(tree, e)))
    for v in tree.vertices:
        attached = [e for e in v.inputs + (v.output,) if e in tree.inner_edges]
        if len(attached) != 1:
            continue
        if v.output == tree.root:
            out.append(FaceDescriptor(ROOT_FACE, v.output, _root_face(tree, v)))
        elif all(tree.vertex_above(e) is None for e in v.inputs):
            out.append(FaceDescriptor(TOP_FACE, v.output, _top_face(tree, v)))
    return out


def face(tree: Tree, kind: str, label: str) -> FaceDescriptor:
    for f in faces(tree):
        if f.kind == kind and f.label == label:
            return f
    raise TreeError(f"tree has no face ({kind}, {label})")


# -- horns ------------------------------------------------------------------

@dataclass(frozen=True)
class HornSpec:
    tree: Tree
    omitted: FaceDescriptor


def horn(tree: Tree, omitted: FaceDescriptor) -> HornSpec:
    if omitted not in faces(tree):
        raise TreeError("omitted descriptor is not a face of the tree")
    return HornSpec(tree, omitted)


def classify_horn(h: HornSpec) -> str:
    """inner / leaf / root.  Leaf covers every non-root outer horn."""
    om = h.omitted
    if om.kind == INNER_FACE:
        return "inner"
    if om.kind == COROLLA_FACE:
        return "leaf" if om.label == h.tree.root else "root"
    return "root" if om.kind == ROOT_FACE else "leaf"


def has_root_horn(tree: Tree) -> bool:
    """True iff some horn of the tree is a root horn: the tree is a corolla
    or its root vertex has exactly one attached inner edge."""
    if not tree.vertices:
        return False
    if len(tree.vertices) == 1:
        return True
    root_vertex = tree.vertex_above(tree.root)
    inner = [e for e in root_vertex.inputs if e in tree.inner_edges]
    return len(inner) == 1


# -- grafting ---------------------------------------------------------------

def graft(lower: Tree, leaf: str, upper: Tree) -> Tree:
    """Identify the root of `upper` with the given leaf of `lower`."""
    if leaf not in lower.leaves:
        raise TreeError(f"{leaf!r} is not a leaf of the lower tree")
    renamed = {upper.root: leaf}
    clash = (upper.edges - {upper.root}) & lower.edges
    if clash:
        raise TreeError(f"edge name collision: {sorted(clash)}")
    vs = list(lower.vertices)
    for v in upper.vertices:
        vs.append(Vertex(tuple(renamed.get(e, e) for e in v.inputs),
                         renamed.get(v.output, v.output)))
    return Tree(tuple(vs), lower.root)


# -- isomorphism and automorphisms -----------------------------------------

def isomorphic(s: Tree, t: Tree) -> bool:
    return s.canonical_key() == t.canonical_key()


def _edge_bijections(s: Tree, e1: str, t: Tree, e2: str) -> Iterator[dict[str, str]]:
    if s._edge_key(e1) != t._edge_key(e2):
        return
    v1, v2 = s.vertex_above(e1), t.vertex_above(e2)
    if v1 is None:
        yield {e1: e2}
        return
    idx = range(len(v2.inputs))
    for perm in itertools.permutations(idx):
        parts = [list(_edge_bijections(s, a, t, v2.inputs[perm[i]]))
                 for i, a in enumerate(v1.inputs)]
        if any(not p for p in parts):
            continue
        for combo in itertools.product(*parts):
            m = {e1: e2}
            for part in combo:
                m.update(part)
            yield m


def isomorphisms(s: Tree, t: Tree) -> list[dict[str, str]]:
    """All root-preserving incidence-preserving edge bijections s -> t."""
    seen = set()
    out = []
    for m in _edge_bijections(s, s.root, t, t.root):
        key = frozenset(m.items())
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


def automorphisms(tree: Tree) -> list[dict[str, str]]:
    return isomorphisms(tree, tree)


# -- subtrees ---------------------------------------------------------------

def subtree_from_edges(ambient: Tree, edge_set: Iterable[str]) -> Tree:
    """The subtree of `ambient` with exactly the given edges.

    A subtree is any iterated face of the ambient tree; it is determined by
    its edge set.  Raises TreeError if the edge set spans no subtree.
    """
    es = set(edge_set)
    if not es:
        raise TreeError("empty edge set")
    unknown = es - ambient.edges
    if unknown:
        raise TreeError(f"edges not in ambient tree: {sorted(unknown)}")
    paths = {e: ambient.path_to_root(e) for e in es}
    # root of the subtree: the element through which every other passes
    roots = [e for e in es if all(e in paths[f] for f in es)]
    if len(roots) != 1:
        raise TreeError(f"edge set has no unique root: {sorted(es)}")
    root = roots[0]
    strictly_above = {e: {f for f in es if f != e and e in paths[f][1:]} for e in es}
    vertices = []
    for e in sorted(es):
        above = strictly_above[e]
        frontier = {f for f in above if not any(g in paths[f][1:] for g in above if g != f)}
        if not frontier:
            continue
        _check_region(ambient, e, frontier)
        vertices.append(Vertex(tuple(sorted(frontier, key=_planar_order(ambient))), e))
    return Tree(tuple(vertices), root)


def _planar_order(ambient: Tree):
    order: dict[str, int] = {}

    def walk(e):
        order[e] = len(order)
        v = ambient.vertex_above(e)
        if v is not None:
            for i in v.inputs:
                walk(i)

    walk(ambient.root)
    return order.__getitem__


def _check_region(ambient: Tree, base: str, frontier: set[str]) -> None:
    """Every maximal upward path from `base` must stop at the frontier."""

    def covered(edge: str) -> bool:
        if edge in frontier:
            return True
        v = ambient.vertex_above(edge)
        if v is None:
            return False
        return all(covered(i) for i in v.inputs)

    v = ambient.vertex_above(base)
    if v is None or not all(covered(i) for i in v.inputs):
        raise TreeError(
            f"edges do not span a subtree: branch above {base!r} is not capped")


# -- stem, tree top, initial subtrees ---------------------------------------

def stem_edges(tree: Tree) -> list[str]:
    """The maximal linear initial segment, listed top edge first, root last."""
    chain = [tree.root]
    while True:
        v = tree.vertex_above(chain[-1])
        if v is None or v.arity != 1:
            break
        chain.append(v.inputs[0])
    chain.reverse()
    return chain


def stem(tree: Tree) -> Tree:
    names = stem_edges(tree)
    return linear(len(names) - 1, edges=names)


def tree_top(tree: Tree) -> Tree:
    """Maximal subtree with non-unary root; eta for linear trees."""
    top_edge = stem_edges(tree)[0]
    above = {e for e in tree.edges if top_edge in tree.path_to_root(e)}
    return subtree_from_edges(tree, above)


def initial_segments(tree: Tree) -> list[Tree]:
    """All subtrees reachable by compositions of top face chops (including
    the tree itself and eta at the root)."""
    seen = {tree.edges: tree}
    frontier = [tree]
    while frontier:
        t = frontier.pop()
        if not t.vertices:
            continue
        if len(t.vertices) == 1:
            chop = eta(t.root)
            if chop.edges not in seen:
                seen[chop.edges] = chop
            continue
        for v in t.vertices:
            if all(t.vertex_above(e) is None for e in v.inputs) and v.output != t.root:
                chopped = _top_face(t, v)
                if chopped.edges not in seen:
                    seen[chopped.edges] = chopped
                    frontier.append(chopped)
    return sorted(seen.values(), key=lambda t: (len(t.edges), sorted(t.edges)))


def initial_subtrees(tree: Tree, codim: int) -> list[Tree]:
    """Initial segments followed by exactly `codim` inner face contractions."""
    if codim < 0:
        raise TreeError("codim must be >= 0")
    current = {t.edges: t for t in initial_segments(tree)}
    for _ in range(codim):
        nxt: dict[frozenset, Tree] = {}
        for t in current.values():
            for e in t.inner_edges:
                ft = _inner_face(t, e)
                nxt.setdefault(ft.edges, ft)
        current = nxt
    return sorted(current.values(), key=lambda t: (len(t.edges), sorted(t.edges)))


# -- the grafted trees of the root-horn reduction ---------------------------

@dataclass(frozen=True)
class RootHornScaffold:
    """The auxiliary trees used to reduce a root horn to generator horns.

    U grafts the tree onto a (q+1)-corolla; W does the same after inserting
    the extra stem edge a_prime below the tree top.
    """
    tree: Tree
    q: int
    U: Tree
    W: Tree
    a_prime: str
    b_edges: tuple[str, ...]
    root_c: str
    stem: tuple[str, ...]       # a_0 ... a_l of the original tree, top first
    d_edges: tuple[str, ...]    # inputs of the tree-top root vertex

    def U0(self, J: Iterable[int]) -> Tree:
        es = set(self.d_edges) | {self.a_prime, self.root_c} | set(self.b_edges)
        es |= {self.stem[j] for j in self._check(J)}
        return subtree_from_edges(self.W, es)

    def Uprime(self, J: Iterable[int]) -> Tree:
        J = self._check(J)
        drop = {self.stem[j] for j in range(len(self.stem)) if j not in J}
        return subtree_from_edges(self.W, self.W.edges - drop)

    def T0(self, J: Iterable[int]) -> Tree:
        return face(self.U0(J), ROOT_FACE, self.root_c).subtree

    def Tprime(self, J: Iterable[int]) -> Tree:
        return face(self.Uprime(J), ROOT_FACE, self.root_c).subtree

    def _check(self, J: Iterable[int]) -> set[int]:
        J = set(J)
        if not J <= set(range(len(self.stem))):
            raise TreeError(f"J out of range: {sorted(J)}")
        return J


def _fresh(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def build_root_horn_scaffold(tree: Tree, q: int) -> RootHornScaffold:
    """Build U, W and friends for a non-linear tree grafted over a corolla."""
    if not tree.vertices:
        raise TreeError("tree must have at least one vertex")
    if tree.is_linear():
        raise TreeError("scaffold is only defined for non-linear trees")
    if q < 0:
        raise TreeError("q must be >= 0")
    st = stem_edges(tree)
    a0 = st[0]
    top_vertex = tree.vertex_above(a0)
    a_prime = _fresh("a'", tree.edges)
    b_edges = tuple(_fresh(f"b_{i}", tree.edges) for i in range(1, q + 1))
    root_c = _fresh("c", tree.edges)
    base = corolla(q + 1, leaves=(tree.root,) + b_edges, root=root_c)
    U = graft(base, tree.root, tree)
    # insert a' between the tree-top root vertex and a_0
    vs = []
    for v in tree.vertices:
        vs.append(Vertex(v.inputs, a_prime) if v == top_vertex else v)
    vs.append(Vertex((a_prime,), a0))
    t_prime = Tree(tuple(vs), tree.root)
    W = graft(corolla(q + 1, leaves=(tree.root,) + b_edges, root=root_c),
              tree.root, t_prime)
    return RootHornScaffold(tree=tree, q=q, U=U, W=W, a_prime=a_prime,
                            b_edges=b_edges, root_c=root_c, stem=tuple(st),
                            d_edges=top_vertex.inputs)
