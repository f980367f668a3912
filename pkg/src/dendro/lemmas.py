"""Built-in anodyne certificates replaying the filtration proofs.

Four families, keyed by the ids used on the command line:

* "6.4" — the pushout-product of the binary-corolla leaf horn with a
  simplex boundary is binary extended left anodyne: a filtration of the
  binary tensor complex starting from the union of mixed faces and chains.
* "7.2" — a root horn of an extended corolla becomes binary extended left
  anodyne after passing to a larger tree splitting the root vertex.
* "8.3" — the codimension argument: the subcomplex X generated around a
  distinguished vertex extends to the full tree by inner horn attachments
  over (n,k)-initial-subtree stages with chosen omitted faces.
* "8.5" — every root horn is extended left anodyne: a retract through the
  tree W with one extra stem edge, recursively certified.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .anodyne import (AnodyneClass, BuildError, Certificate, build_filtration,
                      generator_class)
from .complexes import Cell, Complex, representable
from .shuffles import c2_shuffle, c2_tensor_complex, filtration_base
from .trees import (ROOT_FACE, Tree, TreeError, Vertex, faces, has_root_horn,
                    initial_segments, stem_edges, subtree_from_edges)


def _dedup(cells: Iterable[Iterable[str]]) -> list[frozenset]:
    seen: set[frozenset] = set()
    out = []
    for c in cells:
        fc = frozenset(c)
        if fc not in seen:
            seen.add(fc)
            out.append(fc)
    return out


def _sorted_cells(cells: Iterable[frozenset]) -> list[frozenset]:
    return sorted(cells, key=lambda c: (len(c), sorted(c)))


def _root_face_cell(tree: Tree) -> frozenset:
    for f in faces(tree):
        if f.kind == ROOT_FACE:
            return f.subtree.edges
    raise TreeError(f"tree rooted at {tree.root!r} has no root face")


# ---------------------------------------------------------------------------
# "6.4": the binary tensor filtration
# ---------------------------------------------------------------------------

def _attachable(amb: Complex, present: set, cell: Cell):
    """The omitted-face key if attaching `cell` is a horn pushout against
    `present` (assumed face-closed), else None."""
    tree = amb.tree_of(cell)
    if not tree.vertices:
        return None
    missing = [f for f in faces(tree) if f.subtree.edges not in present]
    if len(missing) != 1:
        return None
    return missing[0].key


def _saturate(amb: Complex, present: set, order: list,
              ceiling: AnodyneClass) -> None:
    """Greedily attach absent cells (smallest first) along horns of class at
    most `ceiling` until no further cell is attachable."""
    progress = True
    while progress:
        progress = False
        for cell in _sorted_cells(set(amb.cells) - present):
            key = _attachable(amb, present, cell)
            if key is None:
                continue
            if generator_class(amb.tree_of(cell), key) > ceiling:
                continue
            order.append(cell)
            present.update(amb.closure(cell))
            progress = True


def binary_tensor_certificate(n: int) -> Certificate:
    """Filtration of the binary-corolla tensor complex from the union of
    mixed boundary faces and the two end chains up to the full complex.
    Exactly one step is a root-horn (binary extended left) attachment."""
    if n < 1:
        raise ValueError("n must be >= 1")
    amb = c2_tensor_complex(n)
    base = filtration_base(n)
    present = set(base.cells)
    order: list[Cell] = []
    while len(present) < len(amb.cells):
        _saturate(amb, present, order, AnodyneClass.LEFT)
        if len(present) == len(amb.cells):
            break
        for cell in _sorted_cells(set(amb.cells) - present):
            key = _attachable(amb, present, cell)
            if key is None:
                continue
            if generator_class(amb.tree_of(cell), key) \
                    <= AnodyneClass.BINARY_EXTENDED_LEFT:
                order.append(cell)
                present.update(amb.closure(cell))
                break
        else:
            raise BuildError("no horn-attachable cell of class at most "
                             "binary extended left; filtration is stuck")
    return build_filtration(amb, _sorted_cells(base.cells), order,
                            target_cells=sorted(amb.cells, key=sorted))


# ---------------------------------------------------------------------------
# "7.2": root horn of an extended corolla through the split tree
# ---------------------------------------------------------------------------

def split_vertex_tree(n: int, k: int) -> Tree:
    """The tree splitting the root vertex of the extended corolla: a chain
    a_0..a_n, a vertex v with leaves b_1..b_k and output d, and the root
    vertex u with inputs a_n, d and root c."""
    if n < 1 or k < 1:
        raise ValueError("n >= 1 and k >= 1 required")
    vs = [Vertex((f"a_{i}",), f"a_{i+1}") for i in range(n)]
    vs.append(Vertex(tuple(f"b_{i}" for i in range(1, k + 1)), "d"))
    vs.append(Vertex((f"a_{n}", "d"), "c"))
    return Tree(tuple(vs), "c")


def extended_corolla_split_certificate(n: int, k: int) -> Certificate:
    """Certify that the extended-corolla root horn, pushed into the split
    tree, extends to the full split tree; the final step is inner."""
    t = split_vertex_tree(n, k)
    amb = representable(t)
    a = [f"a_{i}" for i in range(n + 1)]
    b = [f"b_{i}" for i in range(1, k + 1)]
    # the root horn of the contracted tree: all faces except the chain
    contracted = amb.tree_of(t.edges - {"d"})
    start = [f.subtree.edges for f in faces(contracted) if f.kind != ROOT_FACE]
    order: list[set] = [set(b) | {"d"}]
    for l in range(n):
        for sub in itertools.combinations(range(n + 1), l + 1):
            order.append({a[i] for i in sub} | set(b) | {"d", "c"})
    order.append(set(a) | {"d", "c"})
    order.append(set(t.edges))
    return build_filtration(amb, start, _dedup(order),
                            target_cells=sorted(amb.cells, key=sorted))


# ---------------------------------------------------------------------------
# "8.3": the codimension argument
# ---------------------------------------------------------------------------

def _base_segment(tree: Tree, v_output: str):
    """(vertices not above any input of the distinguished vertex, its edge
    set including those inputs as leaves)."""
    v = tree.vertex_above(v_output)
    if v is None:
        raise TreeError(f"no vertex with output {v_output!r}")
    cut = set(v.inputs)
    kept = [w for w in tree.vertices
            if not cut & set(tree.path_to_root(w.output))]
    edges = {tree.root}
    for w in kept:
        edges.add(w.output)
        edges.update(w.inputs)
    return kept, frozenset(edges)


def codim_base_cells(tree: Tree, v_output: str) -> list[frozenset]:
    """The starting subcomplex of the codimension argument for the vertex
    with the given output edge: the base segment with the vertex inputs as
    leaves, the contractions of the full tree at the segment's inner edges
    and the outer faces of the full tree at segment vertices; for a
    one-vertex segment, the corolla and the maximal subtrees above each
    input instead."""
    v = tree.vertex_above(v_output)
    kept, seg_edges = _base_segment(tree, v_output)
    cells = [seg_edges]
    if len(kept) >= 2:
        seg = subtree_from_edges(tree, seg_edges)
        for e in seg.inner_edges:
            cells.append(tree.edges - {e})
        for f in faces(tree):
            if f.kind in ("top", "root") and f.label != v_output \
                    and tree.vertex_above(f.label) in kept:
                cells.append(f.subtree.edges)
    else:
        for d in v.inputs:
            above = {e for e in tree.edges if d in tree.path_to_root(e)}
            cells.append(frozenset(above))
    return _dedup(cells)


def _initial_subtree_codim(tree: Tree, cell_tree: Tree) -> int | None:
    """The codimension of a cell as an initial subtree of the ambient tree
    (segment vertices minus cell vertices), or None if it is not one."""
    if cell_tree.root != tree.root:
        return None
    leaves = cell_tree.leaves
    for leaf in tree.leaves:
        if not set(tree.path_to_root(leaf)) & leaves:
            return None
    segment_edges: set[str] = set()
    for f in leaves:
        segment_edges.update(tree.path_to_root(f))
    seg = subtree_from_edges(tree, segment_edges)
    return len(seg.vertices) - len(cell_tree.vertices)


def codim_additions(amb: Complex, cell: Cell, v_output: str) -> list[frozenset]:
    """The ordered cells of the inner filtration from the base subcomplex
    to the given cell.

    Enumerates initial subtrees containing the base segment by vertex count
    and codimension, omitting from each stage the chosen faces that arrive
    later as contractions of larger subtrees.
    """
    tree = amb.tree_of(cell)
    v = tree.vertex_above(v_output)
    if v is None:
        raise TreeError(f"no vertex with output {v_output!r} in {sorted(cell)}")
    kept, _ = _base_segment(tree, v_output)
    base_count = len(kept)
    big_n = len(tree.vertices) - base_count + 1
    kept_others = [w for w in kept if w is not v]
    # classify the closure cells that are initial subtrees containing the
    # base segment (the distinguished vertex may be merged upward by
    # contracting its input edges)
    by_nk: dict[tuple[int, int], list[frozenset]] = {}
    for es in amb.closure(cell):
        ct = amb.tree_of(es)
        vs = set(ct.vertices)
        if any(w not in vs for w in kept_others):
            continue
        if ct.vertex_above(v_output) is None:
            continue
        k = _initial_subtree_codim(tree, ct)
        if k is None:
            continue
        n = len(ct.vertices) - base_count + 1
        by_nk.setdefault((n, k), []).append(es)
    # chosen faces, built with n descending: contract the least input edge
    # of the distinguished vertex that is inner in the subtree
    chosen: dict[tuple[int, int], set[frozenset]] = {(big_n, 0): set()}
    for nn in range(big_n - 1, 0, -1):
        for kk in range(0, big_n - nn + 1):
            chosen.setdefault((nn, kk), set())
            if kk == 0:
                continue
            for s in by_nk.get((nn + 1, kk - 1), []):
                if s in chosen[(nn + 1, kk - 1)]:
                    continue
                st = amb.tree_of(s)
                inner = [d for d in v.inputs if d in st.inner_edges]
                if inner:
                    chosen[(nn, kk)].add(s - {inner[0]})
    order: list[frozenset] = []
    for nn in range(2, big_n + 1):
        for kk in range(0, big_n - nn + 1):
            stage = [s for s in by_nk.get((nn, kk), [])
                     if s not in chosen[(nn, kk)]]
            order.extend(_sorted_cells(stage))
    return order


def codim_certificate(tree: Tree, v_output: str) -> Certificate:
    amb = representable(tree)
    base = codim_base_cells(tree, v_output)
    order = codim_additions(amb, tree.edges, v_output)
    present = set(amb.closure_subcomplex(base).cells)
    final = []
    for cl in order:
        if cl not in present:
            final.append(cl)
            present.update(amb.closure(cl))
    return build_filtration(amb, base, final,
                            target_cells=sorted(amb.cells, key=sorted))


# ---------------------------------------------------------------------------
# "8.5": root horns are extended left anodyne
# ---------------------------------------------------------------------------

def _root_decomposition(tree: Tree):
    """(inner input of the root vertex, the remaining leaf inputs)."""
    root_vertex = tree.vertex_above(tree.root)
    inner = [e for e in root_vertex.inputs if tree.vertex_above(e) is not None]
    if len(inner) != 1:
        raise TreeError("root vertex is not attached to exactly one inner edge")
    rest = tuple(e for e in root_vertex.inputs if e != inner[0])
    return inner[0], rest


def _is_extended_corolla_shape(tree: Tree) -> bool:
    root_vertex = tree.vertex_above(tree.root)
    return all(v.arity == 1 for v in tree.vertices if v is not root_vertex)


def root_horn_certificate(tree: Tree,
                          omitted: tuple[str, str] | None = None) -> Certificate:
    """A certificate of extended-left class for a root horn of the tree.

    For extended corollas (every non-root vertex unary, covering corollas
    and linear trees) this is a single generating horn step.  Otherwise the
    horn inclusion is certified as a retract through the tree with one
    extra stem edge.
    """
    amb = representable(tree)
    if len(tree.vertices) == 1:
        if omitted is None or omitted[0] != "colour" or omitted[1] == tree.root:
            raise TreeError("a corolla root horn omits a leaf colour")
        start = [f.subtree.edges for f in faces(tree) if f.key != omitted]
        return build_filtration(amb, start, [tree.edges],
                                target_cells=sorted(amb.cells, key=sorted))
    if not has_root_horn(tree):
        raise TreeError("tree has no root horn")
    start = _dedup(f.subtree.edges for f in faces(tree) if f.kind != ROOT_FACE)
    if _is_extended_corolla_shape(tree):
        return build_filtration(amb, start, [tree.edges],
                                target_cells=sorted(amb.cells, key=sorted))
    w_cert, a_prime, a0 = _root_horn_through_split(tree, start)
    section = tuple((e, e) for e in sorted(tree.edges))
    retraction = tuple(sorted([(a_prime, a0)] + [(e, e) for e in tree.edges]))
    return Certificate(ambient_generators=(tree,),
                       start=tuple(start),
                       target=tuple(sorted(amb.cells, key=sorted)),
                       kind="retract", sub=w_cert,
                       section=section, retraction=retraction)


def _fresh(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def _root_horn_through_split(tree: Tree, start_cells):
    """Certify horn -> full split tree W, where W inserts one fresh edge a'
    between the stem and the tree top of the branch above the root vertex.
    Returns (certificate over W, the fresh edge, the edge below it)."""
    r, b_edges = _root_decomposition(tree)
    c = tree.root
    upper = {e for e in tree.edges if r in tree.path_to_root(e)}
    t_part = subtree_from_edges(tree, upper)
    st = stem_edges(t_part)              # a_0 ... a_l with a_l = r
    a0 = st[0]
    l = len(st) - 1
    v = tree.vertex_above(a0)            # tree-top root vertex, arity >= 2
    a_prime = _fresh("a'", tree.edges)
    w_vertices = [Vertex(x.inputs, a_prime) if x == v else x
                  for x in tree.vertices]
    w_vertices.append(Vertex((a_prime,), a0))
    w = Tree(tuple(w_vertices), c)
    amb = Complex([w])
    d_edges = v.inputs

    def U0(J):
        return frozenset(set(d_edges) | {a_prime, c} | set(b_edges)
                         | {st[j] for j in J})

    def Uprime(J):
        drop = {st[j] for j in range(l + 1) if j not in J}
        return frozenset(w.edges - drop)

    order: list[frozenset] = []
    nested: dict[frozenset, Certificate] = {}
    present = set(amb.closure_subcomplex(start_cells).cells)

    def plan(cl, sub_cert: Certificate | None = None):
        if cl not in present:
            order.append(cl)
            if sub_cert is not None:
                nested[cl] = sub_cert
            present.update(amb.closure(cl))

    # Step 1: grow the faces missing stem edges in four families per size
    # of the kept stem subset (strict subsets only)
    for size in range(0, l + 1):
        subsets = list(itertools.combinations(range(l + 1), size))
        for J in subsets:
            plan(_root_face_cell(amb.tree_of(U0(J))))
        for J in subsets:
            tp = _root_face_cell(amb.tree_of(Uprime(J)))
            for extra in codim_additions(amb, tp, a_prime):
                plan(extra)
            plan(tp)
        for J in subsets:
            plan(U0(J))
        for J in subsets:
            for extra in codim_additions(amb, Uprime(J), a_prime):
                plan(extra)
            plan(Uprime(J))
    # Step 2: the initial segment with a' as a leaf, at its root horn
    plan(frozenset({c, a_prime} | set(b_edges) | set(st)))
    # Step 3: larger initial segments and their tree-top contractions, each
    # attached along its own recursively certified root horn
    stem_set = set(st) | {a_prime}
    segments = [s for s in initial_segments(w) if len(s.vertices) >= l + 3]
    segments.sort(key=lambda s: (len(s.vertices), sorted(s.edges)))
    for seg in segments:
        pool = sorted(seg.inner_edges - stem_set)
        for esize in range(len(pool), -1, -1):
            if seg.edges == w.edges and esize == 0:
                continue     # the full tree W is attached in step 4
            batch = [frozenset(seg.edges - set(E))
                     for E in itertools.combinations(pool, esize)]
            for cl in _sorted_cells(batch):
                if cl in present:
                    continue
                plan(cl, sub_cert=root_horn_certificate(amb.tree_of(cl)))
    # Step 4: the root face of W at the inner horn of a', then W itself
    plan(frozenset(w.edges - ({c} | set(b_edges))))
    plan(frozenset(w.edges))
    cert = build_filtration(amb, list(start_cells), order,
                            target_cells=sorted(amb.cells, key=sorted),
                            nested=nested)
    return cert, a_prime, a0


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

LEMMA_IDS = ("6.4", "7.2", "8.3", "8.5")


def build_lemma_certificate(lemma_id: str, **params) -> Certificate:
    if lemma_id == "6.4":
        return binary_tensor_certificate(int(params["n"]))
    if lemma_id == "7.2":
        return extended_corolla_split_certificate(int(params["n"]), int(params["k"]))
    if lemma_id == "8.3":
        return codim_certificate(params["tree"], params["v"])
    if lemma_id == "8.5":
        return root_horn_certificate(params["tree"], params.get("omitted"))
    raise ValueError(f"unknown certificate id {lemma_id!r}")
