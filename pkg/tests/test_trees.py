"""Trees: construction, faces, horns, grafting, isomorphism, subtrees."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dendro.kan import tree_shapes
from dendro.trees import (INNER_FACE, ROOT_FACE, TOP_FACE, COROLLA_FACE,
                          Tree, TreeError, Vertex, automorphisms,
                          build_standard, c2, classify_edges, classify_horn,
                          corolla, eta, extended_corolla, face, faces, graft,
                          has_root_horn, horn, initial_segments,
                          initial_subtrees, isomorphic, isomorphisms, linear,
                          stem, stem_edges, subtree_from_edges, tree_top)

SHAPES4 = tree_shapes(4)


# -- construction and validation -------------------------------------------

def test_eta_has_one_edge_no_vertices():
    t = eta("e")
    assert t.edges == frozenset({"e"})
    assert t.root == "e"
    assert t.leaves == frozenset({"e"})
    assert not t.vertices


def test_eta_has_no_faces():
    with pytest.raises(TreeError):
        faces(eta())


def test_corolla_shape():
    t = corolla(3)
    assert len(t.vertices) == 1
    assert t.leaves == frozenset({"l_1", "l_2", "l_3"})
    assert t.root == "r"
    assert not t.inner_edges


def test_linear_tree():
    t = linear(3)
    assert t.is_linear()
    assert len(t.vertices) == 3
    assert t.root == "3"
    assert t.leaves == frozenset({"0"})
    assert t.inner_edges == frozenset({"1", "2"})


def test_extended_corolla_zero_chain_is_corolla():
    assert isomorphic(extended_corolla(0, 3), corolla(4))


def test_build_standard_dispatch():
    assert build_standard("corolla", 2) == corolla(2)
    assert build_standard("linear", 1) == linear(1)
    assert build_standard("eta") == eta()
    with pytest.raises(TreeError):
        build_standard("widget", 1)


def test_duplicate_output_rejected():
    with pytest.raises(TreeError):
        Tree((Vertex(("a",), "r"), Vertex(("b",), "r")), "r")


def test_duplicate_input_rejected():
    with pytest.raises(TreeError):
        Tree((Vertex(("a",), "r"), Vertex(("a",), "b")), "r")


def test_repeated_input_edge_rejected():
    with pytest.raises(TreeError):
        Tree((Vertex(("a", "a"), "r"),), "r")


def test_root_as_input_rejected():
    with pytest.raises(TreeError):
        Tree((Vertex(("r",), "a"),), "r")


def test_disconnected_rejected():
    with pytest.raises(TreeError):
        Tree((Vertex(("a",), "b"),), "r")


def test_tree_is_immutable():
    t = c2()
    with pytest.raises(AttributeError):
        t.root = "x"


def test_equality_quotients_input_order():
    s = Tree((Vertex(("a", "b"), "c"),), "c")
    t = Tree((Vertex(("b", "a"), "c"),), "c")
    assert s == t
    assert hash(s) == hash(t)


# -- edge classification ----------------------------------------------------

def test_classify_edges_corolla():
    assert classify_edges(c2()) == {"a": "Leaf", "b": "Leaf", "c": "Root"}


def test_classify_edges_eta_reports_root():
    assert classify_edges(eta("e")) == {"e": "Root"}


@pytest.mark.parametrize("tree", SHAPES4)
def test_classification_is_a_partition(tree):
    kinds = classify_edges(tree)
    assert set(kinds) == set(tree.edges)
    inner = {e for e, k in kinds.items() if k == "Inner"}
    assert inner == tree.inner_edges
    for e in inner:
        assert tree.vertex_above(e) is not None
        assert tree.vertex_below(e) is not None


# -- faces ------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_corolla_face_count(n):
    fs = faces(corolla(n))
    assert len(fs) == n + 1
    assert all(f.kind == COROLLA_FACE for f in fs)


@pytest.mark.parametrize("tree", [t for t in SHAPES4 if len(t.vertices) >= 2])
def test_face_count_formula(tree):
    outer = sum(1 for v in tree.vertices
                if sum(1 for e in v.inputs + (v.output,)
                       if e in tree.inner_edges) == 1)
    assert len(faces(tree)) == len(tree.inner_edges) + outer


def test_faces_of_two_level_shuffle():
    # edges a_0, b_0, c_0, c_1: one inner, one top, one root face
    t = Tree((Vertex(("a_0", "b_0"), "c_0"), Vertex(("c_0",), "c_1")), "c_1")
    kinds = sorted(f.key for f in faces(t))
    assert kinds == [(INNER_FACE, "c_0"), (ROOT_FACE, "c_1"), (TOP_FACE, "c_0")]


def test_inner_face_merges_vertices():
    t = Tree((Vertex(("a_0", "b_0"), "c_0"), Vertex(("c_0",), "c_1")), "c_1")
    sub = face(t, INNER_FACE, "c_0").subtree
    assert sub.edges == t.edges - {"c_0"}
    assert len(sub.vertices) == 1


@pytest.mark.parametrize("tree", [t for t in SHAPES4 if len(t.vertices) >= 2])
def test_face_of_face_is_path_independent(tree):
    """Iterated faces reaching the same edge set are the same tree."""
    seen = {}
    for f in faces(tree):
        if not f.subtree.vertices:
            continue
        for g in faces(f.subtree):
            prev = seen.get(g.subtree.edges)
            if prev is None:
                seen[g.subtree.edges] = g.subtree
            else:
                assert prev == g.subtree


def test_face_lookup_missing():
    with pytest.raises(TreeError):
        face(c2(), INNER_FACE, "a")


# -- horns ------------------------------------------------------------------

def test_corolla_horn_classification():
    t = c2()
    assert classify_horn(horn(t, face(t, COROLLA_FACE, "b"))) == "root"
    assert classify_horn(horn(t, face(t, COROLLA_FACE, "c"))) == "leaf"


def test_inner_horn_classification():
    t = Tree((Vertex(("a_0", "b_0"), "c_0"), Vertex(("c_0",), "c_1")), "c_1")
    assert classify_horn(horn(t, face(t, INNER_FACE, "c_0"))) == "inner"
    assert classify_horn(horn(t, face(t, TOP_FACE, "c_0"))) == "leaf"
    assert classify_horn(horn(t, face(t, ROOT_FACE, "c_1"))) == "root"


def test_horn_rejects_foreign_face():
    foreign = face(linear(2), INNER_FACE, "1")
    with pytest.raises(TreeError):
        horn(c2(), foreign)


@pytest.mark.parametrize("n", range(1, 5))
def test_corollas_have_root_horns(n):
    assert has_root_horn(corolla(n))


@pytest.mark.parametrize("n", range(1, 4))
def test_extended_corollas_have_root_horns(n):
    assert has_root_horn(extended_corolla(n, 1))
    assert has_root_horn(extended_corolla(n, 2))


def test_double_branch_has_no_root_horn(double_branch_tree):
    assert not has_root_horn(double_branch_tree)


def test_eta_has_no_root_horn():
    assert not has_root_horn(eta())


@pytest.mark.parametrize("tree", [t for t in SHAPES4 if len(t.vertices) >= 2])
def test_has_root_horn_matches_face_list(tree):
    has_root_face = any(f.kind == ROOT_FACE for f in faces(tree))
    assert has_root_horn(tree) == has_root_face


# -- grafting ---------------------------------------------------------------

def test_graft_counts():
    g = graft(corolla(1, leaves=("l",), root="r"), "l",
              corolla(2, leaves=("x", "y"), root="l"))
    assert len(g.vertices) == 2
    assert g.leaves == frozenset({"x", "y"})


def test_graft_rejects_non_leaf():
    with pytest.raises(TreeError):
        graft(c2(), "c", corolla(1, leaves=("x",), root="c"))


def test_graft_rejects_name_collision():
    with pytest.raises(TreeError):
        graft(c2(), "a", corolla(1, leaves=("b",), root="a"))


def test_graft_stem_top_roundtrip():
    for t in (extended_corolla(2, 2), c2_over_chain()):
        top_edge = stem_edges(t)[0]
        assert graft(stem(t), top_edge, tree_top(t)) == t


def c2_over_chain():
    return Tree((Vertex(("a", "b"), "m"), Vertex(("m",), "n"),
                 Vertex(("n",), "r")), "r")


# -- isomorphism ------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 5))
def test_corolla_automorphism_count(n):
    aut = automorphisms(corolla(n))
    assert len(aut) == [1, 1, 2, 6, 24][n]


def test_eta_has_one_automorphism():
    assert automorphisms(eta()) == [{"e": "e"}]


def test_automorphisms_form_a_group():
    t = graft(c2(), "a", corolla(2, leaves=("p", "q"), root="a"))
    aut = automorphisms(t)
    keyed = {frozenset(m.items()) for m in aut}
    ident = {e: e for e in t.edges}
    assert frozenset(ident.items()) in keyed
    for m in aut:
        inv = {v: k for k, v in m.items()}
        assert frozenset(inv.items()) in keyed
        for m2 in aut:
            comp = {e: m2[m[e]] for e in t.edges}
            assert frozenset(comp.items()) in keyed


def test_shuffles_t0_t1_not_isomorphic():
    t0 = Tree((Vertex(("a_0", "b_0"), "c_0"), Vertex(("c_0",), "c_1")), "c_1")
    t1 = Tree((Vertex(("a_0",), "a_1"), Vertex(("b_0",), "b_1"),
               Vertex(("a_1", "b_1"), "c_1")), "c_1")
    assert not isomorphic(t0, t1)


def test_isomorphisms_are_bijections():
    s = corolla(2, leaves=("a", "b"), root="c")
    t = corolla(2, leaves=("x", "y"), root="z")
    ms = isomorphisms(s, t)
    assert len(ms) == 2
    for m in ms:
        assert m["c"] == "z"
        assert sorted(m.values()) == ["x", "y", "z"]


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_canonical_key_invariant_under_renaming(data):
    tree = data.draw(st.sampled_from(SHAPES4))
    names = sorted(tree.edges)
    new = data.draw(st.permutations([f"n{i}" for i in range(len(names))]))
    m = dict(zip(names, new))
    renamed = Tree(tuple(Vertex(tuple(m[e] for e in v.inputs), m[v.output])
                         for v in tree.vertices), m[tree.root])
    assert isomorphic(tree, renamed)
    assert len(isomorphisms(tree, renamed)) == len(automorphisms(tree))


# -- subtrees, stems, initial segments --------------------------------------

def test_subtree_from_edges_corolla_inside_shuffle():
    t = Tree((Vertex(("a_0", "b_0"), "c_0"), Vertex(("c_0",), "c_1")), "c_1")
    sub = subtree_from_edges(t, {"a_0", "b_0", "c_0"})
    assert sub == Tree((Vertex(("a_0", "b_0"), "c_0"),), "c_0")


def test_subtree_from_edges_rejects_uncapped_branch():
    with pytest.raises(TreeError):
        subtree_from_edges(c2(), {"a", "c"})


def test_subtree_from_edges_rejects_unknown_and_empty():
    with pytest.raises(TreeError):
        subtree_from_edges(c2(), {"zz"})
    with pytest.raises(TreeError):
        subtree_from_edges(c2(), set())


def test_stem_and_top_of_linear_tree():
    t = linear(2)
    assert stem_edges(t) == ["0", "1", "2"]
    assert tree_top(t) == eta("0")


def test_stem_of_extended_corolla():
    t = extended_corolla(2, 1)
    assert stem_edges(t) == ["c"]          # root vertex is binary: no chain
    top = tree_top(t)
    assert top == t


def test_initial_segments_of_corolla():
    segs = initial_segments(corolla(2))
    assert {s.edges for s in segs} == {frozenset({"r"}),
                                       frozenset({"l_1", "l_2", "r"})}


def test_initial_subtrees_codim_zero_matches_segments():
    t = extended_corolla(1, 1)
    assert initial_subtrees(t, 0) == initial_segments(t)


def test_initial_subtrees_codim_one():
    t = extended_corolla(1, 1)    # chain a_0,a_1 over binary (a_1,b_1)->c
    subs = initial_subtrees(t, 1)
    assert frozenset({"a_0", "b_1", "c"}) in {s.edges for s in subs}


def test_initial_subtrees_negative_codim():
    with pytest.raises(TreeError):
        initial_subtrees(c2(), -1)


def test_path_to_root():
    t = extended_corolla(1, 1)
    assert t.path_to_root("a_0") == ("a_0", "a_1", "c")
