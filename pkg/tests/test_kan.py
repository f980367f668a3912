"""Horn maps, fillers and Kan reports."""

import itertools

import pytest

from dendro.kan import (enumerate_horn_maps, fillers, kan_report, tree_shapes)
from dendro.nerves import dendrices, face_of
from dendro.trees import (COROLLA_FACE, Tree, Vertex, c2, corolla, face,
                          faces, horn, isomorphic)


def _corolla_root_horn():
    t = c2()
    return t, horn(t, face(t, COROLLA_FACE, "b"))


def test_tree_shapes_are_pairwise_nonisomorphic():
    shapes = tree_shapes(3)
    for s, t in itertools.combinations(shapes, 2):
        assert not isomorphic(s, t)


def test_tree_shapes_respect_bounds():
    for t in tree_shapes(3, max_arity=2):
        assert 1 <= len(t.vertices) <= 3
        assert all(1 <= v.arity <= 2 for v in t.vertices)


def test_tree_shapes_small_counts():
    assert len(tree_shapes(1, max_arity=3)) == 3    # corollas C_1, C_2, C_3
    assert len(tree_shapes(1, max_arity=3)) < len(tree_shapes(2, max_arity=3))


def test_horn_map_counts_c2_root(z2, bz2):
    _, h = _corolla_root_horn()
    assert len(enumerate_horn_maps(z2, h)) == 4     # free colours on a, c
    assert len(enumerate_horn_maps(bz2, h)) == 1    # single colour


def test_horn_maps_match_dendrex_restrictions(z2):
    """For a fully Kan nerve, horn maps are exactly dendrex restrictions."""
    tree = Tree((Vertex(("a_0", "b_0"), "c_0"), Vertex(("c_0",), "c_1")), "c_1")
    for f in faces(tree):
        h = horn(tree, f)
        kept = [g for g in faces(tree) if g != f]
        from_maps = {tuple(sorted(m.assignment)) for m in enumerate_horn_maps(z2, h)}
        from_dendrices = {
            tuple(sorted((g.key, face_of(z2, d, g)) for g in kept))
            for d in dendrices(z2, tree)}
        assert from_maps == from_dendrices


def test_fillers_group_solve(z2):
    _, h = _corolla_root_horn()
    want = {"a": "1", "c": "0"}
    m = next(m for m in enumerate_horn_maps(z2, h)
             if all(m.face_dendrex(("colour", e)).edge_colours[e] == v
                    for e, v in want.items()))
    fs = fillers(z2, m)
    assert len(fs) == 1
    assert fs[0].edge_colours["b"] == "1"


def test_fillers_monoid_obstruction(mult01):
    _, h = _corolla_root_horn()
    m = next(m for m in enumerate_horn_maps(mult01, h)
             if m.face_dendrex(("colour", "a")).edge_colours["a"] == "0"
             and m.face_dendrex(("colour", "c")).edge_colours["c"] == "1")
    assert fillers(mult01, m) == []


def test_fillers_bz2_corolla_pair(bz2):
    _, h = _corolla_root_horn()
    (m,) = enumerate_horn_maps(bz2, h)
    assert len(fillers(bz2, m)) == 2


def test_filler_restrictions_agree_with_horn_map(z2):
    tree, h = _corolla_root_horn()
    for m in enumerate_horn_maps(z2, h):
        want = dict(m.assignment)
        for d in fillers(z2, m):
            for g in faces(tree):
                if g.key in want:
                    assert face_of(z2, d, g) == want[g.key]


def test_kan_report_z2_bound2(z2):
    rep = kan_report(z2, 2)
    assert rep.inner_kan and rep.dendroidal_kan and rep.fully_kan
    assert rep.strict and rep.fully_unique
    assert rep.horns_checked > 0
    assert rep.witnesses == []
    assert "fully_kan=True" in rep.summary()


def test_kan_report_mult01_bound2(mult01):
    rep = kan_report(mult01, 2)
    assert rep.inner_kan
    assert not rep.fully_kan
    assert any(w.horn_class == "root" and w.issue == "unfillable"
               for w in rep.witnesses)


@pytest.mark.parametrize("name", ["z2", "bz2", "mult01"])
def test_flag_implications(name, z2, bz2, mult01):
    rep = kan_report({"z2": z2, "bz2": bz2, "mult01": mult01}[name], 2)
    if rep.fully_kan:
        assert rep.dendroidal_kan
    if rep.dendroidal_kan:
        assert rep.inner_kan
    if rep.fully_unique:
        assert rep.strict


def test_strict_inner_kan_property(bz2, mult01):
    """Nerves are strictly inner Kan: inner horns of >=2-vertex trees have
    exactly one filler (no inner witnesses even when root horns fail)."""
    for p in (bz2, mult01):
        rep = kan_report(p, 3)
        assert rep.inner_kan
        assert all(w.horn_class != "inner" for w in rep.witnesses)
