"""Dendrices of nerves: enumeration, faces, degeneracies, underlying sset."""

import pytest

from dendro.kan import tree_shapes
from dendro.nerves import (Dendrex, check_dendrex, degeneracy_of,
                           dendrex_closure, dendrices, face_of, is_degenerate,
                           underlying_sset)
from dendro.trees import (COROLLA_FACE, INNER_FACE, Tree, Vertex, c2, eta,
                          face, faces, linear)


def test_dendrex_count_c2_z2(z2):
    assert len(dendrices(z2, c2())) == 4


def test_dendrex_count_eta(z3):
    assert len(dendrices(z3, eta())) == 3


def test_dendrex_count_c2_bz2(bz2):
    assert len(dendrices(bz2, c2())) == 2


@pytest.mark.parametrize("tree", tree_shapes(4))
def test_discrete_group_count_is_leafcount_power(z2, tree):
    assert len(dendrices(z2, tree)) == 2 ** len(tree.leaves)


def test_dendrex_validation(z2):
    shape = c2()
    with pytest.raises(ValueError):
        Dendrex(shape, {"a": "0"}, {})           # missing edge colours
    with pytest.raises(ValueError):
        Dendrex(shape, {"a": "0", "b": "0", "c": "0"}, {})   # missing op
    op = z2.operations(("0", "1"), "1")[0]
    d = Dendrex(shape, {"a": "0", "b": "1", "c": "1"}, {"c": op})
    check_dendrex(z2, d)
    bad = Dendrex(shape, {"a": "0", "b": "1", "c": "0"}, {"c": op})
    with pytest.raises(ValueError):
        check_dendrex(z2, bad)


def test_inner_face_composes_colours(z3):
    shape = linear(2)
    for d in dendrices(z3, shape):
        f = face(shape, INNER_FACE, "1")
        sub = face_of(z3, d, f)
        assert sub.edge_colours == {"0": d.edge_colours["0"],
                                    "2": d.edge_colours["2"]}
        assert z3.op_profile(sub.vertex_ops["2"]) == \
            ((d.edge_colours["0"],), d.edge_colours["2"])


def test_colour_face_restricts(z2):
    shape = c2()
    d = dendrices(z2, shape)[0]
    for f in faces(shape):
        sub = face_of(z2, d, f)
        assert sub.shape == eta(f.label)
        assert sub.edge_colours == {f.label: d.edge_colours[f.label]}


@pytest.mark.parametrize("tree",
                         [t for t in tree_shapes(3) if len(t.vertices) >= 2])
def test_iterated_faces_are_consistent(z2, tree):
    """Restriction along different face paths agrees on every dendrex."""
    for d in dendrices(z2, tree):
        dendrex_closure(z2, d)     # raises ValueError on any conflict


def test_degeneracy_and_contraction_roundtrip(z2):
    shape = linear(1, edges=("x", "y"))
    for d in dendrices(z2, shape):
        dd = degeneracy_of(z2, d, "x", "w")
        assert is_degenerate(z2, dd)
        f = face(dd.shape, INNER_FACE, "w")
        back = face_of(z2, dd, f)
        # contracting the inserted identity recovers the original labels
        assert back.edge_colours == {"x": d.edge_colours["x"],
                                     "y": d.edge_colours["y"]}
        assert back.vertex_ops == {"y": d.vertex_ops["y"]}


def test_eta_degeneracy_is_degenerate(z2):
    d = dendrices(z2, eta("e"))[0]
    dd = degeneracy_of(z2, d, "e", "f")
    assert len(dd.shape.vertices) == 1
    assert is_degenerate(z2, dd)


def test_degeneracy_rejects_used_name(z2):
    d = dendrices(z2, eta("e"))[0]
    with pytest.raises(Exception):
        degeneracy_of(z2, d, "e", "e")


def test_identity_labelled_c1_is_degenerate(z2):
    shape = linear(1)
    for d in dendrices(z2, shape):
        assert is_degenerate(z2, d)     # every unary op in a discrete group
        # is forced to be the identity


def test_underlying_sset_counts(z2, bz2, mult01):
    assert underlying_sset(z2, 2).counts() == {0: 2, 1: 2, 2: 2}
    assert underlying_sset(bz2, 2).counts() == {0: 1, 1: 2, 2: 4}
    assert underlying_sset(mult01, 1).counts() == {0: 2, 1: 2}


def _chain_edges(shape):
    """Edges of a linear shape ordered from the leaf to the root."""
    (leaf,) = shape.leaves
    order = [leaf]
    while True:
        v = shape.vertex_below(order[-1])
        if v is None:
            return order
        order.append(v.output)


def _simplicial_face(p, d, i):
    shape = d.shape
    k = len(shape.vertices)
    chain = _chain_edges(shape)
    if k == 1:
        f = face(shape, COROLLA_FACE, chain[1 - i])
    elif i == 0:
        f = face(shape, "top", chain[1])
    elif i == k:
        f = face(shape, "root", chain[k])
    else:
        f = face(shape, INNER_FACE, chain[i])
    return face_of(p, d, f)


def test_simplicial_identities(bz2):
    table = underlying_sset(bz2, 3)
    for k in range(2, 4):
        for d in table.simplices[k]:
            for j in range(1, k + 1):
                for i in range(j):
                    lhs = _simplicial_face(bz2, _simplicial_face(bz2, d, j), i)
                    rhs = _simplicial_face(bz2, _simplicial_face(bz2, d, i),
                                           j - 1)
                    assert lhs == rhs, (k, i, j, d)


def test_dendrex_repr_and_hash(z2):
    a, b = dendrices(z2, c2())[:2]
    assert a != b
    assert hash(a) == hash(Dendrex(a.shape, a.edge_colours, a.vertex_ops))
    assert "Dendrex(" in repr(a)
