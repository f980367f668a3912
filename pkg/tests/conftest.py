"""Shared fixtures: the operad corpus and a few common tree shapes."""

import pytest

from dendro.operads import CORPUS
from dendro.trees import Tree, Vertex, c2, corolla, extended_corolla, graft, linear


@pytest.fixture(scope="session")
def z2():
    return CORPUS["z2"]()


@pytest.fixture(scope="session")
def z3():
    return CORPUS["z3"]()


@pytest.fixture(scope="session")
def bz2():
    return CORPUS["bz2"]()


@pytest.fixture(scope="session")
def mult01():
    return CORPUS["mult01"]()


@pytest.fixture
def two_vertex_tree():
    """A binary corolla with a unary vertex over its first leaf."""
    return Tree((Vertex(("x",), "a"), Vertex(("a", "b"), "c")), "c")


@pytest.fixture
def double_branch_tree():
    """Binary root with corollas on both leaves: no root horn."""
    t = graft(c2(), "a", corolla(2, leaves=("p", "q"), root="a"))
    return graft(t, "b", corolla(2, leaves=("s", "t"), root="b"))
