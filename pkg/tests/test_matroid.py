from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oam import bits
from oam.matroid import (Matroid, MatroidError, basis_graph, check_basis_exchange, contract,
                         coordinatizing_forest, delete, dual, fundamental_circuit_graph, swap)
from oam.realization import matrix_matroid

from conftest import full_rank_matrices
from oracles import brute_exchange, minor_bases, rank_from_bases

M = bits.mask


def fam(*sets):
    return {M(s) for s in sets}


def test_exchange_examples():
    assert check_basis_exchange(fam({1}, {2}), 2)
    assert not check_basis_exchange(fam({1, 2}, {3, 4}), 4)
    assert check_basis_exchange(fam({1, 2}, {1, 3}, {2, 3}), 3)


def test_exchange_matches_brute_force_on_all_families_n4():
    subsets = [frozenset(c) for k in range(3) for c in combinations(range(1, 5), k)]
    for k in range(3):
        layer = [s for s in subsets if len(s) == k]
        for size in range(1, len(layer) + 1):
            for family in combinations(layer, size):
                assert check_basis_exchange({M(s) for s in family}, 4) == brute_exchange(set(family))


@pytest.mark.parametrize("bases, n", [(set(), 3), (fam({1}, {1, 2}), 2)])
def test_exchange_rejects_malformed(bases, n):
    with pytest.raises(MatroidError):
        check_basis_exchange(bases, n)


def test_rank_and_closure(example):
    mat = example.matroid
    assert mat.rank(0) == 0
    assert mat.rank(M({2, 3})) == 2
    assert mat.rank(mat.ground) == mat.r == 2
    assert mat.closure(0) == 0
    assert mat.closure(mat.ground) == mat.ground
    assert mat.closure(M({1})) == M({1})


def test_molecule_examples(example):
    mat = example.matroid
    assert mat.is_molecule(M({1}), M({1}))
    assert mat.is_molecule(0, M({2, 3}))
    assert not mat.is_molecule(0, M({1, 2, 3}))
    assert mat.is_molecule(M({2}), M({1, 2}))
    with pytest.raises(MatroidError):
        mat.is_molecule(M({1}), M({2}))


def test_minor_examples(example):
    mat = example.matroid
    assert delete(mat, 0) == mat
    assert contract(mat, 0) == mat
    d3 = delete(mat, M({3}))
    assert d3.bases == fam({1, 2}) and d3.element_labels == (1, 2)
    c1 = contract(mat, M({1}))
    # {2}, {3} relabelled onto 1, 2
    assert c1.bases == fam({1}, {2}) and c1.element_labels == (2, 3)
    assert contract(mat, M({1, 2})).bases == {0}
    assert dual(mat).bases == fam({1}, {2}, {3})
    u12 = Matroid.uniform(1, 2)
    assert delete(u12, M({2})).bases == fam({1})
    assert dual(u12) == u12


def test_contract_everything_gives_empty_matroid(example):
    e = contract(example.matroid, example.matroid.ground)
    assert e.n == 0 and e.bases == {0} and e.r == 0


def test_basis_graph_examples(example):
    g = basis_graph(Matroid.uniform(1, 2))
    assert len(g.vertices) == 2 and len(g.edges) == 1
    g = basis_graph(example.matroid)
    assert len(g.vertices) == 3 and len(g.edges) == 3
    g = basis_graph(Matroid.uniform(2, 4))
    # each 2-subset meets 4 others in one element
    assert len(g.vertices) == 6 and len(g.edges) == 6 * 4 // 2
    with pytest.raises(MatroidError):
        basis_graph(example.matroid, M({1}))


def test_fundamental_circuit_graph_examples(example):
    assert fundamental_circuit_graph(example.matroid, M({1, 2})) == ((1, 3), (2, 3))
    assert fundamental_circuit_graph(Matroid.uniform(2, 4), M({1, 2})) == ((1, 3), (1, 4), (2, 3), (2, 4))
    # element 1 coloop, element 3 loop
    mat = Matroid(3, fam({1, 2}))
    assert fundamental_circuit_graph(mat, M({1, 2})) == ()


def test_forest_examples():
    assert coordinatizing_forest([(1, 3)]) == ((1, 3),)
    assert coordinatizing_forest([(1, 3), (2, 3)]) == ((1, 3), (2, 3))
    cycle = [(2, 4), (1, 3), (2, 3), (1, 4)]
    assert coordinatizing_forest(cycle) == ((1, 3), (1, 4), (2, 3))
    assert coordinatizing_forest([]) == ()


# Random matroids come from integer matrices; the oracle side rebuilds
# everything from frozensets.

def as_sets(mat):
    return {frozenset(bits.elements(b)) for b in mat.bases}


@given(full_rank_matrices(max_r=3, max_n=6))
def test_rank_closure_properties(mx):
    mat = matrix_matroid(mx)
    n = mat.n
    sets = as_sets(mat)
    masks = range(1 << n)
    for a in masks:
        assert mat.rank(a) == rank_from_bases(sets, frozenset(bits.elements(a)))
        cl = mat.closure(a)
        assert cl & a == a and mat.rank(cl) == mat.rank(a) and mat.closure(cl) == cl
    for a in masks:
        for e in range(n):
            b = a | (1 << e)
            assert mat.rank(a) <= mat.rank(b) <= mat.rank(a) + 1
            assert mat.closure(a) & mat.closure(b) == mat.closure(a)
    for a in masks:
        for b in masks:
            assert mat.rank(a | b) + mat.rank(a & b) <= mat.rank(a) + mat.rank(b)


@given(full_rank_matrices(max_r=3, max_n=5))
def test_molecule_matches_minor_basis_count(mx):
    mat = matrix_matroid(mx)
    sets = as_sets(mat)
    ground = frozenset(range(1, mat.n + 1))
    for b in range(1 << mat.n):
        for a in bits.subsets_of(b):
            fa, fb = frozenset(bits.elements(a)), frozenset(bits.elements(b))
            assert mat.is_molecule(a, b) == (len(minor_bases(sets, ground, fa, fb)) == 1)


@given(full_rank_matrices(max_r=3, max_n=6), st.data())
def test_duality_and_minors(mx, data):
    mat = matrix_matroid(mx)
    a = data.draw(st.integers(0, mat.ground))
    assert dual(dual(mat)) == mat
    assert dual(delete(mat, a)).bases == contract(dual(mat), a).bases
    assert dual(contract(mat, a)).bases == delete(dual(mat), a).bases
    for mo in (delete(mat, a), contract(mat, a), dual(mat)):
        assert check_basis_exchange(mo.bases, mo.n)
    assert contract(mat, a).r == mat.r - mat.rank(a)
    assert delete(mat, a).r == mat.rank(mat.ground & ~a)


@given(full_rank_matrices(max_r=3, max_n=6))
def test_line_graph_of_fcg_is_bg1(mx):
    mat = matrix_matroid(mx)
    b0 = mat.anchor
    edges = fundamental_circuit_graph(mat, b0)
    view = basis_graph(mat, b0)
    to_basis = {e: swap(b0, *e) for e in edges}
    assert set(to_basis.values()) == set(view.bg1)
    assert len(set(to_basis.values())) == len(edges)
    bg_edges = {frozenset(e) for e in view.edges}
    for e1, e2 in combinations(edges, 2):
        incident = bool(set(e1) & set(e2))
        assert incident == (frozenset((to_basis[e1], to_basis[e2])) in bg_edges)


@given(full_rank_matrices(max_r=3, max_n=6))
def test_forest_is_spanning_and_acyclic(mx):
    mat = matrix_matroid(mx)
    edges = fundamental_circuit_graph(mat, mat.anchor)
    forest = coordinatizing_forest(edges)
    verts = {v for e in edges for v in e}

    def components(es):
        parent = {v: v for v in verts}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x
        for i, j in es:
            parent[find(i)] = find(j)
        return len({find(v) for v in verts})

    assert len(forest) == len(verts) - components(edges)
    assert components(forest) == components(edges)
