import itertools

import pytest

from twogrp.coeff import AbelianGroup
from twogrp.cochain import Cochain, is_cocycle
from twogrp.errors import (
    DimensionBound,
    IndexOutOfRange,
    NotACocycle,
    ShapeMismatch,
)
from twogrp.group import cyclic, dihedral
from twogrp.simplicial import (
    Horn,
    SimplicialMap,
    TruncatedSSet,
    cocycle_as_map,
    decalage_map,
    enumerate_horns,
    fiber_product,
    fillers,
    gamma_a2,
    horn_is_compatible,
    identity_map,
    inverse_map,
    is_isomorphism,
    is_kan,
    mediating_map,
    nerve_bg,
    surjections_to_2,
    validate_simplicial,
    w_b2a,
    wbar_b2a,
)

C2 = cyclic(2)
Z2 = AbelianGroup([2])


def c2_nontrivial():
    return Cochain.from_function(
        C2, Z2, 3, lambda a, b, c: (1,) if a == b == c == 1 else (0,)
    )


def test_surjections_to_2():
    assert surjections_to_2(1) == []
    assert surjections_to_2(2) == [(0, 1, 2)]
    assert surjections_to_2(3) == [(0, 0, 1, 2), (0, 1, 1, 2), (0, 1, 2, 2)]
    assert len(surjections_to_2(4)) == 6


@pytest.mark.parametrize("A", [Z2, AbelianGroup([3]), AbelianGroup([2, 2])])
def test_constructors_validate(A):
    objects = [
        nerve_bg(dihedral(3), 3),
        nerve_bg(C2, 4),
        gamma_a2(A, 4),
        w_b2a(A, 3),
        wbar_b2a(A, 3),
        wbar_b2a(A, 4),
    ]
    if A.order <= 3:  # W at truncation 4 holds |A|^10 top cells
        objects.append(w_b2a(A, 4))
    for X in objects:
        ok, why = validate_simplicial(X)
        assert ok, why


@pytest.mark.parametrize("A", [Z2, AbelianGroup([4]), AbelianGroup([2, 2])])
def test_level_sizes(A):
    m = A.order
    gamma = gamma_a2(A, 4)
    assert [gamma.size(n) for n in range(5)] == [1, 1, m, m**3, m**6]
    wbar = wbar_b2a(A, 4)
    assert [wbar.size(n) for n in range(5)] == [1, 1, 1, m, m**4]
    w = w_b2a(A, 3)
    assert [w.size(n) for n in range(4)] == [1, 1, m, m**4]
    ng = nerve_bg(C2, 3)
    assert [ng.size(n) for n in range(4)] == [1, 2, 4, 8]


def test_nerve_faces():
    G = dihedral(3)
    X = nerve_bg(G, 3)
    g, h, k = 1, 3, 4
    x = X.index(3, (g, h, k))
    assert X.label(2, X.face(3, 0, x)) == (h, k)
    assert X.label(2, X.face(3, 1, x)) == (G.mul(g, h), k)
    assert X.label(2, X.face(3, 2, x)) == (g, G.mul(h, k))
    assert X.label(2, X.face(3, 3, x)) == (g, h)
    assert X.label(3, X.degeneracy(2, 1, X.index(2, (g, h)))) == (g, 0, h)


def test_w_face_values():
    A = AbelianGroup([4])
    W = w_b2a(A, 3)
    for a, b, c, d in itertools.product(range(4), repeat=4):
        cell = (((a,), (b,), (c,)), ((d,),), (), ())
        x = W.index(3, cell)
        got = [W.label(2, W.face(3, i, x))[0][0] for i in range(4)]
        assert got == [((a + d) % 4,), ((a + b) % 4,), ((b + c) % 4,), (c,)]


def test_wbar_level4_face_values():
    A = AbelianGroup([4])
    Wb = wbar_b2a(A, 4)
    for a, b, c, d in itertools.product(range(4), repeat=4):
        cell = (((a,), (b,), (c,)), ((d,),), (), ())
        x = Wb.index(4, cell)
        got = [Wb.label(3, Wb.face(4, i, x))[0][0][0] for i in range(5)]
        assert got == [d, (a + d) % 4, (a + b) % 4, (b + c) % 4, c]


def test_decalage_validates():
    for A in (Z2, AbelianGroup([3])):
        for trunc in (3, 4):
            dec = decalage_map(A, trunc)
            ok, why = dec.validate()
            assert ok, why


def test_cocycle_as_map():
    alpha = c2_nontrivial()
    for trunc in (3, 4):
        f = cocycle_as_map(alpha, trunc)
        ok, why = f.validate()
        assert ok, why
    # the 3-cell component reads off alpha
    f = cocycle_as_map(alpha, 3)
    Wb = wbar_b2a(Z2, 3)
    x = f.src.index(3, (1, 1, 1))
    assert Wb.label(3, f(3, x))[0][0] == (1,)


def test_level4_extension_iff_cocycle():
    # over Z4 on C2 the normalized 3-cochains split into cocycles and
    # non-cocycles; level-4 extension succeeds exactly on the former
    Z4 = AbelianGroup([4])
    for v in range(4):
        alpha = Cochain.from_function(
            C2, Z4, 3, lambda a, b, c: (v,) if a == b == c == 1 else (0,)
        )
        ok, witness = is_cocycle(alpha)
        if ok:
            f = cocycle_as_map(alpha, 4)
            okv, why = f.validate()
            assert okv, why
        else:
            with pytest.raises(NotACocycle) as err:
                cocycle_as_map(alpha, 4)
            assert err.value.witness == witness


def test_fiber_product_and_mediating():
    alpha = c2_nontrivial()
    f = decalage_map(Z2, 3)
    g = cocycle_as_map(alpha, 3)
    P, px, py = fiber_product(f, g)
    ok, why = validate_simplicial(P)
    assert ok, why
    for proj in (px, py):
        ok, why = proj.validate()
        assert ok, why
    # composites agree by construction
    assert f.compose(px).components == g.compose(py).components
    # mediating map against the projections themselves is the identity
    med = mediating_map(P, px, py, px, py)
    assert med.components == identity_map(P).components


def test_simplicial_map_helpers():
    X = nerve_bg(C2, 3)
    ident = identity_map(X)
    ok, _ = ident.validate()
    assert ok and is_isomorphism(ident)
    assert inverse_map(ident).components == ident.components
    # a misshapen map is rejected
    with pytest.raises(ShapeMismatch):
        SimplicialMap(X, X, [[0], [0, 1]])
    # a non-commuting map is caught by validate
    comps = [list(range(X.size(n))) for n in range(4)]
    comps[3][X.index(3, (1, 1, 1))] = X.index(3, (0, 0, 0))
    bad = SimplicialMap(X, X, comps)
    ok, why = bad.validate()
    assert not ok and "face" in why


def test_validate_catches_broken_identity():
    X = nerve_bg(C2, 2)
    faces = {k: list(v) for k, v in X.faces.items()}
    # corrupt d1 on the degenerate cell s0(g): d1 s0 = id must now fail
    faces[(2, 1)][X.degeneracy(1, 0, X.index(1, (1,)))] = X.index(1, (0,))
    Y = TruncatedSSet(2, X.levels, faces, X.degeneracies)
    ok, why = validate_simplicial(Y)
    assert not ok and "identity" in why


def test_horns_and_fillers_nerve():
    X = nerve_bg(dihedral(3), 3)
    for n in (2, 3):
        for missing in range(n + 1):
            horns = enumerate_horns(X, n, missing)
            # the nerve of a group has unique fillers at every level >= 2,
            # so compatible horns biject with the cells they bound
            assert len(horns) == X.size(n)
            for horn in horns:
                assert horn_is_compatible(X, horn)
                assert len(fillers(X, horn)) == 1
    ok, bad = is_kan(X)
    assert ok and bad is None


def test_inner_horn_filler_counts_wbar():
    for A in (Z2, AbelianGroup([3])):
        Wb = wbar_b2a(A, 3)
        for missing in range(3):
            horns = enumerate_horns(Wb, 2, missing)
            assert len(horns) == 1
            assert len(fillers(Wb, horns[0])) == 1
        for missing in range(4):
            for horn in enumerate_horns(Wb, 3, missing):
                assert len(fillers(Wb, horn)) >= 1
        ok, _ = is_kan(Wb)
        assert ok


def test_non_kan_example():
    # nerve of the multiplicative monoid {1, 0}: the outer horn with
    # d1 = (1), d2 = (0) needs y with 0 * y = 1 and has no filler
    M = [[0, 1], [1, 1]]  # index 0 is the unit, index 1 absorbs

    def mul(x, y):
        return M[x][y]

    levels = [[()], [(x,) for x in range(2)],
              [(x, y) for x in range(2) for y in range(2)]]
    index = [{c: i for i, c in enumerate(lv)} for lv in levels]
    faces = {
        (1, 0): [0, 0],
        (1, 1): [0, 0],
        (2, 0): [index[1][(y,)] for x, y in levels[2]],
        (2, 1): [index[1][(mul(x, y),)] for x, y in levels[2]],
        (2, 2): [index[1][(x,)] for x, y in levels[2]],
    }
    degeneracies = {
        (0, 0): [index[1][(0,)]],
        (1, 0): [index[2][(0, x)] for (x,) in levels[1]],
        (1, 1): [index[2][(x, 0)] for (x,) in levels[1]],
    }
    X = TruncatedSSet(2, levels, faces, degeneracies, name="monoid-nerve")
    ok, why = validate_simplicial(X)
    assert ok, why
    ok, bad = is_kan(X)
    assert not ok
    assert not fillers(X, bad)
    assert horn_is_compatible(X, bad)


def test_horn_validation():
    X = nerve_bg(C2, 3)
    with pytest.raises(ShapeMismatch):
        Horn(2, 1, {0: 0})
    with pytest.raises(IndexOutOfRange):
        Horn(2, 5, {0: 0, 1: 0})


def test_json_round_trip():
    X = wbar_b2a(AbelianGroup([3]), 3)
    obj = X.to_json()
    assert obj["levels"] == [1, 1, 1, 3]
    Y = TruncatedSSet.from_json(obj)
    assert Y.faces == X.faces
    assert Y.degeneracies == X.degeneracies
    ok, why = validate_simplicial(Y)
    assert ok, why


def test_dimension_bounds():
    with pytest.raises(DimensionBound):
        gamma_a2(Z2, 5)
    with pytest.raises(DimensionBound):
        cocycle_as_map(c2_nontrivial(), 5)
    with pytest.raises(DimensionBound):
        nerve_bg(dihedral(4), 7)
