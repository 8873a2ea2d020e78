"""The correspondence between the Duskin nerve of a skeletal 2-group and
the homotopy-fiber model of its associator.

Both sides are built as truncated simplicial sets: the Duskin nerve from
coherence data of G_alpha, the fiber model both explicitly (with the cell
labels and face values of the pullback of the cocycle map along the
decalage) and generically (as a level-wise fiber product).  The canonical
isomorphism is produced in coordinates and machine-checked, along with
simplicial validity, agreement of the two pullback constructions, and the
Kan property of the nerve.
"""

import itertools

from .errors import DegreeMismatch
from .simplicial import (
    SimplicialMap,
    TruncatedSSet,
    cocycle_as_map,
    decalage_map,
    fiber_product,
    fillers,
    Horn,
    identity_map,
    inverse_map,
    is_isomorphism,
    is_kan,
    mediating_map,
    nerve_bg,
    validate_simplicial,
    w_b2a,
    wbar_b2a,
)
from .twogroup import TwoGroupSkeleton


def duskin_nerve(skeleton):
    """The Duskin nerve of G_alpha, truncated at level 3.

    Cells: one point; 1-cells the objects of G; 2-cells (f, g, t) with edge
    01 = f, edge 12 = g, edge 02 = fg and interior 2-morphism t in A;
    3-cells (f, g, h, t0, t1, t2, t3) carrying one 2-morphism per face,
    subject to the compositor identity

        t0 + t2 = alpha(f, g, h) + t1 + t3,

    the two routes through the interior of the tetrahedron.
    """
    G, A, alpha = skeleton.group, skeleton.coeffs, skeleton.alpha
    level0 = [()]
    level1 = list(range(G.order))
    level2 = [
        (f, g, t)
        for f in range(G.order)
        for g in range(G.order)
        for t in A.elements()
    ]
    level3 = []
    for f, g, h in itertools.product(range(G.order), repeat=3):
        av = alpha.value((f, g, h))
        for t1 in A.elements():
            for t2 in A.elements():
                for t3 in A.elements():
                    t0 = A.sub(A.add(av, A.add(t1, t3)), t2)
                    level3.append((f, g, h, t0, t1, t2, t3))
    levels = [level0, level1, level2, level3]
    index = [{c: i for i, c in enumerate(lv)} for lv in levels]
    zero = A.zero
    mul = G.table

    faces = {}
    faces[(1, 0)] = [0] * len(level1)
    faces[(1, 1)] = [0] * len(level1)
    faces[(2, 0)] = [index[1][g] for f, g, t in level2]
    faces[(2, 1)] = [index[1][mul[f][g]] for f, g, t in level2]
    faces[(2, 2)] = [index[1][f] for f, g, t in level2]
    faces[(3, 0)] = [index[2][(g, h, t0)] for f, g, h, t0, t1, t2, t3 in level3]
    faces[(3, 1)] = [index[2][(mul[f][g], h, t1)] for f, g, h, t0, t1, t2, t3 in level3]
    faces[(3, 2)] = [index[2][(f, mul[g][h], t2)] for f, g, h, t0, t1, t2, t3 in level3]
    faces[(3, 3)] = [index[2][(f, g, t3)] for f, g, h, t0, t1, t2, t3 in level3]

    degeneracies = {}
    degeneracies[(0, 0)] = [index[1][0]]
    degeneracies[(1, 0)] = [index[2][(0, f, zero)] for f in level1]
    degeneracies[(1, 1)] = [index[2][(f, 0, zero)] for f in level1]
    degeneracies[(2, 0)] = [
        index[3][(0, f, g, t, t, zero, zero)] for f, g, t in level2
    ]
    degeneracies[(2, 1)] = [
        index[3][(f, 0, g, zero, t, t, zero)] for f, g, t in level2
    ]
    degeneracies[(2, 2)] = [
        index[3][(f, g, 0, zero, zero, t, t)] for f, g, t in level2
    ]
    return TruncatedSSet(3, levels, faces, degeneracies, name="duskin")


def pullback_model(skeleton):
    """The explicit homotopy-fiber model: one point, 1-cells the elements
    of G, 2-cells (f, g, a), and 3-cells (f, g, h, a, b, c) whose faces
    carry a+d, a+b, b+c and c with d = alpha(f, g, h)."""
    G, A, alpha = skeleton.group, skeleton.coeffs, skeleton.alpha
    level0 = [()]
    level1 = list(range(G.order))
    level2 = [
        (f, g, a)
        for f in range(G.order)
        for g in range(G.order)
        for a in A.elements()
    ]
    level3 = [
        (f, g, h, a, b, c)
        for f, g, h in itertools.product(range(G.order), repeat=3)
        for a in A.elements()
        for b in A.elements()
        for c in A.elements()
    ]
    levels = [level0, level1, level2, level3]
    index = [{c: i for i, c in enumerate(lv)} for lv in levels]
    zero = A.zero
    mul = G.table

    def dval(f, g, h):
        return alpha.value((f, g, h))

    faces = {}
    faces[(1, 0)] = [0] * len(level1)
    faces[(1, 1)] = [0] * len(level1)
    faces[(2, 0)] = [index[1][g] for f, g, a in level2]
    faces[(2, 1)] = [index[1][mul[f][g]] for f, g, a in level2]
    faces[(2, 2)] = [index[1][f] for f, g, a in level2]
    faces[(3, 0)] = [
        index[2][(g, h, A.add(a, dval(f, g, h)))] for f, g, h, a, b, c in level3
    ]
    faces[(3, 1)] = [
        index[2][(mul[f][g], h, A.add(a, b))] for f, g, h, a, b, c in level3
    ]
    faces[(3, 2)] = [
        index[2][(f, mul[g][h], A.add(b, c))] for f, g, h, a, b, c in level3
    ]
    faces[(3, 3)] = [index[2][(f, g, c)] for f, g, h, a, b, c in level3]

    degeneracies = {}
    degeneracies[(0, 0)] = [index[1][0]]
    degeneracies[(1, 0)] = [index[2][(0, f, zero)] for f in level1]
    degeneracies[(1, 1)] = [index[2][(f, 0, zero)] for f in level1]
    degeneracies[(2, 0)] = [
        index[3][(0, f, g, a, zero, zero)] for f, g, a in level2
    ]
    degeneracies[(2, 1)] = [
        index[3][(f, 0, g, zero, a, zero)] for f, g, a in level2
    ]
    degeneracies[(2, 2)] = [
        index[3][(f, g, 0, zero, zero, a)] for f, g, a in level2
    ]
    return TruncatedSSet(3, levels, faces, degeneracies, name="pullback")


def canonical_iso(duskin, pullback, coeffs):
    """The coordinate isomorphism from the Duskin nerve to the explicit
    pullback model: identity below level 3, and on 3-cells

        a = t1 - t2 + t3,  b = t2 - t3,  c = t3.
    """
    A = coeffs
    comps = [
        [0],
        list(range(duskin.size(1))),
        [pullback.index(2, duskin.label(2, x)) for x in range(duskin.size(2))],
    ]
    level3 = []
    for x in range(duskin.size(3)):
        f, g, h, t0, t1, t2, t3 = duskin.label(3, x)
        a = A.add(A.sub(t1, t2), t3)
        b = A.sub(t2, t3)
        c = t3
        level3.append(pullback.index(3, (f, g, h, a, b, c)))
    comps.append(level3)
    return SimplicialMap(duskin, pullback, comps)


class TheoremReport:
    """Per-stage outcome of the end-to-end verification."""

    def __init__(self, group, coeffs):
        self.group = group
        self.coeffs = coeffs
        self.stages = []
        self.counts = {}

    @property
    def ok(self):
        return all(st["ok"] for st in self.stages)

    def record(self, name, ok, witness=None):
        self.stages.append(
            {"name": name, "ok": bool(ok), "witness": _plainify(witness)}
        )
        return ok

    def to_json(self):
        return {
            "group": {"name": self.group.name, "order": self.group.order},
            "coeffs": list(self.coeffs.invariant_factors),
            "ok": self.ok,
            "stages": self.stages,
            "counts": self.counts,
        }


def _plainify(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Horn):
        return {
            "n": obj.n,
            "missing": obj.missing,
            "faces": {str(k): v for k, v in sorted(obj.faces.items())},
        }
    if isinstance(obj, (tuple, list)):
        return [_plainify(x) for x in obj]
    return repr(obj)


_STATIC_CACHE = {}


def _static_objects(G, A):
    """The alpha-independent pieces of the verification (nerve, W, Wbar,
    decalage) with their validation results, cached per (G, A)."""
    key = (G, A)
    if key not in _STATIC_CACHE:
        NG = nerve_bg(G, 3)
        W = w_b2a(A, 3)
        Wb = wbar_b2a(A, 3)
        dec = decalage_map(A, 3)
        checks = {}
        for X, tag in ((NG, "nerve"), (W, "w"), (Wb, "wbar")):
            ok, witness = validate_simplicial(X)
            checks["simplicial:%s" % tag] = (ok, witness)
        checks["map:decalage"] = dec.validate()
        _STATIC_CACHE[key] = (NG, W, Wb, dec, checks)
    return _STATIC_CACHE[key]


def verify_theorem(alpha, check_kan=True):
    """Machine-check that the Duskin nerve of G_alpha is isomorphic to the
    pullback of the cocycle map along the decalage, stage by stage."""
    if alpha.degree != 3:
        raise DegreeMismatch("expected a degree-3 cochain")
    G, A = alpha.group, alpha.coeffs
    report = TheoremReport(G, A)

    # construction: skeleton validation plus all simplicial objects
    skeleton = TwoGroupSkeleton(alpha)
    duskin = duskin_nerve(skeleton)
    model = pullback_model(skeleton)
    NG, W, Wb, dec, static_checks = _static_objects(G, A)
    amap = cocycle_as_map(alpha, 3)
    report.record("construction", True)
    report.counts["duskin_levels"] = [duskin.size(n) for n in range(4)]
    report.counts["pullback_levels"] = [model.size(n) for n in range(4)]
    report.counts["w_levels"] = [W.size(n) for n in range(4)]
    report.counts["wbar_levels"] = [Wb.size(n) for n in range(4)]

    # simplicial validity of every object and map involved; the
    # alpha-independent results come from the per-(G, A) cache
    for X, tag in ((duskin, "duskin"), (model, "pullback")):
        ok, witness = validate_simplicial(X)
        report.record("simplicial:%s" % tag, ok, witness)
    for tag in ("nerve", "w", "wbar"):
        ok, witness = static_checks["simplicial:%s" % tag]
        report.record("simplicial:%s" % tag, ok, witness)
    ok, witness = static_checks["map:decalage"]
    report.record("map:decalage", ok, witness)
    ok, witness = amap.validate()
    report.record("map:cocycle_map", ok, witness)
    amap4 = cocycle_as_map(alpha, 4)
    ok, witness = amap4.validate()
    report.record("map:cocycle_map_level4", ok, witness)

    # the canonical isomorphism and its inverse
    iso = canonical_iso(duskin, model, A)
    ok, witness = iso.validate()
    report.record("iso:forward", ok, witness)
    report.record("iso:bijective", is_isomorphism(iso))
    inv = inverse_map(iso)
    ok, witness = inv.validate()
    report.record("iso:backward", ok, witness)
    round_trip = inv.compose(iso)
    report.record(
        "iso:round_trip",
        round_trip.components == identity_map(duskin).components,
    )

    # the explicit model agrees with the generic fiber product
    P, proj_ng, proj_w = fiber_product(amap, dec)
    report.counts["fiber_product_levels"] = [P.size(n) for n in range(4)]
    ok, witness = validate_simplicial(P)
    report.record("simplicial:fiber_product", ok, witness)
    to_ng = _model_to_nerve(model, NG, skeleton)
    to_w = _model_to_w(model, W, skeleton)
    for f, tag in ((to_ng, "model_to_nerve"), (to_w, "model_to_w")):
        ok, witness = f.validate()
        report.record("map:%s" % tag, ok, witness)
    same_composite = all(
        amap(n, to_ng(n, x)) == dec(n, to_w(n, x))
        for n in range(4)
        for x in range(model.size(n))
    )
    report.record("agreement:composites_match", same_composite)
    med = mediating_map(P, proj_ng, proj_w, to_ng, to_w)
    ok, witness = med.validate()
    report.record("agreement:mediating_map", ok, witness)
    report.record("agreement:bijective", is_isomorphism(med))

    # the Kan property of the nerve, with filler counts in degree 2
    if check_kan:
        ok, witness = is_kan(duskin)
        report.record("kan:duskin", ok, witness)
        counts = _degree2_filler_counts(duskin)
        report.counts["duskin_degree2_filler_counts"] = sorted(set(counts))
        report.record(
            "kan:degree2_filler_count", all(c == A.order for c in counts)
        )
    return report


def _model_to_nerve(model, NG, skeleton):
    """Forget the A-coordinates of the explicit model."""
    comps = [
        [0],
        [NG.index(1, (model.label(1, x),)) for x in range(model.size(1))],
        [NG.index(2, model.label(2, x)[:2]) for x in range(model.size(2))],
        [NG.index(3, model.label(3, x)[:3]) for x in range(model.size(3))],
    ]
    return SimplicialMap(model, NG, comps)


def _model_to_w(model, W, skeleton):
    """Project the explicit model onto its W(B^2 A) coordinates."""
    A, alpha = skeleton.coeffs, skeleton.alpha
    level2 = []
    for x in range(model.size(2)):
        f, g, a = model.label(2, x)
        level2.append(W.index(2, ((a,), (), ())))
    level3 = []
    for x in range(model.size(3)):
        f, g, h, a, b, c = model.label(3, x)
        d = alpha.value((f, g, h))
        level3.append(W.index(3, ((a, b, c), (d,), (), ())))
    comps = [[0], [0] * model.size(1), level2, level3]
    return SimplicialMap(model, W, comps)


def _degree2_filler_counts(X):
    """Number of fillers of every compatible inner and outer 2-horn."""
    from .simplicial import enumerate_horns

    counts = []
    for missing in range(3):
        for horn in enumerate_horns(X, 2, missing):
            counts.append(len(fillers(X, horn)))
    return counts
