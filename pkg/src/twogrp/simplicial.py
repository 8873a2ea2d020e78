"""Truncated simplicial sets with explicit face and degeneracy tables.

Provides the nerve of a finite group, the Dold-Kan nerve of a chain complex
concentrated in degree 2, the simplicial classifying space of the resulting
simplicial abelian group together with its decalage, fiber products, horns,
and Kan-condition checking.
"""

import itertools

from .coeff import AbelianGroup
from .errors import (
    DegreeMismatch,
    DimensionBound,
    IndexOutOfRange,
    NotACocycle,
    ShapeMismatch,
    TruncationMismatch,
)

MAX_CELLS_PER_LEVEL = 1 << 20


class TruncatedSSet:
    """A simplicial set truncated at a fixed level.

    levels[n] is a list of hashable cell labels; faces[(n, i)] and
    degeneracies[(n, i)] are index tables.
    """

    def __init__(self, truncation, levels, faces, degeneracies, name=None):
        self.truncation = int(truncation)
        if len(levels) != self.truncation + 1:
            raise TruncationMismatch(
                "expected %d levels, got %d" % (self.truncation + 1, len(levels))
            )
        self.levels = [list(lv) for lv in levels]
        self.faces = {k: list(v) for k, v in faces.items()}
        self.degeneracies = {k: list(v) for k, v in degeneracies.items()}
        self.name = name
        self.label_index = [
            {label: i for i, label in enumerate(lv)} for lv in self.levels
        ]
        self._check_tables()
        self._filler_index = {}

    def _check_tables(self):
        for n in range(1, self.truncation + 1):
            for i in range(n + 1):
                tab = self.faces.get((n, i))
                if tab is None or len(tab) != self.size(n):
                    raise ShapeMismatch("missing or misshapen face table (%d,%d)" % (n, i))
                for x in tab:
                    if not 0 <= x < self.size(n - 1):
                        raise IndexOutOfRange("face (%d,%d) hits cell %d" % (n, i, x))
        for n in range(self.truncation):
            for i in range(n + 1):
                tab = self.degeneracies.get((n, i))
                if tab is None or len(tab) != self.size(n):
                    raise ShapeMismatch(
                        "missing or misshapen degeneracy table (%d,%d)" % (n, i)
                    )
                for x in tab:
                    if not 0 <= x < self.size(n + 1):
                        raise IndexOutOfRange(
                            "degeneracy (%d,%d) hits cell %d" % (n, i, x)
                        )

    def size(self, n):
        return len(self.levels[n])

    def face(self, n, i, x):
        return self.faces[(n, i)][x]

    def degeneracy(self, n, i, x):
        return self.degeneracies[(n, i)][x]

    def label(self, n, x):
        return self.levels[n][x]

    def index(self, n, label):
        return self.label_index[n][label]

    def face_vector(self, n, x):
        return tuple(self.faces[(n, i)][x] for i in range(n + 1))

    def to_json(self):
        obj = {
            "truncation": self.truncation,
            "levels": [self.size(n) for n in range(self.truncation + 1)],
            "faces": {
                "%d,%d" % k: list(v) for k, v in sorted(self.faces.items())
            },
            "degeneracies": {
                "%d,%d" % k: list(v) for k, v in sorted(self.degeneracies.items())
            },
        }
        return obj

    @classmethod
    def from_json(cls, obj):
        trunc = obj["truncation"]
        levels = [list(range(sz)) for sz in obj["levels"]]

        def parse(tables):
            out = {}
            for key, arr in tables.items():
                parts = key.split(",")
                if len(parts) != 2:
                    raise ShapeMismatch("bad table key %r" % key)
                out[(int(parts[0]), int(parts[1]))] = [int(x) for x in arr]
            return out

        return cls(trunc, levels, parse(obj["faces"]), parse(obj["degeneracies"]))


def _compose(outer, inner):
    return [outer[x] for x in inner]


def _first_mismatch(lhs, rhs):
    for x, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return x
    return None


def validate_simplicial(X):
    """Check every simplicial identity expressible within the truncation.
    Returns (True, None) or (False, description_string)."""
    N = X.truncation
    F, S = X.faces, X.degeneracies
    for n in range(2, N + 1):
        for j in range(n + 1):
            for i in range(j):
                lhs = _compose(F[(n - 1, i)], F[(n, j)])
                rhs = _compose(F[(n - 1, j - 1)], F[(n, i)])
                if lhs != rhs:
                    x = _first_mismatch(lhs, rhs)
                    return False, "d%d d%d != d%d d%d at level %d cell %d" % (
                        i, j, j - 1, i, n, x,
                    )
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                lhs = _compose(S[(n + 1, i)], S[(n, j)])
                rhs = _compose(S[(n + 1, j + 1)], S[(n, i)])
                if lhs != rhs:
                    x = _first_mismatch(lhs, rhs)
                    return False, "s%d s%d != s%d s%d at level %d cell %d" % (
                        i, j, j + 1, i, n, x,
                    )
    for n in range(N):
        identity = list(range(X.size(n)))
        for j in range(n + 1):
            for i in range(n + 2):
                got = _compose(F[(n + 1, i)], S[(n, j)])
                if i == j or i == j + 1:
                    want = identity
                elif i < j:
                    want = _compose(S[(n - 1, j - 1)], F[(n, i)])
                else:
                    want = _compose(S[(n - 1, j)], F[(n, i - 1)])
                if got != want:
                    x = _first_mismatch(got, want)
                    return False, "d%d s%d identity fails at level %d cell %d" % (
                        i, j, n, x,
                    )
    return True, None


class SimplicialMap:
    """A level-wise map of truncated simplicial sets."""

    def __init__(self, src, dst, components):
        if src.truncation != dst.truncation:
            raise TruncationMismatch("source and target truncations differ")
        self.src = src
        self.dst = dst
        self.components = [list(c) for c in components]
        if len(self.components) != src.truncation + 1:
            raise ShapeMismatch("need one component per level")
        for n, comp in enumerate(self.components):
            if len(comp) != src.size(n):
                raise ShapeMismatch("component %d has wrong length" % n)
            for y in comp:
                if not 0 <= y < dst.size(n):
                    raise IndexOutOfRange("component %d hits cell %d" % (n, y))

    def __call__(self, n, x):
        return self.components[n][x]

    def validate(self):
        """Check commutation with all faces and degeneracies.  Returns
        (True, None) or (False, description)."""
        comp = self.components
        for n in range(1, self.src.truncation + 1):
            for i in range(n + 1):
                lhs = _compose(self.dst.faces[(n, i)], comp[n])
                rhs = _compose(comp[n - 1], self.src.faces[(n, i)])
                if lhs != rhs:
                    x = _first_mismatch(lhs, rhs)
                    return False, "face (%d,%d) not preserved at cell %d" % (n, i, x)
        for n in range(self.src.truncation):
            for i in range(n + 1):
                lhs = _compose(self.dst.degeneracies[(n, i)], comp[n])
                rhs = _compose(comp[n + 1], self.src.degeneracies[(n, i)])
                if lhs != rhs:
                    x = _first_mismatch(lhs, rhs)
                    return False, "degeneracy (%d,%d) not preserved at cell %d" % (
                        n, i, x,
                    )
        return True, None

    def compose(self, other):
        """self after other."""
        if other.dst is not self.src and other.dst.levels != self.src.levels:
            raise ShapeMismatch("maps not composable")
        comps = [
            [self(n, other(n, x)) for x in range(other.src.size(n))]
            for n in range(other.src.truncation + 1)
        ]
        return SimplicialMap(other.src, self.dst, comps)


def identity_map(X):
    return SimplicialMap(X, X, [list(range(X.size(n))) for n in range(X.truncation + 1)])


def is_isomorphism(f):
    """Whether a validated simplicial map is a level-wise bijection."""
    for n in range(f.src.truncation + 1):
        if f.src.size(n) != f.dst.size(n):
            return False
        if len(set(f.components[n])) != f.src.size(n):
            return False
    return True


def inverse_map(f):
    comps = []
    for n in range(f.src.truncation + 1):
        inv = [0] * f.dst.size(n)
        for x, y in enumerate(f.components[n]):
            inv[y] = x
        comps.append(inv)
    return SimplicialMap(f.dst, f.src, comps)


# ---------------------------------------------------------------------------
# builders


def _guard_level(size):
    if size > MAX_CELLS_PER_LEVEL:
        raise DimensionBound("level would hold %d cells" % size)


_BUILDER_CACHE = {}


def _cached(kind, key, build):
    full = (kind,) + key
    if full not in _BUILDER_CACHE:
        _BUILDER_CACHE[full] = build()
    return _BUILDER_CACHE[full]


def nerve_bg(G, truncation=3):
    """The nerve of a finite group: level n is G^n, faces multiply adjacent
    entries or drop ends, degeneracies insert the identity."""
    return _cached("nerve", (G, truncation), lambda: _nerve_bg(G, truncation))


def _nerve_bg(G, truncation):
    N = truncation
    _guard_level(G.order**N)
    levels = [list(itertools.product(range(G.order), repeat=n)) for n in range(N + 1)]
    index = [{c: i for i, c in enumerate(lv)} for lv in levels]
    faces = {}
    degeneracies = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            tab = []
            for cell in levels[n]:
                if i == 0:
                    out = cell[1:]
                elif i == n:
                    out = cell[:-1]
                else:
                    out = cell[:i - 1] + (G.table[cell[i - 1]][cell[i]],) + cell[i + 1:]
                tab.append(index[n - 1][out])
            faces[(n, i)] = tab
    for n in range(N):
        for i in range(n + 1):
            degeneracies[(n, i)] = [
                index[n + 1][cell[:i] + (0,) + cell[i:]] for cell in levels[n]
            ]
    return TruncatedSSet(N, levels, faces, degeneracies, name="nerve")


def surjections_to_2(n):
    """Monotone surjections [n] -> [2] as value tuples, lexicographic."""
    if n < 2:
        return []
    out = []
    for cuts in itertools.combinations(range(1, n + 1), 2):
        tup = tuple(0 if j < cuts[0] else (1 if j < cuts[1] else 2) for j in range(n + 1))
        out.append(tup)
    return sorted(out)


class GammaA2:
    """The Dold-Kan nerve of the chain complex with A concentrated in
    degree 2, as a simplicial abelian group: level n is one copy of A per
    monotone surjection [n] ->> [2]."""

    def __init__(self, coeffs, truncation):
        self.coeffs = coeffs
        self.truncation = truncation
        self.surjections = [surjections_to_2(n) for n in range(truncation + 1)]
        self.surj_pos = [
            {s: i for i, s in enumerate(lv)} for lv in self.surjections
        ]

    def zero(self, n):
        return (self.coeffs.zero,) * len(self.surjections[n])

    def add(self, n, x, y):
        A = self.coeffs
        return tuple(A.add(a, b) for a, b in zip(x, y))

    def cells(self, n):
        return [
            tuple(vals)
            for vals in itertools.product(
                self.coeffs.elements(), repeat=len(self.surjections[n])
            )
        ]

    def face(self, n, i, x):
        A = self.coeffs
        out = list(self.zero(n - 1))
        pos = self.surj_pos[n - 1]
        for j, eta in enumerate(self.surjections[n]):
            image = eta[:i] + eta[i + 1:]
            target = pos.get(image)
            if target is not None:
                out[target] = A.add(out[target], x[j])
        return tuple(out)

    def degeneracy(self, n, i, x):
        A = self.coeffs
        out = list(self.zero(n + 1))
        pos = self.surj_pos[n + 1]
        for j, eta in enumerate(self.surjections[n]):
            image = eta[:i + 1] + eta[i:]
            target = pos[image]
            out[target] = A.add(out[target], x[j])
        return tuple(out)


def _sset_from_abelian(obj, truncation, name):
    levels = [obj.cells(n) for n in range(truncation + 1)]
    for lv in levels:
        _guard_level(len(lv))
    index = [{c: i for i, c in enumerate(lv)} for lv in levels]
    faces = {
        (n, i): [index[n - 1][obj.face(n, i, c)] for c in levels[n]]
        for n in range(1, truncation + 1)
        for i in range(n + 1)
    }
    degeneracies = {
        (n, i): [index[n + 1][obj.degeneracy(n, i, c)] for c in levels[n]]
        for n in range(truncation)
        for i in range(n + 1)
    }
    return TruncatedSSet(truncation, levels, faces, degeneracies, name=name)


def gamma_a2(A, truncation=4):
    """Gamma(A[2]) as a truncated simplicial set."""
    if truncation > 4:
        raise DimensionBound("gamma_a2 supports truncation at most 4")
    return _cached(
        "gamma", (A, truncation),
        lambda: _sset_from_abelian(GammaA2(A, truncation), truncation, "gamma"),
    )


class _WTotal:
    """W(Gamma(A[2])): level n is Gamma_n x ... x Gamma_0."""

    def __init__(self, coeffs, truncation):
        self.gamma = GammaA2(coeffs, truncation)
        self.truncation = truncation

    def cells(self, n):
        factors = [self.gamma.cells(j) for j in range(n, -1, -1)]
        return [tuple(c) for c in itertools.product(*factors)]

    def face(self, n, i, cell):
        # cell = (g_n, ..., g_0); entry at list position t is g_{n-t}
        g = list(cell)
        if i == n:
            return tuple(self.gamma.face(n - t, n - t, g[t]) for t in range(n))
        out = []
        for t in range(i):
            out.append(self.gamma.face(n - t, i - t, g[t]))
        merged = self.gamma.add(
            n - i - 1, self.gamma.face(n - i, 0, g[i]), g[i + 1]
        )
        out.append(merged)
        out.extend(g[i + 2:])
        return tuple(out)

    def degeneracy(self, n, i, cell):
        g = list(cell)
        out = []
        for t in range(i + 1):
            out.append(self.gamma.degeneracy(n - t, i - t, g[t]))
        out.append(self.gamma.zero(n - i))
        out.extend(g[i + 1:])
        return tuple(out)


class _WBar:
    """The classifying space of Gamma(A[2]): level n is
    Gamma_{n-1} x ... x Gamma_0, with operations transported from W by
    lifting along the unit section and dropping the leading factor."""

    def __init__(self, coeffs, truncation):
        self.w = _WTotal(coeffs, truncation)
        self.gamma = self.w.gamma
        self.truncation = truncation

    def cells(self, n):
        factors = [self.gamma.cells(j) for j in range(n - 1, -1, -1)]
        return [tuple(c) for c in itertools.product(*factors)]

    def _lift(self, n, cell):
        return (self.gamma.zero(n),) + cell

    def face(self, n, i, cell):
        return self.w.face(n, i, self._lift(n, cell))[1:]

    def degeneracy(self, n, i, cell):
        return self.w.degeneracy(n, i, self._lift(n, cell))[1:]


def w_b2a(A, truncation=3):
    """W(Gamma(A[2])), the total space of the universal bundle over the
    classifying space of B^2 A."""
    if truncation > 4:
        raise DimensionBound("w_b2a supports truncation at most 4")
    return _cached(
        "w", (A, truncation),
        lambda: _sset_from_abelian(_WTotal(A, truncation), truncation, "w"),
    )


def wbar_b2a(A, truncation=3):
    """The simplicial classifying space of Gamma(A[2])."""
    if truncation > 4:
        raise DimensionBound("wbar_b2a supports truncation at most 4")
    return _cached(
        "wbar", (A, truncation),
        lambda: _sset_from_abelian(_WBar(A, truncation), truncation, "wbar"),
    )


def decalage_map(A, truncation=3):
    """dec: W(B^2 A) -> Wbar(B^2 A), dropping the leading factor."""
    W = w_b2a(A, truncation)
    Wb = wbar_b2a(A, truncation)
    comps = [
        [Wb.index(n, W.label(n, x)[1:]) for x in range(W.size(n))]
        for n in range(truncation + 1)
    ]
    return SimplicialMap(W, Wb, comps)


def cocycle_as_map(alpha, truncation=3):
    """A normalized 3-cochain alpha as a simplicial map from the nerve of G
    to Wbar(B^2 A).

    At truncation 3 the map always exists; at truncation 4 the component on
    4-cells must satisfy five face constraints whose joint solvability at
    every 4-tuple is exactly the cocycle condition, so NotACocycle is raised
    with the first failing tuple.
    """
    if alpha.degree != 3:
        raise DegreeMismatch("expected a degree-3 cochain")
    if truncation not in (3, 4):
        raise DimensionBound("cocycle_as_map supports truncation 3 or 4")
    G, A = alpha.group, alpha.coeffs
    NG = nerve_bg(G, truncation)
    Wb = wbar_b2a(A, truncation)
    comps = [[0] * NG.size(n) for n in range(3)]
    level3 = []
    gam = GammaA2(A, truncation)
    triv = (gam.zero(1), gam.zero(0))
    for x in range(NG.size(3)):
        g1, g2, g3 = NG.label(3, x)
        cell = ((alpha.value((g1, g2, g3)),),) + triv
        level3.append(Wb.index(3, cell))
    comps.append(level3)
    if truncation == 4:
        level4 = []
        for x in range(NG.size(4)):
            g1, g2, g3, g4 = NG.label(4, x)
            d = alpha.value((g2, g3, g4))
            a = A.sub(alpha.value((G.table[g1][g2], g3, g4)), d)
            b = A.sub(alpha.value((g1, G.table[g2][g3], g4)), a)
            c = alpha.value((g1, g2, g3))
            if A.add(b, c) != alpha.value((g1, g2, G.table[g3][g4])):
                raise NotACocycle((g1, g2, g3, g4))
            cell = ((a, b, c), (d,), gam.zero(1), gam.zero(0))
            level4.append(Wb.index(4, cell))
        comps.append(level4)
    return SimplicialMap(NG, Wb, comps)


def fiber_product(f, g):
    """The level-wise pullback of f: X -> Z and g: Y -> Z, with its two
    projections."""
    if f.dst.levels != g.dst.levels or f.dst.truncation != g.dst.truncation:
        raise ShapeMismatch("maps have different codomains")
    X, Y = f.src, g.src
    N = X.truncation
    levels = []
    for n in range(N + 1):
        levels.append(
            [
                (x, y)
                for x in range(X.size(n))
                for y in range(Y.size(n))
                if f(n, x) == g(n, y)
            ]
        )
        _guard_level(len(levels[-1]))
    index = [{c: i for i, c in enumerate(lv)} for lv in levels]
    faces = {
        (n, i): [
            index[n - 1][(X.face(n, i, x), Y.face(n, i, y))] for x, y in levels[n]
        ]
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    degeneracies = {
        (n, i): [
            index[n + 1][(X.degeneracy(n, i, x), Y.degeneracy(n, i, y))]
            for x, y in levels[n]
        ]
        for n in range(N)
        for i in range(n + 1)
    }
    P = TruncatedSSet(N, levels, faces, degeneracies, name="fiber_product")
    proj_x = SimplicialMap(P, X, [[c[0] for c in levels[n]] for n in range(N + 1)])
    proj_y = SimplicialMap(P, Y, [[c[1] for c in levels[n]] for n in range(N + 1)])
    return P, proj_x, proj_y


def mediating_map(P, proj_x, proj_y, p, q):
    """The unique map into the fiber product P induced by p: T -> X and
    q: T -> Y with matching composites."""
    if p.src is not q.src and p.src.levels != q.src.levels:
        raise ShapeMismatch("p and q have different domains")
    comps = [
        [P.index(n, (p(n, t), q(n, t))) for t in range(p.src.size(n))]
        for n in range(p.src.truncation + 1)
    ]
    return SimplicialMap(p.src, P, comps)


# ---------------------------------------------------------------------------
# horns and the Kan condition


class Horn:
    """A compatible horn: faces[j] for j != missing at level n-1."""

    def __init__(self, n, missing, faces):
        if not 0 <= missing <= n:
            raise IndexOutOfRange("missing index out of range")
        faces = dict(faces)
        if sorted(faces) != [j for j in range(n + 1) if j != missing]:
            raise ShapeMismatch("horn must supply every face except the missing one")
        self.n = n
        self.missing = missing
        self.faces = faces

    def key(self):
        return tuple(self.faces[j] for j in sorted(self.faces))


def _filler_index(X, n, missing):
    cache = X._filler_index
    key = (n, missing)
    if key not in cache:
        table = {}
        tabs = [X.faces[(n, j)] for j in range(n + 1) if j != missing]
        for z, sig in enumerate(zip(*tabs)):
            table.setdefault(sig, []).append(z)
        cache[key] = table
    return cache[key]


def fillers(X, horn):
    """All cells whose faces extend the horn."""
    return list(_filler_index(X, horn.n, horn.missing).get(horn.key(), []))


def horn_is_compatible(X, horn):
    n = horn.n
    for k in sorted(horn.faces):
        for j in sorted(horn.faces):
            if j < k and n >= 2:
                if X.face(n - 1, j, horn.faces[k]) != X.face(n - 1, k - 1, horn.faces[j]):
                    return False
    return True


def enumerate_horns(X, n, missing):
    """All compatible (n, missing)-horns, by backtracking over face slots in
    increasing index order.

    Slots are filled in increasing face index, so every already-assigned
    slot j is below the current slot k and imposes d_j(x_k) = d_{k-1}(x_j).
    The first such constraint is resolved through an index of level-(n-1)
    cells by single face value, keeping the enumeration proportional to its
    output.
    """
    slots = [j for j in range(n + 1) if j != missing]
    out = []
    by_face = {}
    if n >= 2 and len(slots) > 1:
        for j in slots[:-1]:
            table = {}
            for z in range(X.size(n - 1)):
                table.setdefault(X.face(n - 1, j, z), []).append(z)
            by_face[j] = table

    def extend(assigned, depth):
        if depth == len(slots):
            out.append(Horn(n, missing, dict(assigned)))
            return
        k = slots[depth]
        if n >= 2 and assigned:
            j0 = slots[0]
            want = X.face(n - 1, k - 1, assigned[j0])
            candidates = by_face[j0].get(want, ())
        else:
            candidates = range(X.size(n - 1))
        for cand in candidates:
            ok = True
            if n >= 2:
                for j, cell in assigned.items():
                    if X.face(n - 1, j, cand) != X.face(n - 1, k - 1, cell):
                        ok = False
                        break
            if ok:
                assigned[k] = cand
                extend(assigned, depth + 1)
                del assigned[k]

    extend({}, 0)
    return out


def _unfilled_horn(X, n, missing):
    """The first compatible (n, missing)-horn without a filler, or None.

    Same enumeration as enumerate_horns, but works on bare face tables and
    signature tuples so the all-horns sweep stays cheap.
    """
    slots = [j for j in range(n + 1) if j != missing]
    filled = _filler_index(X, n, missing)
    ftabs = [X.faces[(n - 1, i)] for i in range(n)] if n >= 2 else None
    by_face = {}
    if n >= 2 and len(slots) > 1:
        j0 = slots[0]
        table = {}
        tab0 = ftabs[j0]
        for z in range(X.size(n - 1)):
            table.setdefault(tab0[z], []).append(z)
        by_face[j0] = table

    def extend(assigned):
        depth = len(assigned)
        if depth == len(slots):
            if tuple(a[1] for a in assigned) not in filled:
                return Horn(n, missing, {j: c for j, c in assigned})
            return None
        k = slots[depth]
        if n >= 2 and assigned:
            j0, c0 = assigned[0]
            candidates = by_face[j0].get(ftabs[k - 1][c0], ())
        else:
            candidates = range(X.size(n - 1))
        for cand in candidates:
            ok = True
            if n >= 2:
                for j, cell in assigned:
                    if ftabs[j][cand] != ftabs[k - 1][cell]:
                        ok = False
                        break
            if ok:
                assigned.append((k, cand))
                bad = extend(assigned)
                assigned.pop()
                if bad is not None:
                    return bad
        return None

    return extend([])


def is_kan(X, up_to=None):
    """Check that every compatible horn realizable within the truncation
    has at least one filler.  Returns (True, None) or (False, horn)."""
    N = up_to if up_to is not None else X.truncation
    N = min(N, X.truncation)
    for n in range(1, N + 1):
        for missing in range(n + 1):
            bad = _unfilled_horn(X, n, missing)
            if bad is not None:
                return False, bad
    return True, None
