"""Skeletal 2-groups from normalized 3-cocycles.

A skeleton has objects the elements of a finite group G, only identity
1-morphisms, and 2-morphism data in an abelian group A; the associator is a
normalized 3-cochain alpha.  Coherence is checked by evaluating both routes
around each diagram and comparing, never by delegating to the cocycle
kernel, so the two certificates stay independent.
"""

import itertools

from .cochain import is_cocycle
from .errors import DegreeMismatch, NotACocycle, NotNormalized


class TwoGroupSkeleton:
    """G_alpha: group of objects, coefficient group of 2-cell data, and the
    associator cochain."""

    def __init__(self, alpha):
        if alpha.degree != 3:
            raise DegreeMismatch("associator must be a degree-3 cochain")
        witness = alpha.normalization_witness()
        if witness is not None:
            raise NotNormalized(witness)
        ok, witness = is_cocycle(alpha)
        if not ok:
            raise NotACocycle(witness)
        self.group = alpha.group
        self.coeffs = alpha.coeffs
        self.alpha = alpha

    def associator(self, x, y, z):
        return self.alpha.value((x, y, z))

    def __repr__(self):
        return "TwoGroupSkeleton(|G|=%d, A=%s)" % (
            self.group.order,
            list(self.coeffs.invariant_factors),
        )


def check_pentagon(alpha):
    """Evaluate both reassociation routes ((wx)y)z ~> w(x(yz)).

    Route A goes through (wx)(yz) in two steps; route B goes through
    (w(xy))z and w((xy)z) in three.  Returns (True, None) or (False,
    (w, x, y, z)) for the lexicographically first mismatch.
    """
    G, A = alpha.group, alpha.coeffs
    mul = G.table
    for w, x, y, z in itertools.product(range(G.order), repeat=4):
        route_a = A.add(alpha.value((mul[w][x], y, z)), alpha.value((w, x, mul[y][z])))
        route_b = A.add(
            A.add(alpha.value((w, x, y)), alpha.value((w, mul[x][y], z))),
            alpha.value((x, y, z)),
        )
        if route_a != route_b:
            return False, (w, x, y, z)
    return True, None


def check_triangle(alpha):
    """The unit coherence (x . e) . y ~> x . (e . y): both whiskered unitor
    routes agree iff alpha(x, e, y) vanishes."""
    G, A = alpha.group, alpha.coeffs
    zero = A.zero
    for x, y in itertools.product(range(G.order), repeat=2):
        if alpha.value((x, 0, y)) != zero:
            return False, (x, y)
    return True, None


def check_zigzag(alpha, x, ev, coev):
    """Whether (ev, coev) in A^2 make the element x dualizable with dual
    x^{-1}: both snake composites must reduce to identity 2-cells.

    The left snake (id_x . ev) o (coev . id_x) picks up the associator
    alpha(x, x^{-1}, x); the right snake picks up alpha(x^{-1}, x, x^{-1})
    with the opposite orientation.
    """
    G, A = alpha.group, alpha.coeffs
    xbar = G.inv(x)
    zero = A.zero
    left = A.add(A.add(coev, alpha.value((x, xbar, x))), ev)
    right = A.add(A.sub(coev, alpha.value((xbar, x, xbar))), ev)
    return left == zero and right == zero


def duality_data(alpha, x):
    """All (ev, coev) pairs witnessing duality of x against x^{-1}, by
    exhaustive search over A^2."""
    A = alpha.coeffs
    found = []
    for ev in A.elements():
        for coev in A.elements():
            if check_zigzag(alpha, x, ev, coev):
                found.append((ev, coev))
    return found


def check_duality(alpha):
    """Every object of a skeletal 2-group is dualizable; verify that each x
    admits at least one (ev, coev) pair.  Returns (ok, witness_object)."""
    for x in range(alpha.group.order):
        if not duality_data(alpha, x):
            return False, x
    return True, None


def monoidal_functor_check(alpha_src, alpha_dst, j):
    """Whether the 2-cochain j makes the identity-on-objects functor
    monoidal from G_{alpha_src} to G_{alpha_dst}.

    The hexagon for the structure cells reads, additively,
        j(x, y) + j(xy, z) + alpha_dst(x, y, z)
            = alpha_src(x, y, z) + j(y, z) + j(x, yz).
    Returns (True, None) or (False, (x, y, z)).
    """
    alpha_src._compat(alpha_dst)
    if j.degree != 2 or j.group != alpha_src.group or j.coeffs != alpha_src.coeffs:
        raise DegreeMismatch("structure cells must form a degree-2 cochain")
    G, A = alpha_src.group, alpha_src.coeffs
    mul = G.table
    for x, y, z in itertools.product(range(G.order), repeat=3):
        lhs = A.add(
            A.add(j.value((x, y)), j.value((mul[x][y], z))),
            alpha_dst.value((x, y, z)),
        )
        rhs = A.add(
            A.add(alpha_src.value((x, y, z)), j.value((y, z))),
            j.value((x, mul[y][z])),
        )
        if lhs != rhs:
            return False, (x, y, z)
    return True, None


class FusionObject:
    """An object of the fusion category Vect_alpha(G): a multiplicity
    vector over the elements of G."""

    def __init__(self, group, multiplicities):
        mult = tuple(int(m) for m in multiplicities)
        if len(mult) != group.order:
            raise DegreeMismatch("need one multiplicity per group element")
        if any(m < 0 for m in mult):
            raise ValueError("multiplicities must be non-negative")
        self.group = group
        self.multiplicities = mult

    @classmethod
    def simple(cls, group, x):
        mult = [0] * group.order
        mult[x] = 1
        return cls(group, mult)

    def __eq__(self, other):
        return (
            isinstance(other, FusionObject)
            and self.group == other.group
            and self.multiplicities == other.multiplicities
        )

    def __repr__(self):
        return "FusionObject(%r)" % (self.multiplicities,)

    def dim(self):
        return sum(self.multiplicities)

    def dual(self):
        inv = [0] * self.group.order
        for x, m in enumerate(self.multiplicities):
            inv[self.group.inv(x)] = m
        return FusionObject(self.group, inv)


def fusion_tensor(a, b):
    """Convolution product: (a . b)(g) = sum over xy = g of a(x) b(y)."""
    if a.group != b.group:
        raise DegreeMismatch("objects live over different groups")
    G = a.group
    out = [0] * G.order
    for x, mx in enumerate(a.multiplicities):
        if not mx:
            continue
        for y, my in enumerate(b.multiplicities):
            if my:
                out[G.table[x][y]] += mx * my
    return FusionObject(G, out)
