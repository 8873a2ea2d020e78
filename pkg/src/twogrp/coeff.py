"""Finite abelian coefficient groups in invariant-factor form.

Elements are plain tuples of residues, one per invariant factor, written
additively.  The empty factor list gives the trivial group and the empty
tuple its only element.
"""

import itertools

from .errors import InvalidFactor, ShapeMismatch


class AbelianGroup:
    """A finite abelian group presented as Z_{m1} x ... x Z_{mk}."""

    def __init__(self, invariant_factors):
        factors = tuple(int(m) for m in invariant_factors)
        for m in factors:
            if m < 2:
                raise InvalidFactor("invariant factors must be >= 2, got %r" % (m,))
        self.invariant_factors = factors
        self.order = 1
        for m in factors:
            self.order *= m
        self.zero = (0,) * len(factors)
        self._elements = None
        self._index = None

    def __repr__(self):
        return "AbelianGroup(%s)" % list(self.invariant_factors)

    def __eq__(self, other):
        return (
            isinstance(other, AbelianGroup)
            and self.invariant_factors == other.invariant_factors
        )

    def __hash__(self):
        return hash(self.invariant_factors)

    def check(self, x):
        if len(x) != len(self.invariant_factors):
            raise ShapeMismatch(
                "element %r has %d residues, group has %d factors"
                % (x, len(x), len(self.invariant_factors))
            )
        for r, m in zip(x, self.invariant_factors):
            if not 0 <= r < m:
                raise ShapeMismatch("residue %r out of range for factor %d" % (r, m))

    # Arithmetic assumes operands are valid elements (checked on entry into
    # the library via check()); keeping the hot paths bare matters for the
    # cell-level scans.

    def add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.invariant_factors))

    def neg(self, x):
        return tuple((-a) % m for a, m in zip(x, self.invariant_factors))

    def sub(self, x, y):
        return tuple((a - b) % m for a, b, m in zip(x, y, self.invariant_factors))

    def scale(self, n, x):
        return tuple((n * a) % m for a, m in zip(x, self.invariant_factors))

    def elements(self):
        """All elements in lexicographic order, zero first."""
        if self._elements is None:
            self._elements = [
                tuple(t)
                for t in itertools.product(*(range(m) for m in self.invariant_factors))
            ]
            self._index = {e: i for i, e in enumerate(self._elements)}
        return self._elements

    def index(self, x):
        self.elements()
        try:
            return self._index[tuple(x)]
        except KeyError:
            self.check(tuple(x))
            raise

    def add_index(self, i, j):
        els = self.elements()
        return self.index(self.add(els[i], els[j]))

    def addition_table(self):
        """Flat |A|^2 table of element-index sums, row-major."""
        els = self.elements()
        n = len(els)
        return [self.index(self.add(els[i], els[j])) for i in range(n) for j in range(n)]

    def negation_table(self):
        els = self.elements()
        return [self.index(self.neg(e)) for e in els]

    def to_json(self):
        return {"invariant_factors": list(self.invariant_factors)}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["invariant_factors"])


def ab_make(invariant_factors):
    return AbelianGroup(invariant_factors)


def ab_add(A, x, y):
    A.check(x)
    A.check(y)
    return A.add(x, y)


def ab_neg(A, x):
    A.check(x)
    return A.neg(x)


def ab_enumerate(A):
    return list(A.elements())
