"""Abstract line-incidence structures and the common-incidence operator.

Lines are integers 0..n-1.  Incidence is a symmetric reflexive relation
stored as one Python-int bitmask per line (bit j of row i set iff lines i
and j are incident).  Everything downstream -- points, planes, triads,
tetrads -- is derived from this relation alone; no coordinates enter.

The central operator is perp(S): the set of lines incident to every line
of S.  For an incident pair a != b, nonpencil(a, b) is the part of
perp({a, b}) whose members admit a skew partner inside perp({a, b}); in a
projective-space model it consists of the lines through the common point
that leave the common plane plus the lines in the common plane that miss
the common point, and incidence restricted to it splits it into exactly
those two classes.
"""

from itertools import combinations


class ModelInvalidError(Exception):
    """The structure violates a law that holds in every projective-space model."""


class NotAnEquivalence(ModelInvalidError):
    """Incidence restricted to nonpencil(a, b) is not a two-class equivalence."""


class NotBipartite(ModelInvalidError):
    """The flat-disjointness graph admits no two-coloring."""


class DisconnectedFlatGraph(ModelInvalidError):
    """The flat-disjointness graph is disconnected; kinds cannot be fixed globally."""


class EquivalenceBroken(ModelInvalidError):
    """The three rotated class-membership conditions of a triple disagree."""


class MixedTriadTypes(ModelInvalidError):
    """A pairwise-incident quadruple contains triads of both types."""


class NonSingletonIntersection(ModelInvalidError):
    """A flat intersection expected to be a single line is not."""


class DegenerateDiagonals(ModelInvalidError):
    """The seven lines of a tetrad-plus-diagonals figure are not pairwise distinct."""


class NotATetrad(ValueError):
    """Operation requires a tetrad but the quadruple is not one."""


class DegenerateQuadrangle(ValueError):
    """Quadrangle input violates the no-three-collinear / planarity preconditions."""


def bits(mask):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def ids_of(mask):
    """Sorted tuple of the set bit positions of mask."""
    return tuple(bits(mask))


def mask_of(ids):
    m = 0
    for i in ids:
        m |= 1 << i
    return m


class IncidenceStructure:
    """n lines with a symmetric reflexive incidence relation as bit-rows."""

    __slots__ = ("n", "rows", "full_mask")

    def __init__(self, n, rows, validate=True):
        if n < 1:
            raise ValueError("structure needs at least one line")
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        self.n = n
        self.rows = tuple(rows)
        self.full_mask = (1 << n) - 1
        if validate:
            self._validate()

    def _validate(self):
        full = self.full_mask
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")
            if not (row >> i) & 1:
                raise ValueError(f"relation not reflexive at line {i}")
            for j in bits(row):
                if not (self.rows[j] >> i) & 1:
                    raise ValueError(f"relation not symmetric at pair ({i}, {j})")

    @classmethod
    def from_pairs(cls, n, pairs):
        """Build from non-reflexive incident pairs; closure is applied."""
        rows = [1 << i for i in range(n)]
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"pair ({i}, {j}) out of range for n={n}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, rows, validate=False)

    @classmethod
    def from_matrix(cls, matrix):
        n = len(matrix)
        rows = []
        for i in range(n):
            m = 0
            for j in range(n):
                if matrix[i][j]:
                    m |= 1 << j
            rows.append(m)
        return cls(n, rows)

    def check_ids(self, *ids):
        for i in ids:
            if not (0 <= i < self.n):
                raise ValueError(f"line id {i} out of range 0..{self.n - 1}")

    def incident(self, i, j):
        self.check_ids(i, j)
        return bool((self.rows[i] >> j) & 1)

    def degree(self, i):
        """Number of lines incident to line i, including i itself."""
        return self.rows[i].bit_count()

    def incident_pairs(self):
        """All incident pairs (i, j) with i < j, in lexicographic order."""
        for i in range(self.n):
            for j in bits(self.rows[i] >> (i + 1)):
                yield i, i + 1 + j

    def pair_count(self):
        return sum(self.rows[i].bit_count() - 1 for i in range(self.n)) // 2

    def __eq__(self, other):
        return (
            isinstance(other, IncidenceStructure)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"IncidenceStructure(n={self.n}, pairs={self.pair_count()})"


def perp_mask(member_mask, structure):
    """Bitmask of all lines incident to every line in member_mask.

    Empty member set yields the full line set (empty intersection
    convention).  For larger member sets, the rows of the first few
    members prune the candidates before each survivor is verified
    against the whole set, which keeps the hot [a b] case cheap.
    """
    if member_mask == 0:
        return structure.full_mask
    rows = structure.rows
    count = member_mask.bit_count()
    if count <= 8:
        acc = structure.full_mask
        for m in bits(member_mask):
            acc &= rows[m]
            if acc == 0:
                return 0
        return acc
    it = bits(member_mask)
    acc = structure.full_mask
    for _ in range(8):
        acc &= rows[next(it)]
        if acc == 0:
            return 0
    out = 0
    for x in bits(acc):
        if member_mask & rows[x] == member_mask:
            out |= 1 << x
    return out


def perp(members, structure):
    """Sorted ids of all lines incident to every line of members."""
    m = 0
    for i in members:
        structure.check_ids(i)
        m |= 1 << i
    return ids_of(perp_mask(m, structure))


def is_skew(a, b, structure):
    structure.check_ids(a, b)
    return not (structure.rows[a] >> b) & 1


def nonpencil_mask(a, b, structure):
    """Mask form of nonpencil(a, b); see module docstring."""
    structure.check_ids(a, b)
    if a == b:
        raise ValueError("nonpencil needs two distinct lines")
    if not (structure.rows[a] >> b) & 1:
        raise ValueError(f"nonpencil needs an incident pair; {a} and {b} are skew")
    common = structure.rows[a] & structure.rows[b]
    core = perp_mask(common, structure)
    return common ^ core  # core is a subset of common


def nonpencil(a, b, structure):
    """Lines incident to both a and b that have a skew partner among such lines."""
    return ids_of(nonpencil_mask(a, b, structure))


def contains_skew_pair(members, structure):
    """Lexicographically first skew pair within members, or None."""
    m = 0
    for i in members:
        structure.check_ids(i)
        m |= 1 << i
    full = structure.full_mask
    for x in bits(m):
        partners_above = (m & (full ^ structure.rows[x])) >> (x + 1)
        if partners_above:
            y = x + 1 + (partners_above & -partners_above).bit_length() - 1
            return (x, y)
    return None


def pairwise_incident(ids, structure):
    """True iff every two of the given lines are incident."""
    rows = structure.rows
    return all((rows[i] >> j) & 1 for i, j in combinations(ids, 2))
