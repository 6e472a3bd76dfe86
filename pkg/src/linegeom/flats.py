"""Points and planes reconstructed as maximal line sets (flats).

For an incident pair a != b, the lines of nonpencil(a, b) fall into
incidence classes; split_classes verifies -- it never assumes -- that
there are exactly two and that each is a clique with no cross incidences.
Adjoining a witness c from either class to {a, b} and taking perp gives a
flat: the set of all lines through one point, or of all lines inside one
plane.  Which class plays which role cannot be read off locally (the two
roles are exchanged by duality), so kinds are fixed globally by
2-coloring the graph whose edges join disjoint flats: a point-flat and a
plane-flat are disjoint exactly when the point is off the plane, while
two flats of equal kind always share a line.  The color class holding the
lexicographically smallest flat is labeled POINT, an arbitrary but
reproducible choice; consumers that care only about the geometry treat
the labels as fixed up to one global swap.
"""

from collections import deque
from dataclasses import dataclass, replace

from .core import (
    DisconnectedFlatGraph,
    NotAnEquivalence,
    NotBipartite,
    bits,
    ids_of,
    nonpencil_mask,
)

POINT = "POINT"
PLANE = "PLANE"


@dataclass(frozen=True)
class ClassSplit:
    """The verified two-class split of nonpencil(a, b).

    low is the class containing the smallest line id; within each class
    all lines are pairwise incident, across classes all pairs are skew.
    """

    a: int
    b: int
    low: tuple
    high: tuple


def _split_masks(a, b, structure):
    sigma = nonpencil_mask(a, b, structure)
    if sigma == 0:
        raise NotAnEquivalence(
            f"pair ({a}, {b}): no line incident to both has a skew partner "
            "among such lines (0 classes, need 2)"
        )
    rows = structure.rows
    c0 = (sigma & -sigma).bit_length() - 1
    low = sigma & rows[c0]
    high = sigma ^ low
    if high == 0:
        raise NotAnEquivalence(f"pair ({a}, {b}): only one incidence class")
    for x in bits(low):
        if low & rows[x] != low:
            raise NotAnEquivalence(
                f"pair ({a}, {b}): class of line {c0} is not a clique at line {x}"
            )
    for x in bits(high):
        if high & rows[x] != high:
            raise NotAnEquivalence(
                f"pair ({a}, {b}): second class is not a clique at line {x}"
            )
        if low & rows[x]:
            raise NotAnEquivalence(
                f"pair ({a}, {b}): line {x} is incident across the class border"
            )
    return low, high


def split_classes(a, b, structure):
    """Split nonpencil(a, b) by incidence, verifying the two-class law."""
    low, high = _split_masks(a, b, structure)
    return ClassSplit(a=a, b=b, low=ids_of(low), high=ids_of(high))


def flat_of(a, b, c, structure):
    """perp({a, b, c}) for a witness c from either class of the pair a, b."""
    sigma = nonpencil_mask(a, b, structure)
    if not (sigma >> c) & 1:
        raise ValueError(
            f"line {c} is not a class member for the pair ({a}, {b})"
        )
    rows = structure.rows
    return ids_of(rows[a] & rows[b] & rows[c])


@dataclass(frozen=True)
class Flat:
    ident: int
    lines: tuple
    mask: int
    kind: str = None

    def __contains__(self, line_id):
        return bool((self.mask >> line_id) & 1)


class FlatCatalog:
    """All flats of a structure, with per-pair and per-line lookups.

    pair_to_flats maps each incident pair (a, b), a < b, to the ids of
    its two flats, the one generated by the class containing the smallest
    member first.  Pairs whose nonpencil set is empty generate no flats
    and are listed in degenerate_pairs; the axiom checkers, not the
    catalog, decide what that means for the structure.
    """

    def __init__(self, structure, flats, pair_to_flats, degenerate_pairs):
        self.structure = structure
        self.flats = tuple(flats)
        self.pair_to_flats = pair_to_flats
        self.degenerate_pairs = tuple(degenerate_pairs)
        self.by_mask = {f.mask: f.ident for f in self.flats}
        self.kinds_assigned = all(f.kind is not None for f in self.flats)
        self._line_flats = None

    def flats_of_kind(self, kind):
        return tuple(f for f in self.flats if f.kind == kind)

    @property
    def point_flats(self):
        return self.flats_of_kind(POINT)

    @property
    def plane_flats(self):
        return self.flats_of_kind(PLANE)

    def flats_through_line(self, line_id, kind=None):
        """Flats whose line set contains line_id, optionally filtered by kind."""
        if self._line_flats is None:
            table = [[] for _ in range(self.structure.n)]
            for f in self.flats:
                for l in f.lines:
                    table[l].append(f.ident)
            self._line_flats = tuple(tuple(v) for v in table)
        found = self._line_flats[line_id]
        if kind is None:
            return tuple(self.flats[i] for i in found)
        return tuple(self.flats[i] for i in found if self.flats[i].kind == kind)

    def _pair(self, a, b):
        key = (a, b) if a < b else (b, a)
        try:
            ids = self.pair_to_flats[key]
        except KeyError:
            self.structure.check_ids(a, b)
            if a == b:
                raise ValueError("join/meet need two distinct lines") from None
            if not self.structure.incident(a, b):
                raise ValueError(f"lines {a} and {b} are skew") from None
            raise NotAnEquivalence(
                f"pair ({a}, {b}) has no flats (empty class split)"
            ) from None
        return self.flats[ids[0]], self.flats[ids[1]]

    def join(self, a, b):
        """The POINT-kind flat containing the incident pair a, b."""
        if not self.kinds_assigned:
            raise ValueError("kinds not assigned; run bipartition_flats first")
        f, g = self._pair(a, b)
        return f if f.kind == POINT else g

    def meet(self, a, b):
        """The PLANE-kind flat containing the incident pair a, b."""
        if not self.kinds_assigned:
            raise ValueError("kinds not assigned; run bipartition_flats first")
        f, g = self._pair(a, b)
        return f if f.kind == PLANE else g

    def __len__(self):
        return len(self.flats)


def catalog_flats(structure):
    """Collect the distinct flats over all incident pairs (kinds unassigned)."""
    rows = structure.rows
    flats = []
    by_mask = {}
    pair_to_flats = {}
    degenerate = []
    for a, b in structure.incident_pairs():
        try:
            low, high = _split_masks(a, b, structure)
        except NotAnEquivalence as exc:
            if "0 classes" in str(exc):
                degenerate.append((a, b))
                continue
            raise
        pair_ids = []
        base = rows[a] & rows[b]
        for cls in (low, high):
            c = (cls & -cls).bit_length() - 1
            mask = base & rows[c]
            fid = by_mask.get(mask)
            if fid is None:
                fid = len(flats)
                by_mask[mask] = fid
                flats.append(Flat(ident=fid, lines=ids_of(mask), mask=mask))
            pair_ids.append(fid)
        pair_to_flats[(a, b)] = tuple(pair_ids)
    return FlatCatalog(structure, flats, pair_to_flats, degenerate)


def bipartition_flats(catalog, structure):
    """Assign POINT/PLANE kinds by 2-coloring the flat-disjointness graph.

    Requires the graph connected and bipartite; anything else means the
    structure does not behave like a projective 3-space.  The color class
    of the lexicographically smallest flat becomes POINT.
    """
    flats = catalog.flats
    if not flats:
        return FlatCatalog(structure, (), dict(catalog.pair_to_flats),
                           catalog.degenerate_pairs)
    k = len(flats)
    adjacency = [[] for _ in range(k)]
    for i in range(k):
        mi = flats[i].mask
        for j in range(i + 1, k):
            if mi & flats[j].mask == 0:
                adjacency[i].append(j)
                adjacency[j].append(i)
    color = [None] * k
    color[0] = 0
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in adjacency[i]:
            if color[j] is None:
                color[j] = 1 - color[i]
                queue.append(j)
            elif color[j] == color[i]:
                raise NotBipartite(
                    f"flats {i} and {j} are disjoint but forced to equal kind"
                )
    if any(c is None for c in color):
        missing = color.index(None)
        raise DisconnectedFlatGraph(
            f"flat {missing} is unreachable in the disjointness graph"
        )
    smallest = min(range(k), key=lambda i: flats[i].lines)
    point_color = color[smallest]
    labeled = [
        replace(f, kind=POINT if color[i] == point_color else PLANE)
        for i, f in enumerate(flats)
    ]
    return FlatCatalog(structure, labeled, dict(catalog.pair_to_flats),
                       catalog.degenerate_pairs)


def join(a, b, catalog):
    return catalog.join(a, b)


def meet(a, b, catalog):
    return catalog.meet(a, b)


def flat_intersection(flat_a, flat_b):
    """Sorted ids of the lines common to both flats."""
    return ids_of(flat_a.mask & flat_b.mask)
