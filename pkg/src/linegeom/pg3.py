"""Concrete models: the lines of projective 3-space over GF(q).

Points are canonical 4-tuples over GF(q) whose first nonzero coordinate
is 1.  The line through two distinct points is encoded by the 6-tuple of
2x2 minors

    (p01, p02, p03, p23, p31, p12),   p_ij = P_i * Q_j - P_j * Q_i,

again scaled so the first nonzero entry is 1.  Every such tuple satisfies
the quadric relation p01*p23 + p02*p31 + p03*p12 = 0, and two lines meet
exactly when the polarized form

    L01*M23 + L02*M31 + L03*M12 + L23*M01 + L31*M02 + L12*M03

vanishes.  Swapping the two halves of the 6-tuple is an involution that
preserves this form and exchanges the lines through a point with the
lines in a plane, which realizes point/plane duality concretely.

Line ids are positions in the lexicographic ordering of the canonical
6-tuples, so identical fields always produce identical ids, and every
downstream report is reproducible.
"""

from dataclasses import dataclass, field as dataclass_field
from itertools import combinations, product
from typing import NamedTuple

import numpy as np

from .core import IncidenceStructure
from .gf import PrimeField


class ProjPoint(NamedTuple):
    x0: int
    x1: int
    x2: int
    x3: int


class PluckerLine(NamedTuple):
    p01: int
    p02: int
    p03: int
    p23: int
    p31: int
    p12: int


# index permutation realizing the half-swap duality on 6-tuples
_DUAL_ORDER = (3, 4, 5, 0, 1, 2)


def _check_coords(coords, field):
    for v in coords:
        if not (0 <= v < field.q):
            raise ValueError(f"coordinate {v} is not a canonical residue mod {field.q}")


def _canonical(coords, field):
    """Scale so the first nonzero coordinate is 1; reject the zero vector."""
    for v in coords:
        if v:
            if v == 1:
                return tuple(coords)
            s = field.inv(v)
            return tuple((x * s) % field.q for x in coords)
    raise ValueError("zero vector has no canonical form")


def enumerate_points(field):
    """All points of PG(3,q) as canonical 4-tuples, lexicographically ordered."""
    pts = []
    for coords in product(range(field.q), repeat=4):
        for v in coords:
            if v:
                if v == 1:
                    pts.append(ProjPoint(*coords))
                break
    return pts


def quadric_value(line, field):
    a, b, c, d, e, f = line
    return (a * d + b * e + c * f) % field.q


def line_from_points(p, q, field):
    """Canonical 6-tuple of the line through two distinct points."""
    _check_coords(p, field)
    _check_coords(q, field)
    m = field.q
    minors = (
        (p[0] * q[1] - p[1] * q[0]) % m,
        (p[0] * q[2] - p[2] * q[0]) % m,
        (p[0] * q[3] - p[3] * q[0]) % m,
        (p[2] * q[3] - p[3] * q[2]) % m,
        (p[3] * q[1] - p[1] * q[3]) % m,
        (p[1] * q[2] - p[2] * q[1]) % m,
    )
    if not any(minors):
        raise ValueError(f"degenerate input: {tuple(p)} and {tuple(q)} span no line")
    return PluckerLine(*_canonical(minors, field))


def lines_incident(line_a, line_b, field):
    """True iff the two lines meet (polarized quadric form vanishes)."""
    _check_coords(line_a, field)
    _check_coords(line_b, field)
    a, b, c, d, e, f = line_a
    u, v, w, x, y, z = line_b
    return (a * x + b * y + c * z + d * u + e * v + f * w) % field.q == 0


def dual_line(line, field):
    """Swap the two halves of the 6-tuple and re-canonicalize.

    An involution on lines that preserves incidence and exchanges
    point-pencils with plane-sets.
    """
    _check_coords(line, field)
    swapped = tuple(line[i] for i in _DUAL_ORDER)
    return PluckerLine(*_canonical(swapped, field))


def _lines_with_points(field, points):
    """Sorted canonical lines plus, per line, the sorted ids of its points."""
    acc = {}
    for i, j in combinations(range(len(points)), 2):
        tup = line_from_points(points[i], points[j], field)
        seen = acc.get(tup)
        if seen is None:
            acc[tup] = {i, j}
        else:
            seen.add(i)
            seen.add(j)
    lines = sorted(acc)
    line_points = tuple(tuple(sorted(acc[t])) for t in lines)
    return lines, line_points


def enumerate_lines(field):
    """All lines of PG(3,q), sorted lexicographically by canonical 6-tuple."""
    return _lines_with_points(field, enumerate_points(field))[0]


@dataclass(frozen=True)
class GroundTruth:
    """Coordinate-derived pencils, used only to validate abstract output.

    stars[p] lists the lines through point p; plane_sets[h] the lines
    inside plane h.  The abstract reconstruction never reads these.
    """

    stars: tuple
    plane_sets: tuple
    star_masks: tuple
    plane_set_masks: tuple


@dataclass
class PG3Model:
    field: PrimeField
    points: tuple
    planes: tuple
    lines: tuple
    line_points: tuple
    structure: IncidenceStructure
    ground_truth: GroundTruth
    dual_perm: tuple
    line_index: dict = dataclass_field(repr=False, default_factory=dict)

    @property
    def q(self):
        return self.field.q


def _incidence_rows(lines, q):
    arr = np.array(lines, dtype=np.int64)
    swapped = arr[:, list(_DUAL_ORDER)]
    rel = (arr @ swapped.T) % q == 0
    rows = []
    for i in range(len(lines)):
        packed = np.packbits(rel[i], bitorder="little").tobytes()
        rows.append(int.from_bytes(packed, "little"))
    return rows


def build_model(field):
    """Generate the full PG(3,q) model: lines, incidence, ground truth, duality."""
    q = field.q
    points = enumerate_points(field)
    lines, line_points = _lines_with_points(field, points)
    index = {t: i for i, t in enumerate(lines)}

    structure = IncidenceStructure(len(lines), _incidence_rows(lines, q), validate=False)

    stars = [[] for _ in points]
    for lid, pts in enumerate(line_points):
        for p in pts:
            stars[p].append(lid)

    # planes reuse the canonical 4-tuples as dual coordinates
    planes = [tuple(p) for p in points]
    point_sets = []
    for h in planes:
        members = set()
        for pid, p in enumerate(points):
            if (h[0] * p[0] + h[1] * p[1] + h[2] * p[2] + h[3] * p[3]) % q == 0:
                members.add(pid)
        point_sets.append(members)
    plane_sets = []
    for h_members in point_sets:
        in_plane = []
        for lid, pts in enumerate(line_points):
            if pts[0] in h_members and pts[1] in h_members:
                in_plane.append(lid)
        plane_sets.append(tuple(in_plane))

    star_masks = []
    for s in stars:
        m = 0
        for lid in s:
            m |= 1 << lid
        star_masks.append(m)
    plane_masks = []
    for s in plane_sets:
        m = 0
        for lid in s:
            m |= 1 << lid
        plane_masks.append(m)

    truth = GroundTruth(
        stars=tuple(tuple(s) for s in stars),
        plane_sets=tuple(plane_sets),
        star_masks=tuple(star_masks),
        plane_set_masks=tuple(plane_masks),
    )
    dual_perm = tuple(index[dual_line(t, field)] for t in lines)
    return PG3Model(
        field=field,
        points=tuple(points),
        planes=tuple(planes),
        lines=tuple(lines),
        line_points=line_points,
        structure=structure,
        ground_truth=truth,
        dual_perm=dual_perm,
        line_index=index,
    )
