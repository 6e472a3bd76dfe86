"""Exact verification of line-based models of projective 3-space.

The library builds concrete models PG(3,q) over prime fields in Plucker
line coordinates, treats any symmetric reflexive line-incidence relation
as an abstract structure, reconstructs points and planes as line sets,
checks the incidence axioms, classifies triads and tetrads, constructs
tetrad diagonals, and decides whether the harmonicity property (diagonals
of a tetrad form a triad of like type) holds, fails, or is mixed.
"""

__version__ = "0.1.0"

from .gf import PrimeField, FieldElement
from .core import (
    IncidenceStructure,
    perp,
    is_skew,
    nonpencil,
    contains_skew_pair,
    ModelInvalidError,
    NotAnEquivalence,
    NotBipartite,
    DisconnectedFlatGraph,
    EquivalenceBroken,
    MixedTriadTypes,
    NonSingletonIntersection,
    DegenerateDiagonals,
    NotATetrad,
    DegenerateQuadrangle,
)
from .pg3 import (
    ProjPoint,
    PluckerLine,
    enumerate_points,
    enumerate_lines,
    line_from_points,
    lines_incident,
    dual_line,
    build_model,
    PG3Model,
    GroundTruth,
)
from .flats import (
    POINT,
    PLANE,
    Flat,
    ClassSplit,
    FlatCatalog,
    split_classes,
    flat_of,
    catalog_flats,
    bipartition_flats,
    join,
    meet,
    flat_intersection,
)
from .axioms import (
    AxiomVerdict,
    TheoremVerdict,
    AllVerdicts,
    check_axiom1,
    check_axiom2,
    check_axiom3,
    check_axiom4,
    check_all,
)
from .tetra import (
    TripleClass,
    QuadClass,
    DiagonalTriple,
    TypeSurvey,
    HarmonicityReport,
    classify_triple,
    classify_quadruple,
    diagonals_of_tetrad,
    check_harmonic,
    survey_harmonicity,
    quadrangle_diagonal_points_collinear,
    section_by_plane,
    census_triples,
)
from .report_io import (
    ModelFile,
    ParseError,
    parse_model,
    parse_model_file,
    serialize_model,
    model_digest,
    emit_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
