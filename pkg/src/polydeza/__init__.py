"""Regular polyhedral graphs and their common-neighbour types.

The package builds plane graphs from rotation systems, generates the
quartic and cubic polyhedra (via quadrangulations and triangulations),
transforms them (dual, medial, radial, line graph, T-construction) and
classifies regular planar graphs by the set ``A`` of common-neighbour
counts over vertex pairs.

>>> from polydeza import fixture, type_profile
>>> sorted(type_profile(fixture("cube")).a_set)
[0, 2]
"""

from .analysis import (
    FaceStats,
    TypeProfile,
    common_neighbors,
    face_stats,
    four_cycle_witness,
    girth,
    has_separating_4cycle,
    is_k_connected,
    is_polyhedron,
    k2r_witness,
    prop30_report,
    prop1223_report,
    square_pyramid_witness,
    type_profile,
    vertex_connectivity,
)
from .classify import (
    SCHEMA_VERSION,
    DezaClass,
    SuiteReport,
    TypePrediction,
    classify_planar_regular,
    is_deza,
    predict_type_regular,
    run_suite,
)
from .codecs import (
    decode_graph6,
    decode_planar_code,
    encode_graph6,
    encode_planar_code,
    read_graph6,
    write_graph6,
)
from .errors import PolydezaError
from .fixtures import FIXTURE_NAMES, all_fixtures, fixture
from .generate import (
    expand_A,
    expand_B,
    gen_cubic_polyhedra,
    gen_quadrangulations,
    gen_quartic_polyhedra,
    gen_triangulations,
    pseudo_double_wheel,
)
from .graph import AbstractGraph, PlaneGraph, build_plane, canonical_code, dual, embed
from .oracle import oracle_regular_planar
from .populations import parse_population
from .transforms import (
    TSite,
    face_sites,
    line_graph,
    medial,
    medial_preimage,
    radial,
    t_construct,
    t_decompose,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
