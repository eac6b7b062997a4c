"""Geodetic graph analysis.

Tools for classifying graphs by geodesic multiplicity, finding even-cycle
witnesses of nongeodeticity, building and checking embedded even graphs,
testing K4 subdivisions, and cross-validating the structural checks against
a brute-force shortest-path count.
"""

from __future__ import annotations

from .cycles import (
    CycleView,
    Lemma1Verdict,
    OppositePair,
    c_opposite_pairs,
    enumerate_cycles,
    lemma1_scan,
    minimal_even_cycles,
    validate_cycle_in,
)
from .embedding import (
    ChordArcParity,
    Condition1Report,
    Condition2Report,
    ConditionReport,
    EmbeddedGraph,
    EmbeddedSpec,
    EmbeddednessReport,
    ForbiddenCycle,
    SpecValidation,
    adjacent_chord_cycle_lengths,
    build,
    check_condition1,
    check_condition2,
    check_embeddedness,
    evaluate_spec,
    format_spec_line,
    parse_spec_file,
    parse_spec_line,
    predict_class,
    validate_spec,
)
from .families import (
    complete_graph,
    cycle_graph,
    cycle_with_chord,
    path_graph,
    petersen_graph,
    subdivided_k4,
)
from .geodesics import (
    GeodesicPaths,
    GeodesicProfile,
    GeodeticClass,
    classify_k,
    count_geodesics,
    enumerate_geodesics,
)
from .graphs import (
    DistanceTable,
    Graph,
    GraphError,
    all_pairs_distances,
    bfs_distances,
    diameter,
    format_edge_list,
    from_edge_list,
    is_connected,
    load_edge_list,
    parse_edge_list,
)
from .harness import (
    ChordSystemMatch,
    ChordSystemSearch,
    Corollary4Verdict,
    PairPropertyReport,
    PairViolation,
    SearchLimits,
    SweepBounds,
    SweepFinding,
    compositions,
    corollary4_check,
    enumerate_specs,
    find_chord_system,
    finding_record,
    sweep_validate,
    theorem2_pair_property,
)
from .homeomorph import (
    SegmentDecomposition,
    Theorem1Report,
    decompose_segments,
    four_segment_cycles,
    is_homeomorphic_to_k4,
    theorem1_check,
    three_segment_cycles,
)
from .reports import (
    SCHEMA,
    ReportError,
    dump_report,
    iter_findings,
    load_report,
    make_report,
    read_findings,
    write_findings,
)

__version__ = "0.1.0"

__all__ = [
    "ChordArcParity",
    "ChordSystemMatch",
    "ChordSystemSearch",
    "Condition1Report",
    "Condition2Report",
    "ConditionReport",
    "Corollary4Verdict",
    "CycleView",
    "DistanceTable",
    "EmbeddedGraph",
    "EmbeddedSpec",
    "EmbeddednessReport",
    "ForbiddenCycle",
    "GeodesicPaths",
    "GeodesicProfile",
    "GeodeticClass",
    "Graph",
    "GraphError",
    "Lemma1Verdict",
    "OppositePair",
    "PairPropertyReport",
    "PairViolation",
    "ReportError",
    "SCHEMA",
    "SearchLimits",
    "SegmentDecomposition",
    "SpecValidation",
    "SweepBounds",
    "SweepFinding",
    "Theorem1Report",
    "adjacent_chord_cycle_lengths",
    "all_pairs_distances",
    "bfs_distances",
    "build",
    "c_opposite_pairs",
    "check_condition1",
    "check_condition2",
    "check_embeddedness",
    "classify_k",
    "complete_graph",
    "compositions",
    "corollary4_check",
    "count_geodesics",
    "cycle_graph",
    "cycle_with_chord",
    "decompose_segments",
    "diameter",
    "dump_report",
    "enumerate_cycles",
    "enumerate_geodesics",
    "enumerate_specs",
    "evaluate_spec",
    "find_chord_system",
    "finding_record",
    "format_edge_list",
    "format_spec_line",
    "four_segment_cycles",
    "from_edge_list",
    "is_connected",
    "is_homeomorphic_to_k4",
    "iter_findings",
    "lemma1_scan",
    "load_edge_list",
    "load_report",
    "make_report",
    "minimal_even_cycles",
    "parse_edge_list",
    "parse_spec_file",
    "parse_spec_line",
    "path_graph",
    "petersen_graph",
    "predict_class",
    "read_findings",
    "sweep_validate",
    "theorem1_check",
    "theorem2_pair_property",
    "three_segment_cycles",
    "validate_cycle_in",
    "validate_spec",
    "write_findings",
]
