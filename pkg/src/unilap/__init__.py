"""Exact counting of Laplacian eigenvalues below one for unicyclic graphs."""

from .bounds import (
    BoundReport,
    analyze,
    compass_bounds,
    domination_number,
    lollipop_exact_count,
    main_lower_bound,
    refined_lollipop_bound,
)
from .charpoly import (
    IntPolynomial,
    charpoly_det,
    eval_at,
    phi_aux,
    phi_cycle,
    phi_lollipop,
    phi_path,
    verify_charpoly_identities,
)
from .enumeration import enumerate_unicyclic, rooted_trees
from .graphs import (
    CompassParams,
    CoreClassification,
    Graph,
    UnicyclicDecomposition,
    diameter_and_path,
    disjoint_union,
    girth,
    join_with_edge,
    make_compass,
    make_cycle,
    make_lollipop,
    make_path,
    read_edge_list,
    reduce_to_core,
    unicyclic_decompose,
    write_edge_list,
)
from .harness import SweepRow, VerifyReport, run_suite, sweep, write_csv
from .linalg import ExactMatrix, Inertia, Rational, inertia, nullity
from .spectra import (
    IntervalCount,
    check_interlacing,
    closed_form_spectrum,
    count_interval,
    laplacian,
    laplacian_apply,
    multiplicity,
    spectrum_float,
)
from .witnesses import (
    WitnessVector,
    compass_one_witness,
    cycle_one_vectors,
    lollipop_one_witness,
    path_one_vector,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CompassParams",
    "CoreClassification",
    "ExactMatrix",
    "Graph",
    "Inertia",
    "IntPolynomial",
    "IntervalCount",
    "Rational",
    "SweepRow",
    "UnicyclicDecomposition",
    "VerifyReport",
    "WitnessVector",
    "analyze",
    "charpoly_det",
    "check_interlacing",
    "closed_form_spectrum",
    "compass_bounds",
    "compass_one_witness",
    "count_interval",
    "cycle_one_vectors",
    "diameter_and_path",
    "disjoint_union",
    "domination_number",
    "enumerate_unicyclic",
    "eval_at",
    "girth",
    "inertia",
    "join_with_edge",
    "laplacian",
    "laplacian_apply",
    "lollipop_exact_count",
    "lollipop_one_witness",
    "main_lower_bound",
    "make_compass",
    "make_cycle",
    "make_lollipop",
    "make_path",
    "multiplicity",
    "nullity",
    "path_one_vector",
    "phi_aux",
    "phi_cycle",
    "phi_lollipop",
    "phi_path",
    "read_edge_list",
    "reduce_to_core",
    "refined_lollipop_bound",
    "rooted_trees",
    "run_suite",
    "spectrum_float",
    "sweep",
    "unicyclic_decompose",
    "verify_charpoly_identities",
    "write_csv",
    "write_edge_list",
]
