"""Spatiotemporal prism complexes and Forman-Ricci curvature for
contact-sequence temporal networks."""

from .contacts import ContactEvent, ContactSequence, parse_contacts
from .complexes import (
    WeightedComplex,
    close_under_faces,
    euler_of,
    faces_of,
    flag_complex,
    parallel_edges,
    parallels,
    persistent_complex,
    simplex,
)
from .curvature import (
    TOL_EXACT,
    TOL_WEIGHTED,
    CurvatureRecord,
    alternating_forman_sum,
    coupling_decomposition,
    curvature_records,
    discrepancy_bound,
    discrepancy_closed_form,
    forman_augmented,
    forman_curvature,
    forman_edge,
    h_factor,
)
from .errors import DomainError, ParseError, SelfLoopError
from .generators import gen_ad, gen_bursty, gen_er, sample_activities
from .prisms import (
    EdgeClass,
    PrismComplex,
    WeightConfig,
    assign_weights,
    build_kst,
    classify_edge,
    prism,
    prism_simplices,
    unit_weighted,
)
from .stats import StatsSummary, figure_data, records_csv, render_csv, table_stats
from .verify import (
    VerificationReport,
    gauss_bonnet_report,
    inclusion_exclusion_euler,
    monotonicity_qualifies,
    run_suite,
)

__version__ = "0.1.0"
