"""tropcurve: exact tropical plane curves and enumerative invariants.

Max-plus polynomials with rational coefficients, their dual Newton
subdivisions and tropical curves, lattice-path counts of rational curves
(N_d) and Welschinger invariants (W_d), cross-checked against the
Kontsevich-Manin recursion.  All core arithmetic is exact.
"""

from .curve import (
    BoundedEdge,
    CurveStats,
    CurveVertex,
    Ray,
    Subdivision,
    SubdivisionEdge,
    TropicalCurve,
    check_balancing,
    curve_multiplicity,
    curve_stats,
    degree,
    dual_subdivision,
    extract_curve,
    first_betti,
    is_rational,
    is_simple,
    membership_oracle,
    node_count,
    point_on_curve,
    ray_census,
    vertex_multiplicity,
    welschinger_sign,
)
from .document import curve_document, read_document, write_document
from .errors import (
    BadDegreeError,
    CrossCheckMismatchError,
    DegenerateSupportError,
    DuplicateTermError,
    EmptySupportError,
    EmptyTableError,
    ImbalancedError,
    InvalidPathError,
    NegativeNError,
    NotSimpleError,
    NotStandardFormError,
    NotTrivalentError,
    ParseError,
    TropcurveError,
)
from .invariants import (
    AsymptoticRow,
    InvariantTable,
    TableRow,
    asymptotic_report,
    binomial,
    build_table,
    factorial_bound_check,
    km_count,
)
from .paths import (
    KIND_COMPLEX,
    KIND_WELSCHINGER,
    ORDER_ROWMAJOR,
    ORDER_XEY,
    SIDE_MINUS,
    SIDE_PLUS,
    PathDomain,
    PathMultiplicity,
    count_both,
    count_gw,
    count_welschinger,
    enumerate_paths,
    path_census,
    path_domain,
    path_multiplicity,
    side_multiplicity,
    validate_path,
)
from .polynomial import (
    TropicalPolynomial,
    format_rational,
    make_polynomial,
    parse_expression,
    parse_rational,
    parse_term_table,
    render,
)
from .svgout import render_svg

__version__ = "0.1.0"
