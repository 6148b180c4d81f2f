"""Adjacency spectra of subdivided uniform hypergraphs.

Build hypergraph families, subdivide them, predict the spectrum of the
subdivision from reduced blocks and quotient matrices, and check every
prediction against a dense eigensolver.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BadParameters,
    CancellationImpossible,
    DanglingVertex,
    DuplicateEdge,
    EmptyEdge,
    HypergraphError,
    InputsIsomorphic,
    KTooSmall,
    NonRealRoot,
    NotAGraph,
    NotCospectralInput,
    NotEquitable,
    NotRegular,
    NotUniform,
    SameVertex,
    SingletonEdge,
    VertexOutOfRange,
)
from .hypergraph import (  # noqa: E402
    Hypergraph,
    adjacency_matrix,
    codegree,
    codegree_matrix,
    degree,
    incidence_matrix,
    is_linear,
    is_regular,
    is_uniform,
    new_hypergraph,
)
from .subdivision import SubdivisionResult, subdivide  # noqa: E402
from .spectra import (  # noqa: E402
    Polynomial,
    SpectrumMultiset,
    eigenvalues,
    multiset_equal,
    real_roots,
)
from .partitions import (  # noqa: E402
    Partition,
    QuotientMatrix,
    check_equitable,
    containment_check,
    refine_to_equitable,
)
from .predictors import (  # noqa: E402
    AuditResult,
    DiscrepancyReport,
    PredictedSpectrum,
    audit,
    predict,
    predict_graph_power,
    predict_hyperflower,
    predict_hyperstar,
    predict_petal_overlapped,
    predict_regular,
    predict_squid_like,
)
from .isomorphism import Verdict, are_isomorphic  # noqa: E402
from .cospectral import (  # noqa: E402
    CospectralCertificate,
    are_cospectral,
    power_subdivision_pair,
    subdivision_pair,
)
