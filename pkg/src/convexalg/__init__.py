"""Exact convex-space algebra with law checkers and a service front end.

Core layers:

- rational / fdist: exact scalars, probabilities, finite distributions
- spaces: binary convex spaces and the concrete instances
- multiary: the n-ary combination operator and its law checkers
- conical: scaled points, the additive envelope of a convex space
- hull: membership witnesses and the union-split decomposition
- analysis: float-side convexity checks and divergence
- registry / service / cli: named instances, HTTP endpoints, terminal
"""

from .analysis import (
    FUNCTIONS,
    RealFn,
    Tolerance,
    check_convex_in,
    check_div_convexity,
    check_div_nonneg,
    concave_at,
    convex_at,
    div,
    get_function,
    log_ext,
    second_derivative_test,
)
from .checking import Counterexample, LawReport, LawResult, law_rng, run_law
from .conical import (
    ZERO,
    Scaled,
    ScaledPoint,
    ScaledSpace,
    addpt,
    avgn,
    check_conical_laws,
    check_entropic_identity,
    check_s1_convn,
    convpt,
    point_of,
    s1,
    scaleR,
    scaled_sum,
    scalept,
    weight,
)
from .errors import (
    ArityMismatchError,
    ConvexAlgError,
    DegenerateIntervalError,
    DimensionMismatchError,
    InvalidDistributionError,
    NegativeScaleError,
    NotDominatedError,
    OutOfRangeError,
    ParseError,
    UnknownFunctionError,
    UnknownInstanceError,
    ZeroDenominatorError,
    ZeroPointError,
)
from .fdist import (
    FiniteDist,
    IndexMap,
    Permutation,
    StochasticMatrix,
    mix_rows,
    partition_inner,
    permute_dist,
    pushforward,
    rho_dist,
)
from .hull import (
    ConvexSetSpec,
    HullSplit,
    HullWitness,
    check_convex_set,
    check_hull_reconstruction,
    hull_eval,
    hull_union_split,
    mix_witnesses,
    witness_from_json,
    witness_to_json,
)
from .multiary import (
    binconv_from_convn,
    check_multiary_laws,
    convn,
    convn_with_binary,
)
from .rational import Prob, Rat, complement, parse_prob, parse_rational, r_of, s_of
from .registry import INSTANCES, full_law_suite, get_instance, instance_names
from .spaces import (
    ConvexSpace,
    DistSpace,
    DominatedPair,
    DominatedPairSpace,
    FirstProjectionLine,
    RatLine,
    RatVectorSpace,
    check_binary_laws,
    dominates,
)

__version__ = "0.1.0"
