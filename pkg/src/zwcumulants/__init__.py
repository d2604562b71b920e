"""Exact moment-cumulant calculus and convolution on words over {z, w}.

The package works with finite words over a two-letter alphabet.  Moment
families indexed by words are inverted into cumulant families through sums
over admissible partitions (partitions whose blocks never skip over a w);
the associated Moebius function has a closed form counting admissible
shuffles.  A filtered convolution of single-sequence ("hat") states makes
those cumulants additive, restricting to the classical convolution on pure-z
words and to the boolean convolution on pure-w words.  Truncated series over
the free semigroup carry the generating-function identities linking moments
and cumulants.  All arithmetic is exact: Fractions and symbolic polynomials
only.
"""

from .scalar import MissingSymbolError, MomentSymbol, Scalar, as_scalar, mu, nu
from .words import (
    BlockShape,
    EmptyWordError,
    block_factorial,
    block_shape,
    concat,
    factorizations,
    iter_words,
    parse_word,
    render_word,
    shortlex_key,
    w_count,
    words_of_length,
)
from .partitions import (
    NotAUnionOfBlocksError,
    NotComparableError,
    ParentMismatchError,
    Partition,
    Subword,
    enumerate_admissible,
    is_admissible,
    is_cumulant_subword,
    join,
    leq,
    meet,
    refines,
    restriction,
    segment,
)
from .mobius import (
    mobius_closed,
    mobius_incidence_series,
    mobius_recursive,
    mobius_table,
    shuffle_count,
)
from .cumulants import (
    CumulantFunction,
    GeneralMoments,
    HatMomentFunction,
    MomentFunction,
    NoWError,
    SequenceHat,
    SymbolicHat,
    classical_moment_cumulant,
    cumulant_subwords_first_w,
    cumulants_from_moments,
    cumulants_via_mobius,
    moment_cumulant_split,
    moments_from_cumulants,
    partition_cumulant,
    partition_moment,
    split_zones,
)
from .convolve import (
    LengthMismatchError,
    epsilon_moment,
    epsilon_split,
    filtered_convolve,
    restrict_boolean,
    restrict_classical,
)
from .sgalgebra import (
    BadSupportError,
    GeometricWeight,
    IdentityReport,
    NormBoundsReport,
    NotNormalizedError,
    SymbolicCoefficientError,
    TruncatedSeries,
    TruncationMismatchError,
    check_cumulant_gf_formula,
    check_gf_factorization,
    check_norm_bounds,
    cumulant_gf,
    delta_part,
    moment_gf,
    restrict_w,
    restrict_z,
    series_convolve,
    series_invert,
    series_invert_triangular,
    star_compose,
    weight_scaled_by_w_count,
    weighted_norm,
)

__version__ = "0.1.0"
