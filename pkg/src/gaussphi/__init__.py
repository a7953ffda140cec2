"""Minimal Euclidean function on the Gaussian integers, minimal (1+i)-ary
expansions, and the octagonal point sets behind them."""

from ._backend import BACKEND
from .core import (
    GaussianInt,
    Unit,
    UnitTransform,
    conj,
    div_one_plus_i,
    format_gaussian,
    mul_one_plus_i,
    mul_unit,
    octant_normalize,
    parse_gaussian,
    two_valuation,
)
from .errors import (
    BudgetExceeded,
    ContractViolation,
    DigitError,
    GaussPhiError,
    NotDivisible,
    OutOfOracleRange,
    ParseError,
    RangeOverflow,
    RegionTooLarge,
    ZeroInput,
)
from .expansion import (
    Digit,
    Expansion,
    digits_to_text,
    eval_expansion,
    leading_term,
    minimal_expansion,
    text_to_digits,
)
from .growth import min_snowflake_index, w
from .oracle import LevelMap, assert_minimality, bfs_levels, euclidean_witness, phi_oracle
from .phi import Branch, PhiBreakdown, phi, phi_breakdown, phi_fast, phi_fast_batch
from .regions import (
    LayerTerm,
    RegionSpec,
    Scheme,
    enumerate_region,
    in_B,
    in_D,
    in_S,
    layer_decomposition,
)

__version__ = "0.1.0"
