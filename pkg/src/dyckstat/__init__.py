"""Dyck paths counted by the product of binomials read off their r-s array."""

from .counting import (
    count_L1,
    count_L2,
    count_L4,
    count_L6,
    count_L6_parts,
    count_Lk,
    count_Lp,
    count_rs,
    weighted_sum_eq1,
)
from .errors import (
    DomainError,
    DyckStatError,
    NotPrime,
    OracleBoundExceeded,
    WordError,
)
from .series import TruncatedSeries, ballot_number, gf_L2, gf_Lp, gf_rs, motzkin, motzkin_series
from .words import (
    CatalanWord,
    DyckWord,
    MotzkinWord,
    StarWord,
    asc_desc,
    l_statistic,
    parse_word,
    returns,
    rs_array,
)

__version__ = "0.1.0"
