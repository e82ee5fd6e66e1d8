"""Hilbert depth of squarefree monomial ideals, computed exactly.

The quotient S/I and the ideal I are described by alpha vectors (squarefree
monomial counts per degree); beta tables are their alternating binomial
transforms, and the Hilbert depth is the largest level whose beta table is
entrywise nonnegative.  The package bundles the Macaulay/Kruskal-Katona
machinery behind that criterion, exhaustive and randomized corpora of ideals,
and executable checkers for the depth-comparison results.
"""

from .combinatorics import (MacaulayRep, binom, binom_diff, kk_lower_bound,
                            kk_upper_bound, macaulay_rep)
from .corpus import (EnumerationPlan, SearchReport, VerifySummary,
                     alpha_census, compressed_complex_ideal, enumerate_ideals,
                     random_ideal, run_verification, search_counterexample)
from .depth import (BetaTable, HdepthReport, alpha_from_beta, beta_table,
                    hdepth, hdepth_report)
from .errors import CapacityError, DomainError, ParseError
from .ideals import (AlphaVector, Ideal, Monomial, alpha_of_ideal,
                     alpha_of_quotient, alpha_vector, parse_ideal)
from .theorems import (CheckOutcome, check_main, evaluate_profile,
                       reproduce_bound_tables, run_checks)

__version__ = "0.1.0"

__all__ = [
    "AlphaVector", "BetaTable", "CapacityError", "CheckOutcome", "DomainError",
    "EnumerationPlan", "HdepthReport", "Ideal", "MacaulayRep", "Monomial",
    "ParseError", "SearchReport", "VerifySummary", "alpha_census",
    "alpha_from_beta", "alpha_of_ideal", "alpha_of_quotient", "alpha_vector",
    "beta_table", "binom", "binom_diff", "check_main",
    "compressed_complex_ideal", "enumerate_ideals", "evaluate_profile",
    "hdepth", "hdepth_report", "kk_lower_bound", "kk_upper_bound",
    "macaulay_rep", "parse_ideal", "random_ideal", "reproduce_bound_tables",
    "run_checks", "run_verification", "search_counterexample",
]
