from .exact import (Rat, PolyQ, RatFn, PolyX, poly_gcd, ratfn_normalize,
                    ratfn_arith, ratfn_eval, ratfn_eval_at_one,
                    ratfn_subst_qpow, polyx_subst_x, polyx_eval_int)
from .exceptions import (QGenError, UndefinedGcdError, DivisionByZeroError,
                         PoleError, ParseError, ParityError,
                         OracleDomainError, IdentityError, UnevaluableError,
                         ConfigError)
from .schemas import Family, StarVariant, BracketQuotient, OutputFormat
from .identities import (IdentityReport, catalog, verify, first_failure,
                         errata, run_suite)
from .oracle import Enclosure, check_closed_form
