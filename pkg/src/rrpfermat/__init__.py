"""Exact-arithmetic criteria checker for x^r + y^r = z^p over Q and real
quadratic fields.

Everything here is computed over the integers (or explicit residue rings);
there is no floating point anywhere on a decision path.  The top-level API
re-exports the pieces most callers need; the modules themselves are:

    cycfield     exact arithmetic in Q(zeta_r + 1/zeta_r)
    ffpoly       GF(2)[x] and GF(2^f), distinct-degree factorization
    galoisring   GR(2^n, f) and the exact 2-adic unit square root
    splitting    decomposition of 2 and r in Q+ and in Q(sqrt(d), theta)
    classnumber  Maillet-determinant h^- parity, external h+ table
    frey         the curve Y^2 = X(X-A)(X+B), invariants, valuations
    descent      S-unit descent step and norm-residue obstructions
    criteria     tri-state verdict engine and range scans
    cli          command-line front end
"""

__version__ = "0.1.0"

from .criteria import (  # noqa: F401
    check_corollary_Q,
    check_corollary_quad,
    check_four_hypotheses,
    scan_Q,
)
from .cycfield import build_field  # noqa: F401
