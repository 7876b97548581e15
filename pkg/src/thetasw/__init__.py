"""Exact mod-2 symbol arithmetic, Stiefel-Whitney classes of etale algebras,
and theta-characteristic combinatorics on hyperelliptic curves.

The package re-derives, by exact computation, every identity, count and class
value underlying the cohomology classes built from theta characteristics:
the quotient-ring model of mod-2 symbols, residue maps, trace forms and their
symmetric classes, Galois orbit decompositions of theta characteristics, and
the subset-product polynomial recursions.  `theta-sw verify all` runs the
whole battery from the command line.
"""

from .etale import EtaleAlgebra, alpha_total, product
from .polyrec import (
    IntPolynomial,
    Mod2Polynomial,
    big_phi,
    build_p,
    build_q,
    pol_part,
    ring_image,
    verify_identities,
)
from .quadform import (
    EVEN_TWISTED,
    ODD_TWISTED,
    DiagonalForm,
    MultiquadraticField,
    gsw_from_sw,
    pure_field,
    sw_classes,
    trace_form,
    w2_conic,
)
from .ring import Monomial, Ring, RingElement, elementary_symmetric, top_symmetric_class
from .symbols import (
    ResidueChain,
    SquareClass,
    class_symbol,
    residue,
    residue_chain,
    substitute,
    symbol,
)
from .theta import (
    AlphaClass,
    GaloisAction,
    ThetaChar,
    canonical_alpha,
    canonicalize,
    decompose,
    enumerate_thetas,
    field_of_definition,
    multiplicity_table,
    orbit,
    orbit_multiplicities,
    parity,
    translate,
)
from .verify import CheckResult, VerificationReport, run_suite

__version__ = "0.1.0"
