"""escalier: reconstruct hidden Groebner staircases and reduced bases
through canonical-form oracle queries, with a toy cryptanalysis harness."""

from .crypto import (
    AttackResult,
    Ciphertext,
    KeyPair,
    NcProbeReport,
    PublicKey,
    attack_commutative,
    decrypt,
    encrypt,
    keygen,
    nc_attack_probe,
    recover_basis_element,
)
from .errors import ParseError
from .field import DEFAULT_PRIME
from .forge import BoundDemo, ForgedPair, build_counterexample, demonstrate_bound_necessity
from .nc_polynomials import (
    NcPolynomial,
    nc_normal_form,
    overlap_check,
    parse_free_file,
    parse_nc_polynomial,
    render_free_file,
)
from .oracle import CanOracle, serve, serve_line
from .peeling import candidate_terms, covering_basis, peel
from .polynomials import (
    GroebnerBasis,
    Polynomial,
    buchberger,
    gb_degree,
    is_groebner,
    lead_degree,
    normal_form,
    parse_ideal_file,
    parse_polynomial,
    render_ideal_file,
    s_polynomial,
)
from .staircase import (
    CaseTag,
    ProbeOutcome,
    StaircaseResult,
    brute_force_generators,
    classify,
    diagonal_probe,
    parse_result,
    reconstruct,
    reconstruct_2var,
    render_result,
)
from .terms import Box, TermOrder, box_enumerate, divides, lcm, predecessor
from .words import WordOrder, concat, split_left, split_right, subword_occurrences

__version__ = "0.1.0"
