"""Exact computations in combinatorial Hantzsche-Wendt groups G_n and their automorphisms."""

from .automorphisms import (
    FR,
    AutoWord,
    Delta,
    Eps,
    GEndomorphism,
    Perm,
    SemiLinearPair,
    Trans,
    alpha_fr,
    alpha_perm,
    apply,
    check_von_dyck,
    compose,
    delta,
    eps,
    evaluate,
    induced_matrix,
    induced_pair,
    induced_w,
    inner,
    inner_witness,
    invert_word,
    is_semilinear,
    named,
    sn_section,
    to_endomorphism,
    translation_part,
)
from .cohomology import (
    CohClass,
    extension_class,
    h1_w,
    h2_cyclic,
    h2_w,
    is_torsion_free_class,
    torsion_free_classes,
)
from .group import (
    GroupElement,
    append_letter,
    conjugate,
    embed_a,
    enumerate_ball,
    invert,
    multiply,
    power,
    project_w,
    square_shifted,
)
from .lattice import (
    IntMatrix,
    SNFResult,
    act,
    cokernel_invariants,
    commutant_is_diagonal,
    fixed_sublattice,
    rho,
    smith_normal_form,
)
from .monoid import (
    TranslationMatrix,
    decompose,
    delta_conjugate,
    iota,
    is_unit,
    star,
    unit_inverse,
)
from .parsing import parse_autoword, parse_element, parse_word
from .verification import SuiteReport, run_all, run_suite
from .words import (
    ReducedWord,
    WAutomorphism,
    sign_vector,
    w_apply,
    w_compose,
    w_equal,
    w_fr_auto,
    w_multiply,
    w_perm_auto,
)

__version__ = "0.1.0"
