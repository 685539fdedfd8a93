"""Exact computations in B_omega^F, I_omega^n(conv) and the matrix-units semigroups."""

from .bicyclic_ext import (
    BExtElt,
    BicyclicElt,
    BicyclicExtension,
    bicyclic_mul,
    ext_inv,
    ext_mul,
    rees_congruence_classes,
)
from .conv_iso import (
    ConvIso,
    ConvSemigroup,
    compose,
    inverse,
    iso_J,
    iso_J_inv,
    maximal_chains,
    maximal_idempotents,
    rank,
    up_set,
)
from .endomorphism import (
    Annihilate,
    Shift,
    Table,
    apply,
    classify_injective,
    compose_endos,
    injective_endo_monoid_check,
    table_of,
    verify_endomorphism,
)
from .matrix_units import (
    FiniteEndo,
    MatrixUnits,
    MatUnit,
    annihilating_endo,
    congruence_freeness_check,
    end_structure_report,
    endo_from_injection,
    enumerate_endomorphisms,
    mu_mul,
)
from .omega_family import (
    EMPTY,
    OmegaFamily,
    OmegaSet,
    family_F,
    initial_interval,
    is_omega_closed,
    shift_intersect,
)
from .zero import ZERO

__version__ = "0.1.0"
