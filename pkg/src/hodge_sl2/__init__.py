"""Exact classification of horizontal SL(2)s and R-split PMHS on Mumford-Tate domains."""
from .root_system import (CartanType, LeviSubsystem, RootSystem, SizeLimitError, WeylGroup,
                          build_root_system, enumerate_levis, enumerate_weyl, identify_type,
                          subsystem_base)
from .rep_weights import (HighestWeight, HodgeNumbers, WeightSystem, adjoint_weight_system,
                          hodge_numbers, weight_system, weyl_dimension)
from .real_forms import (CompactCharVector, RealFormLabel, RootParity, compact_characteristic_vector,
                         compact_simple_system, identify_real_form, split_roots)
from .nilpotent_orbits import (enumerate_char_vectors, is_even_jm, jm_filtration_dims,
                               jm_parabolic_classes, partition_char_vector)
from .sl2_classifier import (DeligneDiamond, MTDomainSpec, SL2Class, admits_hodge_tate,
                             central_split, classify, codim1_count, deligne_diamond,
                             is_distinguished, levi_real_form_labels, orbit_codim,
                             period_domain_ht_check)

__version__ = "0.1.0"
