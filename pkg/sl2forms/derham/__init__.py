from sl2forms.derham.basis import Config, DForm, DFunc, Elementary, PoleAt, PolyPow, parse_elementary
from sl2forms.derham.complex import (LogReduction, NotExact, TruncatedCohomology, Witness, function_basis,
                                     kappa_d_elementary, log_combination, log_form, reduce_to_log,
                                     truncated_cohomology, twisted_d, verify_relation)
from sl2forms.derham.resonance import ResonanceProfile, pole_order, resonance_profile, restricted_check
