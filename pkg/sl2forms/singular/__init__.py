from sl2forms.singular.vectors import (MFF_CASES, ResonancePoint, SingularityCertificate, compute_Xb, compute_Yb,
                                       generic_module, is_singular, leading_coefficient, mff_vector, proportional,
                                       verma_alphabet)
from sl2forms.singular.relations import (RelationCase, check_relation, resonance_relation, resonant_config,
                                         resonant_weights)
