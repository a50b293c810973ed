from sl2forms.affine.lie import transpose_anti
from sl2forms.dualform.shapovalov import (DualVector, GramFactorization, GramMatrix, contragradient_act, dual_monomial,
                                          dual_vacuum, factor_gram_determinant, gram_determinant, shapovalov_apply,
                                          shapovalov_entry, shapovalov_gram, shapovalov_inverse_apply,
                                          shapovalov_pairing)
from sl2forms.dualform.identities import (IdentityCheck, e_correction_duals, e_pairs, f_correction_duals, f_pairs,
                                          verify_identity_a, verify_identity_b)
