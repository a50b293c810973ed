from sl2forms.chainmap.tensor import (Chain1, GlobalSl2Func, SiteConfig, TensorCheck, TensorDual, chain_term,
                                      replace_factor, site_tensor, sl2_elementary, sl2_function, vacuum_tensor)
from sl2forms.chainmap.laurent import expand_elementary, laurent_coeffs, lowest_order, multiply, multiply_funcs
from sl2forms.chainmap.action import (central_residue, derivative_in_point, lie_action_check, mu_act, mu_chain,
                                      pointwise_bracket, scalar_part, site_action)
from sl2forms.chainmap.eta import (InjectivityCheck, eta0, eta0_elementary, eta1, eta1_elementary,
                                   eta_injectivity_check, verify_chain_map)
from sl2forms.chainmap.sugawara import (CommutatorCheck, dual_l_minus_one, kz_derivative, kz_leibniz_check,
                                        l_minus1_commutator_check, l_minus_one, verma_l_minus_one)
