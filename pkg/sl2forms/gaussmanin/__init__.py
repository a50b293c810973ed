from sl2forms.gaussmanin.forms import (DT, MixedForm1, MixedForm2, as_function_of_t, exterior_derivative, global_form,
                                       global_section, normalize_pair, point_difference, wedge)
from sl2forms.gaussmanin.connection import (ConnectionMatrix, beta, beta_wedge, closed_matches_direct,
                                            covariant_derivative, covariant_derivative_direct,
                                            covariant_matches_direct, defect_is_exact, flatness_defect,
                                            gm_connection_matrix, log_connection_formula, log_coordinates,
                                            restricted_invariance, structured_terms)
