from sl2forms.affine.lie import Gen, LieElement, bracket, pi_twist, transpose, transpose_anti
from sl2forms.affine.pbw import Grade, Order, PBWMonomial, component_basis, dimension, lowering_candidates
from sl2forms.affine.verma import VermaModule, VermaVector
from sl2forms.affine.kac_kazhdan import ReducibilityLine, kac_kazhdan_lines, lines_through
