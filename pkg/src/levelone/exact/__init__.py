from .cyclo import CycloElement, cyclotomic_polynomial, euler_phi, zeta_power
from .bernoulli import bernoulli, bernoulli_poly, generalized_bernoulli
from .characters import DirichletCharacter, quadratic_character, unit_group
from .lvalues import l_value_nonpositive, dedekind_zeta_value, relative_l_value
from .finite_orders import finite_classical_order

__all__ = [
    "CycloElement",
    "cyclotomic_polynomial",
    "euler_phi",
    "zeta_power",
    "bernoulli",
    "bernoulli_poly",
    "generalized_bernoulli",
    "DirichletCharacter",
    "quadratic_character",
    "unit_group",
    "l_value_nonpositive",
    "dedekind_zeta_value",
    "relative_l_value",
    "finite_classical_order",
]
