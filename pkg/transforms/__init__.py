# Comparison maps Φ_u, the chain maps ι and ρ, and the ternary identity

from transforms.chain_maps import iota, rho
from transforms.phi import PhiContext, phi_matrix, phi_u
from transforms.ternary import ternary_check

__all__ = ["PhiContext", "iota", "phi_matrix", "phi_u", "rho", "ternary_check"]
