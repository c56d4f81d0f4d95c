"""Exact-arithmetic workbench for the finite-size emptiness formation
probabilities of the (twisted-)periodic XXZ spin chain at Delta = -1/2.

The package constructs the polynomial eigenvectors of the exchange equations
at generic q, assembles the inhomogeneous (pseudo-)EFP polynomials, and
verifies every finite-size identity both against brute-force transfer-matrix
oracles and against the determinant/product closed forms.
"""

from .rings import (CYC3, QFIELD, QLAURENT, QQ, Cyclotomic3,
                    ExactDivisionError, LaurentQ, RationalQ, t_factorial,
                    t_number)
from .multipoly import MultiPoly
from .linalg import RingMatrix, det_bareiss, det_field, det_laplace, kernel_basis
from .spinchain import (StateVector, efp_homogeneous, ground_state,
                        hamiltonian_sector, r_check, r_matrix,
                        transfer_sector)
from .qkz import (GENERIC_Q, OMEGA, QkzSolution, base_component, solve_qkz,
                  specialize_homogeneous, verify_recursion, verify_size_links,
                  verify_structure)
from .efp import (InhomEfp, aligned_reduce, inhom_efp, inhom_pseudo_efp,
                  verify_efp_recursion, verify_efp_symmetries,
                  verify_parity_links)
from .detformulas import (PowerBlockSpec, coupled_schur, efp_det_rep,
                          power_block_det_closed, power_block_det_exact,
                          schur, staircase, t_efp, t_ratio)
from .closedforms import (asm_count, aht_count, cssc_product,
                          efp_ratio_closed, efp_value_closed, lgv_count,
                          pseudo_ratio_link, thermo_limit)
from .suites import SuiteConfig, run_suite

__version__ = "1.0.0"
