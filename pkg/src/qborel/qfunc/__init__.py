"""FRT presentations of quantum SL_n / SO_n Borel quotients, Hopf
structure maps, R-matrix with Yang-Baxter verification, and the
N-th-power coproduct / dual Frobenius verifiers."""

from qborel.qfunc.rmatrix import RMatrix, so_rmatrix, qybe_check
from qborel.qfunc.presentations import BorelPresentation, borel_presentation
from qborel.qfunc.verify import (delta_powerN, verify_coproduct_theorem,
                                 frobenius_iota, verify_frobenius_theorem,
                                 verify_centrality, psi_image)

__all__ = ["RMatrix", "so_rmatrix", "qybe_check", "BorelPresentation",
           "borel_presentation", "delta_powerN", "verify_coproduct_theorem",
           "frobenius_iota", "verify_frobenius_theorem", "verify_centrality",
           "psi_image"]
