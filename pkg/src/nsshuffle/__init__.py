"""Exact computations around nonsymmetric shuffle identities: rational
functions in q, t, almost-symmetric polynomials, the Dyck path algebra,
flagged LLT polynomials, nonsymmetric Macdonald polynomials and nabla."""

from .asympoly import AsymFn, full_symmetrize, stable_atom, stable_atom_expand
from .ddpa import OpWord, eval_word, rho_star_mn, transform_word
from .dyck import DyckPath, PartialDyckPath, attacking_data, enum_parking, enum_paths
from .harness import VerificationReport, report, verify_classical, verify_kmkn, verify_ns_shuffle, verify_signed_to_unsigned
from .llt import chi, chi_word, llt_flagged, llt_tuple
from .nabla import apply_nabla, nabla_matrix, theta
from .nsmac import E_nonsym, modified_E, stable_E
from .nspleth import Pi, Pi_inv, comp_HL
from .qtfield import QT, parse_qt, q, t
from .symfunc import SymFn, macdonald_Ht

__version__ = "0.1.0"
