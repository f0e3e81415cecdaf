"""Calabi toric, orthotoric and product toric quadrilaterals and their twins."""
from .ansatz import (BoundarySystemError, CalabiAnsatz, Labels, OrthotoricAnsatz, ProductAnsatz,
                     calabi_from_A, orthotoric_from_A, product_from_AB,
                     boundary_residuals, calabi_fit, lebrun_ansatz, ortho_fit, product_fit)
from .io import InfeasibleAnsatz, ansatz_from_text, load_ansatz, parse_ansatz
from .metric import (AffineFit, NonPositivePotential, ToricMetricData, affine_in_moments,
                     metric_data, weighted_scal)
from .twins import (CscsFamily, HirzebruchBridge, LebrunResult, NonExtremalError, SignAnalysis,
                    TwinCertificate, calabi_degenerate_feasible, calabi_lattice_ell,
                    cscs_family_labels, cscs_twin_family, find_twin, hirzebruch_bridge,
                    hirzebruch_calabi_ansatz, lattice_labels, lebrun_cscs_c_squared,
                    lebrun_cscs_verified, lebrun_rays, lebrun_scal_closed_form,
                    orthotoric_antisymmetric_feasible, orthotoric_g, product_lebrun)

__all__ = [
    "AffineFit", "BoundarySystemError", "CalabiAnsatz", "CscsFamily", "HirzebruchBridge",
    "InfeasibleAnsatz", "Labels", "LebrunResult", "NonExtremalError", "NonPositivePotential",
    "OrthotoricAnsatz", "ProductAnsatz", "SignAnalysis", "ToricMetricData", "TwinCertificate",
    "affine_in_moments", "ansatz_from_text", "calabi_from_A", "orthotoric_from_A",
    "product_from_AB", "boundary_residuals", "calabi_degenerate_feasible",
    "calabi_fit", "calabi_lattice_ell", "cscs_family_labels", "cscs_twin_family", "find_twin",
    "hirzebruch_bridge", "hirzebruch_calabi_ansatz", "lattice_labels", "lebrun_ansatz",
    "lebrun_cscs_c_squared", "lebrun_cscs_verified", "lebrun_rays", "lebrun_scal_closed_form",
    "load_ansatz", "metric_data", "ortho_fit", "orthotoric_antisymmetric_feasible",
    "orthotoric_g", "parse_ansatz", "product_fit", "product_lebrun", "weighted_scal",
]
