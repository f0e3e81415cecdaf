"""Twin obstructions on moment polytopes and the simplex model."""
from .cscs import RayVerdict, cscs_line_property
from .polytope import (AffineLabel, BarycentricVertex, CornerFrame, DegenerateFrame,
                       MomentPolytope, barycentric_coords, convex_hull_2d, corner_frames,
                       default_corner, load_polytope, parse_polytope, polytope_from_text)
from .simplex import SimplexModel, SimplexTwinResult, simplex_model, simplex_twin_check
from .twin_system import (SolutionLine, TwinClassification, TwinVertexSystem, VertexEquation,
                          build_twin_system, check_system_consistency, difference_symbols,
                          solve_twin_system_2d, vertex_twin_residual, vertex_twin_residual_full)
