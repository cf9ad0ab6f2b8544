"""Exact circular coloring of signed graphs.

Rationals cross the boundary as ``fractions.Fraction``; anything whose
``str()`` is ``"a/b"`` or ``"a"`` is accepted on input.
"""

from ._sigcolor import (  # noqa: F401
    SigcolorError,
    SignedGraph,
    bound_2degenerate,
    bound_bipartite_planar,
    chi_c,
    color_2degenerate,
    complete,
    cycle,
    degeneracy_order,
    equivalence_witness,
    f_u,
    f_uv,
    gamma_star,
    is_bipartite,
    is_equivalent,
    is_hom_feasible,
    lift_fu,
    lift_fuv,
    omega,
    s_of,
    sg_formula,
    switching,
    t2_formula,
    t2_of,
    transform_4eps,
    verify_coloring,
)

__all__ = [name for name in dir() if not name.startswith("_")]
