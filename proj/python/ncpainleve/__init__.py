"""Exact quasideterminant solutions of noncommutative Toda chains and a
noncommutative second Painleve equation, verified as residual-zero checks
over truncated matrix power series with rational coefficients."""

from ._core import (  # noqa: F401
    AlgebraError,
    HamiltonianState,
    HankelSystem,
    NCMat,
    PainleveTriple,
    RingElem,
    SeedSolution,
    __version__,
    bilinear_residual,
    commutative_rational_solution,
    constraint_residual,
    det_cofactor,
    gen_config,
    hamiltonian_integrate,
    identity_check,
    lemma33_check,
    nc_invert_matrix,
    ncp2_residual,
    p2_commutative_residual,
    p2_reduction_residual,
    p2_system_residual,
    quasidet,
    run_config,
    seed_solve,
    sylvester_rhs,
    tau_det,
    theorem32_verify,
    toda_residual_neg,
    toda_residual_pos,
    triple_from_hamiltonian,
    trivial_seed,
)
