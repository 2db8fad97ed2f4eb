"""Generalized time reversal and the two unitary reductions.

Builds an antilinear symmetry T: psi -> tau conj(psi) from three angles,
verifies it is a Hermitian involution with a symmetric unitary square root,
then conjugates a five-parameter family point into the rotated frame and
checks the symmetry and its exactness there.  Finally the same point is
reduced back to the symmetric family (U1) and all the way to a Hermitian
matrix (U2).

Run with:  python demos/generalized_time_reversal.py
"""
import numpy as np

from pht import (
    GeneralFamilyParams,
    TimeReversalParams,
    check_exactness,
    check_pt_symmetry,
    general_hamiltonian,
    general_t_hamiltonian,
    hermitize_equivalence,
    is_hermitian_antilinear_involution,
    make_time_reversal,
    reduce_general_to_symmetric,
    unitary_sqrt_of_tau,
)


def show(name, matrix):
    with np.printoptions(precision=6, suppress=True):
        print(f"{name} =\n{np.asarray(matrix)}\n")


def main():
    tparams = TimeReversalParams(gamma=0.4, xi=1.1, zeta=2.0)
    op = make_time_reversal(tparams)
    show("tau (linear part of T)", op.tau)

    check = is_hermitian_antilinear_involution(op)
    print(f"symmetric unitary: {check.passed} "
          f"(symmetry {check.symmetry_residual:.1e}, unitarity {check.unitarity_residual:.1e})")
    print(f"T^2 - 1: {np.abs(op.squared() - np.eye(2)).max():.2e}")
    u = unitary_sqrt_of_tau(tparams)
    print(f"U^2 - tau: {np.abs(u @ u - op.tau).max():.2e}\n")

    base = GeneralFamilyParams(r=0.2, s=0.8, t=1.0, u=0.9, phi=0.7)
    print(f"base family point: r={base.r}, s={base.s}, t={base.t}, u={base.u}, phi={base.phi}")
    print(f"exact regime: {base.is_exact} (|s| < hypot(t, u) = {np.hypot(base.t, base.u):.4f})\n")

    system = general_t_hamiltonian(base, tparams)
    show("H in the rotated frame", system.hamiltonian)
    residual = check_pt_symmetry(system.hamiltonian, system.parity, system.time_reversal)
    print(f"[H, PT] residual: {residual:.2e}")
    report = check_exactness(system.hamiltonian, system.parity, system.time_reversal)
    print(f"symmetry exact: {report.exact}")
    pt_linear = system.parity @ system.time_reversal.tau
    for k in range(2):
        psi = report.fixed_eigenvectors[:, k]
        print(f"  |PT psi_{k} - psi_{k}| = {np.abs(pt_linear @ np.conj(psi) - psi).max():.2e}")

    print("\nReduction chain for the unrotated point:")
    h = general_hamiltonian(base)
    red = reduce_general_to_symmetric(base)
    print(f"  U1: rotates the antisymmetric coupling away; t' = {red.params.t:.6f}")
    print(f"      |U1 H' U1^-1 - H| = {np.abs(red.u1 @ red.h_prime @ red.u1.conj().T - h).max():.2e}")
    eq = hermitize_equivalence(base)
    show("  Hermitian endpoint h'", eq.h_prime_hermitian)
    recon = eq.u2 @ eq.h_prime_hermitian @ np.linalg.inv(eq.u2)
    print(f"  |U2 h' U2^-1 - H| = {np.abs(recon - h).max():.2e}  "
          "(U2 is a similarity, not unitary: that is the non-Hermiticity of H)")


if __name__ == "__main__":
    main()
