"""Norm trajectories in three regimes: Hermitian, quasi-Hermitian, broken.

For a Hermitian Hamiltonian the Euclidean norm is conserved.  For a
quasi-Hermitian one it oscillates while the metric norm stays flat.  Past the
exceptional point no positive metric exists and the Euclidean norm grows
exponentially at the rate set by the imaginary part of the spectrum.

Run with:  python demos/norm_evolution.py
"""
import numpy as np

from pht import (
    EvolutionSpec,
    NoPositiveMetricError,
    SymmetricFamilyParams,
    fit_growth_rate,
    norm_trajectory,
    symmetric_hamiltonian,
)


def sparkline(values, width=48):
    """Crude terminal plot: map values onto eight block heights."""
    blocks = " .:-=+*#"
    lo, hi = values.min(), values.max()
    if hi - lo < 1e-12:
        return blocks[3] * width
    idx = np.linspace(0, len(values) - 1, width).astype(int)
    scaled = (values[idx] - lo) / (hi - lo)
    return "".join(blocks[int(round(x * (len(blocks) - 1)))] for x in scaled)


def report(title, trajectory):
    norms = trajectory.norms
    print(f"{title}")
    print(f"  range [{norms.min():.6f}, {norms.max():.6f}]   {sparkline(norms)}")


def main():
    psi0 = np.array([1.0, 0.0])

    hermitian = np.array([[1.0, 0.5], [0.5, -1.0]])
    spec = EvolutionSpec(hermitian, psi0, t0=0.0, t1=10.0, steps=400)
    report("Hermitian H, Euclidean norm (constant):", norm_trajectory(spec))

    exact = symmetric_hamiltonian(SymmetricFamilyParams(0.0, 1.0, 2.0, 0.0))
    spec = EvolutionSpec(exact, psi0, t0=0.0, t1=10.0, steps=400)
    report("\nquasi-Hermitian H, Euclidean norm (oscillates):", norm_trajectory(spec))
    report("quasi-Hermitian H, metric norm (conserved):", norm_trajectory(spec, kind="metric"))

    broken = symmetric_hamiltonian(SymmetricFamilyParams(0.0, 2.0, 1.0, 0.0))
    spec = EvolutionSpec(broken, psi0, t0=0.0, t1=6.0, steps=600)
    euclid = norm_trajectory(spec)
    report("\nbroken symmetry, Euclidean norm (grows):", euclid)
    rate = fit_growth_rate(euclid)
    print(f"  fitted growth exponent {rate:.6f} vs |Im E| = sqrt(3) = {np.sqrt(3):.6f}")

    try:
        norm_trajectory(spec, kind="metric")
    except NoPositiveMetricError as exc:
        print(f"  metric norm refused, as it must be: {exc}")


if __name__ == "__main__":
    main()
