"""Dense statevector cross-checks for small graphs (n <= 6).

This is an independent route to the sector lengths: build the 2^n
amplitude vector of the graph state, evaluate Tr[rho P] for all 4^n
Pauli strings, and sum the squares by weight.  It exists to validate
the counting engine and is far too slow for anything but tests.
"""

from __future__ import annotations

import numpy as np

from .errors import ComputationRefusedError
from .graph import Graph
from .sld import SLD
from .stabilizer import PauliOperator, quadratic_form

ORACLE_CAP = 6


def graph_state_vector(g: Graph) -> np.ndarray:
    """Real amplitude vector: (-1)^(sum_{j<k} b_j g_jk b_k) / sqrt(2^n)."""
    dim = 1 << g.n
    signs = np.array([1.0 - 2.0 * quadratic_form(g, b) for b in range(dim)])
    return signs / np.sqrt(dim)


def pauli_expectation(g: Graph, p: PauliOperator) -> complex:
    """<G| i^q X^r Z^s |G> evaluated on the dense state vector."""
    z = graph_state_vector(g)
    dim = z.shape[0]
    idx = np.arange(dim)
    z_signs = 1.0 - 2.0 * (np.bitwise_count(idx & p.s) & 1)
    return (1j**p.q) * float(np.dot(z_signs * z, z[idx ^ p.r]))


def oracle_sld_statevector(g: Graph) -> SLD:
    """Sector lengths by summing squared Pauli expectations by weight."""
    if g.n > ORACLE_CAP:
        raise ComputationRefusedError(
            f"statevector oracle is capped at {ORACLE_CAP} qubits, got {g.n}",
            size=g.n,
            limit=ORACLE_CAP,
        )
    n = g.n
    dim = 1 << n
    z = graph_state_vector(g)
    idx = np.arange(dim)
    # walsh[s, b] = (-1)^popcount(s & b)
    walsh = 1.0 - 2.0 * (np.bitwise_count(idx[:, None] & idx[None, :]) & 1)
    i_power = np.array([1.0 + 0j, 1j, -1.0 + 0j, -1j])
    sectors = np.zeros(n + 1)
    for r in range(dim):
        # correl[s] = <G| X^r Z^s |G>; the i^popcount(r&s) factor makes
        # each letter string Hermitian (Y = iXZ)
        correl = walsh @ (z * z[idx ^ r])
        traces = i_power[np.bitwise_count(r & idx) & 3] * correl
        if np.abs(traces.imag).max() > 1e-9:
            raise AssertionError(f"non-real Pauli expectation at r={r}")
        weights = np.bitwise_count(r | idx)
        sectors += np.bincount(weights, weights=traces.real**2, minlength=n + 1)
    rounded = [round(a) for a in sectors.tolist()]
    residue = max(abs(a - b) for a, b in zip(sectors.tolist(), rounded))
    if residue > 1e-9:
        raise AssertionError(f"sector lengths not integral (residue {residue:.2e})")
    return SLD(n, tuple(rounded))
