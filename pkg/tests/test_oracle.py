import itertools
import random

import numpy as np
import pytest

from gsv import (
    ComputationRefusedError,
    PauliOperator,
    enumerate_stabilizers,
    from_edges,
    new_graph,
    sld_bruteforce_connected,
)
from gsv.oracle import ORACLE_CAP, graph_state_vector, oracle_sld_statevector, pauli_expectation

from conftest import random_graph


class TestStateVector:
    def test_plus_state(self):
        z = graph_state_vector(new_graph(1))
        assert np.allclose(z, [2**-0.5, 2**-0.5])

    def test_k2_amplitudes(self, k2):
        # CZ flips the sign of |11> only
        z = graph_state_vector(k2)
        assert np.allclose(z * 2.0, [1, 1, 1, -1])

    def test_normalized(self):
        rng = random.Random(3)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 6))
            z = graph_state_vector(g)
            assert np.dot(z, z) == pytest.approx(1.0)


class TestPauliExpectation:
    def test_stabilizers_have_unit_expectation(self, star3_center2):
        for el in enumerate_stabilizers(star3_center2):
            val = pauli_expectation(star3_center2, el.pauli)
            assert val == pytest.approx(1.0)

    def test_non_members_vanish(self, k2):
        member_keys = {
            (el.pauli.r, el.pauli.s) for el in enumerate_stabilizers(k2)
        }
        for r, s in itertools.product(range(4), repeat=2):
            if (r, s) in member_keys:
                continue
            q = (r & s).bit_count()  # Hermitian phase for this letter string
            val = pauli_expectation(k2, PauliOperator(2, q, r, s))
            assert abs(val) == pytest.approx(0.0, abs=1e-12)

    def test_negated_stabilizer(self, star3_center2):
        # -ZXZ is minus a stabilizer, so its expectation is -1
        p = PauliOperator.from_string("-ZXZ")
        assert pauli_expectation(star3_center2, p) == pytest.approx(-1.0)


class TestOracleSld:
    def test_star3(self, star3_center2):
        assert oracle_sld_statevector(star3_center2).A == (1, 0, 3, 4)

    def test_matches_enumeration_on_random_graphs(self):
        rng = random.Random(17)
        for _ in range(15):
            g = random_graph(rng, rng.randint(1, 5))
            assert oracle_sld_statevector(g) == sld_bruteforce_connected(g)

    def test_cap(self):
        with pytest.raises(ComputationRefusedError):
            oracle_sld_statevector(new_graph(ORACLE_CAP + 1))
