import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsv import (
    DomainError,
    HardCapExceeded,
    PauliOperator,
    adjacency_times,
    enumerate_stabilizers,
    from_edges,
    generate,
    membership,
    new_graph,
    quadratic_form,
    stabilizer_for,
    symplectic_weight,
)

from conftest import random_graph


class TestPauliOperator:
    def test_identity(self):
        p = PauliOperator(3, 0, 0, 0)
        assert p.weight == 0
        assert p.sign == 1
        assert p.render() == "111"

    def test_letters_and_ordering(self):
        # vertex 1 is the leftmost letter
        p = PauliOperator(3, 0, 0b001, 0b100)
        assert p.render() == "X1Z"

    def test_y_needs_phase_fix(self):
        # X and Z on the same qubit multiply to -iY, so i*XZ = Y
        p = PauliOperator(1, 1, 1, 1)
        assert p.render() == "Y"
        assert p.sign == 1

    def test_minus_yy(self):
        p = PauliOperator(2, 0, 0b11, 0b11)
        assert p.phase_exponent() == 2
        assert p.render() == "-YY"
        assert p.sign == -1

    def test_odd_phase_has_no_sign(self):
        p = PauliOperator(1, 1, 0, 0)
        assert p.phase_exponent() == 1
        with pytest.raises(DomainError):
            p.sign

    def test_weight_counts_non_identity(self):
        assert PauliOperator(4, 0, 0b0011, 0b0110).weight == 3
        assert symplectic_weight(0b0011, 0b0110) == 3

    def test_from_string_round_trip(self):
        for text in ["XYZ", "-ZZ1", "1X", "Y"]:
            p = PauliOperator.from_string(text)
            assert p.render() == text

    def test_from_string_accepts_i_and_plus(self):
        assert PauliOperator.from_string("+IXI") == PauliOperator.from_string("1X1")

    def test_from_string_rejects_junk(self):
        for text in ["", "-", "AB", "X Y", "--X"]:
            with pytest.raises(DomainError):
                PauliOperator.from_string(text)

    def test_to_json(self):
        p = PauliOperator(2, 0, 0b11, 0b11)
        assert p.to_json() == {"sign": -1, "paulis": "YY"}
        assert PauliOperator(2, 2, 0b11, 0b11).to_json() == {"sign": 1, "paulis": "YY"}

    def test_multiplication_xz_anticommute(self):
        x = PauliOperator.from_string("X")
        z = PauliOperator.from_string("Z")
        xz = x * z
        zx = z * x
        assert xz.r == zx.r == 1
        assert xz.s == zx.s == 1
        assert (xz.phase_exponent() - zx.phase_exponent()) % 4 == 2


class TestGraphStabilizers:
    def test_generator_is_x_with_z_neighbors(self, star3_center2):
        gen = stabilizer_for(star3_center2, 0b010)  # vertex 2
        assert gen.pauli.render() == "ZXZ"

    def test_star3_center2_full_group(self, star3_center2):
        rendered = {el.pauli.render() for el in enumerate_stabilizers(star3_center2)}
        assert rendered == {
            "111",
            "XZ1",
            "1ZX",
            "X1X",
            "ZXZ",
            "ZYY",
            "YYZ",
            "-YXY",
        }

    def test_k2_group(self, k2):
        rendered = {el.pauli.render() for el in enumerate_stabilizers(k2)}
        assert rendered == {"11", "XZ", "ZX", "YY"}

    def test_enumeration_order_follows_rank(self, ring6):
        elements = enumerate_stabilizers(ring6)
        assert [el.r for el in elements] == list(range(64))

    def test_all_signs_well_defined(self):
        rng = random.Random(5)
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 8))
            for el in enumerate_stabilizers(g):
                assert el.pauli.sign in (1, -1)

    def test_closure_under_multiplication(self):
        rng = random.Random(6)
        for _ in range(10):
            g = random_graph(rng, rng.randint(2, 6))
            elements = list(enumerate_stabilizers(g))
            table = {(el.pauli.r, el.pauli.s): el.pauli for el in elements}
            for a in elements:
                for b in elements:
                    prod = a.pauli * b.pauli
                    expect = table[(prod.r, prod.s)]
                    assert prod.phase_exponent() == expect.phase_exponent()

    def test_hard_cap(self):
        with pytest.raises(HardCapExceeded):
            enumerate_stabilizers(new_graph(29))


class TestMembership:
    def test_identity_is_member(self, ring6):
        res = membership(ring6, PauliOperator(6, 0, 0, 0))
        assert res is not None
        assert res.r == 0
        assert res.sign_matches

    def test_every_element_is_found(self, star3_center2):
        for el in enumerate_stabilizers(star3_center2):
            res = membership(star3_center2, el.pauli)
            assert res is not None
            assert res.r == el.r
            assert res.sign_matches

    def test_wrong_sign_is_flagged(self, k2):
        good = PauliOperator.from_string("XZ")
        bad = PauliOperator(2, 2, good.r, good.s)
        res = membership(k2, bad)
        assert res is not None and not res.sign_matches

    def test_non_member(self, k2):
        assert membership(k2, PauliOperator.from_string("XX")) is None

    def test_size_mismatch(self, k2):
        with pytest.raises(DomainError):
            membership(k2, PauliOperator.from_string("XXX"))


class TestBinaryHelpers:
    def test_adjacency_times(self, star3_center2):
        # Gamma * (1,1,0): columns 1 and 2 xor to (1,1,1) minus overlap
        assert adjacency_times(star3_center2, 0b011) == 0b111

    def test_quadratic_form_counts_internal_edges(self, star3_center2):
        # r = {1,2}: one edge inside the support
        assert quadratic_form(star3_center2, 0b011) == 1
        # r = {1,3}: no edge between leaves
        assert quadratic_form(star3_center2, 0b101) == 0

    def test_quadratic_form_is_internal_edge_parity(self):
        rng = random.Random(9)
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 10))
            r = rng.randrange(1 << g.n)
            support = {v for v in range(1, g.n + 1) if r >> (v - 1) & 1}
            inside = sum(1 for i, j in g.edges() if i in support and j in support)
            assert quadratic_form(g, r) == inside % 2
            # every vertex of the induced subgraph with odd degree pairs up
            # (handshake), so popcount(r & Gamma r) is always even and the
            # rendered stabilizer sign is well defined
            s = adjacency_times(g, r)
            assert (r & s).bit_count() % 2 == 0


@given(st.integers(min_value=1, max_value=8), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_stabilizers_commute_pairwise(n, rng):
    g = random_graph(rng, n)
    elements = list(enumerate_stabilizers(g))
    sample = rng.sample(elements, min(6, len(elements)))
    for a in sample:
        for b in sample:
            # symplectic product zero means the operators commute
            sym = ((a.pauli.r & b.pauli.s).bit_count() + (a.pauli.s & b.pauli.r).bit_count()) % 2
            assert sym == 0
