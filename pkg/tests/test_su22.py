import itertools

import numpy as np

from fuzzymono.ncspace import PAULI
from fuzzymono.su22 import (
    ETA,
    GAMMA,
    GAMMA_ADJOINT_SIGN,
    PAIRS,
    bracket_rhs,
    build_su22_matrices,
    generator_matrix,
    hermitian_split,
    matrix_closure_residual,
    matrix_gamma_residual,
)


def test_pair_count():
    assert len(PAIRS) == 15
    assert len(list(itertools.combinations(PAIRS, 2))) == 105


def test_explicit_entries():
    z = np.zeros((2, 2))
    e = np.eye(2)
    np.testing.assert_array_equal(
        generator_matrix(0, 5), 0.5 * np.diag([1, 1, -1, -1]).astype(complex))
    np.testing.assert_array_equal(
        generator_matrix(1, 2), 0.5 * np.block([[PAULI[2], z], [z, PAULI[2]]]))
    np.testing.assert_array_equal(
        generator_matrix(3, 4), 0.5 * np.block([[PAULI[2], z], [z, -PAULI[2]]]))
    np.testing.assert_array_equal(
        generator_matrix(0, 1), 0.5j * np.block([[z, PAULI[0]], [PAULI[0], z]]))
    np.testing.assert_array_equal(
        generator_matrix(2, 5), 0.5 * np.block([[z, PAULI[1]], [-PAULI[1], z]]))
    np.testing.assert_array_equal(
        generator_matrix(0, 4), 0.5 * np.block([[z, e], [-e, z]]))


def test_antisymmetric_extension():
    for a, b in PAIRS:
        np.testing.assert_array_equal(generator_matrix(b, a), -generator_matrix(a, b))
        assert np.all(generator_matrix(a, a) == 0)


def test_gamma_relation_exact():
    assert GAMMA_ADJOINT_SIGN == +1.0
    assert matrix_gamma_residual() == 0.0
    # the opposite sign fails for every generator
    for a, b in PAIRS:
        s = generator_matrix(a, b)
        assert np.abs(s.conj().T + GAMMA @ s @ GAMMA).max() > 0.4


def test_closure_exact():
    assert matrix_closure_residual() == 0.0


def test_metric_signature():
    np.testing.assert_array_equal(np.diag(ETA), [-1, 1, 1, 1, 1, -1])


def test_closure_pins_the_conventions():
    """Flipping the (4,5) generator or moving the metric signs breaks closure."""
    def closure(eta, flip45):
        worst = 0.0
        def gen(a, b):
            m = generator_matrix(a, b)
            if flip45 and (a, b) in ((4, 5), (5, 4)):
                m = -m
            return m
        for (a, b), (c, d) in itertools.combinations(PAIRS, 2):
            rhs = 1j * (eta[a, c] * gen(b, d) - eta[b, c] * gen(a, d)
                        - eta[a, d] * gen(b, c) + eta[b, d] * gen(a, c))
            s1, s2 = gen(a, b), gen(c, d)
            worst = max(worst, np.abs(s1 @ s2 - s2 @ s1 - rhs).max())
        return worst

    assert closure(ETA, flip45=False) == 0.0
    assert closure(ETA, flip45=True) > 0.4
    literal = np.diag([1.0, 1.0, 1.0, 1.0, -1.0, -1.0])
    assert closure(literal, flip45=False) > 0.4
    assert closure(literal, flip45=True) > 0.4


def test_sample_commutators():
    s01, s02, s12 = generator_matrix(0, 1), generator_matrix(0, 2), generator_matrix(1, 2)
    np.testing.assert_allclose(s01 @ s02 - s02 @ s01, -1j * s12, atol=0)
    s23, s13 = generator_matrix(2, 3), generator_matrix(1, 3)
    np.testing.assert_allclose(s12 @ s23 - s23 @ s12, -1j * s13, atol=0)
    s04, s45, s05 = generator_matrix(0, 4), generator_matrix(4, 5), generator_matrix(0, 5)
    np.testing.assert_allclose(s04 @ s45 - s45 @ s04, bracket_rhs(0, 4, 4, 5), atol=0)
    np.testing.assert_allclose(s04 @ s45 - s45 @ s04, -1j * s05, atol=0)


def test_hermitian_split():
    herm, anti = hermitian_split()
    assert len(herm) == 7 and len(anti) == 8
    assert set(herm) == {(0, 5), (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)}
    assert set(anti) == {(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 5), (4, 5)}


def test_build_su22_matrices_dataclass():
    mats = build_su22_matrices()
    assert len(mats) == 15
    for m in mats:
        np.testing.assert_array_equal(m.matrix, generator_matrix(m.A, m.B))
        np.testing.assert_array_equal(m.gamma, GAMMA)
        np.testing.assert_array_equal(m.eta, ETA)
