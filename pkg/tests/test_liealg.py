import random
from fractions import Fraction

import pytest

from argshift.liealg import (AntisymmetryViolation, JacobiViolation, LieAlgebraError, SkewPolyMatrix,
                             evaluate_matrix, index_of, is_aff1_plus_abelian, is_regular, stabilizer,
                             structure_matrix, subalgebra, validate)
from argshift.poly import Polynomial

from conftest import P, alg

EXPECTED_INDEX = {"abelian3": 3, "aff1": 0, "heisenberg3": 1, "sl2": 1, "aff1+aff1": 0,
                  "heisenberg3+aff1": 1, "so3": 1, "e2": 1, "gl2": 2, "aff1C": 0, "n4": 2}


def test_validate_rejects_jacobi_failure():
    with pytest.raises(JacobiViolation) as err:
        validate({(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {0: 1}}, 3)
    assert err.value.triple == (0, 1, 2)


def test_validate_rejects_inconsistent_pairs():
    with pytest.raises(AntisymmetryViolation):
        validate({(0, 1): {1: 1}, (1, 0): {1: 1}}, 2)
    with pytest.raises(AntisymmetryViolation):
        validate({(0, 0): {1: 1}}, 2)


def test_validate_accepts_reversed_pair():
    L = validate({(1, 0): {1: -1}}, 2)
    assert L.c(0, 1, 1) == 1 and L.c(1, 0, 1) == -1


def test_validate_index_out_of_range():
    with pytest.raises(LieAlgebraError):
        validate({(0, 1): {5: 1}}, 2)


def test_structure_matrix_aff1():
    A = structure_matrix(alg("aff1"))
    assert A[0, 1] == P("x2", 2) and A[1, 0] == P("-x2", 2)
    assert A[0, 0].is_zero()


def test_skew_matrix_rejects_asymmetric():
    one, z = Polynomial.constant(1, 1), Polynomial.zero(1)
    with pytest.raises(ValueError):
        SkewPolyMatrix([[z, one], [one, z]])


@pytest.mark.parametrize("name", sorted(EXPECTED_INDEX))
def test_index(name):
    L = alg(name)
    assert L.index == EXPECTED_INDEX[name]
    assert index_of(L, random.Random(1)) == EXPECTED_INDEX[name]


def test_regularity():
    h = alg("heisenberg3")
    assert is_regular(h, [5, -2, 1])
    assert not is_regular(h, [5, -2, 0])
    sl2 = alg("sl2")
    assert not is_regular(sl2, [0, 0, 0])
    assert is_regular(sl2, [1, 1, 1])


def test_index_matches_stabilizer_dimension_generically():
    rng = random.Random(3)
    for name in EXPECTED_INDEX:
        L = alg(name)
        x = [Fraction(rng.randint(-50, 50)) for _ in range(L.dim)]
        if is_regular(L, x):
            assert stabilizer(L, x).dim == L.index


def test_stabilizer_on_heisenberg_singular_set():
    h = alg("heisenberg3")
    # A_x only involves x3, so off {x3 = 0} the stabilizer is the centre
    assert stabilizer(h, [1, 2, 5]).basis == [[0, 0, 1]]
    S = stabilizer(h, [1, 2, 0])
    assert S.dim == 3 and not is_aff1_plus_abelian(S)


def test_aff1_plus_abelian_recognition():
    # on {x2 = 0} of aff(1)+aff(1) the stabilizer is aff(1) plus a line
    L = alg("aff1+aff1")
    S = stabilizer(L, [7, 0, 3, 5])
    assert S.dim == 2
    assert is_aff1_plus_abelian(S)
    # the whole Heisenberg algebra: derived algebra is central
    h = alg("heisenberg3")
    assert not is_aff1_plus_abelian(subalgebra(h, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    # sl2 itself has 3-dimensional derived algebra
    assert not is_aff1_plus_abelian(subalgebra(alg("sl2"), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    # aff(1) itself
    assert is_aff1_plus_abelian(subalgebra(alg("aff1"), [[1, 0], [0, 1]]))


def test_evaluate_matrix_is_skew_and_linear():
    L = alg("sl2")
    M = evaluate_matrix(L, [1, 2, 3])
    assert all(M[i][j] == -M[j][i] for i in range(3) for j in range(3))
    assert M[0][1] == 2 * 2 and M[1][2] == 1
