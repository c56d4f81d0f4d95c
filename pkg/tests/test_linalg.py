import random
from fractions import Fraction

from xxz_efp.linalg import (RingMatrix, det_bareiss, det_field, det_laplace,
                            kernel_basis, laplace_block_det, mat_apply,
                            mat_identity, mat_is_zero, mat_mul)
from xxz_efp.multipoly import MultiPoly, poly_ring
from xxz_efp.rings import CYC3, QQ, Cyclotomic3, W


def test_identity_and_repeated_row():
    eye = mat_identity(QQ, 3)
    assert det_bareiss(eye) == 1 and det_laplace(eye) == 1 == det_field(eye)
    m = RingMatrix(QQ, [[1, 2, 3], [4, 5, 6], [1, 2, 3]])
    assert det_bareiss(m) == 0
    assert det_field(m) == 0


def test_vandermonde_123():
    m = RingMatrix(QQ, [[1, 1, 1], [1, 2, 4], [1, 3, 9]])
    assert det_bareiss(m) == 2
    assert det_laplace(m) == 2
    assert det_field(m) == 2


def test_det_paths_agree_random():
    rng = random.Random(11)
    for trial in range(50):
        n = rng.randint(1, 6)
        m = RingMatrix(QQ, [[rng.randint(-9, 9) for _ in range(n)]
                            for _ in range(n)])
        d1 = det_bareiss(m)
        d2 = det_laplace(m)
        d3 = det_field(RingMatrix(QQ, [[Fraction(x) for x in row]
                                       for row in m.rows]))
        assert d1 == d2 == d3


def test_det_bareiss_polynomial_entries():
    one, x, y = poly_ring(QQ, "x", "y")
    m = RingMatrix(QQ, [[x, y], [y, x]])
    assert det_bareiss(m) == x * x - y * y
    m3 = RingMatrix(QQ, [[one, x, x * x],
                         [one, y, y * y],
                         [one, x + y, (x + y) * (x + y)]])
    assert det_bareiss(m3) == det_laplace(m3)


def test_kernel_zero_and_invertible():
    z = RingMatrix(QQ, [[Fraction(0)] * 2] * 2)
    assert len(kernel_basis(z)) == 2
    inv = RingMatrix(QQ, [[Fraction(2), Fraction(1)],
                          [Fraction(1), Fraction(1)]])
    assert kernel_basis(inv) == []


def test_kernel_vectors_annihilate_and_count():
    rng = random.Random(7)
    for trial in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = RingMatrix(QQ, [[Fraction(rng.randint(-4, 4)) for _ in range(cols)]
                            for _ in range(rows)])
        basis = kernel_basis(m)
        for v in basis:
            assert all(x == 0 for x in mat_apply(m, v))
        # rank + nullity
        pivots = cols - len(basis)
        square = RingMatrix(QQ, [row[:] for row in m.rows])
        assert 0 <= pivots <= min(rows, cols)


def test_kernel_over_cyclotomic_field():
    m = RingMatrix(CYC3, [[W, W * W], [Cyclotomic3(1), W]])
    basis = kernel_basis(m)
    assert len(basis) == 1
    assert all(x.is_zero() for x in mat_apply(m, basis[0]))


def test_laplace_block_det_matches_plain():
    rng = random.Random(3)
    for trial in range(10):
        n = 4
        m = RingMatrix(QQ, [[Fraction(rng.randint(-5, 5)) for _ in range(n)]
                            for _ in range(n)])
        for split in (1, 2, 3):
            assert laplace_block_det(m, split, det_field) == det_field(m)


def test_mat_mul_identity():
    m = RingMatrix(QQ, [[Fraction(1), Fraction(2)],
                        [Fraction(3), Fraction(4)]])
    assert mat_mul(m, mat_identity(QQ, 2)).rows == m.rows
    assert not mat_is_zero(m)
