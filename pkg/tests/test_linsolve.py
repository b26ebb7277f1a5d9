"""Exact sparse linear algebra, cross-checked against an independent oracle."""

from fractions import Fraction

import sympy

from realpv import GaussRat
from realpv.linsolve import det, identity, inverse, kernel, mat_conj, mat_mul, solve

from helpers import rand_gauss, rng


def _to_sympy(v: GaussRat):
    return sympy.Rational(v.re) + sympy.I * sympy.Rational(v.im)


def _rand_matrix(r, n, complex_ok=True):
    return [[rand_gauss(r, complex_ok=complex_ok) for _ in range(n)] for _ in range(n)]


def test_det_against_sympy():
    r = rng(21)
    for n in (1, 2, 3, 4):
        for _ in range(15):
            m = _rand_matrix(r, n)
            mine = det(m)
            oracle = sympy.Matrix(
                [[_to_sympy(v) for v in row] for row in m]
            ).det()
            assert sympy.simplify(_to_sympy(mine) - oracle) == 0


def test_inverse_property():
    r = rng(22)
    for n in (1, 2, 3):
        for _ in range(20):
            m = _rand_matrix(r, n)
            inv = inverse(m)
            if det(m):
                assert inv is not None
                assert mat_mul(m, inv) == identity(n)
                assert mat_mul(inv, m) == identity(n)
            else:
                assert inv is None


def test_kernel_vectors_annihilate():
    r = rng(23)
    for _ in range(30):
        n_cols = r.randint(1, 6)
        eqs = []
        for _ in range(r.randint(0, 4)):
            row = {}
            for j in range(n_cols):
                if r.random() < 0.5:
                    c = rand_gauss(r)
                    if c:
                        row[j] = c
            eqs.append(row)
        basis = kernel(n_cols, eqs)
        for vec in basis:
            for row in eqs:
                total = GaussRat.of(0)
                for j, c in row.items():
                    total = total + c * vec[j]
                assert not total
        # rank-nullity against sympy
        m = sympy.zeros(max(len(eqs), 1), n_cols)
        for i, row in enumerate(eqs):
            for j, c in row.items():
                m[i, j] = _to_sympy(c)
        assert len(basis) == n_cols - m.rank()


def test_solve_finds_witness():
    # x + y = 3, x - y = 1 has the unique solution (2, 1)
    one = GaussRat.of(1)
    eqs = [
        ({0: one, 1: one}, GaussRat.of(3)),
        ({0: one, 1: -one}, GaussRat.of(1)),
    ]
    got = solve(2, eqs)
    assert got == [GaussRat.of(2), GaussRat.of(1)]


def test_solve_inconsistent():
    one = GaussRat.of(1)
    eqs = [
        ({0: one}, GaussRat.of(1)),
        ({0: one}, GaussRat.of(2)),
    ]
    assert solve(1, eqs) is None


def test_mat_conj():
    i = GaussRat(Fraction(0), Fraction(1))
    assert mat_conj([[i]]) == [[-i]]
