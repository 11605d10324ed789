"""Group specs, standard forms, order formulas, membership."""
import itertools

import pytest

from degsums.errors import DomainError
from degsums.fp import MatrixFp
from degsums.groups import (Family, GroupSpec, descriptor,
                            group_order_formula, is_member, matrix_dim,
                            parse_family, standard_form)


def test_parse_family():
    assert parse_family("gl") is Family.GL
    assert parse_family("go_plus_conn") is Family.GO_PLUS_CONN
    with pytest.raises(DomainError):
        parse_family("so3")


def test_matrix_dims():
    assert matrix_dim(Family.GL, 3) == 3
    assert matrix_dim(Family.U, 4) == 4
    assert matrix_dim(Family.SP, 2) == 4
    assert matrix_dim(Family.GSP, 1) == 2
    assert matrix_dim(Family.O_ODD, 2) == 5
    assert matrix_dim(Family.SO_ODD, 1) == 3
    assert matrix_dim(Family.GO_MINUS, 2) == 4


def test_spec_validation():
    with pytest.raises(DomainError):
        GroupSpec(Family.GL, 0, 3)
    with pytest.raises(DomainError):
        GroupSpec(Family.GL, 1, 1)


def brute_gl_order(n: int, p: int) -> int:
    """Oracle: scan all n x n matrices over F_p and count the invertible ones."""
    count = 0
    for entries in itertools.product(range(p), repeat=n * n):
        rows = [entries[i * n:(i + 1) * n] for i in range(n)]
        if MatrixFp(rows, p).rank() == n:
            count += 1
    return count


def test_gl_order_against_full_scan():
    assert brute_gl_order(2, 3) == 48
    assert group_order_formula(GroupSpec(Family.GL, 2, 3)) == 48
    assert group_order_formula(GroupSpec(Family.GL, 2, 5)) == brute_gl_order(2, 5)
    assert group_order_formula(GroupSpec(Family.GL, 3, 3)) == brute_gl_order(3, 3)


def test_order_formula_values():
    assert group_order_formula(GroupSpec(Family.SP, 1, 3)) == 24
    assert group_order_formula(GroupSpec(Family.SP, 2, 3)) == 51840
    assert group_order_formula(GroupSpec(Family.GSP, 2, 3)) == 2 * 51840
    assert group_order_formula(GroupSpec(Family.O_PLUS, 2, 3)) == 1152
    assert group_order_formula(GroupSpec(Family.O_MINUS, 2, 3)) == 1440
    assert group_order_formula(GroupSpec(Family.SO_PLUS, 2, 3)) == 576
    assert group_order_formula(GroupSpec(Family.GO_PLUS, 2, 3)) == 2304
    assert group_order_formula(GroupSpec(Family.GO_PLUS_CONN, 2, 3)) == 1152
    assert group_order_formula(GroupSpec(Family.O_ODD, 1, 3)) == 48
    assert group_order_formula(GroupSpec(Family.SO_ODD, 1, 3)) == 24
    # |SO(3,q)| = |PGL(2,q)| = q(q^2-1)
    for q in (3, 5, 7):
        assert group_order_formula(GroupSpec(Family.SO_ODD, 1, q)) == q * (q * q - 1)


def test_standard_forms():
    f = standard_form(Family.SP, 2, 3)
    assert f.kind == "symplectic"
    assert f.gram == MatrixFp([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]], 3)
    assert standard_form(Family.O_ODD, 1, 5).gram == MatrixFp.identity(3, 5)
    plus = standard_form(Family.O_PLUS, 1, 3)
    assert plus.gram == MatrixFp([[0, 1], [1, 0]], 3)
    with pytest.raises(DomainError):
        standard_form(Family.GL, 2, 3)
    with pytest.raises(DomainError):
        standard_form(Family.SP, 2, 4)


def count_isotropic(form, p: int) -> int:
    """Count nonzero vectors with x^T G x = 0 — distinguishes split from non-split."""
    dim = form.gram.n
    count = 0
    for vec in itertools.product(range(p), repeat=dim):
        if not any(vec):
            continue
        val = sum(vec[i] * form.gram.rows[i][j] * vec[j] for i in range(dim) for j in range(dim)) % p
        if val == 0:
            count += 1
    return count


def test_nonsplit_form_is_anisotropic_in_dim_two():
    for p in (3, 5, 7, 11):
        assert count_isotropic(standard_form(Family.O_MINUS, 1, p), p) == 0
        # split dim-2 form has the two axes: 2(q-1) isotropic vectors
        assert count_isotropic(standard_form(Family.O_PLUS, 1, p), p) == 2 * (p - 1)


def test_form_signs_match_isotropic_vector_counts():
    # classical counts of nonzero isotropic vectors in dimension 2n:
    # split (q^(n-1)+1)(q^n-1), non-split (q^(n-1)-1)(q^n+1)
    for q in (3, 5):
        for n in (1, 2):
            plus = count_isotropic(standard_form(Family.O_PLUS, n, q), q)
            minus = count_isotropic(standard_form(Family.O_MINUS, n, q), q)
            assert plus == (q ** (n - 1) + 1) * (q**n - 1)
            assert minus == (q ** (n - 1) - 1) * (q**n + 1)


def test_is_member_gl():
    spec = GroupSpec(Family.GL, 2, 3)
    assert is_member(MatrixFp([[1, 1], [0, 1]], 3), spec) == (True, 1)
    assert is_member(MatrixFp([[1, 1], [1, 1]], 3), spec) == (False, None)


def test_is_member_similitude_factor():
    g = MatrixFp([[1, 0], [0, -1]], 3)
    sp = GroupSpec(Family.SP, 1, 3)
    gsp = GroupSpec(Family.GSP, 1, 3)
    form = standard_form(Family.SP, 1, 3)
    assert is_member(g, sp, form) == (False, None)   # mu = -1, not an isometry
    assert is_member(g, gsp, form) == (True, 2)      # -1 = 2 (mod 3)
    eye = MatrixFp.identity(2, 3)
    assert is_member(eye, sp, form) == (True, 1)
    assert is_member(eye.scalar_mul(2), gsp, form) == (True, 1)  # (2I)^T G (2I) = 4G = G


def test_is_member_det_filters():
    # diag(1,1,-1) preserves the identity form with mu=1 but has det -1:
    g = MatrixFp.from_diag([1, 1, -1], 5)
    form = standard_form(Family.O_ODD, 1, 5)
    assert is_member(g, GroupSpec(Family.O_ODD, 1, 5), form) == (True, 1)
    assert is_member(g, GroupSpec(Family.SO_ODD, 1, 5), form) == (False, None)


def test_is_member_connected_similitude_det_constraint():
    form = standard_form(Family.O_PLUS, 1, 3)
    # g = diag(1,-1) on G = [[0,1],[1,0]]: g^T G g = -G, so mu = -1 = 2, and
    # det g = -1 = 2 = mu^n at n = 1, so the connected group keeps it
    g = MatrixFp([[1, 0], [0, -1]], 3)
    assert is_member(g, GroupSpec(Family.GO_PLUS, 1, 3), form) == (True, 2)
    assert is_member(g, GroupSpec(Family.GO_PLUS_CONN, 1, 3), form) == (True, 2)
    # h also has mu = -1 but det h = 1 != mu^n, so only the full group keeps it
    h = MatrixFp([[0, 1], [-1, 0]], 3)
    assert is_member(h, GroupSpec(Family.GO_PLUS, 1, 3), form) == (True, 2)
    assert is_member(h, GroupSpec(Family.GO_PLUS_CONN, 1, 3), form) == (False, None)


def test_descriptors():
    d = descriptor(Family.GSP, 2)
    assert (d.d, d.r, d.weyl_order, d.applicable) == (11, 3, 8, True)
    d = descriptor(Family.GL, 3)
    assert (d.d, d.r, d.weyl_order, d.applicable) == (9, 3, 6, True)
    d = descriptor(Family.SO_ODD, 2)
    assert (d.d, d.r, d.weyl_order, d.applicable) == (10, 2, 8, True)
    d = descriptor(Family.SP, 2)
    assert (d.d, d.r, d.weyl_order, d.applicable) == (10, 2, 8, False)
    d = descriptor(Family.GO_PLUS_CONN, 2)
    assert (d.d, d.r, d.weyl_order, d.applicable) == (7, 3, 4, True)
    d = descriptor(Family.O_MINUS, 2)
    assert (d.d, d.r, d.weyl_order, d.applicable) == (6, 2, 4, False)
