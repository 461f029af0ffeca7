"""Algebraic identities on arbitrary small exact matrices."""

from hypothesis import given, settings
from hypothesis import strategies as st

from gdinv.inverses import GDrazinParam, InnerParam, drazin, g_drazin, gd1, inner_inverse, is_g_drazin, moore_penrose, one_gd
from gdinv.linalg import rank, rref
from gdinv.matrix import Matrix
from gdinv.oracles import characterization_report, check_gd1_basic
from gdinv.scalar import format_scalar, gaussian, parse_scalar
from gdinv.spectral import core_nilpotent, matrix_index

small = st.integers(-2, 2)


@st.composite
def square(draw, max_n=4, complex_entries=False):
    n = draw(st.integers(1, max_n))
    if complex_entries:
        vals = draw(st.lists(st.tuples(small, small), min_size=n * n, max_size=n * n))
        entries = [gaussian(a, b) for a, b in vals]
    else:
        entries = draw(st.lists(small, min_size=n * n, max_size=n * n))
    return Matrix([entries[i * n:(i + 1) * n] for i in range(n)])


@st.composite
def square_with_param(draw, max_n=4):
    A = draw(square(max_n))
    n = A.rows
    z = draw(st.lists(small, min_size=n * n, max_size=n * n))
    return A, Matrix([z[i * n:(i + 1) * n] for i in range(n)])


rationals = st.fractions(max_denominator=50).map(lambda f: parse_scalar(f"{f.numerator}/{f.denominator}"))
scalars = st.one_of(rationals, st.tuples(rationals, rationals).map(lambda t: gaussian(*t)))


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(scalars)
def test_scalar_text_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


@settings(max_examples=60, deadline=None)
@given(square(complex_entries=True))
def test_moore_penrose_axioms(A):
    G = moore_penrose(A)
    assert A @ G @ A == A and G @ A @ G == G
    assert (A @ G).H == A @ G and (G @ A).H == G @ A


@settings(max_examples=60, deadline=None)
@given(square())
def test_rank_and_rref(A):
    r = rref(A)
    assert r.T @ A == r.R
    assert rank(A) == rank(A.H) == r.rank


@settings(max_examples=60, deadline=None)
@given(square())
def test_drazin_axioms(A):
    D = drazin(A)
    k = matrix_index(A).k
    assert D @ A @ D == D and A @ D == D @ A
    assert D @ A ** (k + 1) == A ** k


@settings(max_examples=60, deadline=None)
@given(square_with_param())
def test_inner_family_members(pair):
    A, Z = pair
    X = inner_inverse(A, InnerParam(Z))
    assert A @ X @ A == A


@settings(max_examples=40, deadline=None)
@given(square_with_param())
def test_gd1_and_1gd_clauses(pair):
    A, Z = pair
    Am = inner_inverse(A, InnerParam(Z))
    cnd = core_nilpotent(A)
    Zn = Z.submatrix(slice(0, cnd.N.rows), slice(0, cnd.N.cols))
    Agd = g_drazin(A, GDrazinParam(cnd, InnerParam(Zn)))
    assert is_g_drazin(A, Agd) == (True, True)
    for side, X in (("gd1", gd1(A, Agd, Am)), ("1gd", one_gd(A, Am, Agd))):
        assert check_gd1_basic(A, Am, Agd, side).passed
        assert characterization_report(A, X, Am, Agd, side).all_true


@settings(max_examples=60, deadline=None)
@given(square(max_n=3), square(max_n=3))
def test_g_drazin_flags_agree(A, X):
    if A.shape == X.shape:
        three, two = is_g_drazin(A, X)
        assert three == two


@settings(max_examples=40, deadline=None)
@given(square(complex_entries=True))
def test_json_roundtrip(A):
    assert Matrix.from_json(A.to_json()) == A
