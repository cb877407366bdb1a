import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import signed_perms
from hyperoct.errors import (
    DegreeMismatchError,
    IndexOutOfRangeError,
    InvalidPermutationError,
    MalformedTextError,
)
from hyperoct.sigperm import (
    E,
    MINUS,
    PLUS,
    Root,
    SignedPermutation,
    apply_to_root,
    code,
    code_by_roots,
    compose,
    format_window,
    identity,
    inv_by_counting,
    inv_by_roots,
    inverse,
    is_negative_root,
    parse_window,
    positive_roots,
    positive_roots_at,
)

P = SignedPermutation((1, -3, 4, 2))

B2_TABLE = [
    ((1, 2), (0, 0)),
    ((1, -2), (0, 1)),
    ((2, 1), (1, 0)),
    ((2, -1), (1, 1)),
    ((-2, 1), (2, 0)),
    ((-2, -1), (2, 1)),
    ((-1, 2), (3, 0)),
    ((-1, -2), (3, 1)),
]


def all_signed(n):
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * v for s, v in zip(signs, perm)))


@pytest.mark.parametrize("n, window", [(3, (1, 2, 3)), (0, ()), (1, (1,))])
def test_identity(n, window):
    assert identity(n).window == window


@pytest.mark.parametrize("window", [(1, 1), (0, 1), (1, 3), (2,), (1.0, 2)])
def test_invalid_windows(window):
    with pytest.raises(InvalidPermutationError):
        SignedPermutation(window)


def test_call_extends_by_sign():
    assert P(2) == -3 and P(-2) == 3 and P(-4) == -2
    with pytest.raises(IndexOutOfRangeError):
        P(0)
    with pytest.raises(IndexOutOfRangeError):
        P(5)


def test_compose():
    p = SignedPermutation((2, -1))
    assert compose(P, identity(4)) == P
    assert compose(identity(4), P) == P
    assert compose(p, p).window == (-1, -2)
    with pytest.raises(DegreeMismatchError):
        compose(p, P)


def test_inverse():
    p = SignedPermutation((2, -1))
    assert inverse(p).window == (-2, 1)
    assert compose(p, inverse(p)) == identity(2)
    assert inverse(identity(5)) == identity(5)
    assert inverse(inverse(P)) == P


@given(st.data())
def test_group_laws(data):
    n = data.draw(st.integers(0, 8))
    a, b, c = (data.draw(signed_perms(min_n=n, max_n=n)) for _ in range(3))
    e = identity(n)
    assert compose(a, inverse(a)) == e == compose(inverse(a), a)
    assert compose(a, e) == a == compose(e, a)
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_parse_and_format_window():
    assert parse_window("1 -3 4 2") == P
    assert parse_window("1,-3,4,2") == P
    assert parse_window("  1, -3  4 ,2 ") == P
    assert parse_window("") == identity(0)
    assert format_window(P) == "1 -3 4 2"
    for bad in ["1 2 2", "1 x", "0", "1 3", "1 --2"]:
        with pytest.raises(MalformedTextError):
            parse_window(bad)


def test_positive_roots():
    assert list(positive_roots_at(3, 1)) == [
        Root(E, 1), Root(PLUS, 1, 2), Root(MINUS, 1, 2), Root(PLUS, 1, 3), Root(MINUS, 1, 3)
    ]
    for n in range(6):
        assert len(list(positive_roots(n))) == n * n
    with pytest.raises(IndexOutOfRangeError):
        list(positive_roots_at(3, 4))


def test_apply_to_root():
    # e_2 -> sign(P(2)) e_|P(2)| = -e_3, a negative root
    assert apply_to_root(P, Root(E, 2)) == {3: -1}
    assert is_negative_root(apply_to_root(P, Root(E, 2)))
    # e_2 + e_4 -> -e_3 + e_2, positive
    assert apply_to_root(P, Root(PLUS, 2, 4)) == {2: 1, 3: -1}
    assert not is_negative_root(apply_to_root(P, Root(PLUS, 2, 4)))
    assert apply_to_root(SignedPermutation((-1,)), Root(E, 1)) == {1: -1}
    for v in positive_roots(4):
        assert apply_to_root(identity(4), v) == v.vector()
        assert not is_negative_root(v.vector())
    with pytest.raises(IndexOutOfRangeError):
        apply_to_root(identity(2), Root(E, 3))


@pytest.mark.parametrize(
    "vec, negative",
    [({1: -1}, True), ({2: 1}, False), ({1: -1, 3: -1}, True), ({1: 1, 2: -1}, False), ({1: -1, 2: 1}, True)],
)
def test_is_negative_root(vec, negative):
    assert is_negative_root(vec) is negative


@pytest.mark.parametrize("vec", [{}, {1: 2}, {1: 1, 2: 1, 3: 1}, {1: 0}])
def test_is_negative_root_rejects_non_roots(vec):
    with pytest.raises(ValueError):
        is_negative_root(vec)


def test_worked_example_code():
    assert code(P) == (0, 4, 1, 0)
    assert code_by_roots(P) == (0, 4, 1, 0)


@pytest.mark.parametrize("window, expected", B2_TABLE)
def test_b2_table_both_ways(window, expected):
    p = SignedPermutation(window)
    assert code(p) == expected
    assert code_by_roots(p) == expected


@pytest.mark.parametrize(
    "window, expected",
    [((-1, -2, -3), (5, 3, 1)), ((-3, 1, 2), (3, 0, 0)), ((3, -2, -1), (2, 2, 1)), ((1, 2, 3, 4, 5), (0,) * 5)],
)
def test_code_examples(window, expected):
    assert code(SignedPermutation(window)) == expected


def test_b3_table_codes(b3_table):
    for _, window, expected in b3_table:
        p = SignedPermutation(window)
        assert code(p) == expected == code_by_roots(p)


def test_index_errors():
    for f in (inv_by_counting, inv_by_roots):
        with pytest.raises(IndexOutOfRangeError):
            f(P, 0)
        with pytest.raises(IndexOutOfRangeError):
            f(P, 5)


def test_exhaustive_small_degrees():
    for n in range(5):
        seen = set()
        for p in all_signed(n):
            c = code(p)
            assert c == code_by_roots(p)
            for i, inv in enumerate(c, start=1):
                assert 0 <= inv <= 2 * (n - i) + 1
            seen.add(c)
        box = 1
        for i in range(1, n + 1):
            box *= 2 * (n - i) + 2
        assert len(seen) == box == 2 ** n * [1, 1, 2, 6, 24][n]


@given(signed_perms(max_n=20))
def test_definitions_agree(p):
    assert code(p) == code_by_roots(p)


def test_definitions_agree_large():
    rng = random.Random(64)
    for n in (32, 50, 64):
        for _ in range(3):
            w = [rng.choice((1, -1)) * v for v in rng.sample(range(1, n + 1), n)]
            p = SignedPermutation(tuple(w))
            assert code(p) == code_by_roots(p)


def test_sigma_and_signs():
    assert P.sigma == (1, 3, 4, 2)
    assert P.signs == (1, -1, 1, 1)
    assert str(P) == "1 -3 4 2"
