from itertools import product

import pytest
from hypothesis import given, strategies as st

from oracles import levi_dim
from richardson import liealg
from richardson.dimvec import (
    DimensionVector,
    dual_sorted_partition,
    is_proper,
    make_dimvec,
    normalize,
    parabolic_data,
    proper_dimvecs,
)
from richardson.kinds import Kind
from richardson.partitions import Partition

D = DimensionVector.of


def symmetric_vectors(kind, N):
    """All symmetric vectors of total N with at most N//2 blocks on each side."""
    for s in range(0, N // 2 + 1):
        for half in product(range(0, N // 2 + 1), repeat=s):
            d0 = N - 2 * sum(half)
            if d0 < 0 or (kind == "symp" and d0 % 2):
                continue
            yield DimensionVector.of(kind, tuple(reversed(half)) + (d0,) + half)


def parabolic_basis(d):
    """Indices of the basis elements of degree >= 0."""
    pd = parabolic_data(d)
    return {k for k, b in enumerate(liealg.chevalley_basis(d.kind, d.N)) if liealg.block_degree(b, pd) >= 0}


@pytest.mark.parametrize(
    "kind, half, N, expected",
    [("orth", (4, 3), 16, (3, 4, 2, 4, 3)), ("orth", (), 5, (5,)), ("symp", (3, 5), 26, (5, 3, 10, 3, 5))],
)
def test_make_dimvec(kind, half, N, expected):
    assert make_dimvec(kind, half, N).entries == expected


@pytest.mark.parametrize("kind, half, N", [("orth", (3, 3), 5), ("symp", (1,), 5), ("orth", (-1,), 4)])
def test_make_dimvec_rejects(kind, half, N):
    with pytest.raises(ValueError):
        make_dimvec(kind, half, N)


@pytest.mark.parametrize("kind, entries", [("orth", (1, 2)), ("orth", (1, 2, 3)), ("symp", (1, 1, 1)), ("orth", (-1, 3, -1))])
def test_dimvec_rejects_malformed(kind, entries):
    with pytest.raises(ValueError):
        D(kind, entries)


@pytest.mark.parametrize(
    "kind, entries, proper",
    [("orth", (1, 1, 0, 1, 1), False), ("orth", (2, 0, 2), True), ("symp", (2, 0, 0, 0, 2), False), ("symp", (1, 0, 1), True)],
)
def test_is_proper(kind, entries, proper):
    assert is_proper(D(kind, entries)) is proper


@pytest.mark.parametrize(
    "entries, expected",
    [((1, 1, 0, 1, 1), (1, 2, 1)), ((2, 0, 3, 0, 2), (2, 3, 2)), ((3, 4, 2, 4, 3), (3, 4, 2, 4, 3))],
)
def test_normalize_orth(entries, expected):
    assert normalize(D("orth", entries)).entries == expected


@pytest.mark.parametrize(
    "entries, expected", [((3, 4, 2, 4, 3), (5, 5, 4, 2)), ((5,), (1, 1, 1, 1, 1)), ((1, 2, 1), (3, 1))]
)
def test_dual_sorted_partition(entries, expected):
    assert dual_sorted_partition(D("orth", entries)) == Partition(expected)


@pytest.mark.parametrize(
    "kind, entries, dim_u, dim_levi",
    [
        # so_6: Levi gl_2 + so_2 has dimension 5, so dim u = (15 - 5) / 2
        ("orth", (2, 2, 2), 5, 5),
        ("orth", (7,), 0, 21),
        # sp_4: Levi gl_1 + sp_2 has dimension 4, so dim u = (10 - 4) / 2
        ("symp", (1, 2, 1), 3, 4),
        ("orth", (1, 1, 1, 1, 1), 4, 2),
    ],
)
def test_parabolic_dimensions(kind, entries, dim_u, dim_levi):
    pd = parabolic_data(D(kind, entries))
    assert (pd.dim_u, pd.dim_levi) == (dim_u, dim_levi)


def test_blocks_of_so6():
    pd = parabolic_data(D("orth", (2, 2, 2)))
    assert pd.blocks() == {-1: [-3, -2], 0: [-1, 1], 1: [2, 3]}


@pytest.mark.parametrize("kind, N", [("orth", N) for N in range(3, 13)] + [("symp", N) for N in range(2, 13, 2)])
def test_parabolic_dimensions_against_formula(kind, N):
    dim_g = liealg.dim_g(kind, N)
    for d in proper_dimvecs(kind, N):
        pd = parabolic_data(d)
        assert 2 * pd.dim_u + pd.dim_levi == dim_g
        assert pd.dim_levi == levi_dim(kind, d.entries)


@pytest.mark.parametrize("kind, N", [("orth", N) for N in range(3, 10)] + [("symp", N) for N in range(2, 10, 2)])
def test_normalize_gives_the_same_parabolic(kind, N):
    vectors = list(symmetric_vectors(kind, N))
    proper = set(proper_dimvecs(kind, N))
    assert proper == {d for d in vectors if is_proper(d)}
    images = set()
    for d in vectors:
        nd = normalize(d)
        assert is_proper(nd)
        assert normalize(nd) == nd
        assert parabolic_basis(nd) == parabolic_basis(d)
        images.add(nd)
    assert images == proper


@pytest.mark.parametrize("kind, N", [("orth", N) for N in range(3, 11)] + [("symp", N) for N in range(2, 11, 2)])
def test_proper_vectors_give_distinct_parabolics(kind, N):
    seen = {frozenset(parabolic_basis(d)) for d in proper_dimvecs(kind, N)}
    assert len(seen) == len(proper_dimvecs(kind, N))


@given(st.lists(st.integers(0, 3), max_size=4), st.integers(0, 4), st.sampled_from(["orth", "symp"]))
def test_normalize_is_idempotent(half, d0, kind):
    if kind == "symp":
        d0 *= 2
    d = D(kind, tuple(reversed(half)) + (d0,) + tuple(half))
    nd = normalize(d)
    assert is_proper(nd)
    assert normalize(nd) == nd
    assert nd.N == d.N


def test_signed_indexing():
    d = D("orth", (3, 4, 2, 4, 3))
    assert (d[-2], d[0], d[1], d.s, d.N, d.n, d.half) == (3, 2, 4, 2, 16, 8, (4, 3))
    with pytest.raises(IndexError):
        d[3]


def test_kind_parsing():
    assert D("sp", (2,)).kind is Kind.SYMPLECTIC
    with pytest.raises(ValueError):
        Kind.parse("unitary")
