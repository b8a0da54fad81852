from itertools import combinations

import pytest

from oracles import all_partitions, valid
from richardson.classify import (
    classify,
    cross_validate,
    enumerate_richardson_partitions,
    is_even_pair,
    is_even_two_step_descending,
    is_odd_pair,
    is_odd_two_step_descending,
)
from richardson.partitions import Partition

P = Partition.from_parts


def segmentations(parts):
    """Every split of ``parts`` into consecutive (possibly empty) pieces."""
    L = len(parts)
    for k in range(0, L + 1):
        for cuts in combinations(range(L + 1), k):
            bounds = (0,) + cuts + (L,)
            yield [parts[a:b] for a, b in zip(bounds, bounds[1:])]


def naive_orth(parts):
    for segs in segmentations(parts):
        head, rest = segs[0], segs[1:]
        if any(p % 2 == 0 for p in head) or any(not s for s in rest):
            continue
        if all((is_even_pair if i % 2 == 0 else is_odd_two_step_descending)(s) for i, s in enumerate(rest)):
            return True
    return False


def naive_symp(parts):
    for segs in segmentations(parts):
        # the trailing all-even piece is optional
        for body, tail in ((segs, []), (segs[:-1], segs[-1:])):
            if not body or any(p % 2 for t in tail for p in t):
                continue
            first, rest = body[0], body[1:]
            if not is_odd_pair(first) or any(not s for s in rest):
                continue
            if all((is_even_two_step_descending if i % 2 == 0 else is_odd_pair)(s) for i, s in enumerate(rest)):
                return True
    return False


@pytest.mark.parametrize(
    "seg, even_pair, odd_pair, even_desc, odd_desc",
    [
        ((4, 4, 2, 2), True, False, True, False),
        ((3, 3, 1, 1), False, True, False, True),
        ((4, 4, 4, 2), False, False, False, False),
        ((5, 3, 3, 1), False, False, False, False),
        ((5, 3, 1, 1), False, False, False, True),
        ((6, 4, 2, 2), False, False, True, False),
        ((2,), False, False, False, False),
        ((), True, True, True, True),
    ],
)
def test_segment_shapes(seg, even_pair, odd_pair, even_desc, odd_desc):
    assert is_even_pair(seg) is even_pair
    assert is_odd_pair(seg) is odd_pair
    assert is_even_two_step_descending(seg) is even_desc
    assert is_odd_two_step_descending(seg) is odd_desc


@pytest.mark.parametrize(
    "kind, parts, polarizable",
    [
        ("orth", (5, 5, 3, 3), True),
        ("orth", (2, 2), True),
        ("orth", (3, 2, 2, 1), False),
        ("symp", (4, 2), True),
        ("symp", (3, 3, 2), True),
        ("symp", (2, 1, 1), False),
    ],
)
def test_classify_examples(kind, parts, polarizable):
    witness = classify(P(parts), kind)
    assert (witness is not None) is polarizable
    if witness is not None:
        assert witness.check()
        assert witness.concatenated() == P(parts)


def test_classify_rejects_wrong_kind():
    with pytest.raises(ValueError):
        classify(P((2, 1)), "orth")
    with pytest.raises(ValueError):
        classify(P((3, 1)), "symp")


@pytest.mark.parametrize("n", range(1, 13))
def test_search_agrees_with_naive_segmentation(n):
    for parts in all_partitions(n):
        if valid(parts, "orth"):
            assert (classify(P(parts), "orth") is not None) == naive_orth(parts), parts
        if n % 2 == 0 and valid(parts, "symp"):
            assert (classify(P(parts), "symp") is not None) == naive_symp(parts), parts


@pytest.mark.parametrize(
    "kind, N, expected",
    [
        ("orth", 3, {(1, 1, 1), (3,)}),
        ("orth", 4, {(1, 1, 1, 1), (3, 1), (2, 2)}),
        ("symp", 2, {(1, 1), (2,)}),
    ],
)
def test_enumerate_small(kind, N, expected):
    assert enumerate_richardson_partitions(kind, N) == {P(e) for e in expected}


@pytest.mark.parametrize("kind, N", [("orth", N) for N in range(3, 13)] + [("symp", N) for N in range(2, 13, 2)])
def test_cross_validation(kind, N):
    cv = cross_validate(kind, N)
    assert cv.missing == [] and cv.extra == []
    assert cv.ok
