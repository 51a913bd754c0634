from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercatalan.codec import (
    CodeRangeError,
    CodeSyntaxError,
    CtreeCode,
    PruneError,
    canonical,
    enumerate_planted,
    enumerate_unrooted,
    format_code,
    grow_at,
    is_valid_code,
    parse_code,
    prune_first_zero,
    reroot,
    reroot_orbit,
    validate,
)
from supercatalan.numbers import catalan, ctree_count


@lru_cache(maxsize=None)
def binary_trees(n):
    """Full binary trees with n internal nodes as nested pairs; None is a leaf."""
    if n == 0:
        return (None,)
    out = []
    for i in range(n):
        for left in binary_trees(i):
            for right in binary_trees(n - 1 - i):
                out.append((left, right))
    return tuple(out)


def gaps_from_depths(t):
    """Leaf gap sequence of a planted tree computed from leaf depths and LCAs.

    Leaves are listed left to right; the gap between two consecutive leaves is
    depth(a) + depth(b) - 2 depth(lca). The root leaf sits at depth -1.
    """
    leaves = []

    def walk(node, depth, path):
        if node is None:
            leaves.append((depth, path))
            return
        walk(node[0], depth + 1, path + "0")
        walk(node[1], depth + 1, path + "1")

    walk(t, 0, "")
    gaps = [leaves[0][0] + 1]
    for (da, pa), (db, pb) in zip(leaves, leaves[1:]):
        common = 0
        while common < min(len(pa), len(pb)) and pa[common] == pb[common]:
            common += 1
        gaps.append(da + db - 2 * common)
    gaps.append(leaves[-1][0] + 1)
    return tuple(g - 2 for g in gaps)


def test_parse_examples():
    assert parse_code("2:3,0,1,1,1,0") == CtreeCode(2, (3, 0, 1, 1, 1, 0))
    assert parse_code("0:0,0,0") == CtreeCode(0, (0, 0, 0))
    assert parse_code("4:-") == CtreeCode(4, ())
    with pytest.raises(CodeRangeError):
        parse_code("7:1,0")
    with pytest.raises(CodeRangeError):
        parse_code("1:0,-1,0")


@pytest.mark.parametrize("text,pos", [("2:3,,1", 4), ("x:1", 0), ("21", 2), ("2:", 2), ("2:1 ,0", 3)])
def test_parse_syntax_errors(text, pos):
    with pytest.raises(CodeSyntaxError) as info:
        parse_code(text)
    assert info.value.position == pos


def test_format_roundtrip():
    for text in ("2:3,0,1,1,1,0", "0:0,0,0", "5:-", "1:12,0,0,1,0,0,0,1,0,0,0,1,0,0,0"):
        assert format_code(parse_code(text)) == text


def test_prune_examples():
    assert prune_first_zero((1, 1, 2, 1, 0, 2, 3, 0)) == (1, 1, 2, 0, 1, 3, 0)
    assert prune_first_zero((1, 0, 1, 0)) == (0, 0, 0)
    with pytest.raises(PruneError, match="neighbor underflow"):
        prune_first_zero((1, 1, 0, 0))
    with pytest.raises(PruneError, match="no zero"):
        prune_first_zero((1, 1, 1, 1))
    with pytest.raises(PruneError, match="too short"):
        prune_first_zero((0, 0, 0))


def test_validate_paper_chain():
    trace = validate((1, 1, 2, 1, 0, 2, 3, 0))
    assert trace.valid
    assert trace.steps == [
        (1, 1, 2, 1, 0, 2, 3, 0),
        (1, 1, 2, 0, 1, 3, 0),
        (1, 1, 1, 0, 3, 0),
        (1, 1, 0, 2, 0),
        (1, 0, 1, 0),
        (0, 0, 0),
    ]


def test_validate_verdicts():
    trace = validate((3, 0, 1, 1, 1, 0))
    assert trace.valid
    assert trace.steps == [(3, 0, 1, 1, 1, 0), (2, 0, 1, 1, 0), (1, 0, 1, 0), (0, 0, 0)]
    bad = validate((0, 0, 0, 0))
    assert not bad.valid and "sum" in bad.reason
    assert not validate((1, 1, 0, 0)).valid
    assert not validate((0, 0)).valid
    assert validate((0, 0, 0)).valid


def test_grow_examples():
    assert grow_at((0, 0, 0), 1) == (1, 0, 1, 0)
    assert grow_at((0, 0, 0), 3) == (0, 1, 0, 1)
    assert set(enumerate_planted(2)) == {grow_at((0, 0, 0), i) for i in (1, 2, 3)}
    with pytest.raises(IndexError):
        grow_at((0, 0, 0), 4)


def test_grow_then_prune_is_identity():
    for n in range(1, 7):
        for u in enumerate_planted(n):
            for i in range(1, len(u) + 1):
                g = grow_at(u, i)
                assert validate(g).valid
                inserted = 0 if i == len(u) else i
                if g.index(0) == inserted:
                    assert prune_first_zero(g) == u


def test_reroot_examples():
    assert reroot(CtreeCode(2, (3, 0, 1, 1, 1, 0))) == CtreeCode(1, (0, 1, 1, 1, 0, 3))
    assert reroot(CtreeCode(3, (0, 1, 0, 1))) == CtreeCode(5, (1, 0, 1, 0))
    assert reroot(CtreeCode(1, ())) == CtreeCode(4, ())


def test_canonical_examples():
    orbit = reroot_orbit(CtreeCode(3, (0, 1, 0, 1)))
    assert orbit == [CtreeCode(3, (0, 1, 0, 1)), CtreeCode(5, (1, 0, 1, 0)),
                     CtreeCode(0, (0, 1, 0, 1)), CtreeCode(2, (1, 0, 1, 0))]
    assert canonical(CtreeCode(3, (0, 1, 0, 1))) == CtreeCode(0, (0, 1, 0, 1))
    assert canonical(CtreeCode(0, (0, 0, 0))) == CtreeCode(0, (0, 0, 0))
    assert canonical(CtreeCode(4, ())) == CtreeCode(1, ())


def test_enumerate_planted_matches_binary_tree_oracle():
    assert enumerate_planted(1) == [(0, 0, 0)]
    assert enumerate_planted(2) == [(0, 1, 0, 1), (1, 0, 1, 0)]
    for n in range(1, 10):
        oracle = sorted(gaps_from_depths(t) for t in binary_trees(n))
        assert enumerate_planted(n) == oracle
        assert len(oracle) == catalan(n)
        assert all(sum(u) == 2 * n - 2 for u in oracle)


def test_validate_recognizes_exactly_the_generated_sequences():
    from itertools import product

    for n in range(1, 5):
        m = n + 2
        generated = set(enumerate_planted(n))
        for u in product(range(2 * n - 1), repeat=m):
            if sum(u) == 2 * n - 2:
                assert validate(u).valid == (u in generated)


def test_recognizer_equals_generator_up_to_8():
    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for n in (6, 7, 8):
        accepted = {u for u in compositions(2 * n - 2, n + 2) if validate(u).valid}
        assert accepted == set(enumerate_planted(n))


def test_reroot_orbits():
    for n in range(0, 10):
        for u in enumerate_planted(n):
            code = CtreeCode(1, u)
            orbit = reroot_orbit(code)
            assert len(set(orbit)) == n + 2
            assert reroot(orbit[-1]) == code
            assert len({canonical(c) for c in orbit}) == 1


def test_enumerate_unrooted_counts():
    assert len(enumerate_unrooted(0)) == 3
    assert len(enumerate_unrooted(1)) == 2
    assert len(enumerate_unrooted(2)) == 3
    assert len(enumerate_unrooted(4)) == 14
    for n in range(10):
        codes = enumerate_unrooted(n)
        assert len(codes) == ctree_count(n, rooted=False)
        assert len(codes) * (n + 2) == 6 * catalan(n)
        assert codes == sorted(codes)
        assert all(canonical(c) == c for c in codes)
    assert len(enumerate_unrooted(9)) == 2652


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.tuples(st.sampled_from(enumerate_planted(n)), st.integers(0, 5))))
def test_canonical_is_orbit_invariant(pair):
    u, r = pair
    code = CtreeCode(r, u)
    assert is_valid_code(code)
    assert canonical(reroot(code)) == canonical(code)
    assert canonical(code) == min(reroot_orbit(code))


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=0, max_size=10))
def test_validate_never_raises_and_agrees_with_generation(u):
    trace = validate(u)
    n = len(u) - 2
    if 1 <= n <= 8:
        assert trace.valid == (tuple(u) in set(enumerate_planted(n)))
    else:
        assert not trace.valid
