"""Tree building and caterpillar recognition vs the minor recognizers."""

import pytest

from prefdomains import (
    CaterpillarOrder,
    MinorWitness,
    Profile,
    TreeLeaf,
    TreeNode,
    build_gs_tree,
    check_t_consistent,
    format_tree,
    is_member,
    recognize_caterpillar,
    tree_leaves,
    verify_caterpillar,
    witness_matches,
)
from prefdomains.domains import DomainId
from prefdomains.errors import (
    LabelMismatch,
    NotGroupSeparable,
    PreconditionViolated,
)
from prefdomains.oracle import SplitMix64

from conftest import P, all_tiny_profiles


def random_profile(rng: SplitMix64, n: int, m: int) -> Profile:
    names = tuple("c%d" % i for i in range(m))
    votes = []
    for _ in range(n):
        order = list(range(m))
        rng.shuffle(order)
        votes.append(tuple(order))
    return Profile(names, tuple(votes))


class TestBuild:
    def test_paired_blocks(self):
        p = P("a,b,c,d", "a>b>c>d", "b>a>d>c", "c>d>a>b")
        t = build_gs_tree(p)
        assert format_tree(t, p.names) == "((a,b),(c,d))"
        assert check_t_consistent(p, t)

    def test_single_vote_spine(self):
        p = P("a,b,c", "a>b>c")
        t = build_gs_tree(p)
        assert format_tree(t, p.names) == "(a,(b,c))"

    def test_single_candidate(self):
        p = P("a", "a")
        assert build_gs_tree(p) == TreeLeaf(0)

    def test_no_votes(self):
        with pytest.raises(PreconditionViolated):
            build_gs_tree(Profile(("a", "b"), ()))

    def test_not_separable(self):
        p = P("a,b,c,d", "a>b>c>d", "b>d>a>c")
        with pytest.raises(NotGroupSeparable) as e:
            build_gs_tree(p)
        assert e.value.candidates == frozenset({0, 1, 2, 3})

    def test_leaves_cover_candidates(self):
        rng = SplitMix64(0x7EE5)
        for _ in range(50):
            p = random_profile(rng, 1 + rng.below(4), 2 + rng.below(4))
            try:
                t = build_gs_tree(p)
            except NotGroupSeparable:
                continue
            assert sorted(tree_leaves(t)) == list(range(p.m))

    def test_matches_membership(self):
        for p in all_tiny_profiles(3, 2):
            member = is_member(p, DomainId.GS) is None
            try:
                t = build_gs_tree(p)
            except NotGroupSeparable:
                assert not member
            else:
                assert member
                assert check_t_consistent(p, t)

    def test_matches_membership_random(self):
        rng = SplitMix64(0x6B33F)
        for _ in range(120):
            p = random_profile(rng, 1 + rng.below(5), 2 + rng.below(4))
            member = is_member(p, DomainId.GS) is None
            try:
                t = build_gs_tree(p)
            except NotGroupSeparable:
                assert not member
            else:
                assert member
                assert check_t_consistent(p, t)


class TestConsistency:
    def test_label_mismatch(self):
        p = P("a,b,c", "a>b>c")
        with pytest.raises(LabelMismatch):
            check_t_consistent(p, TreeNode(TreeLeaf(0), TreeLeaf(1)))

    def test_wrong_tree_rejected(self):
        p = P("a,b,c,d", "a>b>c>d", "b>a>d>c", "c>d>a>b")
        bad = TreeNode(
            TreeNode(TreeLeaf(0), TreeLeaf(2)),
            TreeNode(TreeLeaf(1), TreeLeaf(3)),
        )
        assert not check_t_consistent(p, bad)

    def test_leaf_tree(self):
        p = P("a", "a")
        assert check_t_consistent(p, TreeLeaf(0))


class TestCaterpillar:
    def test_single_vote(self):
        p = P("a,b,c", "a>b>c")
        got = recognize_caterpillar(p)
        assert got == CaterpillarOrder((0, 1, 2))
        assert verify_caterpillar(p, got)

    def test_final_pair_sorted(self):
        p = P("a,b,c", "c>b>a")
        assert recognize_caterpillar(p) == CaterpillarOrder((0, 1, 2))

    def test_two_candidates(self):
        p = P("a,b", "b>a", "a>b")
        assert recognize_caterpillar(p) == CaterpillarOrder((0, 1))

    def test_one_candidate(self):
        with pytest.raises(PreconditionViolated):
            recognize_caterpillar(P("a", "a"))

    def test_known_witness(self):
        p = P("a,b,c,d", "a>b>c>d", "b>d>a>c")
        got = recognize_caterpillar(p)
        assert isinstance(got, MinorWitness)
        assert witness_matches(p, got)

    def test_matches_membership(self):
        for p in all_tiny_profiles(3, 2):
            member = is_member(p, DomainId.CATGS) is None
            got = recognize_caterpillar(p)
            if isinstance(got, CaterpillarOrder):
                assert member
                assert verify_caterpillar(p, got)
            else:
                assert not member
                assert witness_matches(p, got)

    def test_matches_membership_random(self):
        rng = SplitMix64(0xCA7)
        for _ in range(150):
            p = random_profile(rng, 1 + rng.below(5), 2 + rng.below(4))
            member = is_member(p, DomainId.CATGS) is None
            got = recognize_caterpillar(p)
            if isinstance(got, CaterpillarOrder):
                assert member
                assert verify_caterpillar(p, got)
            else:
                assert not member
                assert witness_matches(p, got)

    def test_deterministic(self):
        rng = SplitMix64(0xD3)
        for _ in range(30):
            p = random_profile(rng, 3, 4)
            assert recognize_caterpillar(p) == recognize_caterpillar(p)


class TestVerifyCaterpillar:
    def test_label_mismatch(self):
        p = P("a,b,c", "a>b>c")
        with pytest.raises(LabelMismatch):
            verify_caterpillar(p, CaterpillarOrder((0, 1)))
        with pytest.raises(LabelMismatch):
            verify_caterpillar(p, CaterpillarOrder((0, 1, 1)))

    def test_rejects_bad_order(self):
        p = P("a,b,c", "a>b>c")
        # b is mid-vote, so it cannot lead the order
        assert not verify_caterpillar(p, CaterpillarOrder((1, 0, 2)))

    def test_accepts_reversal(self):
        p = P("a,b,c,d", "a>b>c>d")
        assert verify_caterpillar(p, CaterpillarOrder((0, 1, 2, 3)))
        assert verify_caterpillar(p, CaterpillarOrder((3, 2, 1, 0)))
