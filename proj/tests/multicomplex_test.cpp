#include <gtest/gtest.h>

#include "support.hpp"

using namespace kt;

TEST(FromIdeal, StaircaseFacets) {
    const auto g = from_ideal(x1_fourth());
    EXPECT_EQ(g.facets(), (std::vector<ExpVec>{{0, I}, {1, I}, {2, I}, {3, 0}}));
    EXPECT_EQ(g.maximal(), (std::vector<ExpVec>{{2, I}, {3, 0}}));
    EXPECT_EQ(g, staircase());
}

TEST(FromIdeal, ZeroAndUnit) {
    EXPECT_EQ(from_ideal(MonomialIdeal::zero(2)).facets(), (std::vector<ExpVec>{{I, I}}));
    EXPECT_TRUE(from_ideal(MonomialIdeal::unit(2)).is_empty());
    EXPECT_EQ(from_ideal(ideal(1, {{1}})).facets(), (std::vector<ExpVec>{{0}}));
}

TEST(FromIdeal, SquareOfOneVariableHasTwoFacets) {
    EXPECT_EQ(from_ideal(ideal(1, {{2}})).facets(), (std::vector<ExpVec>{{0}, {1}}));
}

TEST(ToIdeal, Examples) {
    EXPECT_EQ(to_ideal(staircase()), x1_fourth());
    EXPECT_TRUE(to_ideal(Multicomplex::empty(2)).is_unit());
    EXPECT_TRUE(to_ideal(mc(3, {{I, I, I}})).is_zero());
}

TEST(ToIdeal, RoundTripsRandomIdeals) {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto I0 = random_ideal(rng, 3, 3, 4);
        EXPECT_EQ(to_ideal(from_ideal(I0)), I0) << to_string(I0);
    }
}

TEST(ToIdeal, RoundTripsRandomMulticomplexes) {
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        const auto g = random_multicomplex(rng, 3, 2, 4);
        EXPECT_EQ(from_ideal(to_ideal(g)), g) << to_string(g);
    }
}

TEST(Member, Examples) {
    EXPECT_TRUE(member(staircase(), ExpVec{2, 1}));
    EXPECT_FALSE(member(staircase(), ExpVec{3, 1}));
    EXPECT_TRUE(member(staircase(), ExpVec{0, 0}));
    EXPECT_FALSE(member(Multicomplex::empty(2), ExpVec{0, 0}));
}

TEST(StarDeletionLink, Staircase) {
    const auto g = staircase();
    EXPECT_EQ(star(g, ExpVec{2, 1}), mc(2, {{2, I}}));
    EXPECT_EQ(deletion(g, ExpVec{2, 1}), mc(2, {{0, I}, {1, I}, {3, 0}}));
    // (2,0) lies only under the maximal element (3,0), so it is a facet of the deletion too.
    EXPECT_EQ(deletion(g, ExpVec{2, 1}).facets(), (std::vector<ExpVec>{{0, I}, {1, I}, {2, 0}, {3, 0}}));
    EXPECT_EQ(link(g, ExpVec{2, 1}), mc(2, {{0, I}}));
    EXPECT_THROW(link(g, ExpVec{2, I}), Error);
}

TEST(StarDeletionLink, DeletionByZeroIsEmpty) {
    EXPECT_TRUE(deletion(staircase(), ExpVec{0, 0}).is_empty());
    EXPECT_EQ(link(staircase(), ExpVec{0, 0}), staircase());
}

TEST(Join, Examples) {
    EXPECT_EQ(join(mc(2, {{2, 0}}), mc(2, {{0, I}})), mc(2, {{2, I}}));
    EXPECT_EQ(join(staircase(), mc(2, {{0, 0}})), staircase());
    EXPECT_EQ(join(mc(3, {{1, 0, 0}, {0, I, 0}}), mc(3, {{0, 0, I}})), mc(3, {{1, 0, I}, {0, I, I}}));
    EXPECT_THROW(join(mc(2, {{1, 0}}), mc(2, {{1, 1}})), Error);
}

TEST(Dim, Examples) {
    EXPECT_EQ(dim(staircase()), 0);
    EXPECT_EQ(dim(mc(2, {{I, I}})), 1);
    EXPECT_EQ(dim(mc(2, {{0, 0}})), -1);
    EXPECT_THROW(dim(Multicomplex::empty(2)), Error);
}

TEST(StanleyInterval, Examples) {
    const auto g = staircase();
    auto s = is_stanley_interval(g, ExpVec{3, 0}, ExpVec{3, 0});
    ASSERT_TRUE(s);
    EXPECT_EQ(*s, (StanleySet{{3, 0}, VarSet{}}));

    s = is_stanley_interval(g, ExpVec{2, 1}, ExpVec{2, I});
    ASSERT_TRUE(s);
    EXPECT_EQ(*s, (StanleySet{{2, 1}, VarSet::of({1})}));

    s = is_stanley_interval(mc(2, {{0, I}}), ExpVec{0, 0}, ExpVec{0, I});
    ASSERT_TRUE(s);
    EXPECT_EQ(*s, (StanleySet{{0, 0}, VarSet::of({1})}));

    EXPECT_FALSE(is_stanley_interval(g, ExpVec{0, 0}, ExpVec{3, 0}));
}

TEST(StanleyInterval, Preconditions) {
    EXPECT_THROW(is_stanley_interval(staircase(), ExpVec{3, 1}, ExpVec{3, 0}), Error);
    EXPECT_THROW(is_stanley_interval(staircase(), ExpVec{3, 0}, ExpVec{2, I}), Error);
    EXPECT_THROW(is_stanley_interval(staircase(), ExpVec{2, 0}, ExpVec{2, 5}), Error);
}

TEST(SheddingFace, Staircase) {
    EXPECT_TRUE(is_shedding_face(staircase(), ExpVec{3, 0}));
    const auto v = is_shedding_face(staircase(), ExpVec{2, 1});
    EXPECT_FALSE(v);
    EXPECT_NE(v.reason.find("condition (ii)"), std::string::npos) << v.reason;
    EXPECT_NE(v.reason.find("(2,inf)"), std::string::npos) << v.reason;
    EXPECT_THROW(is_shedding_face(staircase(), ExpVec{3, 1}), Error);
}

TEST(SheddingFace, SingleFacetTruncation) {
    const auto g = mc(3, {{2, I, 1}});
    EXPECT_TRUE(is_shedding_face(g, ExpVec{2, 0, 1}));
}

TEST(SheddingFace, ConditionOneFailsWhenDeletionLosesMore) {
    // Deleting (1,0) from ⟨(∞,∞)⟩ removes the only facet, including (0,0).
    const auto v = is_shedding_face(mc(2, {{I, I}}), ExpVec{1, 0});
    EXPECT_FALSE(v);
    EXPECT_NE(v.reason.find("condition (i)"), std::string::npos) << v.reason;
    // In ⟨(1,1)⟩ every point is a facet, and (0,1) survives the deletion of (1,0).
    EXPECT_TRUE(is_shedding_face(mc(2, {{1, 1}}), ExpVec{1, 0}));
    EXPECT_TRUE(is_shedding_face(mc(2, {{1, 1}}), ExpVec{1, 1}));
}

TEST(SheddingFace, UnionOfTwoStanleySetsStillSheds) {
    const auto g = from_ideal(ideal(2, {{2, 2}}));
    EXPECT_EQ(g.maximal(), (std::vector<ExpVec>{{1, I}, {I, 1}}));
    EXPECT_TRUE(is_shedding_face(g, ExpVec{2, 0}));
    EXPECT_TRUE(is_pretty_cleaner(ideal(2, {{2, 2}}), ExpVec{2, 0}));
}

TEST(Decomposable, StaircaseAtZero) {
    const auto t = is_k_decomposable(staircase(), 0);
    ASSERT_TRUE(t);
    EXPECT_TRUE(verify_shedding_tree(*t, 0));
    ASSERT_FALSE(t->is_leaf());
    EXPECT_TRUE(is_shedding_face(staircase(), ExpVec{3, 0}));
    EXPECT_EQ(link(staircase(), ExpVec{3, 0}), mc(2, {{0, 0}}));
    EXPECT_EQ(deletion(staircase(), ExpVec{3, 0}), mc(2, {{2, I}}));
}

TEST(Decomposable, SingleFacetIsALeaf) {
    for (int k = 0; k < 3; ++k) {
        const auto t = is_k_decomposable(mc(3, {{0, I, 0}}), k);
        ASSERT_TRUE(t);
        EXPECT_TRUE(t->is_leaf());
    }
}

TEST(Decomposable, OneMaximalElementIsZeroDecomposable) {
    const auto g = mc(3, {{2, I, 5}});
    EXPECT_EQ(g.facets().size(), 18u);
    const auto t = is_k_decomposable(g, 0);
    ASSERT_TRUE(t);
    EXPECT_TRUE(verify_shedding_tree(*t, 0));
    EXPECT_TRUE(is_k_decomposable(mc(3, {{2, I, 0}}), 0));
}

TEST(Decomposable, RejectsNegativeK) {
    EXPECT_THROW(is_k_decomposable(staircase(), -1), Error);
}

TEST(Decomposable, EmptyMulticomplexIsALeaf) {
    const auto t = is_k_decomposable(Multicomplex::empty(2), 0);
    ASSERT_TRUE(t);
    EXPECT_TRUE(t->is_leaf());
}

TEST(Decomposable, TwoDisjointEdgesFailAtEveryK) {
    const auto g = from_ideal(ideal(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
    for (int k = 0; k < 4; ++k) {
        EXPECT_FALSE(is_k_decomposable(g, k)) << k;
    }
}

TEST(Decomposable, VerifierCatchesTamperedTrees) {
    auto t = is_k_decomposable(staircase(), 0);
    ASSERT_TRUE(t);
    SheddingTree bad = *t;
    bad.face = ExpVec{2, 1};
    EXPECT_FALSE(verify_shedding_tree(bad, 0));
    SheddingTree leaf{staircase(), std::nullopt, nullptr, nullptr};
    EXPECT_FALSE(verify_shedding_tree(leaf, 0));
}

TEST(Shelling, StaircaseOrders) {
    const auto g = staircase();
    EXPECT_TRUE(is_shelling(g, {{0, I}, {1, I}, {2, I}, {3, 0}}));
    EXPECT_FALSE(is_shelling(g, {{3, 0}, {0, I}, {1, I}, {2, I}}));
    EXPECT_THROW(is_shelling(g, {{2, I}, {3, 0}}), Error);
    const auto found = find_shelling(g);
    ASSERT_TRUE(found);
    EXPECT_TRUE(is_shelling(g, *found));
}

TEST(Shelling, SingleFacet) {
    const auto g = mc(2, {{0, I}});
    EXPECT_TRUE(is_shelling(g, {{0, I}}));
    const auto found = find_shelling(g);
    ASSERT_TRUE(found);
    EXPECT_EQ(*found, (std::vector<ExpVec>{{0, I}}));
}

TEST(Shelling, TwoDisjointEdgesIsNotShellable) {
    const auto g = from_ideal(ideal(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
    EXPECT_FALSE(find_shelling(g));
}

TEST(DefaultCaps, CoverTheFiniteEntries) {
    EXPECT_EQ(default_shedding_caps(staircase()), (std::vector<int>{4, 1}));
    EXPECT_EQ(default_shedding_caps(mc(2, {{I, I}})), (std::vector<int>{0, 0}));
}
