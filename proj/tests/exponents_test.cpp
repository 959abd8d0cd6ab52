#include <gtest/gtest.h>

#include "support.hpp"

using namespace kt;

TEST(Exponent, InfinityOrdersAboveEveryInteger) {
    EXPECT_LT(Exponent(1000000), kInf);
    EXPECT_EQ(kInf, kInf);
    EXPECT_TRUE(kInf.is_inf());
    EXPECT_THROW(static_cast<void>(kInf.value()), Error);
    EXPECT_THROW(Exponent(-3), Error);
}

TEST(Exponent, AdditionAbsorbsInfinity) {
    EXPECT_EQ(Exponent(2) + Exponent(3), Exponent(5));
    EXPECT_EQ(Exponent(2) + kInf, kInf);
    EXPECT_EQ(kInf + kInf, kInf);
}

TEST(Leq, ComponentwiseWithInfinity) {
    EXPECT_TRUE(leq(ExpVec{2, 1}, ExpVec{2, I}));
    EXPECT_FALSE(leq(ExpVec{3, 1}, ExpVec{2, I}));
    EXPECT_FALSE(leq(ExpVec{0, I}, ExpVec{3, 0}));
    EXPECT_TRUE(leq(ExpVec{I, I}, ExpVec{I, I}));
}

TEST(Leq, DimensionMismatchThrows) {
    EXPECT_THROW(leq(ExpVec{1}, ExpVec{1, 2}), Error);
    EXPECT_THROW(join(ExpVec{1}, ExpVec{1, 2}), Error);
}

TEST(SupportPartition, Examples) {
    auto p = support_partition(ExpVec{2, I});
    EXPECT_EQ(p.fpt, VarSet::of({0}));
    EXPECT_EQ(p.infpt, VarSet::of({1}));
    EXPECT_EQ(p.fpt_star, VarSet::of({0}));

    p = support_partition(ExpVec{0, 0});
    EXPECT_EQ(p.fpt, VarSet::of({0, 1}));
    EXPECT_TRUE(p.infpt.empty());
    EXPECT_TRUE(p.fpt_star.empty());

    p = support_partition(ExpVec{3, 0});
    EXPECT_EQ(p.fpt, VarSet::of({0, 1}));
    EXPECT_TRUE(p.infpt.empty());
    EXPECT_EQ(p.fpt_star, VarSet::of({0}));
}

TEST(Arithmetic, JoinMeetAddSub) {
    EXPECT_EQ(sub(ExpVec{2, I}, ExpVec{2, 1}), (ExpVec{0, I}));
    EXPECT_EQ(join(ExpVec{2, 1}, ExpVec{0, I}), (ExpVec{2, I}));
    EXPECT_EQ(meet(ExpVec{2, 1}, ExpVec{0, I}), (ExpVec{0, 1}));
    EXPECT_EQ(add(ExpVec{1, 0}, ExpVec{0, I}), (ExpVec{1, I}));
    EXPECT_EQ(monus(ExpVec{1, 3}, ExpVec{2, 1}), (ExpVec{0, 2}));
}

TEST(Arithmetic, SubRejectsBadArguments) {
    EXPECT_THROW(sub(ExpVec{1, 1}, ExpVec{2, 0}), Error);
    EXPECT_THROW(sub(ExpVec{I, 1}, ExpVec{I, 0}), Error);
}

TEST(VarSet, OrderIsBySizeThenBits) {
    EXPECT_LT(VarSet::of({2}), VarSet::of({0, 1}));
    EXPECT_LT(VarSet::of({0}), VarSet::of({1}));
    EXPECT_TRUE(VarSet::of({0}).proper_subset_of(VarSet::of({0, 3})));
    EXPECT_FALSE(VarSet::of({0, 3}).proper_subset_of(VarSet::of({0, 3})));
    EXPECT_EQ(VarSet::full(3).size(), 3u);
    EXPECT_THROW(VarSet::of({64}), Error);
}

TEST(ExpVec, Constructors) {
    EXPECT_EQ(ExpVec::unit(3, 1, 2), (ExpVec{0, 2, 0}));
    EXPECT_EQ(ExpVec::indicator_inf(3, VarSet::of({0, 2})), (ExpVec{I, 0, I}));
    EXPECT_EQ(ExpVec::indicator(3, VarSet::of({1})), (ExpVec{0, 1, 0}));
    EXPECT_EQ((ExpVec{1, 2, 3}).total_degree(), 6);
    EXPECT_THROW((ExpVec{1, I}).total_degree(), Error);
    EXPECT_THROW(ExpVec(std::size_t{0}), Error);
}

TEST(ExpVec, Printing) {
    EXPECT_EQ(to_string(ExpVec{2, I}), "(2,inf)");
    EXPECT_EQ(monomial_string(ExpVec{1, 2, 0}), "x1*x2^2");
    EXPECT_EQ(monomial_string(ExpVec{0, 0}), "1");
}

TEST(ForEachInBox, VisitsEveryPointOnce) {
    std::vector<ExpVec> seen;
    for_each_in_box({1, 2}, [&](const ExpVec& v) { seen.push_back(v); });
    ASSERT_EQ(seen.size(), 6u);
    EXPECT_EQ(seen.front(), (ExpVec{0, 0}));
    EXPECT_EQ(seen.back(), (ExpVec{1, 2}));
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}
