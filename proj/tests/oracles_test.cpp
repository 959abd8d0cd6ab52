#include <gtest/gtest.h>

#include "support.hpp"

using namespace kt;

namespace {

std::vector<VarSet> vars_of(const std::vector<MonomialPrime>& ps) {
    std::vector<VarSet> out;
    for (const auto& p : ps) {
        out.push_back(p.vars());
    }
    return out;
}

TruncationBox widened(const MonomialIdeal& I0) {
    auto caps = I0.max_exponents();
    for (auto& c : caps) {
        c += 1;
    }
    return {caps};
}

}  // namespace

TEST(OracleAss, Examples) {
    EXPECT_EQ(oracle_ass(3, three_cycle().gens(), widened(three_cycle())), vars_of(ass(three_cycle())));
    EXPECT_EQ(oracle_ass(3, three_cycle().gens(), widened(three_cycle())).size(), 4u);
    const auto P = ideal(3, {{1, 0, 0}, {0, 1, 0}});
    EXPECT_EQ(oracle_ass(3, P.gens(), TruncationBox::uniform(3, 2)), (std::vector<VarSet>{VarSet::of({0, 1})}));
    EXPECT_EQ(oracle_ass(2, x1_fourth().gens(), TruncationBox{{4, 2}}),
              (std::vector<VarSet>{VarSet::of({0}), VarSet::of({0, 1})}));
}

TEST(OracleStanleyInterval, Examples) {
    const auto g = staircase();
    const TruncationBox box{{5, 3}};
    EXPECT_TRUE(oracle_stanley_interval(2, g.facets(), ExpVec{3, 0}, ExpVec{3, 0}, box));
    EXPECT_TRUE(oracle_stanley_interval(2, g.facets(), ExpVec{2, 1}, ExpVec{2, I}, box));
    EXPECT_FALSE(oracle_stanley_interval(2, g.facets(), ExpVec{0, 0}, ExpVec{3, 0}, box));
    EXPECT_TRUE(oracle_stanley_interval(2, {ExpVec{0, I}}, ExpVec{0, 0}, ExpVec{0, I}, box));
}

TEST(OracleDeciders, Examples) {
    EXPECT_TRUE(oracle_decomposable(2, staircase().facets(), 0, TruncationBox{{4, 1}}));
    const auto P = ideal(2, {{1, 0}, {0, 1}});
    for (int k = 0; k < 2; ++k) {
        EXPECT_TRUE(oracle_pretty_k_clean(2, P.gens(), k, TruncationBox{{1, 1}}));
    }
    const auto box = TruncationBox{three_cycle().max_exponents()};
    for (int k = 0; k < 3; ++k) {
        EXPECT_EQ(oracle_pretty_k_clean(3, three_cycle().gens(), k, box),
                  static_cast<bool>(is_pretty_k_clean(three_cycle(), k)));
    }
}

TEST(OracleDeciders, RefuseLargeInstances) {
    const auto big = ideal(4, {{1, 0, 0, 0}});
    EXPECT_THROW(oracle_pretty_k_clean(4, big.gens(), 0, TruncationBox::uniform(4, 1)), Error);
    EXPECT_THROW(oracle_pretty_k_clean(1, ideal(1, {{5}}).gens(), 0, TruncationBox{{5}}), Error);
}

TEST(OracleAgreement, AssOnRandomIdeals) {
    Rng rng(101);
    for (int t = 0; t < 200; ++t) {
        const auto I0 = random_ideal(rng, 3, 3, 4);
        EXPECT_EQ(oracle_ass(3, I0.gens(), widened(I0)), vars_of(ass(I0))) << to_string(I0);
    }
}

TEST(OracleAgreement, StanleyIntervalsOnRandomMulticomplexes) {
    Rng rng(103);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        const auto g = random_multicomplex(rng, 2, 2, 3);
        const TruncationBox box{{4, 4}};
        for_each_in_box({2, 2}, [&](const ExpVec& a) {
            if (!member(g, a)) {
                return;
            }
            for (const auto& b : facets_above(g, a)) {
                ++checked;
                EXPECT_EQ(static_cast<bool>(is_stanley_interval(g, a, b)),
                          oracle_stanley_interval(2, g.facets(), a, b, box))
                    << to_string(g) << " a=" << to_string(a) << " b=" << to_string(b);
            }
        });
    }
    EXPECT_GE(checked, 200);
}

TEST(OracleAgreement, DecidersOnRandomIdeals) {
    Rng rng(107);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        const auto I0 = random_ideal(rng, n, 2, 4);
        const auto caps = I0.max_exponents();
        const auto g = from_ideal(I0);
        for (int k = 0; k < static_cast<int>(n); ++k) {
            EXPECT_EQ(static_cast<bool>(is_pretty_k_clean(I0, k, SearchBound{caps})),
                      oracle_pretty_k_clean(n, I0.gens(), k, TruncationBox{caps}))
                << to_string(I0) << " k=" << k;
            EXPECT_EQ(static_cast<bool>(is_k_decomposable(g, k, SearchBound{caps})),
                      oracle_decomposable(n, g.facets(), k, TruncationBox{caps}))
                << to_string(I0) << " k=" << k;
        }
    }
}
