#include <gtest/gtest.h>

#include "support.hpp"

using namespace kt;

TEST(Complex, FromFacetsKeepsMaximalSets) {
    const auto d = complex(3, {{1, 2}, {1}, {2, 3}});
    EXPECT_EQ(d.facets(), (std::vector<VarSet>{face({1, 2}), face({2, 3})}));
    EXPECT_TRUE(d.contains(face({2})));
    EXPECT_FALSE(d.contains(face({1, 3})));
    EXPECT_EQ(d.faces().size(), 6u);
}

TEST(Complex, VoidAndEmptyFace) {
    EXPECT_TRUE(SimplicialComplex::void_complex(3).is_void());
    EXPECT_TRUE(SimplicialComplex::empty_face(3).is_empty_face());
    EXPECT_THROW(complex(2, {{3}}), Error);
}

TEST(StanleyReisner, Examples) {
    EXPECT_EQ(stanley_reisner(complex(3, {{1, 2}, {2, 3}})), ideal(3, {{1, 0, 1}}));
    EXPECT_TRUE(stanley_reisner(SimplicialComplex::simplex(4, VarSet::full(4))).is_zero());
    EXPECT_EQ(from_stanley_reisner(stanley_reisner(six_vertex())), six_vertex());
    EXPECT_THROW(from_stanley_reisner(x1_fourth()), Error);
}

TEST(StanleyReisner, RoundTripsRandomComplexes) {
    Rng rng(17);
    for (int t = 0; t < 150; ++t) {
        const auto d = random_complex(rng, 5, 5);
        EXPECT_EQ(from_stanley_reisner(stanley_reisner(d)), d) << to_string(d);
    }
}

TEST(LinkDeletion, Examples) {
    const auto path = complex(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(link_sc(path, face({2})), complex(3, {{1}, {3}}));
    EXPECT_EQ(deletion_sc(path, face({2})), complex(3, {{1}, {3}}));
    EXPECT_EQ(link_sc(path, VarSet{}), path);
    EXPECT_THROW(link_sc(path, face({1, 3})), Error);
}

TEST(SheddingFaceSc, Examples) {
    for (std::size_t v = 1; v <= 3; ++v) {
        EXPECT_TRUE(is_shedding_face_sc(triangle_boundary(), face({v})));
    }
    EXPECT_TRUE(is_shedding_face_sc(complex(2, {{1}, {2}}), face({1})));
    EXPECT_FALSE(is_shedding_face_sc(complex(2, {{1, 2}}), face({1})));
    EXPECT_THROW(is_shedding_face_sc(triangle_boundary(), face({1, 2, 3})), Error);
}

TEST(DecomposableSc, Simplices) {
    for (int k = -1; k < 3; ++k) {
        EXPECT_TRUE(is_k_decomposable_sc(SimplicialComplex::simplex(3, face({1, 3})), k));
    }
}

TEST(DecomposableSc, TriangleBoundary) {
    EXPECT_TRUE(is_k_decomposable_sc(triangle_boundary(), 0));
    EXPECT_FALSE(is_k_decomposable_sc(triangle_boundary(), -1));
}

TEST(DecomposableSc, SixVertexComplexIsVertexDecomposable) {
    const auto t = is_k_decomposable_sc(six_vertex(), 0);
    ASSERT_TRUE(t);
    ASSERT_TRUE(t->face);
    EXPECT_EQ(t->face->size(), 1u);
    EXPECT_TRUE(is_shedding_face_sc(six_vertex(), face({4})));
    EXPECT_TRUE(is_k_decomposable_sc(link_sc(six_vertex(), face({4})), 0));
    EXPECT_TRUE(is_k_decomposable_sc(deletion_sc(six_vertex(), face({4})), 0));
}

TEST(DecomposableSc, TwoDisjointEdges) {
    const auto d = complex(4, {{1, 2}, {3, 4}});
    for (int k = -1; k < 3; ++k) {
        EXPECT_FALSE(is_k_decomposable_sc(d, k));
    }
}

TEST(ShellableSc, Examples) {
    const auto path = complex(3, {{1, 2}, {2, 3}});
    const auto order = is_shellable_sc(path);
    ASSERT_TRUE(order);
    EXPECT_EQ(*order, (std::vector<VarSet>{face({1, 2}), face({2, 3})}));
    EXPECT_FALSE(is_shellable_sc(complex(4, {{1, 2}, {3, 4}})));
}

TEST(ShellableSc, SixVertexComplex) {
    const auto order = is_shellable_sc(six_vertex());
    ASSERT_TRUE(order);
    EXPECT_EQ(order->size(), 11u);
    EXPECT_TRUE(is_shelling_sc(six_vertex(), *order));
}

TEST(ShellableSc, OrderMustBeAPermutation) {
    EXPECT_THROW(is_shelling_sc(triangle_boundary(), {face({1, 2})}), Error);
    EXPECT_FALSE(is_shelling_sc(complex(4, {{1, 2}, {3, 4}}), {face({1, 2}), face({3, 4})}));
}

TEST(ToMulticomplex, Examples) {
    EXPECT_EQ(to_multicomplex(complex(3, {{1, 2}})), mc(3, {{I, I, 0}}));
    EXPECT_EQ(from_squarefree_multicomplex(to_multicomplex(six_vertex())), six_vertex());
    EXPECT_THROW(from_squarefree_multicomplex(staircase()), Error);
}

TEST(ToMulticomplex, IdealOfTheEncodingIsStanleyReisner) {
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        const auto d = random_complex(rng, 4, 4);
        EXPECT_EQ(to_ideal(to_multicomplex(d)), stanley_reisner(d)) << to_string(d);
    }
}

TEST(JoinSc, ShiftsTheSecondBlock) {
    const auto j = join_sc(complex(2, {{1}, {2}}), complex(1, {{1}}));
    EXPECT_EQ(j, complex(3, {{1, 3}, {2, 3}}));
}
