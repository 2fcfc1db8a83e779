#include <gtest/gtest.h>

#include "stlab/root_system.hpp"

using namespace stlab;

namespace {

std::vector<std::string> all_systems() { return {"A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7", "D8"}; }

}  // namespace

TEST(RootSystem, Sizes) {
    for (int l = 2; l <= 8; ++l) EXPECT_EQ(RootSystem::build(RootType::A, l)->size(), static_cast<std::size_t>(l * (l + 1)));
    for (int l = 4; l <= 8; ++l) EXPECT_EQ(RootSystem::build(RootType::D, l)->size(), static_cast<std::size_t>(2 * l * (l - 1)));
    EXPECT_EQ(RootSystem::parse("D4")->size(), 24u);
}

TEST(RootSystem, UnsupportedRanks) {
    EXPECT_THROW(RootSystem::build(RootType::A, 1), PreconditionFailed);
    EXPECT_THROW(RootSystem::build(RootType::A, 9), PreconditionFailed);
    EXPECT_THROW(RootSystem::build(RootType::D, 3), PreconditionFailed);
    EXPECT_THROW(RootSystem::parse("C3"), Error);
}

TEST(RootSystem, SimplyLacedAndNegatives) {
    for (const auto& nm : all_systems()) {
        SystemPtr S = RootSystem::parse(nm);
        for (RootIndex a = 0; a < static_cast<RootIndex>(S->size()); ++a) {
            int len = 0;
            for (int c : S->coords(a)) len += c * c;
            ASSERT_EQ(len, 2);
            ASSERT_EQ(S->negative(S->negative(a)), a);
            ASSERT_EQ(S->is_positive(a), static_cast<std::size_t>(a) < S->num_positive());
        }
    }
}

TEST(RootSystem, ConstantsA2) {
    SystemPtr S = RootSystem::parse("A2");
    RootIndex a1 = S->parse_root("e1-e2"), a2 = S->parse_root("e2-e3");
    EXPECT_EQ(S->N(a1, a2), 1);
    EXPECT_EQ(S->N(a2, a1), -1);
    EXPECT_EQ(constants_table(*S).size(), 12u);
}

TEST(RootSystem, ConstantsInvariants) {
    for (const auto& nm : all_systems()) {
        SystemPtr S = RootSystem::parse(nm);
        for (const auto& r : constants_table(*S)) {
            ASSERT_TRUE(r.N == 1 || r.N == -1);
            ASSERT_EQ(S->N(r.beta, r.alpha), -r.N);
            ASSERT_EQ(S->N(S->negative(r.alpha), S->negative(r.beta)), -r.N);
        }
    }
}

TEST(RootSum, Examples) {
    SystemPtr S = RootSystem::parse("A2");
    RootIndex a = S->parse_root("e1-e2"), b = S->parse_root("e2-e3"), c = S->parse_root("e1-e3");
    EXPECT_EQ(S->sum(a, b).kind, RootSum::Kind::root);
    EXPECT_EQ(S->sum(a, b).index, c);
    EXPECT_EQ(S->sum(a, c).kind, RootSum::Kind::none);
    EXPECT_EQ(S->sum(a, S->negative(a)).kind, RootSum::Kind::opposite);
}

TEST(RootSum, ConsistentWithCoordinates) {
    for (const auto& nm : all_systems()) {
        SystemPtr S = RootSystem::parse(nm);
        const auto n = static_cast<RootIndex>(S->size());
        for (RootIndex a = 0; a < n; ++a)
            for (RootIndex b = 0; b < n; ++b) {
                std::vector<int> v = S->coords(a);
                for (std::size_t k = 0; k < v.size(); ++k) v[k] += S->coords(b)[k];
                RootSum s = S->sum(a, b);
                bool zero = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
                auto f = S->find(v);
                if (zero)
                    ASSERT_EQ(s.kind, RootSum::Kind::opposite);
                else if (f)
                    ASSERT_EQ(s.index, *f);
                else
                    ASSERT_EQ(s.kind, RootSum::Kind::none);
            }
    }
}

TEST(CommutatorDecomposition, Examples) {
    SystemPtr A3 = RootSystem::parse("A3");
    auto [x, y] = A3->commutator_decomposition(A3->parse_root("e1-e4"));
    EXPECT_EQ(A3->root_str(x), "e1-e2");
    EXPECT_EQ(A3->root_str(y), "e2-e4");
    auto [p, q] = A3->commutator_decomposition(A3->parse_root("e2-e3"));
    EXPECT_EQ(A3->sum(p, q).index, A3->parse_root("e2-e3"));
    SystemPtr D4 = RootSystem::parse("D4");
    auto [u, v] = D4->commutator_decomposition(D4->parse_root("e1+e2"));
    EXPECT_EQ(D4->root_str(u), "e1-e3");
    EXPECT_EQ(D4->root_str(v), "e2+e3");
}

TEST(CommutatorDecomposition, AllRoots) {
    for (const auto& nm : all_systems()) {
        SystemPtr S = RootSystem::parse(nm);
        if (S->rank() < 3) continue;
        for (RootIndex b = 0; b < static_cast<RootIndex>(S->size()); ++b) {
            auto [x, y] = S->commutator_decomposition(b);
            ASSERT_EQ(S->sum(x, y).index, b);
            ASSERT_NE(x, b);
            ASSERT_NE(y, b);
            ASSERT_NE(x, S->negative(b));
            ASSERT_NE(y, S->negative(b));
        }
    }
}

TEST(RootParsing, StringsAndCoordinates) {
    SystemPtr D4 = RootSystem::parse("D4");
    RootIndex r = D4->parse_root("-e1-e3");
    EXPECT_EQ(D4->coords(r), (std::vector<int>{-1, 0, -1, 0}));
    EXPECT_EQ(D4->index_of({-1, 0, -1, 0}), r);
    EXPECT_THROW(D4->parse_root("e1+e1"), Error);
}
