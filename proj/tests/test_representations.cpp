#include <gtest/gtest.h>

#include "stlab/parse.hpp"
#include "stlab/representation.hpp"

using namespace stlab;

TEST(Evaluate, DefiningGenerator) {
    SystemPtr S = RootSystem::parse("A2");
    Ring P = parse_ring("Z[xi]");
    Elem xi = P.gen(0);
    GroupMatrix m = evaluate(gen(S, S->parse_root("e1-e2"), xi), RepKind::defining);
    GroupMatrix expect = GroupMatrix::identity(3, P.zero(), P.one());
    expect(0, 1) = xi;
    EXPECT_EQ(m, expect);
}

TEST(Evaluate, TorusInDefiningRep) {
    SystemPtr S = RootSystem::parse("A2");
    Ring F5 = prime_field(5);
    SteinbergWord h = torus(S, 0, F5.from_int(2));
    EXPECT_EQ(h.size(), 5u);  // x(u) x(-1) merge in the middle
    GroupMatrix m = evaluate(h, RepKind::defining);
    EXPECT_EQ(m(0, 0), F5.from_int(2));
    EXPECT_EQ(m(1, 1), F5.from_int(3));
    EXPECT_EQ(m(2, 2), F5.one());
}

TEST(Evaluate, VectorRepD4) {
    SystemPtr S = RootSystem::parse("D4");
    Ring P = parse_ring("Z[xi]");
    Elem xi = P.gen(0);
    GroupMatrix m = evaluate(gen(S, S->parse_root("e1-e2"), xi), RepKind::vector);
    GroupMatrix expect = GroupMatrix::identity(8, P.zero(), P.one());
    expect(0, 1) = xi;
    expect(5, 4) = -xi;
    EXPECT_EQ(m, expect);
}

TEST(Evaluate, Homomorphism) {
    Rng64 g(1);
    Ring R = parse_ring("Zmod:12");
    for (const char* nm : {"A3", "D4"}) {
        SystemPtr S = RootSystem::parse(nm);
        for (RepKind k : {RepKind::adjoint, S->type() == RootType::A ? RepKind::defining : RepKind::vector}) {
            for (int i = 0; i < 30; ++i) {
                SteinbergWord v = random_word(S, R, 4, g), w = random_word(S, R, 4, g);
                ASSERT_EQ(evaluate(v * w, k), evaluate(v, k) * evaluate(w, k));
            }
        }
    }
}

TEST(Representation, NilpotencyAndUnsupported) {
    SystemPtr A3 = RootSystem::parse("A3"), D4 = RootSystem::parse("D4");
    EXPECT_THROW(Representation::make(RepKind::vector, A3), Unsupported);
    EXPECT_THROW(Representation::make(RepKind::defining, D4), Unsupported);
    for (const RepPtr& rep : {Representation::adjoint(A3), Representation::natural(A3), Representation::adjoint(D4),
                              Representation::natural(D4)}) {
        const int n = rep->dim();
        for (RootIndex a = 0; a < static_cast<RootIndex>(rep->system()->size()); ++a) {
            auto e = rep->root_matrix(a);
            auto sq = [&](const std::vector<std::vector<long>>& x, const std::vector<std::vector<long>>& y) {
                std::vector<std::vector<long>> r(n, std::vector<long>(n, 0));
                for (int i = 0; i < n; ++i)
                    for (int k = 0; k < n; ++k)
                        for (int j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
                return r;
            };
            auto e2 = sq(e, e), e3 = sq(e2, e);
            auto zero = std::vector<std::vector<long>>(n, std::vector<long>(n, 0));
            ASSERT_EQ(e3, zero);
            if (rep->kind() != RepKind::adjoint) ASSERT_EQ(e2, zero);
            // divided square: e^2 = 2 e^(2)
            auto d = rep->root_matrix(a, true);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) ASSERT_EQ(e2[i][j], 2 * d[i][j]);
        }
    }
}

TEST(Representation, BracketConsistency) {
    for (const char* nm : {"A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7", "D8"}) {
        SystemPtr S = RootSystem::parse(nm);
        EXPECT_EQ(bracket_violations(*Representation::adjoint(S)), 0) << nm;
        EXPECT_EQ(bracket_violations(*Representation::natural(S)), 0) << nm;
    }
}

TEST(K2Membership, Examples) {
    SystemPtr S = RootSystem::parse("A2");
    Ring F5 = prime_field(5);
    EXPECT_TRUE(k2_membership(symbol(S, 0, F5.from_int(2), F5.from_int(3))));
    EXPECT_FALSE(k2_membership(gen(S, 0, F5.one())));
    SteinbergWord w = torus(S, 0, F5.from_int(2)) * torus(S, 0, F5.from_int(3)) * torus(S, 0, F5.from_int(6)).inverse();
    EXPECT_TRUE(k2_membership(w, RepKind::defining));
}

TEST(K2Membership, RandomSymbolProductsOverFiniteFields) {
    Rng64 g(9);
    for (long p : {5L, 7L, 11L, 13L}) {
        Ring F = prime_field(p);
        SystemPtr S = RootSystem::parse("A3");
        for (int i = 0; i < 30; ++i) {
            SteinbergWord w = empty_word(S, F);
            for (int k = 0; k < 3; ++k)
                w *= symbol(S, static_cast<RootIndex>(uniform_long(g, 0, 11)), random_unit(F, g), random_unit(F, g));
            ASSERT_TRUE(k2_membership(w, RepKind::adjoint));
            ASSERT_TRUE(k2_membership(w, RepKind::defining));
        }
    }
}

TEST(VerifyRelations, SpecExamples) {
    EXPECT_TRUE(verify_relations(*Representation::adjoint(RootSystem::parse("A3")), parse_ring("Zmod:6"), 100).ok());
    EXPECT_TRUE(verify_relations(*Representation::natural(RootSystem::parse("D5")), prime_field(7), 100).ok());
    RelationReport r = verify_relations(*Representation::natural(RootSystem::parse("A2")), parse_ring("Z[t]/(t^3)"), 50);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.checks(), 30 * 50);
}

TEST(VerifyRelations, SlowPathOverLocalization) {
    RelationReport r = verify_relations(*Representation::adjoint(RootSystem::parse("A2")), parse_ring("Z[1/2]"), 5);
    EXPECT_TRUE(r.ok());
    EXPECT_GT(r.r3, 0);
}

TEST(SparseComparer, DetectsDifference) {
    SystemPtr S = RootSystem::parse("A3");
    Ring Z = integers();
    EXPECT_FALSE(rep_equal(gen(S, 0, Z.one()), gen(S, 0, Z.from_int(2)), RepKind::adjoint));
    EXPECT_FALSE(rep_equal(gen(S, 0, Z.one()) * gen(S, 3, Z.one()), gen(S, 3, Z.one()) * gen(S, 0, Z.one()),
                           RepKind::adjoint));
    EXPECT_TRUE(rep_equal(gen(S, 0, Z.one()) * gen(S, 5, Z.one()), gen(S, 5, Z.one()) * gen(S, 0, Z.one()),
                          RepKind::adjoint));
}
