#include <gtest/gtest.h>

#include "stlab/milnor.hpp"
#include "stlab/random.hpp"

using namespace stlab;

namespace {

Ring Q = rationals();

Elem q(long n, long d = 1) { return Q.from_rat(BigRat(n, d)); }

MilnorSymbolSum sym(const Elem& a, const Elem& b, long m = 1) { return MilnorSymbolSum::symbol(a, b, m); }

Elem random_q(Rng64& g) {
    long n;
    do n = uniform_long(g, -40, 40);
    while (n == 0);
    return q(n, uniform_long(g, 1, 30));
}

}  // namespace

TEST(Normalize, Examples) {
    EXPECT_EQ(symbol_normalize(sym(q(4), q(5))).str(), "2*{2, 5}");
    EXPECT_TRUE(symbol_normalize(sym(q(3), q(-2)) + sym(q(-2), q(3))).empty());
    EXPECT_TRUE(symbol_normalize(sym(q(7), q(-6)) - sym(q(7), q(-6))).empty());
    EXPECT_TRUE(symbol_normalize(sym(q(5), q(-4))).empty());
    EXPECT_TRUE(symbol_normalize(sym(q(3), q(-3))).empty());
    EXPECT_TRUE(symbol_normalize(sym(q(1), q(9))).empty());
}

TEST(Normalize, NonRationalFieldDropsAndMerges) {
    Ring F = prime_field(7);
    MilnorSymbolSum s = MilnorSymbolSum::symbol(F.from_int(2), F.from_int(3));
    s.add(F.from_int(2), F.from_int(3), 2);
    s.add(F.from_int(3), F.from_int(5));  // 3 + 5 = 1
    EXPECT_EQ(symbol_normalize(s).str(), "3*{2, 3}");
}

TEST(Normalize, ZeroEntriesRejected) { EXPECT_THROW(sym(q(0), q(2)), PreconditionFailed); }

TEST(Tame, Examples) {
    EXPECT_EQ(tame_symbol(sym(q(2), q(3)), 3), 2);
    EXPECT_EQ(tame_symbol(sym(q(2), q(3)), 5), 1);
    EXPECT_THROW(tame_symbol(sym(q(2), q(3)), 2), PreconditionFailed);
    EXPECT_THROW(tame_symbol(sym(q(2), q(3)), 9), PreconditionFailed);
    // {p, p} = {p, -1}
    EXPECT_EQ(tame_symbol(sym(q(3), q(3)), 3), 2);
}

TEST(Tame, SteinbergRelationAt3) {
    Rng64 g(1);
    for (int i = 0; i < 200; ++i) {
        Elem u = random_q(g);
        if (u.is_one()) continue;
        ASSERT_EQ(tame_symbol(sym(u, Q.one() - u), 3), 1) << u.str();
    }
}

TEST(Tame, BilinearSkewAndNormalizeSound) {
    Rng64 g(2);
    for (int i = 0; i < 1000; ++i) {
        Elem a = random_q(g), b = random_q(g), c = random_q(g);
        MilnorSymbolSum s = sym(a * c, b) - sym(a, b) - sym(c, b) + sym(a, b) + sym(b, a);
        for (const auto& p : relevant_primes(sym(a, b) + sym(c, b))) {
            ASSERT_EQ(tame_symbol(s, p), 1);
            ASSERT_EQ(tame_symbol(symbol_normalize(sym(a, b) + sym(c, a)), p), tame_symbol(sym(a, b) + sym(c, a), p));
        }
        if (!a.is_one())
            for (const auto& p : relevant_primes(sym(a, Q.one() - a))) ASSERT_EQ(tame_symbol(sym(a, Q.one() - a), p), 1);
    }
}

TEST(SteinbergToMilnor, Examples) {
    SystemPtr S = RootSystem::parse("A2");
    MilnorSymbolSum s = steinberg_to_milnor(symbol(S, 0, q(2), q(3)), 0);
    EXPECT_EQ(s.str(), "{2, 3}");
    MilnorSymbolSum t = steinberg_to_milnor(symbol(S, 0, q(2), q(3)) * symbol(S, 0, q(2), q(5)), 0);
    EXPECT_EQ(t.str(), "{2, 3} + {2, 5}");
    EXPECT_TRUE(steinberg_to_milnor(empty_word(S, Q), 0).empty());
    EXPECT_EQ(steinberg_to_milnor(symbol(S, 0, q(2), q(3)).inverse(), 0).str(), "-{2, 3}");
    EXPECT_THROW(steinberg_to_milnor(gen(S, 0, q(1)), 0), NotSymbolProduct);
    EXPECT_THROW(steinberg_to_milnor(symbol(S, 1, q(2), q(3)), 0), NotSymbolProduct);
    EXPECT_THROW(steinberg_to_milnor(empty_word(S, integers()), 0), PreconditionFailed);
}
