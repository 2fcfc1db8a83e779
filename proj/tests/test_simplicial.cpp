#include <gtest/gtest.h>

#include "stlab/parse.hpp"
#include "stlab/representation.hpp"
#include "stlab/simplicial.hpp"

using namespace stlab;

namespace {

Ring Z = integers();

}  // namespace

TEST(Faces, Examples) {
    Ring L1 = simplicial_level(Z, 1), L2 = simplicial_level(Z, 2);
    EXPECT_EQ(face(Z, 0, 1)(L1.gen(0)), Z.one());
    EXPECT_EQ(face(Z, 1, 1)(L1.gen(0)), Z.zero());
    RingHom d0 = face(Z, 0, 2);
    EXPECT_EQ(d0(L2.gen(0)), parse_elem(L1, "1 - t1"));
    EXPECT_EQ(d0(L2.gen(1)), L1.gen(0));
    EXPECT_THROW(face(Z, 3, 2), PreconditionFailed);
    EXPECT_THROW(degeneracy(Z, 0, 3), PreconditionFailed);
}

TEST(Faces, DegeneracyThenFace) {
    Ring L1 = simplicial_level(Z, 1);
    RingHom c = compose(face(Z, 0, 2), degeneracy(Z, 0, 1));
    EXPECT_EQ(c(L1.gen(0)), L1.gen(0));
    RingHom e = compose(face(Z, 1, 2), face(Z, 2, 3));
    RingHom f = compose(face(Z, 1, 2), face(Z, 1, 3));
    Ring L3 = simplicial_level(Z, 3);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(e(L3.gen(k)), f(L3.gen(k)));
}

TEST(Identities, AllLevels) {
    for (const Ring& R : {Z, prime_field(7), prime_field(2)}) {
        IdentityReport r2 = simplicial_identity_check(R, 2);
        IdentityReport r3 = simplicial_identity_check(R, 3);
        EXPECT_TRUE(r2.ok());
        EXPECT_TRUE(r3.ok());
        EXPECT_GT(r3.checked, r2.checked);
    }
    EXPECT_THROW(simplicial_identity_check(Z, 4), PreconditionFailed);
}

TEST(MooreLift, SpecExample) {
    SystemPtr S = RootSystem::parse("A2");
    Ring L1 = simplicial_level(Z, 1), L2 = simplicial_level(Z, 2);
    MooreGenerator1 m1 = moore_generator1(S, 0, L1.one(), empty_word(S, L1));
    EXPECT_EQ(m1.word, gen(S, 0, parse_elem(L1, "t1^2 - t1")));
    MooreGenerator2 m2 = moore_lift(m1.word);
    EXPECT_EQ(m2.word, gen(S, 0, parse_elem(L2, "-t1*t2")));
    EXPECT_EQ(substitute(m2.word, face(Z, 0, 2)), m1.word);
    EXPECT_TRUE(substitute(m2.word, face(Z, 1, 2)).empty());
    EXPECT_TRUE(substitute(m2.word, face(Z, 2, 2)).empty());
}

TEST(MooreLift, RandomConjugated) {
    Rng64 g(3);
    Ring L1 = simplicial_level(Z, 1);
    RandomSpec spec;
    spec.int_range = 3;
    spec.max_degree = 3;
    for (int i = 0; i < 100; ++i) {
        SystemPtr S = RootSystem::parse(i % 2 ? "A3" : "D4");
        RootIndex a = static_cast<RootIndex>(uniform_long(g, 0, static_cast<long>(S->size()) - 1));
        Elem f = random_nonzero(L1, g, spec);
        SteinbergWord gw = random_word(S, L1, 3, g, spec);
        MooreGenerator1 m1 = moore_generator1(S, a, f, gw);
        MooreGenerator2 m2 = moore_lift(m1);
        SteinbergWord d0 = substitute(m2.word, face(Z, 0, 2));
        ASSERT_EQ(d0, m1.word);
        ASSERT_TRUE(rep_equal(d0, m1.word, RepKind::adjoint));
        ASSERT_TRUE(substitute(m2.word, face(Z, 1, 2)).empty());
        ASSERT_TRUE(substitute(m2.word, face(Z, 2, 2)).empty());
    }
}

TEST(MooreLift, RejectsWrongShape) {
    SystemPtr S = RootSystem::parse("A2");
    Ring L1 = simplicial_level(Z, 1);
    EXPECT_THROW(moore_lift(gen(S, 0, L1.gen(0))), PreconditionFailed);
    EXPECT_THROW(moore_lift(gen(S, 0, L1.gen(0)) * gen(S, 1, L1.gen(0))), PreconditionFailed);
}

TEST(Pi0, Witness) {
    SystemPtr S = RootSystem::parse("A2");
    SteinbergWord w = pi0_connectivity_witness(S, 0, Z.from_int(5));
    EXPECT_TRUE(substitute(w, face(Z, 1, 1)).empty());
    EXPECT_EQ(substitute(w, face(Z, 0, 1)), gen(S, 0, Z.from_int(5)));
    EXPECT_TRUE(pi0_connectivity_witness(S, 0, Z.zero()).empty());
    Ring P = parse_ring("Z[t]");
    SteinbergWord wt = pi0_connectivity_witness(S, 1, P.gen(0));
    EXPECT_EQ(substitute(wt, face(P, 0, 1)), gen(S, 1, P.gen(0)));
    EXPECT_TRUE(substitute(wt, face(P, 1, 1)).empty());
}

TEST(Crt, RoundTrips) {
    Rng64 g(4);
    Ring L1 = simplicial_level(Z, 1);
    Ring C = crt_ring(Z);
    RandomSpec spec;
    spec.max_degree = 4;
    for (int i = 0; i < 100; ++i) {
        Elem p = random_element(L1, g, spec);
        Elem ab = crt_to_product(p);
        ASSERT_EQ(crt_from_product(ab), coerce(p, C));
        ASSERT_EQ(crt_to_product(crt_from_product(ab)), ab);
    }
    Elem x = pair_elem(product(Z, Z), Z.from_int(3), Z.from_int(-4));
    EXPECT_EQ(crt_to_product(crt_from_product(x)), x);
}
