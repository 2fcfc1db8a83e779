#include <gtest/gtest.h>

#include "stlab/constructions.hpp"
#include "stlab/parse.hpp"
#include "stlab/random.hpp"
#include "stlab/ring_json.hpp"

using namespace stlab;

namespace {

Elem E(const Ring& R, const char* s) { return parse_elem(R, s); }

std::vector<std::string> ring_corpus() {
    return {"Z", "Q", "Fp:5", "Zmod:6", "Z[t]", "Q[x,y]", "Z[1/2]", "Z[1/6]", "Z[t]/(t^3)", "Fp:3[s]", "Prod(Z, Fp:3)",
            "Milnor(Z,2)", "Fp:7[t][1/t]"};
}

}  // namespace

TEST(RingOps, SpecExamples) {
    Ring Z = integers();
    EXPECT_EQ(Z.from_int(2) + Z.from_int(3), Z.from_int(5));
    Ring F5 = prime_field(5);
    EXPECT_EQ(F5.from_int(3) * F5.from_int(4), F5.from_int(2));
    Ring Z2 = parse_ring("Z[1/2]");
    Elem s = E(Z2, "3/2") + E(Z2, "1/4");
    EXPECT_EQ(s, E(Z2, "7/4"));
    EXPECT_EQ(s.numerator(), Z.from_int(7));
    EXPECT_EQ(s.exponent(), 2);
}

TEST(RingOps, DivisionAndUnits) {
    Ring Z = integers();
    EXPECT_EQ(divide(Z.from_int(12), Z.from_int(4)), Z.from_int(3));
    EXPECT_FALSE(try_divide(Z.from_int(5), Z.from_int(2)).has_value());
    EXPECT_THROW(inverse(Z.from_int(2)), NonUnit);
    Ring F7 = prime_field(7);
    EXPECT_EQ(inverse(F7.from_int(3)) * F7.from_int(3), F7.one());
    Ring Z6 = parse_ring("Z[1/6]");
    EXPECT_TRUE(is_unit(E(Z6, "3")));
    EXPECT_FALSE(is_unit(E(Z6, "5")));
}

TEST(RingOps, MismatchedParentsThrow) {
    Ring Z = integers(), Q = rationals();
    EXPECT_THROW(Z.from_int(1) + Q.from_int(1), RingMismatch);
}

TEST(RingOps, RationalsAreCanonical) {
    Ring Q = rationals();
    EXPECT_EQ(Q.from_rat(BigRat(-14, 7)), Q.from_int(-2));
    EXPECT_TRUE(Q.from_rat(BigRat(0, 7)).is_zero());
}

TEST(RingAxioms, RandomTriples) {
    Rng64 g(42);
    for (const auto& name : ring_corpus()) {
        Ring R = parse_ring(name);
        for (int i = 0; i < 1000; ++i) {
            Elem a = random_element(R, g), b = random_element(R, g), c = random_element(R, g);
            ASSERT_EQ((a + b) + c, a + (b + c)) << name;
            ASSERT_EQ((a * b) * c, a * (b * c)) << name;
            ASSERT_EQ(a * (b + c), a * b + a * c) << name;
            ASSERT_EQ(a * b, b * a) << name;
            ASSERT_EQ(a + b, b + a) << name;
            ASSERT_TRUE((a - a).is_zero()) << name;
            ASSERT_EQ(a * R.one(), a) << name;
        }
    }
}

TEST(Localization, InjectiveOnDomains) {
    Rng64 g(7);
    Ring Z = integers();
    Ring Z3 = localization(Z, Z.from_int(3));
    for (int i = 0; i < 500; ++i) {
        Elem a = random_element(Z, g), b = random_element(Z, g);
        ASSERT_EQ(a == b, coerce(a, Z3) == coerce(b, Z3));
    }
}

TEST(Parse, RingDescriptions) {
    EXPECT_EQ(parse_ring("Fp:7"), prime_field(7));
    EXPECT_EQ(parse_ring("Z[t]/(t^3)").kind(), RingKind::quotient);
    EXPECT_THROW(parse_ring("Fp:6"), Error);
    EXPECT_THROW(parse_ring("Blah"), ParseError);
}

TEST(MilnorSquare, PullbackExamples) {
    Ring Z = integers();
    Ring M = milnor_ring(Z, Z.from_int(2));
    Elem m = milnor_square_pullback(M, Z.from_int(3), E(M.series(), "3 + t/2"));
    EXPECT_EQ(m.first(), Z.from_int(3));
    EXPECT_EQ(m.second(), E(M.series(), "t/2"));
    EXPECT_THROW(milnor_square_pullback(M, Z.from_int(3), E(M.series(), "5 + t")), PreconditionFailed);

    Ring F3s = parse_ring("Fp:3[s]");
    Ring N = milnor_ring(F3s, F3s.gen(0));
    Elem x = E(F3s, "s^2");
    Elem gg = E(N.series(), "s^2 + t^2/s");
    Elem n = milnor_square_pullback(N, x, gg);
    EXPECT_EQ(n.second(), E(N.series(), "t^2/s"));
    auto [px, pg] = milnor_square_projections(n);
    EXPECT_EQ(px, x);
    EXPECT_EQ(pg, gg);
}

TEST(Bezout, SpecExamples) {
    Ring Z = integers();
    Ring Z2 = parse_ring("Z[1/2]");
    auto p = bezout_decompose(E(Z2, "5/2"), Z.from_int(3), 1);
    EXPECT_EQ(p.principal, E(Z2, "15/2"));
    EXPECT_EQ(p.integral, Z.from_int(-5));
    EXPECT_EQ(p.principal + coerce(p.integral, Z2), E(Z2, "5/2"));

    auto q = bezout_decompose(E(Z2, "7"), Z.from_int(3), 0);
    EXPECT_TRUE(q.principal.is_zero() || q.integral.is_zero());
    EXPECT_EQ(q.principal + coerce(q.integral, Z2), E(Z2, "7"));

    Ring F5x = parse_ring("Fp:5[x]");
    Ring L = localization(F5x, F5x.gen(0));
    Elem in = E(L, "1/x^2");
    auto r = bezout_decompose(in, E(F5x, "x + 1"), 2);
    EXPECT_EQ(r.principal + coerce(r.integral, L), in);
    EXPECT_EQ(r.x * E(F5x, "x^2") + r.y * E(F5x, "(x+1)^2"), F5x.one());
}

TEST(Bezout, NotCoprime) {
    Ring Z = integers();
    EXPECT_THROW(bezout_decompose(parse_elem(parse_ring("Z[1/2]"), "1/2"), Z.from_int(4), 1), PreconditionFailed);
}

TEST(Reciprocal, SpecExamples) {
    Ring P = parse_ring("Z[t]");
    auto w = reciprocal_localization_witness(E(P, "t^2 + 3*t + 2"));
    EXPECT_EQ(w.n, 2u);
    EXPECT_EQ(w.g, E(w.g.ring(), "1 + 3*tinv + 2*tinv^2"));
    auto w1 = reciprocal_localization_witness(E(P, "t"));
    EXPECT_TRUE(w1.g.is_one());
    EXPECT_THROW(reciprocal_localization_witness(E(P, "2*t + 1")), PreconditionFailed);

    Ring F = parse_ring("Fp:7[t]");
    Elem f = E(F, "t^3 - 1");
    auto w3 = reciprocal_localization_witness(f);
    Ring L = localization(F, F.gen(0));
    EXPECT_EQ(coerce(f, L), coerce(F.gen(0), L).pow(3) * laurent_image(w3.g, L));
}

TEST(Decompose, SpecExamples) {
    Ring Z = integers();
    PatchDatum d = PatchDatum::zariski(Z, Z.from_int(2), Z.from_int(3));
    auto [a, b] = decompose_modulo_power(d, E(d.A(), "5/2"), 1);
    EXPECT_EQ(b, Z.from_int(-5));
    EXPECT_EQ(a * d.h_power(1, d.A()) + d.iota(b), E(d.A(), "5/2"));
    auto [a2, b2] = decompose_modulo_power(d, E(d.A(), "1/4"), 2);
    EXPECT_EQ(b2, Z.from_int(-2));
    EXPECT_EQ(a2 * d.h_power(2, d.A()) + d.iota(b2), E(d.A(), "1/4"));

    PatchDatum id = PatchDatum::identity(Z, Z.from_int(5));
    auto [a3, b3] = decompose_modulo_power(id, Z.from_int(17), 3);
    EXPECT_TRUE(a3.is_zero());
    EXPECT_EQ(b3, Z.from_int(17));
}

TEST(Decompose, RandomReconstruction) {
    Rng64 g(3);
    Ring Qt = parse_ring("Q[t]");
    PatchDatum d = PatchDatum::zariski(Qt, Qt.gen(0), Qt.gen(0) + 1);
    for (int i = 0; i < 100; ++i) {
        Elem c = random_element(d.A(), g);
        long k = uniform_long(g, 0, 3);
        auto [a, b] = d.decompose(c, k);
        ASSERT_EQ(a * d.h_power(k, d.A()) + d.iota(b), c);
    }
}

TEST(Json, RoundTrip) {
    Rng64 g(5);
    for (const auto& name : ring_corpus()) {
        Ring R = parse_ring(name);
        ASSERT_EQ(ring_from_json(ring_to_json(R)), R) << name;
        for (int i = 0; i < 20; ++i) {
            Elem x = random_element(R, g);
            ASSERT_EQ(elem_from_json(json::parse(elem_to_json(x).dump())), x) << name;
        }
    }
}
