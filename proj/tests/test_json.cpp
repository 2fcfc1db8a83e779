#include <gtest/gtest.h>

#include "stlab/json_io.hpp"
#include "stlab/parse.hpp"
#include "stlab/random.hpp"

using namespace stlab;

namespace {

std::string sample(const std::string& name) { return std::string(STLAB_SAMPLES) + "/" + name; }

}  // namespace

TEST(WordJson, RoundTrip) {
    Rng64 g(9);
    for (const char* sys : {"A2", "A4", "D4", "D5"}) {
        SystemPtr S = RootSystem::parse(sys);
        for (const char* rs : {"Z", "Q", "Fp:7", "Z[t]", "Z[1/6]", "Zmod:12", "Q[x,y]"}) {
            Ring R = parse_ring(rs);
            for (int i = 0; i < 10; ++i) {
                SteinbergWord w = random_word(S, R, 6, g);
                json j = json::parse(word_to_json(w).dump());
                SteinbergWord back = word_from_json(j);
                ASSERT_EQ(back, w) << j.dump();
                ASSERT_EQ(back.ring(), R);
            }
        }
    }
}

TEST(WordJson, BareListAndStringRoots) {
    SystemPtr S = RootSystem::parse("A3");
    Ring Z = integers();
    json j = json::parse(R"([{"root": "e1-e2", "arg": 3}, {"root": [0, 0, 1, -1], "arg": "2", "sign": -1}])");
    SteinbergWord w = word_from_json(j, S, Z);
    EXPECT_EQ(w, gen(S, S->parse_root("e1-e2"), Z.from_int(3)) * gen(S, S->parse_root("e3-e4"), Z.from_int(-2)));
    EXPECT_THROW(word_from_json(j), ParseError);
}

TEST(WordJson, Errors) {
    SystemPtr S = RootSystem::parse("A2");
    Ring Z = integers();
    EXPECT_THROW(word_from_json(json::parse(R"({"ring": "Z", "letters": []})")), ParseError);
    EXPECT_THROW(word_from_json(json::parse(R"({"system": "A2", "letters": []})")), ParseError);
    EXPECT_THROW(word_from_json(json::parse("3")), ParseError);
    EXPECT_THROW(letters_from_json(S, Z, json::parse(R"([{"root": "e1-e2"}])")), ParseError);
    EXPECT_THROW(letters_from_json(S, Z, json::parse(R"([{"root": "e1-e2", "arg": 1, "sign": 2}])")), ParseError);
    EXPECT_THROW(letters_from_json(S, Z, json::parse(R"([{"root": 5, "arg": 1}])")), ParseError);
    EXPECT_ANY_THROW(letters_from_json(S, Z, json::parse(R"([{"root": [1, 1, 0], "arg": 1}])")));
    EXPECT_THROW(read_json_file(sample("no_such_file.json")), ParseError);
}

TEST(WordJson, Samples) {
    SteinbergWord s = word_from_json(read_json_file(sample("symbol_f7.json")));
    EXPECT_EQ(s.ring(), prime_field(7));
    // a Steinberg symbol is central and maps to the identity matrix
    EXPECT_TRUE(rep_equal(s, empty_word(s.system(), s.ring()), RepKind::defining));
    SteinbergWord p = word_from_json(read_json_file(sample("patch_target.json")));
    EXPECT_EQ(p.system()->name(), "A3");
    EXPECT_EQ(p.size(), 3u);
    SteinbergWord r = word_from_json(read_json_file(sample("reduce.json")));
    // x(-1)^-1 is stored as x(1)
    EXPECT_EQ(r.letters()[2].arg, integers().one());
    EXPECT_EQ(r.letters()[2].sign, 1);
    SteinbergWord m = word_from_json(read_json_file(sample("moore_generator.json")));
    EXPECT_EQ(m.letters()[1].arg, parse_elem(m.ring(), "2*t1^2 - 2*t1"));
}

TEST(MatrixJson, Shape) {
    SystemPtr S = RootSystem::parse("A2");
    Ring Z = integers();
    json m = matrix_to_json(evaluate(gen(S, 0, Z.from_int(4)), RepKind::defining));
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m[0][1], payload_to_json(Z.from_int(4)));
    EXPECT_EQ(m[1][1], payload_to_json(Z.one()));
}
