#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "skylr/error.hpp"
#include "skylr/io.hpp"

using namespace skylr;

namespace {

std::string golden(const std::string& name) {
    std::ifstream in(std::string(SKYLR_GOLDEN_DIR) + "/" + name);
    EXPECT_TRUE(in.good()) << name;
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Io, ParseSequences) {
    EXPECT_EQ(parse_ints("2,0,3"), (std::vector<int>{2, 0, 3}));
    EXPECT_EQ(parse_ints(""), std::vector<int>{});
    EXPECT_EQ(parse_ints(" 1, 2 "), (std::vector<int>{1, 2}));
    EXPECT_THROW(parse_ints("1,,2"), Error);
    EXPECT_THROW(parse_ints("a"), Error);
    EXPECT_THROW(parse_partition("1,2"), Error);
    const SkewShape s = parse_skew("3,1,4,2,5/2,0,3,1,2");
    EXPECT_EQ(s.outer(), WeakComposition({3, 1, 4, 2, 5}));
    EXPECT_EQ(s.inner(), WeakComposition({2, 0, 3, 1, 2}));
    EXPECT_EQ(parse_skew("1,2").inner(), WeakComposition({0, 0}));
    try {
        parse_ints("x");
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
    }
}

TEST(Io, FillingJsonRoundTrip) {
    for (const Filling& f : {fixtures::ssk_ident(), fixtures::skew_large(), fixtures::lrs_example(), fixtures::lrk_example()}) {
        const Json j = to_json(f);
        EXPECT_EQ(filling_from_json(Json::parse(j.dump())), f);
    }
    const Json j = to_json(fixtures::lrs_example());
    EXPECT_EQ(j["basement"], "large");
    EXPECT_EQ(j["shape"]["inner"], (std::vector<int>{2, 0, 3, 1, 2}));
    Filling custom(SkewShape(WeakComposition{1, 0}), Basement::custom({2, 4}), 4, {{1}, {}});
    EXPECT_EQ(filling_from_json(to_json(custom)), custom);
    EXPECT_THROW(filling_from_json(Json::parse(R"({"shape":{"outer":[1]},"basement":"nope","rows":[[1]]})")), Error);
    EXPECT_THROW(filling_from_json(Json::parse(R"({"rows":[[1]]})")), Error);
}

TEST(Io, TableauAndPolynomialJson) {
    const ContreTableau t = fixtures::skew_ct();
    EXPECT_EQ(ct_from_json(to_json(t)), t);
    Polynomial p = schur_poly(Partition{2, 1}, 3) * Coeff(3) - Polynomial::constant(3, 1);
    p += Polynomial::monomial({0, 0, 9}, Coeff(1) << 70);
    const Json j = to_json(p);
    EXPECT_EQ(poly_from_json(Json::parse(j.dump())), p);
    EXPECT_EQ(j["terms"][0]["e"], (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(j["terms"][0]["c"], -1);
    EXPECT_TRUE(j["terms"].back()["c"].is_number());
    const Json x = to_json(Polynomial::variable(2, 1));
    EXPECT_EQ(x.dump(), R"({"n":2,"terms":[{"c":1,"e":[1,0]}]})");
}

TEST(Io, GoldenRenders) {
    EXPECT_EQ(render(fixtures::lrs_example()), golden("lrs.txt"));
    EXPECT_EQ(render(fixtures::ssk_ident()), golden("ssk_ident.txt"));
    const WeakComposition shape{2, 0, 3, 1, 2};
    EXPECT_EQ(render(SkewShape(shape), Basement::of(BasementKind::Ident, 5)), golden("diagram_ident.txt"));
    EXPECT_EQ(render(SkewShape(shape), Basement::of(BasementKind::Reversed, 5)), golden("diagram_reversed.txt"));
    EXPECT_EQ(render(SkewShape(shape), Basement::of(BasementKind::Shifted, 5)), golden("diagram_shifted.txt"));
    EXPECT_EQ(render(SkewShape(shape), Basement::of(BasementKind::Large, 5)), golden("diagram_large.txt"));
    Filling empty(SkewShape(WeakComposition{0, 0}), Basement::of(BasementKind::Ident, 2), 2, {{}, {}});
    EXPECT_EQ(render(empty), "1 |\n2 |\n");
    EXPECT_EQ(render(fixtures::lr_ct()), golden("lr_ct.txt"));
}
