#include "doctest.h"
#include "serialize.hpp"

#include <stdexcept>

using namespace specht;
using specht::cli::json;

namespace {

SkewShape level1(Partition outer, Partition inner, int charge, int e) {
    return make_shape({std::move(outer)}, {std::move(inner)}, {charge}, e);
}

}  // namespace

TEST_CASE("laurent json") {
    Laurent two_dim = quantum_int(2);
    CHECK(cli::laurent_to_json(two_dim).dump() == "{\"-1\":1,\"1\":1}");
    CHECK(cli::laurent_to_json(Laurent(0)).dump() == "{}");
    CHECK(cli::laurent_to_json(Laurent(3) - Laurent::q_power(2)).dump() == "{\"0\":3,\"2\":-1}");

    for (const Laurent& p : {Laurent(0), Laurent(1), Laurent(3) - Laurent::q_power(2),
                             quantum_factorial(3), quantum_int(2) * quantum_int(2)}) {
        CHECK(cli::laurent_from_json(cli::laurent_to_json(p)) == p);
    }
    CHECK_THROWS_AS(cli::laurent_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("character json") {
    GradedCharacter x = specht_character(level1({2, 1}, {}, 0, 2));
    CHECK(cli::character_to_json(x).dump() ==
          "{\"content\":[1,2],\"terms\":[{\"poly\":{\"-1\":1,\"1\":1},\"word\":[0,1,1]}]}");
    CHECK(cli::character_from_json(cli::character_to_json(x)) == x);

    GradedCharacter big = specht_character(level1({3, 2}, {1}, 2, 3));
    CHECK(cli::character_from_json(cli::character_to_json(big)) == big);

    GradedCharacter zero(RootVector::simple(1, 2));
    json jz = cli::character_to_json(zero);
    CHECK(jz["terms"].is_array());
    CHECK(jz["terms"].empty());
    CHECK(cli::character_from_json(jz) == zero);
}

TEST_CASE("pair character json") {
    GradedCharacter x = specht_character(level1({2}, {}, 0, 2));
    RootVector a = RootVector::simple(0, 2), b = RootVector::simple(1, 2);
    json j = cli::pair_character_to_json(restrict_character(x, a, b), a, b);
    CHECK(j["alpha"] == json::array({1, 0}));
    CHECK(j["beta"] == json::array({0, 1}));
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["left"] == json::array({0}));
    CHECK(j["terms"][0]["right"] == json::array({1}));
    CHECK(j["terms"][0]["poly"].dump() == "{\"1\":1}");
}

TEST_CASE("shape json") {
    SkewShape s = level1({11, 10, 7, 2, 2}, {7, 4, 3, 1}, 1, 2);
    CHECK(cli::shape_from_json(cli::shape_to_json(s)) == s);

    SkewShape pair = make_shape({{2, 1}, {3}}, {{}, {1}}, {0, 2}, 3);
    json j = cli::shape_to_json(pair);
    CHECK(j["e"] == 3);
    CHECK(j["outer"] == json::array({json::array({2, 1}), json::array({3})}));
    CHECK(cli::shape_from_json(j) == pair);

    json bad = cli::shape_to_json(pair);
    bad["inner"] = json::array({json::array({5}), json::array()});
    CHECK_THROWS_AS(cli::shape_from_json(bad), std::invalid_argument);
}

TEST_CASE("cuspidal json") {
    Preorder p2 = Preorder::e_row(2);
    CuspidalResult r = cuspidal_shape(PositiveRoot::real_minus(2, 1, 1), p2);
    json j = cli::cuspidal_to_json(r);
    CHECK(j["root"] == "2d-a1");
    CHECK(j["shift"] == -1);
    CHECK(cli::shape_from_json(j["shape"]) == r.shape);
    CHECK(cli::character_from_json(j["character"]) == r.character);
}

TEST_CASE("garnir json") {
    SkewShape s = level1({11, 10, 7, 2, 2}, {7, 4, 3, 1}, 1, 2);
    Node A{2, 6, 1};
    GarnirData data = garnir_belt(s, A);
    auto members = garnir_set(s, A);
    json j = cli::garnir_to_json(s, data, members);

    CHECK(j["node"] == json::array({2, 6, 1}));
    CHECK(j["k"] == 3);
    CHECK(j["f"] == 2);
    CHECK(j["belt"].size() == 8);
    CHECK(j["bricks"].size() == 3);
    REQUIRE(j["tableaux"].size() == 3);
    CHECK(j["tableaux"][0]["standard"] == true);
    CHECK(j["tableaux"][1]["standard"] == true);
    CHECK(j["tableaux"][2]["standard"] == false);
    CHECK(j["tableaux"][0]["degree"] == 11);
    CHECK(j["tableaux"][2]["degree"].is_null());
}
