#include "serialize.hpp"

#include <stdexcept>
#include <string>

namespace specht::cli {

json laurent_to_json(const Laurent& p) {
    json j = json::object();
    for (const auto& [exp, coeff] : p.coeffs()) j[std::to_string(exp)] = coeff;
    return j;
}

Laurent laurent_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("laurent_from_json: expected an object");
    std::map<int, long long> coeffs;
    for (const auto& [key, value] : j.items()) coeffs[std::stoi(key)] = value.get<long long>();
    return Laurent::from_coeffs(std::move(coeffs));
}

json character_to_json(const GradedCharacter& x) {
    json terms = json::array();
    for (const auto& [word, poly] : x.terms()) {
        terms.push_back(json{{"word", word}, {"poly", laurent_to_json(poly)}});
    }
    return json{{"content", x.content().coeffs()}, {"terms", std::move(terms)}};
}

GradedCharacter character_from_json(const json& j) {
    GradedCharacter x(RootVector(j.at("content").get<std::vector<int>>()));
    for (const auto& term : j.at("terms")) {
        x.add(term.at("word").get<Word>(), laurent_from_json(term.at("poly")));
    }
    return x;
}

json pair_character_to_json(const PairCharacter& pc, const RootVector& alpha,
                            const RootVector& beta) {
    json terms = json::array();
    for (const auto& [words, poly] : pc) {
        terms.push_back(json{{"left", words.first},
                             {"right", words.second},
                             {"poly", laurent_to_json(poly)}});
    }
    return json{{"alpha", alpha.coeffs()}, {"beta", beta.coeffs()}, {"terms", std::move(terms)}};
}

json shape_to_json(const SkewShape& s) {
    return json{{"outer", s.outer}, {"inner", s.inner}, {"charge", s.charge}, {"e", s.e}};
}

SkewShape shape_from_json(const json& j) {
    return make_shape(j.at("outer").get<Multipartition>(), j.at("inner").get<Multipartition>(),
                      j.at("charge").get<Multicharge>(), j.at("e").get<int>());
}

json cuspidal_to_json(const CuspidalResult& r) {
    return json{{"root", root_to_string(r.root)},
                {"shape", shape_to_json(r.shape)},
                {"shift", r.shift},
                {"character", character_to_json(r.character)}};
}

namespace {

json node_to_json(const Node& n) { return json::array({n.row, n.col, n.comp}); }

}  // namespace

json garnir_to_json(const SkewShape& s, const GarnirData& data,
                    const std::vector<SkewTableau>& members) {
    json belt = json::array();
    for (const Node& n : data.belt) belt.push_back(node_to_json(n));
    json bricks = json::array();
    for (const auto& brick : data.bricks) {
        json b = json::array();
        for (const Node& n : brick) b.push_back(node_to_json(n));
        bricks.push_back(std::move(b));
    }
    json tabs = json::array();
    for (const SkewTableau& t : members) {
        tabs.push_back(json{{"values", t.values()},
                            {"standard", t.is_standard()},
                            {"degree", t.is_standard() ? json(degree(t)) : json()}});
    }
    return json{{"shape", shape_to_json(s)}, {"node", node_to_json(data.node)},
                {"belt", std::move(belt)},   {"bricks", std::move(bricks)},
                {"k", data.k},               {"f", data.f},
                {"tableaux", std::move(tabs)}};
}

}  // namespace specht::cli
