#pragma once

#include "json.hpp"
#include "specht/cuspidal.hpp"
#include "specht/garnir.hpp"

namespace specht::cli {

using json = nlohmann::json;

// Laurent polynomials serialize as {"exponent": coefficient}; characters as
// {"content": [...], "terms": [{"word": [...], "poly": {...}}, ...]} with the
// terms sorted by word. nlohmann keeps object keys sorted, so dumps are
// canonical.
json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const json& j);

json character_to_json(const GradedCharacter& x);
GradedCharacter character_from_json(const json& j);

json pair_character_to_json(const PairCharacter& pc, const RootVector& alpha,
                            const RootVector& beta);

json shape_to_json(const SkewShape& s);
SkewShape shape_from_json(const json& j);

json cuspidal_to_json(const CuspidalResult& r);
json garnir_to_json(const SkewShape& s, const GarnirData& data,
                    const std::vector<SkewTableau>& members);

}  // namespace specht::cli
