#pragma once

#include <json.hpp>

#include "exdiv/ideal.hpp"

namespace exdiv {

/// JSON array of {index, exponent, description}, numbers as decimal strings.
inline nlohmann::ordered_json to_json(const FactoredIdeal& I) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : I.factors) {
        arr.push_back({{"index", std::to_string(f.label.index)},
                       {"exponent", std::to_string(f.exponent)},
                       {"description", f.label.description}});
    }
    return arr;
}

}  // namespace exdiv
