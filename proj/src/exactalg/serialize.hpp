#pragma once

#include "exactalg/laurent.hpp"
#include "exactalg/ratfunc.hpp"

#include <json.hpp>

namespace charstack {

// JSON form: {"vars": [...], "terms": [[[e...], "num/den"], ...]} with terms
// in sorted exponent order (deterministic).
inline nlohmann::json poly_terms_json(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c.get_str()});
    return terms;
}

inline nlohmann::json to_json(const RatFunc& f) {
    return {{"vars", f.vars()}, {"num", poly_terms_json(f.num())}, {"den", poly_terms_json(f.den())}};
}

inline nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c.get_str()});
    return {{"vars", p.vars()}, {"terms", terms}};
}

} // namespace charstack
