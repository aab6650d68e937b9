#include "fgbm/expansion_json.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fgbm {

std::string expansion_to_json(const ChaosExpansion& f) {
    std::vector<std::pair<MultiIndex, double>> sorted(f.terms().begin(), f.terms().end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    nlohmann::json j;
    j["num_coords"] = f.num_coords();
    j["max_degree"] = f.max_degree();
    j["terms"] = nlohmann::json::array();
    for (const auto& [alpha, c] : sorted) {
        nlohmann::json idx = nlohmann::json::array();
        for (const auto& [coord, exp] : alpha.terms()) idx.push_back({coord, exp});
        j["terms"].push_back({{"index", std::move(idx)}, {"coeff", c}});
    }
    return j.dump(2);
}

ChaosExpansion expansion_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ChaosExpansion f(j.at("num_coords").get<std::size_t>(), j.at("max_degree").get<std::size_t>());
    for (const auto& term : j.at("terms")) {
        MultiIndex alpha;
        for (const auto& pair : term.at("index")) {
            if (pair.size() != 2) throw std::invalid_argument("expansion term index malformed");
            alpha.bump(pair.at(0).get<std::uint16_t>(), pair.at(1).get<std::uint16_t>());
        }
        f.add_term(alpha, term.at("coeff").get<double>());
    }
    return f;
}

}  // namespace fgbm
