#pragma once

#include <string>

#include "fgbm/expansion.hpp"

namespace fgbm {

// JSON round-trip for expansions, used by hedging reports. A term's index is
// the sparse [[coord, exp], ...] list; terms are sorted so equal expansions
// serialize to identical text.
std::string expansion_to_json(const ChaosExpansion& f);
ChaosExpansion expansion_from_json(const std::string& text);

}  // namespace fgbm
