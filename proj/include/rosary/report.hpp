#pragma once

#include <string>

#include "json.hpp"
#include "rosary/code.hpp"
#include "rosary/containment.hpp"
#include "rosary/lemmas.hpp"
#include "rosary/search.hpp"

namespace rosary {

// JSON views of the result records. Indices and values are 1-based here,
// matching the text format; library-internal 0-based indices stop at this
// boundary. Keys are emitted sorted (nlohmann default), so serializing a
// parsed report reproduces it byte for byte.

nlohmann::json to_json(const RosaryReport& r);
nlohmann::json to_json(const ContainmentVerdict& v);
nlohmann::json to_json(const LambdaDecomposition& ld);
nlohmann::json to_json(const BlockDecomposition& bd, const Cycle& c);
nlohmann::json to_json(const LemmaCheck& ck);
nlohmann::json to_json(const SearchOutcome& s);

std::string version_string();

}  // namespace rosary
