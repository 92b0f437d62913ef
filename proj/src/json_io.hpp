// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include "cflab/grammar.hpp"
#include "cflab/refuter.hpp"
#include "cflab/swaplab.hpp"
#include "cflab/words.hpp"
#include "json.hpp"

namespace cflab {

using Json = nlohmann::ordered_json;

/// Plain letters as numbers, track letters as "top/bottom" strings.
Json to_json(const Word& w);
Json to_json(const std::vector<Word>& words);
Json to_json(const SliceStats::Entry& e);
Json to_json(const SwapWitness& w);
Json to_json(const PumpWitness& w);
Json to_json(const SwapParams& p, const ParamChecks& c);

/// Accepts a JSON array of letters or a comma-separated string.
Word word_from_json(const nlohmann::json& j, const SymbolTable& symbols);

}  // namespace cflab
