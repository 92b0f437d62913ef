// Licensed under the Apache License 2.0 (see LICENSE file).

#include "json_io.hpp"

#include "cflab/error.hpp"

namespace cflab {

Json to_json(const Word& w) {
  Json out = Json::array();
  for (Letter l : w) {
    if (is_fused(l)) {
      out.push_back(letter_to_string(l));
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Json to_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(to_json(w));
  return out;
}

Json to_json(const SliceStats::Entry& e) { return Json{{"i", e.i}, {"u", to_json(e.u)}, {"count", e.count}}; }

Json to_json(const SwapWitness& w) {
  return Json{{"i", w.i},
              {"j", w.j},
              {"x", to_json(w.x)},
              {"y", to_json(w.y)},
              {"swapped_x", to_json(w.swapped_x)},
              {"swapped_y", to_json(w.swapped_y)},
              {"both_in_language", w.both_in_language},
              {"zero_offset", w.zero_offset()}};
}

Json to_json(const PumpWitness& w) {
  Json pumped = Json::array();
  for (const auto& [i, word] : w.pumped) pumped.push_back(Json{{"exponent", i}, {"word", to_json(word)}});
  return Json{{"z", to_json(w.z)},
              {"pumping_constant", w.pumping_constant},
              {"decomposition",
               Json{{"u", to_json(w.parts.u)},
                    {"v", to_json(w.parts.v)},
                    {"w", to_json(w.parts.w)},
                    {"x", to_json(w.parts.x)},
                    {"y", to_json(w.parts.y)}}},
              {"pumped", std::move(pumped)},
              {"violating", Json{{"exponent", w.violating_exponent}, {"word", to_json(w.violating)}}}};
}

Json to_json(const SwapParams& p, const ParamChecks& c) {
  return Json{{"m", p.m},
              {"n", p.n},
              {"k", p.k},
              {"j0", p.j0},
              {"checks",
               Json{{"n_multiple_of_16", c.n_multiple_of_16},
                    {"length_bound", c.length_bound},
                    {"k_is_quarter", c.k_is_quarter},
                    {"j0_formula", c.j0_formula},
                    {"k_ge_2j0", c.k_ge_2j0},
                    {"j0_half_bound", c.j0_half_bound}}}};
}

Word word_from_json(const nlohmann::json& j, const SymbolTable& symbols) {
  if (j.is_string()) {
    return parse_word(j.get<std::string>(), symbols);
  }
  if (!j.is_array()) {
    throw ParseError("word must be a JSON array or a comma-separated string");
  }
  std::vector<Letter> letters;
  for (const auto& l : j) {
    if (l.is_number_unsigned()) {
      letters.push_back(l.get<Letter>());
    } else if (l.is_string()) {
      letters.push_back(parse_letter(l.get<std::string>(), symbols));
    } else {
      throw ParseError("letter must be a natural number or a string");
    }
  }
  return Word(std::move(letters));
}

}  // namespace cflab
