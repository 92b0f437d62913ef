// Licensed under the Apache License 2.0 (see LICENSE file).

#include "cflab/dfa.hpp"

#include <algorithm>
#include <map>

#include "cflab/error.hpp"
#include "json.hpp"

namespace cflab {

namespace {
constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
}

Dfa::Dfa(std::vector<std::string> state_names, std::vector<Letter> alphabet, std::size_t start,
         std::vector<std::size_t> accepting, const std::vector<Transition>& transitions)
    : names_(std::move(state_names)), alphabet_(std::move(alphabet)), start_(start) {
  if (names_.empty()) {
    throw InvalidArgument("DFA needs at least one state");
  }
  if (start_ >= names_.size()) {
    throw InvalidArgument("DFA start state out of range");
  }
  std::sort(alphabet_.begin(), alphabet_.end());
  if (std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end()) {
    throw InvalidArgument("DFA alphabet has a repeated letter");
  }
  accepting_.assign(names_.size(), false);
  for (auto s : accepting) {
    if (s >= names_.size()) throw InvalidArgument("DFA accepting state out of range");
    accepting_[s] = true;
  }
  delta_.assign(names_.size() * alphabet_.size(), kUnset);
  for (const auto& t : transitions) {
    if (t.from >= names_.size() || t.to >= names_.size()) {
      throw InvalidArgument("DFA transition state out of range");
    }
    std::size_t& slot = delta_[t.from * alphabet_.size() + letter_index(t.letter)];
    if (slot != kUnset && slot != t.to) {
      throw InvalidArgument("DFA has two transitions from '" + names_[t.from] + "' on " +
                            letter_to_string(t.letter));
    }
    slot = t.to;
  }
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    if (delta_[i] == kUnset) {
      throw InvalidArgument("DFA transition map is not total: missing '" + names_[i / alphabet_.size()] +
                            "' on " + letter_to_string(alphabet_[i % alphabet_.size()]));
    }
  }
}

bool Dfa::has_letter(Letter l) const { return std::binary_search(alphabet_.begin(), alphabet_.end(), l); }

std::size_t Dfa::letter_index(Letter l) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), l);
  if (it == alphabet_.end() || *it != l) {
    throw InvalidArgument("letter " + letter_to_string(l) + " is outside the DFA alphabet");
  }
  return static_cast<std::size_t>(it - alphabet_.begin());
}

std::size_t Dfa::step(std::size_t state, Letter l) const {
  return delta_[state * alphabet_.size() + letter_index(l)];
}

std::size_t Dfa::run(std::size_t from, const Word& w) const {
  if (from >= names_.size()) {
    throw InvalidArgument("DFA state out of range");
  }
  std::size_t q = from;
  for (Letter l : w) q = step(q, l);
  return q;
}

Dfa Dfa::from_json(std::string_view text, const SymbolTable& symbols) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("DFA JSON: ") + e.what());
  }
  for (const char* key : {"states", "alphabet", "start", "accepting", "transitions"}) {
    if (!doc.contains(key)) throw ParseError(std::string("DFA JSON lacks \"") + key + "\"");
  }
  auto state_key = [](const json& j) -> std::string {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("DFA state must be a string or integer");
  };
  auto letter = [&](const json& j) -> Letter {
    if (j.is_number_unsigned()) return j.get<Letter>();
    if (j.is_string()) return parse_letter(j.get<std::string>(), symbols);
    throw ParseError("DFA letter must be a natural number or a string");
  };
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (const auto& s : doc["states"]) {
    auto key = state_key(s);
    if (!index.emplace(key, names.size()).second) throw ParseError("duplicate DFA state " + key);
    names.push_back(key);
  }
  auto state = [&](const json& j) {
    auto it = index.find(state_key(j));
    if (it == index.end()) throw ParseError("unknown DFA state " + state_key(j));
    return it->second;
  };
  std::vector<Letter> alphabet;
  for (const auto& l : doc["alphabet"]) alphabet.push_back(letter(l));
  std::vector<std::size_t> accepting;
  for (const auto& s : doc["accepting"]) accepting.push_back(state(s));
  std::vector<Transition> transitions;
  for (const auto& t : doc["transitions"]) {
    if (!t.is_array() || t.size() != 3) throw ParseError("DFA transition must be [from, letter, to]");
    transitions.push_back({state(t[0]), letter(t[1]), state(t[2])});
  }
  try {
    return Dfa(std::move(names), std::move(alphabet), state(doc["start"]), std::move(accepting), transitions);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string Dfa::to_json() const {
  using nlohmann::ordered_json;
  auto letter = [](Letter l) -> ordered_json {
    if (is_fused(l)) return letter_to_string(l);
    return l;
  };
  ordered_json doc;
  doc["states"] = names_;
  doc["alphabet"] = ordered_json::array();
  for (Letter l : alphabet_) doc["alphabet"].push_back(letter(l));
  doc["start"] = names_[start_];
  doc["accepting"] = ordered_json::array();
  for (std::size_t s = 0; s < names_.size(); ++s) {
    if (accepting_[s]) doc["accepting"].push_back(names_[s]);
  }
  doc["transitions"] = ordered_json::array();
  for (std::size_t s = 0; s < names_.size(); ++s) {
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
      doc["transitions"].push_back({names_[s], letter(alphabet_[a]), names_[delta_[s * alphabet_.size() + a]]});
    }
  }
  return doc.dump(2);
}

}  // namespace cflab
