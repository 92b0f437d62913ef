// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cflab/words.hpp"

namespace cflab {

/// Complete deterministic automaton. The transition map must be total over
/// states × alphabet.
class Dfa {
 public:
  struct Transition {
    std::size_t from;
    Letter letter;
    std::size_t to;
  };

  Dfa(std::vector<std::string> state_names, std::vector<Letter> alphabet, std::size_t start,
      std::vector<std::size_t> accepting, const std::vector<Transition>& transitions);

  /// {"states":[...], "alphabet":[...], "start":s, "accepting":[...],
  ///  "transitions":[[from, letter, to], ...]}. States are names or numbers;
  /// letters are numbers, symbol names or "top/bottom" track letters.
  static Dfa from_json(std::string_view text, const SymbolTable& symbols = SymbolTable::standard());
  std::string to_json() const;

  std::size_t state_count() const { return names_.size(); }
  const std::vector<std::string>& state_names() const { return names_; }
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  std::size_t start() const { return start_; }
  bool is_accepting(std::size_t state) const { return accepting_[state]; }
  bool has_letter(Letter l) const;

  /// Throws InvalidArgument for a letter outside the alphabet.
  std::size_t step(std::size_t state, Letter l) const;
  std::size_t run(std::size_t from, const Word& w) const;
  bool accepts(const Word& w) const { return accepting_[run(start_, w)]; }

 private:
  std::size_t letter_index(Letter l) const;

  std::vector<std::string> names_;
  std::vector<Letter> alphabet_;  // sorted
  std::size_t start_;
  std::vector<bool> accepting_;
  std::vector<std::size_t> delta_;  // state * |alphabet| + letter index
};

inline std::size_t dfa_run(const Dfa& m, std::size_t from, const Word& w) { return m.run(from, w); }
inline bool dfa_accepts(const Dfa& m, const Word& w) { return m.accepts(w); }

}  // namespace cflab
