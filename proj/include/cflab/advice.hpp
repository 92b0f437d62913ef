// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "cflab/dfa.hpp"
#include "cflab/grammar.hpp"
#include "cflab/words.hpp"

namespace cflab {

using MembershipOracle = std::function<bool(const Word&)>;

/// Foreign letters give false, matching CYK.
MembershipOracle oracle_from(const CnfGrammar& g);
MembershipOracle oracle_from(const Dfa& m);

/// Length-indexed advice n -> word of length exactly n. The length law is
/// checked on every call. Generators must be deterministic and free of side
/// effects; the object itself is immutable and may be shared across threads.
class AdviceFunction {
 public:
  using Generator = std::function<Word(std::size_t)>;

  AdviceFunction(std::string name, Generator generate);

  /// Missing lengths are an error on lookup, never a default.
  static AdviceFunction from_table(std::string name, std::map<std::size_t, Word> table);
  /// {"<n>": [letters...], ...} or [[letters for n=0], [n=1], ...].
  static AdviceFunction from_json(std::string_view text, const SymbolTable& symbols = SymbolTable::standard());

  /// Throws std::logic_error if the generator breaks |h(n)| = n.
  Word operator()(std::size_t n) const;
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::shared_ptr<const Generator> generate_;
};

enum class AdviceMode { Parallel, Serial };

struct AdvisedLanguage {
  AdviceMode mode;
  MembershipOracle inner;  // over the track alphabet (parallel) or plain (serial)
  AdviceFunction advice;
};

/// x ∈ L iff zip(x, h(|x|)) is accepted by the inner language.
bool parallel_member(const AdvisedLanguage& lang, const Word& x);
/// x ∈ L iff g(|x|) x is accepted by the inner language.
bool serial_member(const AdvisedLanguage& lang, const Word& x);
bool advised_member(const AdvisedLanguage& lang, const Word& x);

/// h(n) = 0^{n/2} 1^{n/2} for even n, 2^n for odd n.
AdviceFunction leq_parallel_advice();
/// Over track letters [x; a]: accepts [0;0]+ [1;1]+. Together with
/// `leq_parallel_advice` it decides {0^m 1^m : m >= 1}.
Dfa leq_parallel_inner();

struct ParallelConversion {
  AdviceFunction advice;  // h
  Dfa automaton;          // over the track alphabet
  Letter state_code_offset;
};

/// Turns serial advice (g, M) into parallel advice (h, M2) with
/// h(n) = code(q_n) 0^{n-1}, where q_n is the state M reaches on g(n) and
/// code(q) = offset + q + 1 lies above every letter of M's alphabet.
/// h(0) = λ; M2's start state accepts iff M accepts λ.
ParallelConversion serial_to_parallel_reg(const Dfa& m, const AdviceFunction& g);

/// u1 u1 ... um um 0 1 v1 v1 ... vl vl 0 1 for binary u, v.
Word prefix_pair_encode(const Word& u, const Word& v);
/// Exact inverse of `prefix_pair_encode`. Throws ParseError on truncated
/// input, a `1 0` pair, a missing terminator or trailing letters.
std::pair<Word, Word> prefix_pair_decode(const Word& code);

}  // namespace cflab
