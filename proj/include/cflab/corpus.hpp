// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cflab/grammar.hpp"
#include "cflab/words.hpp"

namespace cflab {

using BigInt = boost::multiprecision::cpp_int;
using Predicate = std::function<bool(const Word&)>;

/// One of the fixed test languages. Symbolic letters use the standard symbol
/// table: # = 35, a = 97, b = 98, c = 99.
struct CorpusLanguage {
  std::string name;
  std::vector<Letter> alphabet;
  Predicate contains;
  /// All members of exactly length n, shortlex ordered.
  std::function<std::vector<Word>(std::size_t)> generate;
  /// |{w in L : |w| = n}|, closed form.
  std::function<BigInt(std::size_t)> count;
  std::optional<Cfg> grammar;
};

/// Names: L_eq, L_3eq, Pal_sharp, L2, L2_1, L2_2, L2_prime, L2_dprime,
/// EvenPal (nonempty even-length binary palindromes).
const std::vector<std::string>& corpus_names();
const CorpusLanguage& corpus_language(std::string_view name);

/// Like `lang.generate(n)` but throws CostGuardError above `limit` words.
std::vector<Word> generate_checked(const CorpusLanguage& lang, std::size_t n, bool force = false,
                                   std::uint64_t limit = 10'000'000);

bool in_leq(const Word& w);
bool in_l3eq(const Word& w);
bool in_pal_sharp(const Word& w);
bool in_even_pal(const Word& w);
bool in_l2(const Word& w);
bool in_l2_1(const Word& w);
bool in_l2_2(const Word& w);
bool in_l2_prime(const Word& w);
bool in_l2_dprime(const Word& w);

/// { nest_l2(w) : w in {1,2}^{n/4} }, empty unless 4 | n and n >= 4.
std::vector<Word> l2_members(std::size_t n);
/// { a^m b^m c^{2m} } at length n = 4m, m >= 1.
std::vector<Word> l2pp_members(std::size_t n);

Cfg grammar_l2_1();
Cfg grammar_l2_2();

/// Named grammars: the corpus ones (L_eq, Pal_sharp, L2_1, L2_2, EvenPal)
/// plus AnBn = {a^n b^n : n >= 1}, AmBmCt = {a^m b^m c^t : m, t >= 1} and
/// APlus = a+ written as S -> S S | a.
const std::vector<std::string>& grammar_names();
const Cfg& named_grammar(std::string_view name);

struct IntersectionLevel {
  std::size_t n;
  std::size_t intersection_count;
  std::size_t expected_count;
  bool equal;
};

struct IntersectionReport {
  std::size_t max_len = 0;
  std::string strategy;
  std::vector<IntersectionLevel> levels;  // n = 1..max_len
  std::optional<Word> counterexample;
  bool holds() const { return !counterexample.has_value(); }
};

/// Checks L(G2_1) ∩ L(G2_2) = L2 level by level up to max_len (<= 12).
IntersectionReport intersection_check(std::size_t max_len);

}  // namespace cflab
