// Licensed under the Apache License 2.0 (see LICENSE file).

#include "cflab/corpus.hpp"

#include <algorithm>
#include <map>

#include "cflab/error.hpp"

namespace cflab {

namespace {

constexpr Letter kSharp = 35, kA = 97, kB = 98, kC = 99;

bool all_in(const Word& w, std::size_t from, std::size_t to, std::initializer_list<Letter> allowed) {
  for (std::size_t i = from; i < to; ++i) {
    if (std::find(allowed.begin(), allowed.end(), w[i]) == allowed.end()) return false;
  }
  return true;
}

/// All words of length len over `alphabet` (sorted), lexicographic order.
std::vector<Word> all_words(std::vector<Letter> alphabet, std::size_t len) {
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<Word> out;
  std::vector<std::size_t> digits(len, 0);
  while (true) {
    std::vector<Letter> letters(len);
    for (std::size_t i = 0; i < len; ++i) letters[i] = alphabet[digits[i]];
    out.emplace_back(std::move(letters));
    std::size_t pos = len;
    while (pos > 0 && ++digits[pos - 1] == alphabet.size()) {
      digits[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

BigInt pow_big(unsigned base, std::size_t e) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e)); }

std::vector<Word> sorted(std::vector<Word> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const char* const kGrammarLeq = "S -> '0' S '1' | '0' '1'\n";
const char* const kGrammarPalSharp = "S -> '0' S '0' | '1' S '1' | '#'\n";
const char* const kGrammarEvenPal = "S -> '0' S '0' | '1' S '1' | '0' '0' | '1' '1'\n";
const char* const kGrammarL21 =
    "# w (w^R)x3 x with w over {1,2}, x over {5,10,15,30}, both nonempty\n"
    "S -> W X\n"
    "W -> '1' W '3' | '2' W '6' | '1' '3' | '2' '6'\n"
    "X -> '5' X | '10' X | '15' X | '30' X | '5' | '10' | '15' | '30'\n";
const char* const kGrammarL22 =
    "# y (y^R)x5 with y over {1,2,3,6}, nonempty\n"
    "Y -> '1' Y '5' | '2' Y '10' | '3' Y '15' | '6' Y '30' | '1' '5' | '2' '10' | '3' '15' | '6' '30'\n";
const char* const kGrammarAnBn = "S -> 'a' S 'b' | 'a' 'b'\n";
const char* const kGrammarAmBmCt =
    "S -> A C\n"
    "A -> 'a' A 'b' | 'a' 'b'\n"
    "C -> 'c' C | 'c'\n";
const char* const kGrammarAPlus = "S -> S S | 'a'\n";

std::map<std::string, CorpusLanguage, std::less<>> build_corpus() {
  std::map<std::string, CorpusLanguage, std::less<>> c;
  auto add = [&](CorpusLanguage lang) { c.emplace(lang.name, std::move(lang)); };

  add({"L_eq", {0, 1}, in_leq,
       [](std::size_t n) {
         std::vector<Word> out;
         if (n >= 2 && n % 2 == 0) out.push_back(repeat(0, n / 2) + repeat(1, n / 2));
         return out;
       },
       [](std::size_t n) { return BigInt(n >= 2 && n % 2 == 0 ? 1 : 0); }, Cfg::parse(kGrammarLeq)});

  add({"L_3eq", {0, 1, 2}, in_l3eq,
       [](std::size_t n) {
         std::vector<Word> out;
         if (n >= 3 && n % 3 == 0) out.push_back(repeat(0, n / 3) + repeat(1, n / 3) + repeat(2, n / 3));
         return out;
       },
       [](std::size_t n) { return BigInt(n >= 3 && n % 3 == 0 ? 1 : 0); }, std::nullopt});

  add({"Pal_sharp", {0, 1, kSharp}, in_pal_sharp,
       [](std::size_t n) {
         std::vector<Word> out;
         if (n % 2 == 1) {
           for (auto& u : all_words({0, 1}, n / 2)) out.push_back(u + Word{kSharp} + reverse(u));
         }
         return sorted(std::move(out));
       },
       [](std::size_t n) { return n % 2 == 1 ? pow_big(2, n / 2) : BigInt(0); }, Cfg::parse(kGrammarPalSharp)});

  add({"EvenPal", {0, 1}, in_even_pal,
       [](std::size_t n) {
         std::vector<Word> out;
         if (n >= 2 && n % 2 == 0) {
           for (auto& u : all_words({0, 1}, n / 2)) out.push_back(u + reverse(u));
         }
         return sorted(std::move(out));
       },
       [](std::size_t n) { return n >= 2 && n % 2 == 0 ? pow_big(2, n / 2) : BigInt(0); },
       Cfg::parse(kGrammarEvenPal)});

  add({"L2", {1, 2, 3, 5, 6, 10, 15, 30}, in_l2, l2_members,
       [](std::size_t n) { return n >= 4 && n % 4 == 0 ? pow_big(2, n / 4) : BigInt(0); }, std::nullopt});

  add({"L2_1", {1, 2, 3, 5, 6, 10, 15, 30}, in_l2_1,
       [](std::size_t n) {
         std::vector<Word> out;
         for (std::size_t a = 1; 2 * a < n; ++a) {
           auto tails = all_words({5, 10, 15, 30}, n - 2 * a);
           for (auto& w : all_words({1, 2}, a)) {
             Word head = w + scale(reverse(w), 3);
             for (auto& x : tails) out.push_back(head + x);
           }
         }
         return sorted(std::move(out));
       },
       [](std::size_t n) {
         BigInt total = 0;
         for (std::size_t a = 1; 2 * a < n; ++a) total += pow_big(2, a) * pow_big(4, n - 2 * a);
         return total;
       },
       Cfg::parse(kGrammarL21)});

  add({"L2_2", {1, 2, 3, 5, 6, 10, 15, 30}, in_l2_2,
       [](std::size_t n) {
         std::vector<Word> out;
         if (n >= 2 && n % 2 == 0) {
           for (auto& y : all_words({1, 2, 3, 6}, n / 2)) out.push_back(y + scale(reverse(y), 5));
         }
         return sorted(std::move(out));
       },
       [](std::size_t n) { return n >= 2 && n % 2 == 0 ? pow_big(4, n / 2) : BigInt(0); },
       Cfg::parse(kGrammarL22)});

  add({"L2_prime", {1, 2, 3, 5, 6, 10, 15, 30}, in_l2_prime,
       [](std::size_t n) {
         std::vector<Word> out;
         if (n >= 4 && n % 4 == 0) {
           const std::size_t a = n / 4;
           auto ws = all_words({1, 2}, a);
           auto xs = all_words({3, 6}, a);
           auto ys = all_words({5, 10, 15, 30}, 2 * a);
           for (auto& w : ws)
             for (auto& x : xs)
               for (auto& y : ys) out.push_back(w + x + y);
         }
         return sorted(std::move(out));
       },
       [](std::size_t n) { return n >= 4 && n % 4 == 0 ? pow_big(64, n / 4) : BigInt(0); }, std::nullopt});

  add({"L2_dprime", {kA, kB, kC}, in_l2_dprime, l2pp_members,
       [](std::size_t n) { return BigInt(n >= 4 && n % 4 == 0 ? 1 : 0); }, std::nullopt});
  return c;
}

const std::map<std::string, CorpusLanguage, std::less<>>& corpus() {
  static const auto c = build_corpus();
  return c;
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"L_eq", "L_3eq",    "Pal_sharp", "L2",     "L2_1",
                                              "L2_2", "L2_prime", "L2_dprime", "EvenPal"};
  return names;
}

const CorpusLanguage& corpus_language(std::string_view name) {
  auto it = corpus().find(name);
  if (it == corpus().end()) {
    throw InvalidArgument("unknown language '" + std::string(name) + "'");
  }
  return it->second;
}

std::vector<Word> generate_checked(const CorpusLanguage& lang, std::size_t n, bool force, std::uint64_t limit) {
  BigInt size = lang.count(n);
  if (!force && size > limit) {
    throw CostGuardError(lang.name + " has " + size.str() + " words of length " + std::to_string(n) +
                         ", above the limit of " + std::to_string(limit));
  }
  return lang.generate(n);
}

bool in_leq(const Word& w) {
  const std::size_t n = w.size();
  if (n < 2 || n % 2) return false;
  return all_in(w, 0, n / 2, {0}) && all_in(w, n / 2, n, {1});
}

bool in_l3eq(const Word& w) {
  const std::size_t n = w.size();
  if (n < 3 || n % 3) return false;
  const std::size_t m = n / 3;
  return all_in(w, 0, m, {0}) && all_in(w, m, 2 * m, {1}) && all_in(w, 2 * m, n, {2});
}

bool in_pal_sharp(const Word& w) {
  const std::size_t n = w.size();
  if (n % 2 == 0) return false;
  const std::size_t mid = n / 2;
  if (w[mid] != kSharp || !all_in(w, 0, mid, {0, 1})) return false;
  for (std::size_t i = 0; i < mid; ++i) {
    if (w[i] != w[n - 1 - i]) return false;
  }
  return true;
}

bool in_even_pal(const Word& w) {
  const std::size_t n = w.size();
  if (n < 2 || n % 2 || !all_in(w, 0, n, {0, 1})) return false;
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (w[i] != w[n - 1 - i]) return false;
  }
  return true;
}

bool in_l2(const Word& w) {
  const std::size_t n = w.size();
  if (n < 4 || n % 4) return false;
  const std::size_t k = n / 4;
  for (std::size_t t = 0; t < k; ++t) {
    const Letter a = w[t];
    const Letter b = w[k - 1 - t];
    if ((a != 1 && a != 2) || w[k + t] != 3 * b || w[2 * k + t] != 15 * a || w[3 * k + t] != 5 * b) {
      return false;
    }
  }
  return true;
}

bool in_l2_1(const Word& w) {
  const std::size_t n = w.size();
  std::size_t a = 0;
  while (a < n && (w[a] == 1 || w[a] == 2)) ++a;
  if (a == 0 || 2 * a >= n) return false;
  for (std::size_t t = 0; t < a; ++t) {
    if (w[a + t] != 3 * w[a - 1 - t]) return false;
  }
  return all_in(w, 2 * a, n, {5, 10, 15, 30});
}

bool in_l2_2(const Word& w) {
  const std::size_t n = w.size();
  if (n < 2 || n % 2) return false;
  const std::size_t h = n / 2;
  if (!all_in(w, 0, h, {1, 2, 3, 6})) return false;
  for (std::size_t t = 0; t < h; ++t) {
    if (w[h + t] != 5 * w[h - 1 - t]) return false;
  }
  return true;
}

bool in_l2_prime(const Word& w) {
  const std::size_t n = w.size();
  if (n < 4 || n % 4) return false;
  const std::size_t a = n / 4;
  return all_in(w, 0, a, {1, 2}) && all_in(w, a, 2 * a, {3, 6}) && all_in(w, 2 * a, n, {5, 10, 15, 30});
}

bool in_l2_dprime(const Word& w) {
  const std::size_t n = w.size();
  if (n < 4 || n % 4) return false;
  const std::size_t m = n / 4;
  return all_in(w, 0, m, {kA}) && all_in(w, m, 2 * m, {kB}) && all_in(w, 2 * m, n, {kC});
}

std::vector<Word> l2_members(std::size_t n) {
  std::vector<Word> out;
  if (n < 4 || n % 4) return out;
  for (auto& w : all_words({1, 2}, n / 4)) out.push_back(nest_l2(w));
  return sorted(std::move(out));
}

std::vector<Word> l2pp_members(std::size_t n) {
  std::vector<Word> out;
  if (n >= 4 && n % 4 == 0) out.push_back(repeat(kA, n / 4) + repeat(kB, n / 4) + repeat(kC, n / 2));
  return out;
}

Cfg grammar_l2_1() { return Cfg::parse(kGrammarL21); }
Cfg grammar_l2_2() { return Cfg::parse(kGrammarL22); }

const std::vector<std::string>& grammar_names() {
  static const std::vector<std::string> names{"L_eq", "Pal_sharp", "EvenPal", "L2_1",
                                              "L2_2", "AnBn",      "AmBmCt",  "APlus"};
  return names;
}

const Cfg& named_grammar(std::string_view name) {
  static const std::map<std::string, Cfg, std::less<>> grammars{
      {"L_eq", Cfg::parse(kGrammarLeq)},     {"Pal_sharp", Cfg::parse(kGrammarPalSharp)},
      {"EvenPal", Cfg::parse(kGrammarEvenPal)}, {"L2_1", Cfg::parse(kGrammarL21)},
      {"L2_2", Cfg::parse(kGrammarL22)},     {"AnBn", Cfg::parse(kGrammarAnBn)},
      {"AmBmCt", Cfg::parse(kGrammarAmBmCt)}, {"APlus", Cfg::parse(kGrammarAPlus)},
  };
  auto it = grammars.find(name);
  if (it == grammars.end()) {
    throw InvalidArgument("unknown grammar '" + std::string(name) + "'");
  }
  return it->second;
}

IntersectionReport intersection_check(std::size_t max_len) {
  if (max_len > 12) {
    throw CostGuardError("intersection_check is limited to max_len <= 12");
  }
  const CnfGrammar g1 = to_cnf(grammar_l2_1());
  const CnfGrammar g2 = to_cnf(grammar_l2_2());

  IntersectionReport report;
  report.max_len = max_len;
  std::vector<Word> candidates;
  const std::vector<Word> right = enumerate_language(g2, max_len);
  try {
    const std::vector<Word> left = enumerate_language(g1, max_len, {.work_limit = 3'000'000});
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(candidates));
    report.strategy = "enumerate L2_1 and L2_2, intersect";
  } catch (const CostGuardError&) {
    // L2_1 grows like 4^n; enumerate the thinner side and filter.
    std::copy_if(right.begin(), right.end(), std::back_inserter(candidates),
                 [&](const Word& w) { return cyk_member(g1, w); });
    report.strategy = "enumerate L2_2, filter by CYK on L2_1";
  }
  std::erase_if(candidates, [&](const Word& w) { return !cyk_member(g1, w) || !cyk_member(g2, w); });

  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<Word> level;
    for (const auto& w : candidates) {
      if (w.size() == n) level.push_back(w);
    }
    const std::vector<Word> expected = l2_members(n);
    const bool equal = level == expected;
    report.levels.push_back({n, level.size(), expected.size(), equal});
    if (!equal && !report.counterexample) {
      std::vector<Word> diff;
      std::set_symmetric_difference(level.begin(), level.end(), expected.begin(), expected.end(),
                                    std::back_inserter(diff));
      report.counterexample = diff.front();
    }
  }
  return report;
}

}  // namespace cflab
