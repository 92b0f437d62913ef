// Licensed under the Apache License 2.0 (see LICENSE file).

#include <algorithm>

#include "cflab/error.hpp"
#include "cflab/grammar.hpp"

namespace cflab {

std::vector<Word> enumerate_language(const CnfGrammar& g, std::size_t max_len, EnumerateOptions opts) {
  std::vector<Word> out;
  if (g.accepts_empty()) {
    out.emplace_back();
  }
  if (max_len == 0 || g.lexicals().empty()) {
    return out;
  }
  const std::size_t v = g.nonterminal_count();
  // lang[len][A]: sorted words of length len derived from A.
  std::vector<std::vector<std::vector<Word>>> lang(max_len + 1, std::vector<std::vector<Word>>(v));
  for (const auto& lex : g.lexicals()) {
    lang[1][lex.head].push_back(Word{lex.terminal});
  }
  std::uint64_t work = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (len >= 2) {
      for (const auto& r : g.binaries()) {
        auto& target = lang[len][r.head];
        for (std::size_t k = 1; k < len; ++k) {
          const auto& left = lang[k][r.left];
          const auto& right = lang[len - k][r.right];
          if (left.empty() || right.empty()) continue;
          work += left.size() * right.size();
          if (work > opts.work_limit) {
            throw CostGuardError("enumeration exceeds the work limit of " + std::to_string(opts.work_limit) +
                                 " concatenations at length " + std::to_string(len));
          }
          for (const auto& x : left) {
            for (const auto& y : right) target.push_back(x + y);
          }
        }
      }
    }
    for (auto& words : lang[len]) {
      std::sort(words.begin(), words.end());
      words.erase(std::unique(words.begin(), words.end()), words.end());
    }
    const auto& top = lang[len][g.start()];
    out.insert(out.end(), top.begin(), top.end());
  }
  return out;
}

std::vector<Word> enumerate_language(const Cfg& g, std::size_t max_len, EnumerateOptions opts) {
  return enumerate_language(to_cnf(g), max_len, opts);
}

}  // namespace cflab
