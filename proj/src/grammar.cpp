// Licensed under the Apache License 2.0 (see LICENSE file).

#include <algorithm>

#include "cflab/error.hpp"
#include "cflab/grammar.hpp"

namespace cflab {

Cfg::Cfg(std::vector<std::string> names, std::vector<Production> productions, std::size_t start)
    : names_(std::move(names)), productions_(std::move(productions)), start_(start) {
  if (start_ >= names_.size()) {
    throw InvalidArgument("start symbol is not a declared nonterminal");
  }
  for (const auto& p : productions_) {
    if (p.head >= names_.size()) {
      throw InvalidArgument("production head out of range");
    }
    for (const auto& s : p.body) {
      if (!s.is_terminal() && s.id >= names_.size()) {
        throw InvalidArgument("production body references an undeclared nonterminal");
      }
    }
  }
}

std::vector<Letter> Cfg::terminals() const {
  std::vector<Letter> out;
  for (const auto& p : productions_) {
    for (const auto& s : p.body) {
      if (s.is_terminal()) out.push_back(s.id);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CnfGrammar::CnfGrammar(std::vector<std::string> names, std::uint32_t start, bool accepts_empty,
                       std::vector<Binary> binaries, std::vector<Lexical> lexicals)
    : names_(std::move(names)),
      start_(start),
      accepts_empty_(accepts_empty),
      binaries_(std::move(binaries)),
      lexicals_(std::move(lexicals)),
      by_head_(names_.size()) {
  if (names_.empty() || start_ >= names_.size()) {
    throw InvalidArgument("CNF start symbol out of range");
  }
  for (std::uint32_t r = 0; r < binaries_.size(); ++r) {
    const auto& b = binaries_[r];
    if (b.head >= names_.size() || b.left >= names_.size() || b.right >= names_.size()) {
      throw InvalidArgument("CNF binary rule out of range");
    }
    if (accepts_empty_ && (b.left == start_ || b.right == start_)) {
      throw InvalidArgument("start symbol with a λ rule may not occur in a body");
    }
    by_head_[b.head].push_back(r);
  }
  for (const auto& l : lexicals_) {
    if (l.head >= names_.size()) {
      throw InvalidArgument("CNF lexical rule out of range");
    }
    auto& heads = by_terminal_[l.terminal];
    if (std::find(heads.begin(), heads.end(), l.head) == heads.end()) {
      heads.push_back(l.head);
    }
  }
}

const std::vector<std::uint32_t>* CnfGrammar::heads_of(Letter l) const {
  auto it = by_terminal_.find(l);
  return it == by_terminal_.end() ? nullptr : &it->second;
}

std::uint64_t CnfGrammar::pumping_constant() const {
  if (names_.size() >= 63) {
    throw CostGuardError("pumping constant 2^" + std::to_string(names_.size()) + " does not fit in 64 bits");
  }
  return std::uint64_t{1} << names_.size();
}

Cfg CnfGrammar::to_cfg() const {
  std::vector<Production> prods;
  if (accepts_empty_) {
    prods.push_back({start_, {}});
  }
  for (const auto& b : binaries_) {
    prods.push_back({b.head, {Symbol::nonterminal(b.left), Symbol::nonterminal(b.right)}});
  }
  for (const auto& l : lexicals_) {
    prods.push_back({l.head, {Symbol::terminal(l.terminal)}});
  }
  return Cfg(names_, std::move(prods), start_);
}

}  // namespace cflab
