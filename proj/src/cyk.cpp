// Licensed under the Apache License 2.0 (see LICENSE file).

#include "cflab/grammar.hpp"

namespace cflab {

CykTable::CykTable(const CnfGrammar& g, const Word& w)
    : g_(&g), n_(w.size()), blocks_((g.nonterminal_count() + 63) / 64) {
  if (n_ == 0) {
    return;
  }
  bits_.assign(n_ * n_ * blocks_, 0);
  auto set = [](std::uint64_t* c, std::uint32_t nt) { c[nt / 64] |= std::uint64_t{1} << (nt % 64); };
  auto test = [](const std::uint64_t* c, std::uint32_t nt) { return (c[nt / 64] >> (nt % 64)) & 1; };

  for (std::size_t i = 0; i < n_; ++i) {
    const auto* heads = g.heads_of(w[i]);
    if (heads == nullptr) {
      foreign_ = true;
      return;
    }
    for (auto h : *heads) set(cell(i, 1), h);
  }
  const auto& rules = g.binaries();
  for (std::size_t len = 2; len <= n_; ++len) {
    for (std::size_t start = 0; start + len <= n_; ++start) {
      std::uint64_t* target = cell(start, len);
      for (std::size_t k = 1; k < len; ++k) {
        const std::uint64_t* left = cell(start, k);
        const std::uint64_t* right = cell(start + k, len - k);
        for (const auto& r : rules) {
          if (test(left, r.left) && test(right, r.right)) set(target, r.head);
        }
      }
    }
  }
}

bool CykTable::derives(std::size_t start, std::size_t len, std::uint32_t nt) const {
  if (foreign_ || len == 0 || start + len > n_) {
    return false;
  }
  return (cell(start, len)[nt / 64] >> (nt % 64)) & 1;
}

bool CykTable::accepted() const {
  if (n_ == 0) {
    return g_->accepts_empty();
  }
  return derives(0, n_, g_->start());
}

bool cyk_member(const CnfGrammar& g, const Word& w) { return CykTable(g, w).accepted(); }

}  // namespace cflab
