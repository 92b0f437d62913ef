// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cflab/corpus.hpp"
#include "cflab/grammar.hpp"

namespace cflab {

/// z = u v w x y.
struct Decomposition {
  Word u, v, w, x, y;

  /// u v^i w x^i y
  Word pump(std::size_t i) const;
};

/// Pumping decomposition of z read off the leftmost CYK parse tree: on the
/// longest root-to-leaf path, the lowest nonterminal that repeats below
/// itself. Guarantees |vx| >= 1 and |vwx| <= p = 2^|V|, and checks
/// u v^i w x^i y in L(g) for i = 0, 2, 3 before returning.
/// Throws PreconditionError if z is not in L(g) or |z| < p.
Decomposition find_decomposition(const CnfGrammar& g, const Word& z);

struct PumpWitness {
  Word z;
  Decomposition parts;
  std::uint64_t pumping_constant = 0;
  std::vector<std::pair<std::size_t, Word>> pumped;  // every exponent tried, all in L(g)
  std::size_t violating_exponent = 0;
  Word violating;  // in L(g), fails the predicate
};

struct RefuteResult {
  std::optional<PumpWitness> witness;  // empty: inconclusive
  std::size_t examined = 0;            // candidates z decomposed
  std::uint64_t pumping_constant = 0;
};

struct RefuteOptions {
  std::vector<std::size_t> exponents{0, 2, 3, 4};
  std::uint64_t work_limit = 20'000'000;
};

/// Semi-decides "L(g) is not a subset of P": searches z in L(g) with
/// p <= |z| <= search_len and P(z), pumps it, and returns the first pumped
/// word outside P. Requires search_len >= p.
RefuteResult refute_subset(const Cfg& g, const Predicate& p, std::size_t search_len, RefuteOptions opts = {});

/// Independent check of a witness: every pumped word is recomputed from the
/// decomposition and confirmed by CYK, and the predicate fails on the
/// violating word.
bool replay_witness(const CnfGrammar& g, const Predicate& p, const PumpWitness& witness);

}  // namespace cflab
