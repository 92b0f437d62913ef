// Licensed under the Apache License 2.0 (see LICENSE file).

#include "cflab/refuter.hpp"

#include <algorithm>
#include <unordered_map>

#include "cflab/error.hpp"

namespace cflab {

Word Decomposition::pump(std::size_t i) const {
  Word out = u;
  for (std::size_t k = 0; k < i; ++k) out = out + v;
  out = out + w;
  for (std::size_t k = 0; k < i; ++k) out = out + x;
  return out + y;
}

namespace {

struct Node {
  std::uint32_t label;
  std::size_t start, len;
  std::size_t left = SIZE_MAX, right = SIZE_MAX;  // children, none for a lexical node
  std::size_t height = 1;                         // nonterminal nodes on the longest downward path
};

class ParseTree {
 public:
  ParseTree(const CnfGrammar& g, const CykTable& table) : g_(g), table_(table) {}

  std::size_t build(std::uint32_t label, std::size_t start, std::size_t len) {
    const std::size_t id = nodes_.size();
    nodes_.push_back({label, start, len});
    if (len == 1) return id;
    // Leftmost: smallest split first, then rule order.
    for (std::size_t k = 1; k < len; ++k) {
      for (auto r : g_.binaries_of(label)) {
        const auto& rule = g_.binaries()[r];
        if (table_.derives(start, k, rule.left) && table_.derives(start + k, len - k, rule.right)) {
          const std::size_t l = build(rule.left, start, k);
          const std::size_t rr = build(rule.right, start + k, len - k);
          nodes_[id].left = l;
          nodes_[id].right = rr;
          nodes_[id].height = 1 + std::max(nodes_[l].height, nodes_[rr].height);
          return id;
        }
      }
    }
    throw std::logic_error("CYK table claims a derivation that cannot be rebuilt");
  }

  const Node& operator[](std::size_t id) const { return nodes_[id]; }

 private:
  const CnfGrammar& g_;
  const CykTable& table_;
  std::vector<Node> nodes_;
};

}  // namespace

Decomposition find_decomposition(const CnfGrammar& g, const Word& z) {
  const std::uint64_t p = g.pumping_constant();
  if (z.size() < p) {
    throw PreconditionError("|z| = " + std::to_string(z.size()) + " is below the pumping constant " +
                            std::to_string(p));
  }
  CykTable table(g, z);
  if (!table.accepted()) {
    throw PreconditionError("z is not in the language");
  }
  ParseTree tree(g, table);
  const std::size_t root = tree.build(g.start(), 0, z.size());

  // Longest root-to-leaf path, left child on ties.
  std::vector<std::size_t> path{root};
  while (tree[path.back()].left != SIZE_MAX) {
    const Node& n = tree[path.back()];
    path.push_back(tree[n.left].height >= tree[n.right].height ? n.left : n.right);
  }
  // Lowest node whose label repeats further down the path.
  std::unordered_map<std::uint32_t, std::size_t> below;
  std::size_t upper = SIZE_MAX, lower = SIZE_MAX;
  for (std::size_t k = path.size(); k-- > 0;) {
    const std::uint32_t label = tree[path[k]].label;
    if (auto it = below.find(label); it != below.end()) {
      upper = path[k];
      lower = it->second;
      break;
    }
    below[label] = path[k];
  }
  if (upper == SIZE_MAX) {
    throw std::logic_error("no repeated nonterminal on a path of a word longer than 2^|V|");
  }
  const Node& U = tree[upper];
  const Node& L = tree[lower];
  Decomposition d{z.factor(0, U.start), z.factor(U.start, L.start - U.start), z.factor(L.start, L.len),
                  z.factor(L.start + L.len, U.start + U.len - L.start - L.len),
                  z.factor(U.start + U.len, z.size() - U.start - U.len)};
  if (d.v.size() + d.x.size() < 1 || U.len > p) {
    throw std::logic_error("decomposition violates the pumping bounds");
  }
  for (std::size_t i : {0, 2, 3}) {
    if (!cyk_member(g, d.pump(i))) {
      throw std::logic_error("pumped word left the language at i = " + std::to_string(i));
    }
  }
  return d;
}

RefuteResult refute_subset(const Cfg& grammar, const Predicate& predicate, std::size_t search_len,
                           RefuteOptions opts) {
  const CnfGrammar g = to_cnf(grammar);
  RefuteResult result;
  result.pumping_constant = g.pumping_constant();
  if (search_len < result.pumping_constant) {
    throw PreconditionError("search length " + std::to_string(search_len) + " is below the pumping constant " +
                            std::to_string(result.pumping_constant));
  }
  const std::vector<Word> words = enumerate_language(g, search_len, {.work_limit = opts.work_limit});
  for (const auto& z : words) {
    if (z.size() < result.pumping_constant || !predicate(z)) continue;
    ++result.examined;
    Decomposition d = find_decomposition(g, z);
    PumpWitness witness{z, d, result.pumping_constant, {}, 0, {}};
    bool found = false;
    for (std::size_t i : opts.exponents) {
      Word pumped = d.pump(i);
      if (!cyk_member(g, pumped)) {
        throw std::logic_error("pumped word left the language at i = " + std::to_string(i));
      }
      if (!found && !predicate(pumped)) {
        found = true;
        witness.violating_exponent = i;
        witness.violating = pumped;
      }
      witness.pumped.emplace_back(i, std::move(pumped));
    }
    if (found) {
      if (!replay_witness(g, predicate, witness)) {
        throw std::logic_error("pump witness failed its own replay");
      }
      result.witness = std::move(witness);
      return result;
    }
  }
  return result;
}

bool replay_witness(const CnfGrammar& g, const Predicate& p, const PumpWitness& witness) {
  const auto& d = witness.parts;
  if (d.u + d.v + d.w + d.x + d.y != witness.z) return false;
  if (d.v.size() + d.x.size() < 1 || d.v.size() + d.w.size() + d.x.size() > witness.pumping_constant) return false;
  for (const auto& [i, word] : witness.pumped) {
    if (word != d.pump(i) || !cyk_member(g, word)) return false;
  }
  return d.pump(witness.violating_exponent) == witness.violating && cyk_member(g, witness.violating) &&
         !p(witness.violating);
}

}  // namespace cflab
