// Licensed under the Apache License 2.0 (see LICENSE file).

#include <algorithm>
#include <map>
#include <set>

#include "cflab/error.hpp"
#include "cflab/grammar.hpp"

namespace cflab {

namespace {

using Body = std::vector<Symbol>;

struct Work {
  std::vector<std::string> names;
  std::vector<std::set<Body>> rules;  // by head
  std::size_t start = 0;

  std::size_t fresh(const std::string& base) {
    std::string name = base;
    for (int k = 1; std::find(names.begin(), names.end(), name) != names.end(); ++k) {
      name = base + "_" + std::to_string(k);
    }
    names.push_back(name);
    rules.emplace_back();
    return names.size() - 1;
  }
};

std::vector<bool> nullable_set(const Work& w) {
  std::vector<bool> nullable(w.names.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < w.rules.size(); ++a) {
      if (nullable[a]) continue;
      for (const auto& body : w.rules[a]) {
        if (std::all_of(body.begin(), body.end(),
                        [&](const Symbol& s) { return !s.is_terminal() && nullable[s.id]; })) {
          nullable[a] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return nullable;
}

// Every way of dropping nullable occurrences from `body`, minus the empty one.
void expand_nullable(const Body& body, const std::vector<bool>& nullable, std::size_t pos, Body& cur,
                     std::set<Body>& out) {
  if (pos == body.size()) {
    if (!cur.empty()) out.insert(cur);
    return;
  }
  const Symbol& s = body[pos];
  cur.push_back(s);
  expand_nullable(body, nullable, pos + 1, cur, out);
  cur.pop_back();
  if (!s.is_terminal() && nullable[s.id]) {
    expand_nullable(body, nullable, pos + 1, cur, out);
  }
}

void eliminate_lambda(Work& w) {
  auto nullable = nullable_set(w);
  for (auto& rules : w.rules) {
    std::set<Body> next;
    for (const auto& body : rules) {
      Body cur;
      expand_nullable(body, nullable, 0, cur, next);
    }
    rules = std::move(next);
  }
}

bool is_unit(const Body& b) { return b.size() == 1 && !b[0].is_terminal(); }

void eliminate_units(Work& w) {
  const std::size_t n = w.names.size();
  std::vector<std::set<Body>> next(n);
  for (std::size_t a = 0; a < n; ++a) {
    // Unit closure of a, breadth first.
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue{a};
    seen[a] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& body : w.rules[queue[q]]) {
        if (is_unit(body)) {
          if (!seen[body[0].id]) {
            seen[body[0].id] = true;
            queue.push_back(body[0].id);
          }
        } else {
          next[a].insert(body);
        }
      }
    }
  }
  w.rules = std::move(next);
}

// Drops non-generating and unreachable nonterminals and renumbers the rest
// with the start symbol first. Returns false if the start symbol generates
// nothing.
bool remove_useless(Work& w) {
  const std::size_t n = w.names.size();
  std::vector<bool> generating(n, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (generating[a]) continue;
      for (const auto& body : w.rules[a]) {
        if (std::all_of(body.begin(), body.end(),
                        [&](const Symbol& s) { return s.is_terminal() || generating[s.id]; })) {
          generating[a] = changed = true;
          break;
        }
      }
    }
  }
  if (!generating[w.start]) {
    return false;
  }
  std::vector<bool> reachable(n, false);
  std::vector<std::size_t> stack{w.start};
  reachable[w.start] = true;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (const auto& body : w.rules[a]) {
      bool usable = std::all_of(body.begin(), body.end(),
                                [&](const Symbol& s) { return s.is_terminal() || generating[s.id]; });
      if (!usable) continue;
      for (const auto& s : body) {
        if (!s.is_terminal() && !reachable[s.id]) {
          reachable[s.id] = true;
          stack.push_back(s.id);
        }
      }
    }
  }
  std::vector<std::size_t> remap(n, SIZE_MAX);
  std::vector<std::size_t> order{w.start};
  for (std::size_t a = 0; a < n; ++a) {
    if (a != w.start && reachable[a] && generating[a]) order.push_back(a);
  }
  for (std::size_t k = 0; k < order.size(); ++k) remap[order[k]] = k;

  Work out;
  out.start = 0;
  for (std::size_t a : order) {
    out.names.push_back(w.names[a]);
    std::set<Body> rules;
    for (const auto& body : w.rules[a]) {
      bool keep = std::all_of(body.begin(), body.end(),
                              [&](const Symbol& s) { return s.is_terminal() || remap[s.id] != SIZE_MAX; });
      if (!keep) continue;
      Body nb;
      for (const auto& s : body) {
        nb.push_back(s.is_terminal() ? s : Symbol::nonterminal(remap[s.id]));
      }
      rules.insert(std::move(nb));
    }
    out.rules.push_back(std::move(rules));
  }
  w = std::move(out);
  return true;
}

void binarize(Work& w) {
  // Shared chain nonterminals for identical suffixes keep |V| small.
  std::map<Body, std::size_t> suffix_owner;
  const std::size_t original = w.rules.size();
  for (std::size_t a = 0; a < original; ++a) {
    // fresh() grows w.rules, so never iterate it in place.
    const std::set<Body> current = std::move(w.rules[a]);
    std::set<Body> next;
    for (const auto& body : current) {
      if (body.size() <= 2) {
        next.insert(body);
        continue;
      }
      // A -> X1 X2 ... Xk becomes A -> X1 N, N -> X2 ... Xk (recursively).
      std::size_t prev = SIZE_MAX;
      for (std::size_t cut = 1; cut + 1 < body.size(); ++cut) {
        Body rest(body.begin() + cut, body.end());
        auto it = suffix_owner.find(rest);
        std::size_t owner;
        bool fresh = false;
        if (it == suffix_owner.end()) {
          owner = w.fresh("_N" + std::to_string(suffix_owner.size() + 1));
          suffix_owner.emplace(rest, owner);
          fresh = true;
        } else {
          owner = it->second;
        }
        if (prev == SIZE_MAX) {
          next.insert(Body{body[0], Symbol::nonterminal(owner)});
        } else {
          w.rules[prev].insert(Body{body[cut - 1], Symbol::nonterminal(owner)});
        }
        if (!fresh) {
          prev = SIZE_MAX;
          break;
        }
        prev = owner;
      }
      if (prev != SIZE_MAX) {
        w.rules[prev].insert(Body{body[body.size() - 2], body[body.size() - 1]});
      }
    }
    w.rules[a] = std::move(next);
  }
}

void lift_terminals(Work& w) {
  std::map<Letter, std::size_t> lifted;
  auto lift = [&](Letter l) {
    auto it = lifted.find(l);
    if (it != lifted.end()) return it->second;
    std::size_t t = w.fresh("_T" + std::to_string(l & ~kFusedTag) + (is_fused(l) ? "f" : ""));
    w.rules[t].insert(Body{Symbol::terminal(l)});
    lifted.emplace(l, t);
    return t;
  };
  for (std::size_t a = 0; a < w.rules.size(); ++a) {
    const std::set<Body> current = std::move(w.rules[a]);
    std::set<Body> next;
    for (auto body : current) {
      if (body.size() == 2) {
        for (auto& s : body) {
          if (s.is_terminal()) s = Symbol::nonterminal(lift(s.id));
        }
      }
      next.insert(std::move(body));
    }
    w.rules[a] = std::move(next);
  }
}

}  // namespace

CnfGrammar to_cnf(const Cfg& g) {
  Work w;
  w.names = g.names();
  w.rules.resize(w.names.size());
  w.start = g.start();
  for (const auto& p : g.productions()) {
    w.rules[p.head].insert(p.body);
  }

  const bool start_nullable = nullable_set(w)[w.start];
  eliminate_lambda(w);
  eliminate_units(w);
  if (!remove_useless(w)) {
    // L(g) is empty or {λ}.
    return CnfGrammar({g.names()[g.start()]}, 0, start_nullable, {}, {});
  }
  binarize(w);
  lift_terminals(w);

  bool start_in_body = false;
  for (const auto& rules : w.rules) {
    for (const auto& body : rules) {
      for (const auto& s : body) {
        if (!s.is_terminal() && s.id == w.start) start_in_body = true;
      }
    }
  }
  if (start_nullable && start_in_body) {
    std::size_t s0 = w.fresh("_S0");
    w.rules[s0] = w.rules[w.start];
    w.start = s0;
  }

  // Renumber so that the start symbol is 0; keep the remaining order.
  std::vector<std::uint32_t> remap(w.names.size());
  std::vector<std::string> names{w.names[w.start]};
  remap[w.start] = 0;
  for (std::size_t a = 0; a < w.names.size(); ++a) {
    if (a == w.start) continue;
    remap[a] = static_cast<std::uint32_t>(names.size());
    names.push_back(w.names[a]);
  }
  std::vector<CnfGrammar::Binary> binaries;
  std::vector<CnfGrammar::Lexical> lexicals;
  for (std::size_t a = 0; a < w.rules.size(); ++a) {
    for (const auto& body : w.rules[a]) {
      if (body.size() == 1 && body[0].is_terminal()) {
        lexicals.push_back({remap[a], body[0].id});
      } else if (body.size() == 2 && !body[0].is_terminal() && !body[1].is_terminal()) {
        binaries.push_back({remap[a], remap[body[0].id], remap[body[1].id]});
      } else {
        throw std::logic_error("CNF conversion left a malformed rule");
      }
    }
  }
  std::sort(binaries.begin(), binaries.end(),
            [](const auto& x, const auto& y) { return x.head < y.head; });
  std::stable_sort(lexicals.begin(), lexicals.end(),
                   [](const auto& x, const auto& y) { return x.head < y.head; });
  return CnfGrammar(std::move(names), 0, start_nullable, std::move(binaries), std::move(lexicals));
}

}  // namespace cflab
