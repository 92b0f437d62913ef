// Licensed under the Apache License 2.0 (see LICENSE file).

#include <algorithm>
#include <functional>

#include "cflab/advice.hpp"
#include "cflab/corpus.hpp"
#include "cflab/refuter.hpp"
#include "cflab/swaplab.hpp"
#include "commands.hpp"
#include "rng.hpp"

namespace cflab {

namespace {

struct Check {
  bool pass;
  Json detail;
};

std::vector<Word> binary_words(std::size_t len) {
  std::vector<Word> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
    std::vector<Letter> letters(len);
    for (std::size_t i = 0; i < len; ++i) letters[i] = (bits >> (len - 1 - i)) & 1;
    out.emplace_back(std::move(letters));
  }
  return out;
}

Check scaling_example() {
  const Word got = scale(Word{1, 2, 1, 1}, 3);
  return {got == Word{3, 6, 3, 3}, Json{{"scale(1211, 3)", to_json(got)}}};
}

Check intersection_identity() {
  const auto r = intersection_check(8);
  Json counts = Json::array();
  bool ok = r.holds();
  const std::size_t expected[] = {0, 0, 0, 2, 0, 0, 0, 4};
  for (const auto& l : r.levels) {
    counts.push_back(l.intersection_count);
    ok = ok && l.intersection_count == expected[l.n - 1];
  }
  return {ok, Json{{"counts", counts}, {"strategy", r.strategy}}};
}

Check slice_cardinality() {
  Json sizes = Json::object();
  bool ok = true;
  for (std::size_t n : {4, 8, 16, 24, 32}) {
    const auto s = build_slice(corpus_language("L2"), n);
    sizes[std::to_string(n)] = s.members.size();
    ok = ok && s.members.size() == (std::size_t{1} << (n / 4));
  }
  return {ok, Json{{"sizes", sizes}}};
}

Check binding_bound() {
  std::size_t checks = 0, violations = 0;
  for (std::size_t n : {8, 16, 24}) {
    for (std::size_t j = 1; j <= n / 4; ++j) {
      ++checks;
      violations += !l2_bound_check(n, j).holds();
    }
  }
  return {violations == 0, Json{{"checks", checks}, {"violations", violations}}};
}

Check no_swap() {
  Json counts = Json::object();
  bool ok = true;
  for (std::size_t n : {8, 16, 24}) {
    const Slice s = build_slice(corpus_language("L2"), n);
    const auto w = swap_scan(slice_oracle(corpus_language("L2"), s), s, {1, n / 4});
    counts[std::to_string(n)] = w.size();
    ok = ok && w.empty();
  }
  return {ok, Json{{"witnesses", counts}}};
}

Check positive_swap() {
  const Slice s = build_slice(corpus_language("EvenPal"), 4);
  const auto ws = swap_scan(corpus_language("EvenPal").contains, s, {2, 2}, Interval{1, 1});
  const bool found = std::any_of(ws.begin(), ws.end(), [](const SwapWitness& w) {
    return w.x == Word{0, 1, 1, 0} && w.y == Word{1, 0, 0, 1} && w.swapped_x == Word{0, 0, 0, 0} &&
           w.swapped_y == Word{1, 1, 1, 1};
  });
  return {found, Json{{"witnesses", ws.size()}}};
}

Check parameter_chain() {
  const SwapParams p = choose_params(1);
  const BigInt two_mn2 = BigInt(2) * p.m * p.n * p.n;
  const BigInt half = BigInt(1) << static_cast<unsigned>(p.j0 / 2);
  const bool ok = p.n == 288 && p.k == 72 && p.j0 == 36 && length_bound_holds(1, 288) && !length_bound_holds(1, 272) &&
                  p.k == 2 * p.j0 && half == 262144 && two_mn2 == 165888 && half >= two_mn2;
  return {ok, to_json(p, check_params(p))};
}

Check partition_identity(Rng& rng) {
  const std::vector<std::pair<std::string, std::size_t>> pool{
      {"L2", 16}, {"L2_1", 7}, {"L2_2", 8}, {"L2_prime", 8}, {"EvenPal", 10}, {"Pal_sharp", 9}, {"L2", 24}};
  std::size_t failures = 0;
  for (int t = 0; t < 200; ++t) {
    const auto& [name, max_n] = pool[rng.below(pool.size())];
    const std::size_t n = 1 + rng.below(max_n);
    std::vector<Word> members;
    for (auto& w : corpus_language(name).generate(n)) {
      if (rng.coin()) members.push_back(std::move(w));
    }
    const Slice s = Slice::make(n, std::move(members), name);
    const std::size_t j = 1 + rng.below(n);
    const SliceStats st = slice_stats(s, j);
    for (const auto& level : st.counts) {
      std::size_t sum = 0;
      for (const auto& [u, c] : level) sum += c;
      failures += sum != s.members.size();
    }
  }
  return {failures == 0, Json{{"slices", 200}, {"failures", failures}}};
}

Dfa random_dfa(Rng& rng, const std::vector<Letter>& alphabet) {
  const std::size_t states = 1 + rng.below(5);
  std::vector<std::string> names;
  std::vector<std::size_t> accepting;
  std::vector<Dfa::Transition> t;
  for (std::size_t s = 0; s < states; ++s) {
    names.push_back("q" + std::to_string(s));
    if (rng.coin()) accepting.push_back(s);
    for (Letter l : alphabet) t.push_back({s, l, rng.below(states)});
  }
  return Dfa(names, alphabet, 0, accepting, t);
}

Check advice_equivalences(Rng& rng) {
  const AdvisedLanguage leq{AdviceMode::Parallel, oracle_from(leq_parallel_inner()), leq_parallel_advice()};
  std::size_t leq_mismatch = 0, checked = 0;
  for (std::size_t len = 0; len <= 10; ++len) {
    for (const auto& w : binary_words(len)) {
      ++checked;
      leq_mismatch += parallel_member(leq, w) != in_leq(w);
    }
  }
  std::size_t conv_mismatch = 0;
  const std::vector<Letter> alphabet{0, 1};
  for (int t = 0; t < 20; ++t) {
    const Dfa m = random_dfa(rng, alphabet);
    std::map<std::size_t, Word> table;
    for (std::size_t n = 0; n <= 8; ++n) {
      std::vector<Letter> letters(n);
      for (auto& l : letters) l = alphabet[rng.below(alphabet.size())];
      table.emplace(n, Word(std::move(letters)));
    }
    const AdviceFunction g = AdviceFunction::from_table("random", table);
    const AdvisedLanguage serial{AdviceMode::Serial, oracle_from(m), g};
    const auto conv = serial_to_parallel_reg(m, g);
    const AdvisedLanguage parallel{AdviceMode::Parallel, oracle_from(conv.automaton), conv.advice};
    for (std::size_t len = 1; len <= 8; ++len) {
      for (const auto& w : binary_words(len)) conv_mismatch += serial_member(serial, w) != parallel_member(parallel, w);
    }
  }
  return {leq_mismatch == 0 && conv_mismatch == 0,
          Json{{"leq_checked", checked}, {"leq_mismatches", leq_mismatch}, {"conversion_mismatches", conv_mismatch}}};
}

Check prefix_free() {
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t a = 0; a <= 5; ++a)
    for (std::size_t b = 0; b <= 5; ++b)
      for (const auto& u : binary_words(a))
        for (const auto& v : binary_words(b)) pairs.emplace_back(u, v);
  std::vector<Word> codes;
  std::size_t bad_roundtrip = 0;
  for (const auto& [u, v] : pairs) {
    codes.push_back(prefix_pair_encode(u, v));
    bad_roundtrip += prefix_pair_decode(codes.back()) != std::pair{u, v};
  }
  // In lexicographic order a proper prefix sorts right before its extensions.
  std::sort(codes.begin(), codes.end(), [](const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  std::size_t prefix_pairs = 0;
  for (std::size_t i = 0; i + 1 < codes.size(); ++i) {
    const Word& a = codes[i];
    const Word& b = codes[i + 1];
    prefix_pairs += a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
  }
  return {bad_roundtrip == 0 && prefix_pairs == 0,
          Json{{"codewords", codes.size()}, {"roundtrip_failures", bad_roundtrip}, {"prefix_pairs", prefix_pairs}}};
}

Check pumping_refutation() {
  const Cfg& g = named_grammar("AmBmCt");
  const CnfGrammar cnf = to_cnf(g);
  const auto r = refute_subset(g, in_l2_dprime, cnf.pumping_constant());
  const bool ok = r.witness && replay_witness(cnf, in_l2_dprime, *r.witness);
  return {ok, r.witness ? to_json(*r.witness) : Json{{"inconclusive", r.examined}}};
}

}  // namespace

Json run_suite(std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"scaling example", scaling_example},
      {"intersection identity up to length 8", intersection_identity},
      {"L2 slice cardinality 2^(n/4)", slice_cardinality},
      {"binding bound on S_{i,u}", binding_bound},
      {"no swap witnesses in L2 slices", no_swap},
      {"positive swap control on even palindromes", positive_swap},
      {"parameter chain for m = 1", parameter_chain},
      {"partition identity on random slices", [&] { return partition_identity(rng); }},
      {"advice equivalences", [&] { return advice_equivalences(rng); }},
      {"prefix-free pair coding", prefix_free},
      {"pumping refutation against a^m b^m c^2m", pumping_refutation},
  };
  Json list = Json::array();
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Check c = criteria[k].second();
    all = all && c.pass;
    list.push_back(Json{{"id", k + 1}, {"name", criteria[k].first}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return Json{{"seed", seed}, {"criteria", std::move(list)}, {"pass", all}};
}

}  // namespace cflab
