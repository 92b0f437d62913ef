// Licensed under the Apache License 2.0 (see LICENSE file).

#include <map>
#include <set>
#include <tuple>

#include "cflab/advice.hpp"
#include "cflab/corpus.hpp"
#include "cflab/error.hpp"
#include "cflab/swaplab.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cflab;

namespace {

using u128 = unsigned __int128;

u128 pow2(unsigned e) { return u128{1} << e; }

// (2 m n^2)^4 < 2^{n/4}, only for n/4 < 127.
bool length_bound_ref(u128 m, u128 n) {
  const u128 base = 2 * m * n * n;
  return base * base * base * base < pow2(static_cast<unsigned>(n / 4));
}

unsigned ceil_log2_ref(u128 x) {
  unsigned e = 0;
  while (pow2(e) < x) ++e;
  return e;
}

// counts[(i, u)] by direct scanning of the member list.
std::map<std::pair<std::size_t, oracle::Letters>, std::size_t> brute_counts(const std::vector<oracle::Letters>& s,
                                                                            std::size_t j) {
  std::map<std::pair<std::size_t, oracle::Letters>, std::size_t> out;
  for (const auto& v : s)
    for (std::size_t i = 0; i + j <= v.size(); ++i)
      ++out[{i, oracle::Letters(v.begin() + i, v.begin() + i + j)}];
  return out;
}

SliceStats stats_with(std::size_t n, std::size_t j, std::size_t size, std::vector<std::map<Word, std::size_t>> c) {
  SliceStats s;
  s.n = n;
  s.j = j;
  s.slice_size = size;
  s.counts = std::move(c);
  return s;
}

}  // namespace

TEST_CASE("slices") {
  CHECK(build_slice(corpus_language("L2"), 8).members.size() == 4);
  CHECK(build_slice(corpus_language("L2"), 10).members.empty());
  CHECK(build_slice(corpus_language("EvenPal"), 4).members ==
        std::vector<Word>{{0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 1, 1, 1}});
  for (std::size_t n : {4u, 8u, 16u, 24u, 32u}) {
    CHECK(build_slice(corpus_language("L2"), n).members.size() == (std::size_t{1} << (n / 4)));
  }
  CHECK_THROWS_AS(build_slice(corpus_language("L2_1"), 14), CostGuardError);
  CHECK_THROWS_AS(Slice::make(2, {{1, 2}, {1}}, "bad"), InvalidArgument);
  CHECK_THROWS_AS(Slice::make(2, {{1, 2}, {1, 2}}, "bad"), InvalidArgument);
}

TEST_CASE("slice_stats examples") {
  const Slice s = build_slice(corpus_language("L2"), 8);
  const SliceStats st = slice_stats(s, 2);
  CHECK(st.count(3, Word{3, 15}) == 2);
  for (const auto& [u, c] : st.counts[0]) CHECK(c == 1);
  CHECK(st.counts.size() == 7);
  CHECK(st.count(3, Word{9, 9}) == 0);
  CHECK_THROWS_AS(slice_stats(s, 9), PreconditionError);
}

TEST_CASE("slice_stats agrees with direct counting and partitions the slice") {
  for (const char* name : {"L2", "EvenPal", "Pal_sharp", "L2_2"}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const Slice s = build_slice(corpus_language(name), n);
      std::vector<oracle::Letters> raw;
      for (const auto& w : s.members) raw.emplace_back(w.begin(), w.end());
      for (std::size_t j = 1; j <= n; ++j) {
        const SliceStats st = slice_stats(s, j);
        const auto want = brute_counts(raw, j);
        std::size_t entries = 0;
        for (std::size_t i = 0; i < st.counts.size(); ++i) {
          std::size_t sum = 0;
          for (const auto& [u, c] : st.counts[i]) {
            CHECK(want.at({i, oracle::Letters(u.begin(), u.end())}) == c);
            sum += c;
            ++entries;
          }
          CHECK(sum == s.members.size());
        }
        CHECK(entries == want.size());
      }
    }
  }
}

TEST_CASE("bound check") {
  const auto r82 = l2_bound_check(8, 2);
  CHECK(r82.holds());
  CHECK(r82.bound == 2);
  CHECK(r82.max.count == 2);
  CHECK(l2_bound_check(16, 4).max.count <= 4);
  CHECK(l2_bound_check(8, 1).bound == 2);
  CHECK(l2_bound_check(8, 1).holds());
  for (std::size_t n : {8u, 16u, 24u}) {
    for (std::size_t j = 1; j <= n / 4; ++j) {
      const auto r = l2_bound_check(n, j);
      CHECK(r.holds());
      CHECK(r.bound == (std::uint64_t{1} << (n / 4 - (j + 1) / 2)));
      std::size_t worst = 0;
      for (const auto& [key, c] : brute_counts(oracle::l2(n), j)) worst = std::max(worst, c);
      CHECK(r.max.count == worst);
    }
  }
  CHECK_THROWS_AS(l2_bound_check(10, 1), PreconditionError);
  CHECK_THROWS_AS(l2_bound_check(8, 3), PreconditionError);
}

TEST_CASE("parameter chain") {
  const SwapParams p = choose_params(1);
  CHECK(p.n == 288);
  CHECK(p.k == 72);
  CHECK(p.j0 == 36);
  CHECK(p.k == 2 * p.j0);
  CHECK(length_bound_holds(1, 288));
  CHECK_FALSE(length_bound_holds(1, 272));
  CHECK(check_params(p).all());

  for (std::uint64_t m = 1; m <= 10; ++m) {
    CAPTURE(m);
    const SwapParams q = choose_params(m);
    std::uint64_t n = 16;
    while (!length_bound_ref(m, n)) n += 16;
    CHECK(q.n == n);
    CHECK(q.k == n / 4);
    CHECK(q.j0 == 2 * (ceil_log2_ref(u128{m} * n * n) + 1));
    CHECK(q.k >= 2 * q.j0);
    CHECK(pow2(static_cast<unsigned>(q.j0 / 2)) >= u128{2} * m * n * n);
    CHECK(check_params(q).all());
    for (std::uint64_t e = 16; e < 600; e += 16) CHECK(length_bound_holds(m, e) == (e / 4 >= 127 || length_bound_ref(m, e)));
  }
  CHECK(pow2(18) == 262144);
  CHECK(2 * 288 * 288 == 165888);
  CHECK(ceil_log2(BigInt(1)) == 0);
  CHECK(ceil_log2(BigInt(82944)) == 17);
  CHECK_THROWS_AS(choose_params(0), InvalidArgument);
}

TEST_CASE("density condition") {
  const SwapParams p{1, 8, 4, 2};  // denominator 1 * 3 * 7 = 21
  // Concentrated slice: one block holds everything.
  std::vector<std::map<Word, std::size_t>> concentrated(7);
  for (auto& level : concentrated) level[Word{1, 1}] = 100;
  CHECK_FALSE(density_condition(stats_with(8, 2, 100, concentrated), p));
  // Scattered: every count 1, |S| = 22 > 21.
  std::vector<std::map<Word, std::size_t>> scattered(7);
  for (auto& level : scattered)
    for (Letter a = 0; a < 22; ++a) level[Word{a, a}] = 1;
  CHECK(density_condition(stats_with(8, 2, 22, scattered), p));
  CHECK_FALSE(density_condition(stats_with(8, 2, 21, scattered), p));
  CHECK_THROWS_AS(density_condition(stats_with(8, 3, 22, scattered), p), PreconditionError);

  // Counts below |S|/(k m n) imply the condition, since k m n >= m(k-j0+1)(n-j0+1).
  for (std::uint64_t size = 1; size <= 200; ++size) {
    for (std::size_t c = 0; c <= size; ++c) {
      std::vector<std::map<Word, std::size_t>> levels(7);
      levels[0][Word{0, 0}] = c;
      const bool below_kmn = BigInt(c) * p.k * p.m * p.n < size;
      if (below_kmn) CHECK(density_condition(stats_with(8, 2, size, levels), p));
    }
  }
}

TEST_CASE("swap scan: positive control on even palindromes") {
  const auto& lang = corpus_language("EvenPal");
  const Slice s = build_slice(lang, 4);
  const auto ws = swap_scan(lang.contains, s, {2, 2}, Interval{1, 1});
  bool found = false;
  for (const auto& w : ws) {
    if (w.x == Word{0, 1, 1, 0} && w.y == Word{1, 0, 0, 1}) {
      found = true;
      CHECK(w.swapped_x == Word{0, 0, 0, 0});
      CHECK(w.swapped_y == Word{1, 1, 1, 1});
      CHECK(w.i == 1);
      CHECK(w.j == 2);
    }
  }
  CHECK(found);
}

TEST_CASE("swap scan matches a brute-force scan, is symmetric and ordered") {
  for (const char* name : {"EvenPal", "Pal_sharp", "L2_2", "L2"}) {
    const auto& lang = corpus_language(name);
    for (std::size_t n = 1; n <= 8; ++n) {
      const Slice s = build_slice(lang, n);
      if (s.members.size() > 40) continue;
      const auto ws = swap_scan(lang.contains, s, {1, n});
      std::set<std::tuple<Word, Word, std::size_t, std::size_t>> got;
      for (const auto& w : ws) {
        got.emplace(w.x, w.y, w.i, w.j);
        CHECK(w.swapped_x == w.x.factor(0, w.i) + w.y.factor(w.i, w.j) + w.x.factor(w.i + w.j, n - w.i - w.j));
        CHECK(w.x.factor(w.i, w.j) != w.y.factor(w.i, w.j));
      }
      std::set<std::tuple<Word, Word, std::size_t, std::size_t>> want;
      for (const auto& x : s.members)
        for (const auto& y : s.members)
          for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 1; i + j <= n; ++j) {
              oracle::Letters a(x.begin(), x.end()), b(y.begin(), y.end());
              if (std::equal(a.begin() + i, a.begin() + i + j, b.begin() + i)) continue;
              std::swap_ranges(a.begin() + i, a.begin() + i + j, b.begin() + i);
              if (lang.contains(Word(a)) && lang.contains(Word(b))) want.emplace(x, y, i, j);
            }
      CHECK(got == want);
      for (const auto& [x, y, i, j] : got) CHECK(got.contains({y, x, i, j}));
      for (std::size_t k = 1; k < ws.size(); ++k) {
        CHECK(std::tie(ws[k - 1].x, ws[k - 1].y, ws[k - 1].i, ws[k - 1].j) <
              std::tie(ws[k].x, ws[k].y, ws[k].i, ws[k].j));
      }
    }
  }
}

TEST_CASE("no swap witnesses in L2 slices") {
  const auto& lang = corpus_language("L2");
  for (std::size_t n : {8u, 16u, 24u}) {
    const Slice s = build_slice(lang, n);
    CHECK(swap_scan(lang.contains, s, {1, n / 4}).empty());
  }
}

TEST_CASE("tracked slices keep the advice track under swaps") {
  const auto& lang = corpus_language("EvenPal");
  const AdviceFunction h = leq_parallel_advice();
  for (std::size_t n : {4u, 6u}) {
    const Slice s = build_slice(lang, n, &h);
    REQUIRE(s.advice);
    const auto ws = swap_scan(slice_oracle(lang, s), s, {1, n});
    CHECK_FALSE(ws.empty());
    for (const auto& w : ws) {
      CHECK(unfuse(w.swapped_x).bottom() == h(n));
      CHECK(unfuse(w.swapped_y).bottom() == h(n));
      CHECK(lang.contains(unfuse(w.swapped_x).top()));
    }
    // Same witnesses as the untracked slice, modulo the track.
    const Slice plain = build_slice(lang, n);
    CHECK(swap_scan(lang.contains, plain, {1, n}).size() == ws.size());
  }
}

TEST_CASE("swap scan guards") {
  const auto& lang = corpus_language("L2");
  const Slice s = build_slice(lang, 32);
  CHECK_THROWS_AS(swap_scan(lang.contains, s, {1, 32}, std::nullopt, {.max_membership_calls = 1000}),
                  CostGuardError);
  CHECK_THROWS_AS(swap_scan(lang.contains, s, {0, 2}), PreconditionError);
  CHECK_THROWS_AS(swap_scan(lang.contains, s, {1, 33}), PreconditionError);
}

TEST_CASE("memo oracle") {
  int evaluations = 0;
  MemoOracle m([&](const Word& w) {
    ++evaluations;
    return w.size() % 2 == 0;
  });
  CHECK(m(Word{1, 2}));
  CHECK(m(Word{1, 2}));
  CHECK_FALSE(m(Word{1}));
  CHECK(evaluations == 2);
  CHECK(m.calls() == 3);
  CHECK(m.evaluations() == 2);
}
