// Licensed under the Apache License 2.0 (see LICENSE file).

#include "cflab/swaplab.hpp"

#include <algorithm>

#include "cflab/error.hpp"

namespace cflab {

Slice Slice::make(std::size_t n, std::vector<Word> members, std::string origin, std::optional<Word> advice) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw InvalidArgument("slice members must be distinct");
  }
  for (const auto& w : members) {
    if (w.size() != n) {
      throw InvalidArgument("slice member of length " + std::to_string(w.size()) + " in a slice of length " +
                            std::to_string(n));
    }
  }
  if (advice && advice->size() != n) {
    throw InvalidArgument("slice advice has the wrong length");
  }
  return Slice{n, std::move(members), std::move(origin), std::move(advice)};
}

Slice build_slice(const CorpusLanguage& lang, std::size_t n, const AdviceFunction* advice, bool force) {
  if (n == 0) {
    throw PreconditionError("slices need n >= 1");
  }
  std::vector<Word> members = generate_checked(lang, n, force);
  if (advice == nullptr) {
    return Slice::make(n, std::move(members), lang.name);
  }
  Word h = (*advice)(n);
  for (auto& w : members) w = fuse(zip_tracks(w, h));
  return Slice::make(n, std::move(members), lang.name + " with advice " + advice->name(), std::move(h));
}

MembershipOracle slice_oracle(const CorpusLanguage& lang, const Slice& slice) {
  Predicate contains = lang.contains;
  if (!slice.advice) {
    return contains;
  }
  Word h = *slice.advice;
  return [contains, h](const Word& w) {
    for (Letter l : w) {
      if (!is_fused(l)) return false;
    }
    TrackedWord t = unfuse(w);
    return t.bottom() == h && contains(t.top());
  };
}

bool MemoOracle::operator()(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    ++calls_;
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  }
  const bool result = inner_(w);
  std::lock_guard lock(mutex_);
  cache_.emplace(w, result);
  return result;
}

std::uint64_t MemoOracle::calls() const {
  std::lock_guard lock(mutex_);
  return calls_;
}

std::uint64_t MemoOracle::evaluations() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

std::size_t SliceStats::count(std::size_t i, const Word& u) const {
  if (i >= counts.size()) return 0;
  auto it = counts[i].find(u);
  return it == counts[i].end() ? 0 : it->second;
}

SliceStats::Entry SliceStats::max() const {
  Entry best{0, Word{}, 0};
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (const auto& [u, c] : counts[i]) {
      if (c > best.count) best = {i, u, c};
    }
  }
  return best;
}

SliceStats slice_stats(const Slice& s, std::size_t j) {
  if (j < 1 || j > s.n) {
    throw PreconditionError("slice_stats needs 1 <= j <= n");
  }
  SliceStats stats{s.n, j, s.members.size(), {}};
  stats.counts.resize(s.n - j + 1);
  for (const auto& v : s.members) {
    for (std::size_t i = 0; i + j <= s.n; ++i) ++stats.counts[i][v.factor(i, j)];
  }
  return stats;
}

BoundReport l2_bound_check(std::size_t n, std::size_t j, bool force) {
  if (n < 4 || n % 4) {
    throw PreconditionError("bound check needs n divisible by 4");
  }
  if (j < 1 || j > n / 4) {
    throw PreconditionError("bound check needs 1 <= j <= n/4");
  }
  const Slice s = build_slice(corpus_language("L2"), n, nullptr, force);
  const SliceStats stats = slice_stats(s, j);
  BoundReport report;
  report.n = n;
  report.j = j;
  const std::size_t exponent = n / 4 - (j + 1) / 2;
  if (exponent >= 64) {
    throw CostGuardError("bound 2^" + std::to_string(exponent) + " does not fit in 64 bits");
  }
  report.bound = std::uint64_t{1} << exponent;
  report.max = stats.max();
  for (std::size_t i = 0; i < stats.counts.size() && !report.violation; ++i) {
    for (const auto& [u, c] : stats.counts[i]) {
      if (c > report.bound) {
        report.violation = SliceStats::Entry{i, u, c};
        break;
      }
    }
  }
  return report;
}

std::uint64_t ceil_log2(const BigInt& x) {
  if (x < 1) {
    throw InvalidArgument("ceil_log2 needs x >= 1");
  }
  if (x == 1) return 0;
  return boost::multiprecision::msb(BigInt(x - 1)) + 1;
}

bool length_bound_holds(std::uint64_t m, std::uint64_t n) {
  const BigInt lhs = BigInt(1) << static_cast<unsigned>(n / 4);
  const BigInt rhs = boost::multiprecision::pow(BigInt(2) * m * n * n, 4);
  return lhs > rhs;
}

ParamChecks check_params(const SwapParams& p) {
  ParamChecks c;
  const BigInt mn2 = BigInt(p.m) * p.n * p.n;
  c.n_multiple_of_16 = p.n > 0 && p.n % 16 == 0;
  c.length_bound = length_bound_holds(p.m, p.n);
  c.k_is_quarter = p.n % 4 == 0 && p.k == p.n / 4;
  c.j0_formula = mn2 >= 1 && p.j0 == 2 * (ceil_log2(mn2) + 1);
  c.k_ge_2j0 = p.k >= 2 * p.j0;
  c.j0_half_bound = p.j0 % 2 == 0 && (BigInt(1) << static_cast<unsigned>(p.j0 / 2)) >= 2 * mn2;
  return c;
}

SwapParams choose_params(std::uint64_t m) {
  if (m == 0) {
    throw InvalidArgument("swapping lemma constant must be positive");
  }
  std::uint64_t n = 16;
  while (!length_bound_holds(m, n)) n += 16;
  SwapParams p{m, n, n / 4, 2 * (ceil_log2(BigInt(m) * n * n) + 1)};
  ParamChecks c = check_params(p);
  if (!c.all()) {
    throw std::logic_error("parameter chain broken for m = " + std::to_string(m));
  }
  return p;
}

bool density_condition(const SliceStats& stats, const SwapParams& params) {
  if (stats.j != params.j0 || stats.n != params.n) {
    throw PreconditionError("density condition needs stats with j = j0 over a slice of length n");
  }
  if (params.m < 1 || params.j0 > params.k || params.k > params.n) {
    throw PreconditionError("density condition needs m >= 1 and j0 <= k <= n");
  }
  const BigInt denom = BigInt(params.m) * (params.k - params.j0 + 1) * (params.n - params.j0 + 1);
  for (const auto& level : stats.counts) {
    for (const auto& [u, c] : level) {
      // c < |S| / denom  <=>  c * denom < |S|
      if (BigInt(c) * denom >= stats.slice_size) return false;
    }
  }
  return true;
}

std::vector<SwapWitness> swap_scan(const MembershipOracle& lang, const Slice& s, Interval j_range,
                                   std::optional<Interval> i_range, ScanOptions opts) {
  const std::size_t n = s.n;
  if (j_range.lo < 1 || j_range.hi > n || j_range.lo > j_range.hi) {
    throw PreconditionError("swap scan needs 1 <= j_lo <= j_hi <= n");
  }
  const Interval is = i_range.value_or(Interval{0, n});
  if (is.lo > is.hi) {
    throw PreconditionError("swap scan needs i_lo <= i_hi");
  }
  std::uint64_t combos = 0;
  for (std::size_t i = is.lo; i <= std::min(is.hi, n); ++i) {
    for (std::size_t j = j_range.lo; j <= j_range.hi && i + j <= n; ++j) ++combos;
  }
  const std::uint64_t m = s.members.size();
  const std::uint64_t estimate = 2 * m * (m > 0 ? m - 1 : 0) * combos;
  if (!opts.force && estimate > opts.max_membership_calls) {
    throw CostGuardError("swap scan would make up to " + std::to_string(estimate) +
                         " membership calls, above the limit of " + std::to_string(opts.max_membership_calls));
  }

  MemoOracle memo(lang);
  std::vector<SwapWitness> out;
  for (const auto& x : s.members) {
    for (const auto& y : s.members) {
      if (x == y) continue;
      for (std::size_t i = is.lo; i <= std::min(is.hi, n); ++i) {
        for (std::size_t j = j_range.lo; j <= j_range.hi && i + j <= n; ++j) {
          if (std::equal(x.begin() + i, x.begin() + i + j, y.begin() + i)) continue;
          const Word x1 = x.factor(0, i), x2 = x.factor(i, j), x3 = x.factor(i + j, n - i - j);
          const Word y1 = y.factor(0, i), y2 = y.factor(i, j), y3 = y.factor(i + j, n - i - j);
          Word sx = x1 + y2 + x3;
          if (!memo(sx)) continue;
          Word sy = y1 + x2 + y3;
          if (!memo(sy)) continue;
          out.push_back({i, j, x, y, std::move(sx), std::move(sy), true});
        }
      }
    }
  }
  return out;
}

}  // namespace cflab
