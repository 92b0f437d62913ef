// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cflab/advice.hpp"
#include "cflab/corpus.hpp"
#include "cflab/words.hpp"

namespace cflab {

/// All members of one language at a fixed length n. When built with advice,
/// every member is fused with the single advice word h(n).
struct Slice {
  std::size_t n = 0;
  std::vector<Word> members;  // sorted, distinct, all of length n
  std::string origin;
  std::optional<Word> advice;

  /// Validates the invariants and sorts the members.
  static Slice make(std::size_t n, std::vector<Word> members, std::string origin,
                    std::optional<Word> advice = std::nullopt);
};

/// Throws CostGuardError above 10^7 members unless forced.
Slice build_slice(const CorpusLanguage& lang, std::size_t n, const AdviceFunction* advice = nullptr,
                  bool force = false);

/// Membership for words of the slice's shape: plain members are tested
/// against the language; tracked words must carry the slice's advice word on
/// the bottom track and a member on the top track.
MembershipOracle slice_oracle(const CorpusLanguage& lang, const Slice& slice);

/// Thread-safe memoising wrapper.
class MemoOracle {
 public:
  explicit MemoOracle(MembershipOracle inner) : inner_(std::move(inner)) {}
  bool operator()(const Word& w) const;
  std::uint64_t calls() const;
  std::uint64_t evaluations() const;

 private:
  MembershipOracle inner_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, bool> cache_;
  mutable std::uint64_t calls_ = 0;
};

/// counts[i][u] = |S_{i,u}| = |{v in S : v_{i+1..i+j} = u}|, i = 0..n-j.
struct SliceStats {
  std::size_t n = 0;
  std::size_t j = 0;
  std::size_t slice_size = 0;
  std::vector<std::map<Word, std::size_t>> counts;

  struct Entry {
    std::size_t i;
    Word u;
    std::size_t count;
  };

  std::size_t count(std::size_t i, const Word& u) const;
  /// First maximal entry in (i, u) order.
  Entry max() const;
};

SliceStats slice_stats(const Slice& s, std::size_t j);

struct BoundReport {
  std::size_t n = 0;
  std::size_t j = 0;
  std::uint64_t bound = 0;  // 2^{n/4 - ceil(j/2)}
  SliceStats::Entry max;
  std::optional<SliceStats::Entry> violation;
  bool holds() const { return !violation.has_value(); }
};

/// max |S_{i,u}| <= 2^{n/4 - ceil(j/2)} on the L2 slice. Needs 4 | n and
/// 1 <= j <= n/4.
BoundReport l2_bound_check(std::size_t n, std::size_t j, bool force = false);

struct SwapParams {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t j0 = 0;
};

struct ParamChecks {
  bool n_multiple_of_16 = false;
  bool length_bound = false;   // 2^{n/4} > (2 m n^2)^4
  bool k_is_quarter = false;   // k = n/4
  bool j0_formula = false;     // j0 = 2(ceil(log2(m n^2)) + 1)
  bool k_ge_2j0 = false;
  bool j0_half_bound = false;  // 2^{j0/2} >= 2 m n^2
  bool all() const {
    return n_multiple_of_16 && length_bound && k_is_quarter && j0_formula && k_ge_2j0 && j0_half_bound;
  }
};

/// ceil(log2 x) for x >= 1, exact.
std::uint64_t ceil_log2(const BigInt& x);
/// 2^{n/4} > (2 m n^2)^4, exact.
bool length_bound_holds(std::uint64_t m, std::uint64_t n);
ParamChecks check_params(const SwapParams& p);

/// Smallest multiple of 16 satisfying eq. 1, with k = n/4 and
/// j0 = 2(ceil(log2(m n^2)) + 1). Asserts the whole chain before returning.
SwapParams choose_params(std::uint64_t m);

/// Every |S_{i,u}| (i = 0..n-j0) is strictly below
/// |S| / (m (k - j0 + 1)(n - j0 + 1)), in exact rational arithmetic.
/// Requires stats.j == params.j0 and stats.n == params.n.
bool density_condition(const SliceStats& stats, const SwapParams& params);

struct SwapWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  Word x, y;
  Word swapped_x;  // x1 y2 x3
  Word swapped_y;  // y1 x2 y3
  bool both_in_language = false;
  /// The lemma asks for a positive offset; i = 0 witnesses are reported but
  /// flagged.
  bool zero_offset() const { return i == 0; }
};

struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;  // inclusive
};

struct ScanOptions {
  bool force = false;
  std::uint64_t max_membership_calls = 100'000'000;
};

/// Every (x, y, i, j) with x != y in the slice, x2 != y2 and both swapped
/// words in L. Ordered by pair (slice order), then i, then j.
std::vector<SwapWitness> swap_scan(const MembershipOracle& lang, const Slice& s, Interval j_range,
                                   std::optional<Interval> i_range = std::nullopt, ScanOptions opts = {});

}  // namespace cflab
