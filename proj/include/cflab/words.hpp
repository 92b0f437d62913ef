// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cflab {

/// A letter is a natural number. Value 0 is the advice padding letter; the
/// binary corpus languages also use it as an ordinary symbol.
using Letter = std::uint64_t;

/// Immutable word over natural-number letters. Ordered shortlex: first by
/// length, then lexicographically by letter value.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Factor of `len` letters starting after `pos` letters.
  Word factor(std::size_t pos, std::size_t len) const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Word of `n` copies of `letter`.
Word repeat(Letter letter, std::size_t n);

/// (w)×c: positionwise multiplication by c. Throws InvalidArgument for c = 0.
Word scale(const Word& w, Letter c);

Word reverse(const Word& w);

/// w (w^R)×3 (w)×15 (w^R)×5 for nonempty w over {1,2}.
Word nest_l2(const Word& w);

/// Two equal-length words read as one word over the track alphabet.
class TrackedWord {
 public:
  TrackedWord(Word top, Word bottom);

  const Word& top() const { return top_; }
  const Word& bottom() const { return bottom_; }
  std::size_t size() const { return top_.size(); }

  friend bool operator==(const TrackedWord&, const TrackedWord&) = default;

 private:
  Word top_;
  Word bottom_;
};

TrackedWord zip_tracks(const Word& x, const Word& a);
std::pair<Word, Word> unzip_tracks(const TrackedWord& t);

// Track letters are packed into a single Letter so that grammars and automata
// over the track alphabet work on plain words. A fused letter has the top bit
// set; its components must be below 2^31 (top) and 2^32 (bottom).
constexpr Letter kFusedTag = Letter{1} << 63;

Letter fuse_letter(Letter top, Letter bottom);
bool is_fused(Letter l);
std::pair<Letter, Letter> split_letter(Letter fused);

/// Letterwise fusion of a tracked word and its inverse. `unfuse` throws if a
/// letter is not fused.
Word fuse(const TrackedWord& t);
TrackedWord unfuse(const Word& w);

/// Names for symbolic letters. The standard table maps a, b, c and # to
/// their ASCII codes (97, 98, 99, 35); decimal tokens always denote
/// themselves.
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(std::map<std::string, Letter> names);

  static const SymbolTable& standard();
  static SymbolTable from_json(std::string_view text);

  std::optional<Letter> lookup(std::string_view name) const;
  std::optional<std::string> name_of(Letter l) const;

 private:
  std::map<std::string, Letter, std::less<>> names_;
  std::map<Letter, std::string> reverse_;
};

/// Parses one letter token: a decimal, a symbol name, or `top/bottom` for a
/// fused track letter.
Letter parse_letter(std::string_view token, const SymbolTable& symbols = SymbolTable::standard());

/// Parses a comma-separated letter list. The empty string is λ.
Word parse_word(std::string_view text, const SymbolTable& symbols = SymbolTable::standard());

std::string letter_to_string(Letter l);

/// Space-separated decimal letters; fused letters print as `top/bottom`.
std::string to_string(const Word& w);

}  // namespace cflab

template <>
struct std::hash<cflab::Word> {
  std::size_t operator()(const cflab::Word& w) const noexcept;
};
