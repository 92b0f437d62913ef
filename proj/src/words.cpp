// Licensed under the Apache License 2.0 (see LICENSE file).

#include "cflab/words.hpp"

#include <algorithm>
#include <charconv>

#include "json.hpp"

#include "cflab/error.hpp"

namespace cflab {

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size()) {
    throw InvalidArgument("factor out of range");
  }
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    return a.size() <=> b.size();
  }
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word repeat(Letter letter, std::size_t n) { return Word(std::vector<Letter>(n, letter)); }

Word scale(const Word& w, Letter c) {
  if (c == 0) {
    throw InvalidArgument("scale factor must be at least 1");
  }
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) {
    out.push_back(l * c);
  }
  return Word(std::move(out));
}

Word reverse(const Word& w) { return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend())); }

Word nest_l2(const Word& w) {
  if (w.empty()) {
    throw InvalidArgument("nest_l2 needs a nonempty word");
  }
  for (Letter l : w) {
    if (l != 1 && l != 2) {
      throw InvalidArgument("nest_l2 letters must be 1 or 2");
    }
  }
  const Word r = reverse(w);
  return w + scale(r, 3) + scale(w, 15) + scale(r, 5);
}

TrackedWord::TrackedWord(Word top, Word bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.size() != bottom_.size()) {
    throw InvalidArgument("track lengths differ: " + std::to_string(top_.size()) + " vs " +
                          std::to_string(bottom_.size()));
  }
}

TrackedWord zip_tracks(const Word& x, const Word& a) { return TrackedWord(x, a); }

std::pair<Word, Word> unzip_tracks(const TrackedWord& t) { return {t.top(), t.bottom()}; }

Letter fuse_letter(Letter top, Letter bottom) {
  if (top >= (Letter{1} << 31) || bottom >= (Letter{1} << 32)) {
    throw InvalidArgument("letter too large for the track alphabet");
  }
  return kFusedTag | (top << 32) | bottom;
}

bool is_fused(Letter l) { return (l & kFusedTag) != 0; }

std::pair<Letter, Letter> split_letter(Letter fused) {
  if (!is_fused(fused)) {
    throw InvalidArgument("letter " + std::to_string(fused) + " is not a track letter");
  }
  return {(fused & ~kFusedTag) >> 32, fused & 0xFFFFFFFFu};
}

Word fuse(const TrackedWord& t) {
  std::vector<Letter> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.push_back(fuse_letter(t.top()[i], t.bottom()[i]));
  }
  return Word(std::move(out));
}

TrackedWord unfuse(const Word& w) {
  std::vector<Letter> top, bottom;
  top.reserve(w.size());
  bottom.reserve(w.size());
  for (Letter l : w) {
    auto [t, b] = split_letter(l);
    top.push_back(t);
    bottom.push_back(b);
  }
  return TrackedWord(Word(std::move(top)), Word(std::move(bottom)));
}

SymbolTable::SymbolTable(std::map<std::string, Letter> names) {
  for (auto& [name, value] : names) {
    if (name.empty() || name.find_first_of(",/' \t") != std::string::npos ||
        std::all_of(name.begin(), name.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw InvalidArgument("bad symbol name '" + name + "'");
    }
    names_.emplace(name, value);
    reverse_.emplace(value, name);
  }
}

const SymbolTable& SymbolTable::standard() {
  static const SymbolTable table({{"a", 97}, {"b", 98}, {"c", 99}, {"#", 35}});
  return table;
}

SymbolTable SymbolTable::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("symbol table: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("symbol table must be a JSON object of name -> letter");
  }
  std::map<std::string, Letter> names;
  for (auto& [key, value] : doc.items()) {
    if (!value.is_number_unsigned()) {
      throw ParseError("symbol '" + key + "' must map to a natural number");
    }
    names.emplace(key, value.get<Letter>());
  }
  return SymbolTable(std::move(names));
}

std::optional<Letter> SymbolTable::lookup(std::string_view name) const {
  auto it = names_.find(name);
  if (it == names_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<std::string> SymbolTable::name_of(Letter l) const {
  auto it = reverse_.find(l);
  if (it == reverse_.end()) {
    return std::nullopt;
  }
  return it->second;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Letter parse_letter(std::string_view token, const SymbolTable& symbols) {
  token = trim(token);
  if (token.empty()) {
    throw ParseError("empty letter token");
  }
  if (auto slash = token.find('/'); slash != std::string_view::npos && token.size() > 1) {
    Letter top = parse_letter(token.substr(0, slash), symbols);
    Letter bottom = parse_letter(token.substr(slash + 1), symbols);
    return fuse_letter(top, bottom);
  }
  if (auto named = symbols.lookup(token)) {
    return *named;
  }
  Letter value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("unknown letter '" + std::string(token) + "'");
  }
  return value;
}

Word parse_word(std::string_view text, const SymbolTable& symbols) {
  text = trim(text);
  std::vector<Letter> out;
  if (text.empty()) {
    return Word{};
  }
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    out.push_back(parse_letter(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos),
                               symbols));
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return Word(std::move(out));
}

std::string letter_to_string(Letter l) {
  if (is_fused(l)) {
    auto [t, b] = split_letter(l);
    return std::to_string(t) + "/" + std::to_string(b);
  }
  return std::to_string(l);
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter_to_string(w[i]);
  }
  return out;
}

}  // namespace cflab

std::size_t std::hash<cflab::Word>::operator()(const cflab::Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ w.size();
  for (cflab::Letter l : w) {
    h ^= std::hash<cflab::Letter>{}(l) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}
