// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cflab/words.hpp"

namespace cflab {

struct Symbol {
  enum class Kind : std::uint8_t { Terminal, Nonterminal };

  Kind kind = Kind::Terminal;
  std::uint64_t id = 0;  // letter value or nonterminal index

  static Symbol terminal(Letter l) { return {Kind::Terminal, l}; }
  static Symbol nonterminal(std::size_t index) { return {Kind::Nonterminal, index}; }
  bool is_terminal() const { return kind == Kind::Terminal; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

struct Production {
  std::size_t head = 0;
  std::vector<Symbol> body;  // empty body is λ

  friend auto operator<=>(const Production&, const Production&) = default;
};

/// General context-free grammar. Nonterminals are indices into `names`;
/// terminals are letters, so the two namespaces cannot collide.
class Cfg {
 public:
  /// Validates that `start` and every body nonterminal index are in range.
  Cfg(std::vector<std::string> names, std::vector<Production> productions, std::size_t start);

  /// Grammar text, one rule per line: `Head -> B C | 'a' | ()`. Quoted
  /// tokens are terminals, `()` is λ, the first head is the start symbol and
  /// `#` outside quotes starts a comment.
  static Cfg parse(std::string_view text, const SymbolTable& symbols = SymbolTable::standard());

  std::string to_text(const SymbolTable& symbols = SymbolTable::standard()) const;

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Production>& productions() const { return productions_; }
  std::size_t start() const { return start_; }
  std::size_t nonterminal_count() const { return names_.size(); }

  /// Sorted, deduplicated.
  std::vector<Letter> terminals() const;

 private:
  std::vector<std::string> names_;
  std::vector<Production> productions_;
  std::size_t start_;
};

/// Chomsky normal form: A -> B C, A -> a, and optionally start -> λ, in
/// which case the start symbol occurs in no body.
class CnfGrammar {
 public:
  struct Binary {
    std::uint32_t head, left, right;
    friend auto operator<=>(const Binary&, const Binary&) = default;
  };
  struct Lexical {
    std::uint32_t head;
    Letter terminal;
    friend auto operator<=>(const Lexical&, const Lexical&) = default;
  };

  CnfGrammar() = default;
  CnfGrammar(std::vector<std::string> names, std::uint32_t start, bool accepts_empty,
             std::vector<Binary> binaries, std::vector<Lexical> lexicals);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t nonterminal_count() const { return names_.size(); }
  std::uint32_t start() const { return start_; }
  bool accepts_empty() const { return accepts_empty_; }
  const std::vector<Binary>& binaries() const { return binaries_; }
  const std::vector<Lexical>& lexicals() const { return lexicals_; }
  bool empty_language() const { return !accepts_empty_ && lexicals_.empty(); }

  /// Rules with the given head, in rule order.
  const std::vector<std::uint32_t>& binaries_of(std::uint32_t head) const { return by_head_[head]; }
  /// Heads A with A -> l, or nullptr if l is not a terminal.
  const std::vector<std::uint32_t>* heads_of(Letter l) const;

  /// p = 2^|V|. Throws CostGuardError when |V| >= 63.
  std::uint64_t pumping_constant() const;

  Cfg to_cfg() const;

 private:
  std::vector<std::string> names_;
  std::uint32_t start_ = 0;
  bool accepts_empty_ = false;
  std::vector<Binary> binaries_;
  std::vector<Lexical> lexicals_;
  std::vector<std::vector<std::uint32_t>> by_head_;
  std::unordered_map<Letter, std::vector<std::uint32_t>> by_terminal_;
};

/// λ-elimination, unit elimination, useless-symbol removal, binarisation of
/// long bodies, then terminal lifting inside binary bodies.
CnfGrammar to_cnf(const Cfg& g);

/// Recognition table: cell (start, len) holds the nonterminals deriving
/// w[start, start+len).
class CykTable {
 public:
  CykTable(const CnfGrammar& g, const Word& w);

  bool derives(std::size_t start, std::size_t len, std::uint32_t nt) const;
  bool accepted() const;
  std::size_t length() const { return n_; }

 private:
  std::uint64_t* cell(std::size_t start, std::size_t len) { return &bits_[(start * n_ + (len - 1)) * blocks_]; }
  const std::uint64_t* cell(std::size_t start, std::size_t len) const {
    return &bits_[(start * n_ + (len - 1)) * blocks_];
  }

  const CnfGrammar* g_;
  std::size_t n_;
  std::size_t blocks_;
  bool foreign_ = false;
  std::vector<std::uint64_t> bits_;
};

/// Letters outside the terminal set give false rather than an error.
bool cyk_member(const CnfGrammar& g, const Word& w);

struct EnumerateOptions {
  /// Upper bound on concatenations performed; exceeding it throws
  /// CostGuardError.
  std::uint64_t work_limit = 20'000'000;
};

/// Every word of L(g) with length <= max_len, shortlex ordered. Bottom-up per
/// length, so it terminates for cyclic grammars too.
std::vector<Word> enumerate_language(const CnfGrammar& g, std::size_t max_len, EnumerateOptions opts = {});
std::vector<Word> enumerate_language(const Cfg& g, std::size_t max_len, EnumerateOptions opts = {});

}  // namespace cflab
