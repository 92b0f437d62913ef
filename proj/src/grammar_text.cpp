// Licensed under the Apache License 2.0 (see LICENSE file).

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "cflab/error.hpp"
#include "cflab/grammar.hpp"

namespace cflab {

namespace {

struct Token {
  enum class Kind { Name, Terminal, Lambda, Bar, Arrow } kind;
  std::string text;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '<' || c == '>';
}

std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  };
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '\'') {
      auto close = line.find('\'', i + 1);
      if (close == std::string_view::npos) fail("unterminated terminal");
      if (close == i + 1) fail("empty terminal ''");
      out.push_back({Token::Kind::Terminal, std::string(line.substr(i + 1, close - i - 1))});
      i = close + 1;
    } else if (c == '(') {
      if (i + 1 >= line.size() || line[i + 1] != ')') fail("expected ()");
      out.push_back({Token::Kind::Lambda, "()"});
      i += 2;
    } else if (c == '|') {
      out.push_back({Token::Kind::Bar, "|"});
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Kind::Arrow, "->"});
      i += 2;
    } else if (name_char(c) && c != '\'') {
      std::size_t j = i;
      while (j < line.size() && name_char(line[j]) && !(j == i && line[j] == '\'')) ++j;
      out.push_back({Token::Kind::Name, std::string(line.substr(i, j - i))});
      i = j;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

}  // namespace

Cfg Cfg::parse(std::string_view text, const SymbolTable& symbols) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::set<std::string> defined;
  std::map<std::string, std::size_t> first_use;  // for error reporting
  auto intern = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, names.size());
    if (fresh) names.push_back(name);
    return it->second;
  };

  std::vector<Production> productions;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line, lineno);
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens[0].kind != Token::Kind::Name || tokens[1].kind != Token::Kind::Arrow) {
      throw ParseError("line " + std::to_string(lineno) + ": expected `Head -> ...`");
    }
    std::size_t head = intern(tokens[0].text);
    defined.insert(tokens[0].text);

    std::vector<Symbol> body;
    bool lambda = false;
    bool any = false;
    auto flush = [&] {
      if (lambda && !body.empty()) {
        throw ParseError("line " + std::to_string(lineno) + ": () must stand alone in an alternative");
      }
      if (!lambda && body.empty()) {
        throw ParseError("line " + std::to_string(lineno) + ": empty alternative (write () for λ)");
      }
      productions.push_back({head, body});
      body.clear();
      lambda = false;
    };
    for (std::size_t t = 2; t < tokens.size(); ++t) {
      const auto& tok = tokens[t];
      switch (tok.kind) {
        case Token::Kind::Name:
          body.push_back(Symbol::nonterminal(intern(tok.text)));
          first_use.emplace(tok.text, lineno);
          any = true;
          break;
        case Token::Kind::Terminal:
          body.push_back(Symbol::terminal(parse_letter(tok.text, symbols)));
          any = true;
          break;
        case Token::Kind::Lambda:
          lambda = true;
          any = true;
          break;
        case Token::Kind::Bar:
          flush();
          any = false;
          break;
        case Token::Kind::Arrow:
          throw ParseError("line " + std::to_string(lineno) + ": unexpected ->");
      }
    }
    if (!any && body.empty() && !lambda) {
      throw ParseError("line " + std::to_string(lineno) + ": empty alternative (write () for λ)");
    }
    flush();
  }
  if (names.empty()) {
    throw ParseError("grammar has no rules");
  }
  for (const auto& [name, line_used] : first_use) {
    if (!defined.count(name)) {
      throw ParseError("line " + std::to_string(line_used) + ": nonterminal '" + name + "' has no rule");
    }
  }
  return Cfg(std::move(names), std::move(productions), 0);
}

std::string Cfg::to_text(const SymbolTable& symbols) const {
  auto letter = [&](Letter l) {
    if (auto name = symbols.name_of(l)) return *name;
    return letter_to_string(l);
  };
  // Start symbol first, then the others in declaration order.
  std::vector<std::size_t> order{start_};
  for (std::size_t a = 0; a < names_.size(); ++a) {
    if (a != start_) order.push_back(a);
  }
  std::vector<bool> referenced(names_.size(), false);
  for (const auto& p : productions_) {
    for (const auto& s : p.body) {
      if (!s.is_terminal()) referenced[s.id] = true;
    }
  }
  std::ostringstream out;
  for (std::size_t head : order) {
    std::vector<std::string> alts;
    for (const auto& p : productions_) {
      if (p.head != head) continue;
      if (p.body.empty()) {
        alts.emplace_back("()");
        continue;
      }
      std::string alt;
      for (const auto& s : p.body) {
        if (!alt.empty()) alt += ' ';
        alt += s.is_terminal() ? "'" + letter(s.id) + "'" : names_[s.id];
      }
      alts.push_back(std::move(alt));
    }
    if (alts.empty()) {
      // A nonterminal without rules derives nothing; a self-loop keeps the
      // text reparseable.
      if (head == start_ || referenced[head]) out << names_[head] << " -> " << names_[head] << '\n';
      continue;
    }
    out << names_[head] << " ->";
    for (std::size_t i = 0; i < alts.size(); ++i) {
      out << (i ? " | " : " ") << alts[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cflab
