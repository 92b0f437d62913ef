// Licensed under the Apache License 2.0 (see LICENSE file).

#include "cflab/advice.hpp"

#include <algorithm>
#include <charconv>

#include "cflab/error.hpp"
#include "json.hpp"

namespace cflab {

MembershipOracle oracle_from(const CnfGrammar& g) {
  auto shared = std::make_shared<const CnfGrammar>(g);
  return [shared](const Word& w) { return cyk_member(*shared, w); };
}

MembershipOracle oracle_from(const Dfa& m) {
  auto shared = std::make_shared<const Dfa>(m);
  return [shared](const Word& w) {
    for (Letter l : w) {
      if (!shared->has_letter(l)) return false;
    }
    return shared->accepts(w);
  };
}

AdviceFunction::AdviceFunction(std::string name, Generator generate)
    : name_(std::move(name)), generate_(std::make_shared<const Generator>(std::move(generate))) {}

Word AdviceFunction::operator()(std::size_t n) const {
  Word w = (*generate_)(n);
  if (w.size() != n) {
    throw std::logic_error("advice '" + name_ + "' returned length " + std::to_string(w.size()) +
                           " at n = " + std::to_string(n));
  }
  return w;
}

AdviceFunction AdviceFunction::from_table(std::string name, std::map<std::size_t, Word> table) {
  for (const auto& [n, w] : table) {
    if (w.size() != n) {
      throw InvalidArgument("advice table entry for n = " + std::to_string(n) + " has length " +
                            std::to_string(w.size()));
    }
  }
  auto shared = std::make_shared<const std::map<std::size_t, Word>>(std::move(table));
  std::string label = name;
  return AdviceFunction(std::move(name), [shared, label](std::size_t n) {
    auto it = shared->find(n);
    if (it == shared->end()) {
      throw InvalidArgument("advice table '" + label + "' has no entry for n = " + std::to_string(n));
    }
    return it->second;
  });
}

AdviceFunction AdviceFunction::from_json(std::string_view text, const SymbolTable& symbols) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("advice table: ") + e.what());
  }
  auto word = [&](const json& j) {
    if (j.is_string()) return parse_word(j.get<std::string>(), symbols);
    if (!j.is_array()) throw ParseError("advice entry must be an array of letters or a comma-separated string");
    std::vector<Letter> letters;
    for (const auto& l : j) {
      if (l.is_number_unsigned()) {
        letters.push_back(l.get<Letter>());
      } else if (l.is_string()) {
        letters.push_back(parse_letter(l.get<std::string>(), symbols));
      } else {
        throw ParseError("advice letter must be a natural number or a string");
      }
    }
    return Word(std::move(letters));
  };
  std::map<std::size_t, Word> table;
  if (doc.is_array()) {
    for (std::size_t n = 0; n < doc.size(); ++n) table.emplace(n, word(doc[n]));
  } else if (doc.is_object()) {
    for (auto& [key, value] : doc.items()) {
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), n);
      if (ec != std::errc{} || ptr != key.data() + key.size()) {
        throw ParseError("advice table key '" + key + "' is not a length");
      }
      table.emplace(n, word(value));
    }
  } else {
    throw ParseError("advice table must be a JSON object or array");
  }
  try {
    return from_table("table", std::move(table));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

bool parallel_member(const AdvisedLanguage& lang, const Word& x) {
  return lang.inner(fuse(zip_tracks(x, lang.advice(x.size()))));
}

bool serial_member(const AdvisedLanguage& lang, const Word& x) { return lang.inner(lang.advice(x.size()) + x); }

bool advised_member(const AdvisedLanguage& lang, const Word& x) {
  return lang.mode == AdviceMode::Parallel ? parallel_member(lang, x) : serial_member(lang, x);
}

AdviceFunction leq_parallel_advice() {
  return AdviceFunction("leq-parallel", [](std::size_t n) {
    if (n % 2 == 0) return repeat(0, n / 2) + repeat(1, n / 2);
    return repeat(2, n);
  });
}

Dfa leq_parallel_inner() {
  std::vector<Letter> alphabet;
  for (Letter x : {0, 1}) {
    for (Letter a : {0, 1, 2}) alphabet.push_back(fuse_letter(x, a));
  }
  enum : std::size_t { kStart, kZeros, kOnes, kDead };
  std::vector<Dfa::Transition> t;
  for (Letter l : alphabet) {
    const bool zero = l == fuse_letter(0, 0);
    const bool one = l == fuse_letter(1, 1);
    t.push_back({kStart, l, zero ? kZeros : kDead});
    t.push_back({kZeros, l, zero ? kZeros : one ? kOnes : kDead});
    t.push_back({kOnes, l, one ? kOnes : kDead});
    t.push_back({kDead, l, kDead});
  }
  return Dfa({"start", "zeros", "ones", "dead"}, alphabet, kStart, {kOnes}, t);
}

ParallelConversion serial_to_parallel_reg(const Dfa& m, const AdviceFunction& g) {
  const Letter offset = m.alphabet().empty() ? 0 : m.alphabet().back();
  const std::size_t q = m.state_count();
  auto code = [offset](std::size_t state) { return offset + state + 1; };

  auto shared_m = std::make_shared<const Dfa>(m);
  AdviceFunction h("parallel(" + g.name() + ")", [shared_m, g, code](std::size_t n) {
    if (n == 0) return Word{};
    const std::size_t reached = shared_m->run(shared_m->start(), g(n));
    return Word{code(reached)} + repeat(0, n - 1);
  });

  // States: 0 = init, 1..q = simulated copies of M's states, q+1 = dead.
  const std::size_t init = 0, dead = q + 1;
  std::vector<std::string> names{"init"};
  for (const auto& s : m.state_names()) names.push_back("sim:" + s);
  names.push_back("dead");

  std::vector<Letter> bottoms{0};
  for (std::size_t s = 0; s < q; ++s) bottoms.push_back(code(s));

  std::vector<Letter> alphabet;
  std::vector<Dfa::Transition> t;
  for (Letter x : m.alphabet()) {
    for (Letter b : bottoms) {
      const Letter l = fuse_letter(x, b);
      alphabet.push_back(l);
      // The first letter carries the state M reached on g(n).
      t.push_back({init, l, b == 0 ? dead : 1 + m.step(b - offset - 1, x)});
      for (std::size_t s = 0; s < q; ++s) {
        t.push_back({1 + s, l, b == 0 ? 1 + m.step(s, x) : dead});
      }
      t.push_back({dead, l, dead});
    }
  }
  std::vector<std::size_t> accepting;
  if (m.is_accepting(m.start())) accepting.push_back(init);
  for (std::size_t s = 0; s < q; ++s) {
    if (m.is_accepting(s)) accepting.push_back(1 + s);
  }
  return {std::move(h), Dfa(std::move(names), std::move(alphabet), init, std::move(accepting), t), offset};
}

Word prefix_pair_encode(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(2 * (u.size() + v.size()) + 4);
  for (const Word* part : {&u, &v}) {
    for (Letter b : *part) {
      if (b > 1) throw InvalidArgument("prefix pair coding needs binary words");
      out.push_back(b);
      out.push_back(b);
    }
    out.push_back(0);
    out.push_back(1);
  }
  return Word(std::move(out));
}

std::pair<Word, Word> prefix_pair_decode(const Word& code) {
  std::vector<Letter> parts[2];
  std::size_t part = 0;
  std::size_t i = 0;
  for (; part < 2; i += 2) {
    if (i + 1 >= code.size()) {
      throw ParseError(i < code.size() ? "truncated pair code" : "pair code lacks its terminator");
    }
    const Letter a = code[i], b = code[i + 1];
    if (a > 1 || b > 1) throw ParseError("pair code must be binary");
    if (a == b) {
      parts[part].push_back(a);
    } else if (a == 0) {
      ++part;
    } else {
      throw ParseError("pair code contains the pair 1 0");
    }
  }
  if (i != code.size()) {
    throw ParseError("trailing letters after pair code");
  }
  return {Word(std::move(parts[0])), Word(std::move(parts[1]))};
}

}  // namespace cflab
