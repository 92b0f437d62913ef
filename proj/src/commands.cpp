// Licensed under the Apache License 2.0 (see LICENSE file).

#include "commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "cflab/advice.hpp"
#include "cflab/corpus.hpp"
#include "cflab/dfa.hpp"
#include "cflab/error.hpp"
#include "cflab/refuter.hpp"
#include "cflab/swaplab.hpp"
#include "rng.hpp"

namespace cflab {

namespace {

using In = nlohmann::json;

struct Outcome {
  std::string verdict = "pass";
  Json payload = Json::object();
};

template <typename T>
T required(const In& args, const char* key) {
  if (!args.contains(key)) {
    throw InvalidArgument(std::string("missing argument --") + key);
  }
  try {
    return args.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(std::string("bad value for --") + key);
  }
}

template <typename T>
T optional_arg(const In& args, const char* key, T fallback) {
  if (!args.contains(key) || args.at(key).is_null()) return fallback;
  try {
    return args.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(std::string("bad value for --") + key);
  }
}

SymbolTable symbols_of(const In& args) {
  if (args.contains("symtab_text")) return SymbolTable::from_json(args.at("symtab_text").get<std::string>());
  return SymbolTable::standard();
}

/// Grammar from --grammar (builtin name), --grammar-text (file contents) or
/// the grammar attached to --lang.
std::optional<Cfg> grammar_of(const In& args, const SymbolTable& symbols) {
  if (args.contains("grammar_text")) return Cfg::parse(args.at("grammar_text").get<std::string>(), symbols);
  if (args.contains("grammar")) return named_grammar(args.at("grammar").get<std::string>());
  if (args.contains("lang")) {
    const auto& lang = corpus_language(args.at("lang").get<std::string>());
    if (!lang.grammar) throw InvalidArgument(lang.name + " has no grammar");
    return lang.grammar;
  }
  return std::nullopt;
}

Predicate predicate_named(const std::string& name) {
  if (name == "even_length") return [](const Word& w) { return w.size() % 2 == 0; };
  return corpus_language(name).contains;
}

AdviceFunction advice_of(const In& args, const SymbolTable& symbols) {
  if (args.contains("advice_table_text")) {
    return AdviceFunction::from_json(args.at("advice_table_text").get<std::string>(), symbols);
  }
  const auto name = required<std::string>(args, "advice");
  if (name == "leq-parallel") return leq_parallel_advice();
  throw InvalidArgument("unknown advice '" + name + "' (builtin: leq-parallel)");
}

std::vector<Word> all_words_upto(const std::vector<Letter>& alphabet, std::size_t min_len, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> level{Word{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len >= min_len) out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::vector<Word> next;
    for (const auto& w : level)
      for (Letter l : alphabet) next.push_back(w + Word{l});
    level = std::move(next);
  }
  return out;
}

Outcome cmd_enumerate(const In& args) {
  const auto symbols = symbols_of(args);
  const bool force = optional_arg(args, "force", false);
  Outcome o;
  std::vector<Word> words;
  if (args.contains("lang") && args.contains("length")) {
    words = generate_checked(corpus_language(required<std::string>(args, "lang")),
                             required<std::size_t>(args, "length"), force);
  } else {
    auto g = grammar_of(args, symbols);
    if (!g) throw InvalidArgument("enumerate needs --lang with --length, or a grammar with --max-len");
    EnumerateOptions opts;
    if (force) opts.work_limit = UINT64_MAX;
    words = enumerate_language(*g, required<std::size_t>(args, "max_len"), opts);
  }
  o.payload["count"] = words.size();
  o.payload["words"] = to_json(words);
  return o;
}

Outcome cmd_member(const In& args) {
  const auto symbols = symbols_of(args);
  const Word w = word_from_json(args.at("word"), symbols);
  bool member = false;
  if (args.contains("dfa_text")) {
    member = oracle_from(Dfa::from_json(args.at("dfa_text").get<std::string>(), symbols))(w);
  } else if (args.contains("grammar_text") || args.contains("grammar")) {
    member = cyk_member(to_cnf(*grammar_of(args, symbols)), w);
  } else {
    member = corpus_language(required<std::string>(args, "lang")).contains(w);
  }
  Outcome o;
  o.payload["word"] = to_json(w);
  o.payload["member"] = member;
  return o;
}

Outcome cmd_intersect(const In& args) {
  const auto report = intersection_check(required<std::size_t>(args, "max_len"));
  Outcome o;
  Json levels = Json::array();
  for (const auto& l : report.levels) {
    levels.push_back(
        Json{{"n", l.n}, {"intersection", l.intersection_count}, {"l2", l.expected_count}, {"equal", l.equal}});
  }
  o.payload["strategy"] = report.strategy;
  o.payload["levels"] = std::move(levels);
  if (!report.holds()) {
    o.verdict = "fail";
    o.payload["counterexample"] = to_json(*report.counterexample);
  }
  return o;
}

Slice slice_of(const In& args, const SymbolTable& symbols) {
  const auto& lang = corpus_language(required<std::string>(args, "lang"));
  const auto n = required<std::size_t>(args, "n");
  const bool force = optional_arg(args, "force", false);
  if (args.contains("advice") || args.contains("advice_table_text")) {
    const AdviceFunction h = advice_of(args, symbols);
    return build_slice(lang, n, &h, force);
  }
  return build_slice(lang, n, nullptr, force);
}

Outcome cmd_slice_stats(const In& args) {
  const auto symbols = symbols_of(args);
  const Slice s = slice_of(args, symbols);
  const SliceStats stats = slice_stats(s, required<std::size_t>(args, "j"));
  Outcome o;
  o.payload["n"] = stats.n;
  o.payload["j"] = stats.j;
  o.payload["slice_size"] = stats.slice_size;
  o.payload["max"] = to_json(stats.max());
  Json table = Json::array();
  std::ostringstream csv;
  csv << "i,u,count\n";
  bool partition = true;
  for (std::size_t i = 0; i < stats.counts.size(); ++i) {
    std::size_t sum = 0;
    for (const auto& [u, c] : stats.counts[i]) {
      table.push_back(Json{{"i", i}, {"u", to_json(u)}, {"count", c}});
      std::string us = to_string(u);
      csv << i << ",\"" << us << "\"," << c << '\n';
      sum += c;
    }
    if (sum != stats.slice_size && partition) {
      partition = false;
      o.verdict = "fail";
      o.payload["counterexample"] = Json{{"i", i}, {"sum", sum}, {"slice_size", stats.slice_size}};
    }
  }
  o.payload["table"] = std::move(table);
  if (optional_arg<std::string>(args, "format", "json") == "csv") o.payload["csv"] = csv.str();
  return o;
}

Outcome cmd_bound_check(const In& args) {
  const auto n = required<std::size_t>(args, "n");
  const bool force = optional_arg(args, "force", false);
  std::vector<std::size_t> js;
  if (args.contains("j")) {
    js.push_back(required<std::size_t>(args, "j"));
  } else {
    for (std::size_t j = 1; j <= n / 4; ++j) js.push_back(j);
  }
  Outcome o;
  Json checks = Json::array();
  for (std::size_t j : js) {
    const auto r = l2_bound_check(n, j, force);
    Json entry{{"j", j}, {"bound", r.bound}, {"max", to_json(r.max)}, {"holds", r.holds()}};
    if (r.violation) {
      entry["violation"] = to_json(*r.violation);
      if (o.verdict == "pass") {
        o.verdict = "fail";
        o.payload["counterexample"] = Json{{"j", j}, {"entry", to_json(*r.violation)}, {"bound", r.bound}};
      }
    }
    checks.push_back(std::move(entry));
  }
  o.payload["n"] = n;
  o.payload["checks"] = std::move(checks);
  return o;
}

Outcome cmd_swap_scan(const In& args) {
  const auto symbols = symbols_of(args);
  const Slice s = slice_of(args, symbols);
  const auto& lang = corpus_language(required<std::string>(args, "lang"));
  const Interval j{required<std::size_t>(args, "j_min"), required<std::size_t>(args, "j_max")};
  std::optional<Interval> i;
  if (args.contains("i_min") || args.contains("i_max")) {
    i = Interval{optional_arg<std::size_t>(args, "i_min", 0), optional_arg<std::size_t>(args, "i_max", s.n)};
  }
  const auto expect = optional_arg<std::string>(args, "expect", "any");
  if (expect != "any" && expect != "none") throw InvalidArgument("--expect must be any or none");
  const auto witnesses =
      swap_scan(slice_oracle(lang, s), s, j, i, {.force = optional_arg(args, "force", false)});
  Outcome o;
  std::size_t zero = 0;
  Json list = Json::array();
  for (const auto& w : witnesses) {
    zero += w.zero_offset();
    list.push_back(to_json(w));
  }
  o.payload["n"] = s.n;
  o.payload["origin"] = s.origin;
  o.payload["slice_size"] = s.members.size();
  o.payload["count"] = witnesses.size();
  o.payload["zero_offset_count"] = zero;
  o.payload["witnesses"] = std::move(list);
  if (expect == "none" && !witnesses.empty()) {
    o.verdict = "fail";
    o.payload["counterexample"] = to_json(witnesses.front());
  }
  return o;
}

Outcome cmd_params(const In& args) {
  const auto m = required<std::uint64_t>(args, "m");
  const SwapParams p = choose_params(m);
  const ParamChecks c = check_params(p);
  Outcome o;
  o.payload = to_json(p, c);
  o.payload["length_bound_at_previous_multiple"] = p.n > 16 ? length_bound_holds(m, p.n - 16) : false;
  if (!c.all()) o.verdict = "fail";
  return o;
}

Outcome cmd_advice_check(const In& args) {
  const auto symbols = symbols_of(args);
  const auto mode_name = optional_arg<std::string>(args, "mode", "parallel");
  if (mode_name != "parallel" && mode_name != "serial") throw InvalidArgument("mode must be parallel or serial");
  const AdviceMode mode = mode_name == "parallel" ? AdviceMode::Parallel : AdviceMode::Serial;
  const AdviceFunction advice = advice_of(args, symbols);

  std::optional<Dfa> dfa;
  MembershipOracle inner;
  if (args.contains("inner_dfa_text")) {
    dfa = Dfa::from_json(args.at("inner_dfa_text").get<std::string>(), symbols);
    inner = oracle_from(*dfa);
  } else if (args.contains("inner_grammar_text")) {
    inner = oracle_from(to_cnf(Cfg::parse(args.at("inner_grammar_text").get<std::string>(), symbols)));
  } else if (advice.name() == "leq-parallel" && mode == AdviceMode::Parallel) {
    inner = oracle_from(leq_parallel_inner());
  } else {
    throw InvalidArgument("advice-check needs --inner FILE");
  }
  const AdvisedLanguage lang{mode, inner, advice};

  std::vector<Word> words;
  if (args.contains("words")) {
    for (const auto& w : args.at("words")) words.push_back(word_from_json(w, symbols));
  }
  if (args.contains("exhaustive_max_len")) {
    std::vector<Letter> alphabet;
    for (const auto& l : required<In>(args, "exhaustive_alphabet")) alphabet.push_back(l.get<Letter>());
    auto all = all_words_upto(alphabet, 0, required<std::size_t>(args, "exhaustive_max_len"));
    words.insert(words.end(), all.begin(), all.end());
  }
  std::optional<Predicate> expected;
  if (args.contains("expect_lang")) expected = predicate_named(args.at("expect_lang").get<std::string>());

  Outcome o;
  Json verdicts = Json::array();
  std::size_t mismatches = 0;
  for (const auto& w : words) {
    const bool member = advised_member(lang, w);
    Json v{{"word", to_json(w)}, {"member", member}};
    if (expected) {
      const bool want = (*expected)(w);
      v["expected"] = want;
      if (want != member && mismatches++ == 0) {
        o.verdict = "fail";
        o.payload["counterexample"] = Json{{"word", to_json(w)}, {"member", member}, {"expected", want}};
      }
    }
    verdicts.push_back(std::move(v));
  }
  o.payload["mode"] = mode_name;
  o.payload["advice"] = advice.name();
  o.payload["verdicts"] = std::move(verdicts);
  o.payload["mismatches"] = mismatches;

  if (args.contains("conversion_max_len")) {
    if (mode != AdviceMode::Serial || !dfa) {
      throw InvalidArgument("--check-conversion needs --serial with a DFA inner language");
    }
    const auto conv = serial_to_parallel_reg(*dfa, advice);
    const AdvisedLanguage parallel{AdviceMode::Parallel, oracle_from(conv.automaton), conv.advice};
    std::size_t checked = 0, diffs = 0;
    for (const auto& w : all_words_upto(dfa->alphabet(), 0, required<std::size_t>(args, "conversion_max_len"))) {
      ++checked;
      const bool a = serial_member(lang, w), b = parallel_member(parallel, w);
      if (a != b && diffs++ == 0 && o.verdict == "pass") {
        o.verdict = "fail";
        o.payload["counterexample"] = Json{{"word", to_json(w)}, {"serial", a}, {"parallel", b}};
      }
    }
    o.payload["conversion"] = Json{{"checked", checked},
                                   {"mismatches", diffs},
                                   {"state_code_offset", conv.state_code_offset},
                                   {"states", conv.automaton.state_count()}};
  }
  return o;
}

Outcome cmd_pump_refute(const In& args) {
  const auto symbols = symbols_of(args);
  auto g = grammar_of(args, symbols);
  if (!g) throw InvalidArgument("pump-refute needs --grammar");
  const auto predicate_name = required<std::string>(args, "predicate");
  RefuteOptions opts;
  if (optional_arg(args, "force", false)) opts.work_limit = UINT64_MAX;
  const auto r = refute_subset(*g, predicate_named(predicate_name), required<std::size_t>(args, "max_len"), opts);
  Outcome o;
  o.payload["pumping_constant"] = r.pumping_constant;
  o.payload["examined"] = r.examined;
  if (r.witness) {
    o.payload["witness"] = to_json(*r.witness);
  } else {
    o.verdict = "inconclusive";
  }
  return o;
}

Outcome cmd_grammar(const In& args) {
  const auto symbols = symbols_of(args);
  auto g = grammar_of(args, symbols);
  if (!g) throw InvalidArgument("grammar needs --lang, --grammar or a grammar file");
  Outcome o;
  if (optional_arg(args, "cnf", false)) {
    const CnfGrammar cnf = to_cnf(*g);
    o.payload["text"] = cnf.to_cfg().to_text(symbols);
    o.payload["nonterminals"] = cnf.nonterminal_count();
    o.payload["pumping_constant"] = cnf.pumping_constant();
  } else {
    o.payload["text"] = g->to_text(symbols);
  }
  return o;
}

Outcome cmd_suite(const In& args) {
  Outcome o;
  o.payload = run_suite(optional_arg<std::uint64_t>(args, "seed", kDefaultSeed));
  if (!o.payload["pass"].get<bool>()) {
    o.verdict = "fail";
    for (const auto& c : o.payload["criteria"]) {
      if (!c["pass"].get<bool>()) {
        o.payload["counterexample"] = c;
        break;
      }
    }
  }
  return o;
}

}  // namespace

Json run_command(std::string_view command, const nlohmann::json& args) {
  static const std::map<std::string, std::function<Outcome(const In&)>, std::less<>> table{
      {"enumerate", cmd_enumerate},         {"member", cmd_member},
      {"intersect-check", cmd_intersect},   {"slice-stats", cmd_slice_stats},
      {"bound-check", cmd_bound_check},     {"swap-scan", cmd_swap_scan},
      {"params", cmd_params},               {"advice-check", cmd_advice_check},
      {"pump-refute", cmd_pump_refute},     {"grammar", cmd_grammar},
      {"suite", cmd_suite},
  };
  auto it = table.find(command);
  if (it == table.end()) {
    throw InvalidArgument("unknown command '" + std::string(command) + "'");
  }
  if (!args.is_object()) {
    throw InvalidArgument("command arguments must be a JSON object");
  }
  const auto begin = std::chrono::steady_clock::now();
  Outcome o = it->second(args);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - begin).count();

  // Bulky file contents are echoed by size only.
  Json inputs = Json::object();
  for (auto& [key, value] : args.items()) {
    if (key.size() > 5 && key.ends_with("_text")) {
      inputs[key] = Json{{"bytes", value.get<std::string>().size()}};
    } else {
      inputs[key] = value;
    }
  }
  return Json{{"command", std::string(command)},
              {"inputs", std::move(inputs)},
              {"verdict", o.verdict},
              {"payload", std::move(o.payload)},
              {"elapsed_ms", elapsed}};
}

}  // namespace cflab
