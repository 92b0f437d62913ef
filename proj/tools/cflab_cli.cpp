// Licensed under the Apache License 2.0 (see LICENSE file).

// Command-line front end. Talks to the library only through cflab.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cflab/cflab.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool is_json_file(const std::string& path) { return path.size() >= 5 && path.ends_with(".json"); }

void print_error(const std::string& command, const std::string& kind, const std::string& message) {
  ordered_json doc{{"command", command}, {"error", kind}, {"message", message}};
  std::cout << doc.dump(2) << '\n';
}

const char* status_name(cflab_status s) {
  switch (s) {
    case CFLAB_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case CFLAB_ERR_PARSE: return "parse_error";
    case CFLAB_ERR_PRECONDITION: return "precondition";
    case CFLAB_ERR_COST_GUARD: return "cost_guard";
    default: return "internal";
  }
}

// Options shared by every subcommand; unset ones are left out of the args.
struct Common {
  std::optional<std::string> symtab;
  bool force = false;
};

struct Invocation {
  std::string command;
  ordered_json args = ordered_json::object();
  std::string format = "json";
};

template <typename T>
void put(ordered_json& args, const char* key, const std::optional<T>& value) {
  if (value) args[key] = *value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Experiments on context-free languages, advice and the swapping lemma"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cflab_version()));

  Common common;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  app.add_option("--symtab", common.symtab, "JSON file mapping symbol names to letters");
  app.add_flag("--force", common.force, "Override desk-scale cost guards");
  app.add_option("--format", format, "Output format (csv applies to slice-stats)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "Seed for randomised runs");

  // enumerate
  std::optional<std::string> en_lang, en_grammar, en_grammar_file;
  std::optional<std::size_t> en_length, en_max_len;
  auto* enumerate = app.add_subcommand("enumerate", "List words of a language or grammar");
  enumerate->add_option("--lang", en_lang, "Corpus language");
  enumerate->add_option("--length", en_length, "Exact length (corpus generator)");
  enumerate->add_option("--grammar", en_grammar_file, "Grammar file");
  enumerate->add_option("--builtin", en_grammar, "Builtin grammar name");
  enumerate->add_option("--max-len", en_max_len, "Maximum length (grammar enumeration)");

  // member
  std::optional<std::string> mb_lang, mb_grammar_file, mb_dfa_file, mb_builtin;
  std::string mb_word;
  auto* member = app.add_subcommand("member", "Decide membership of one word");
  member->add_option("--word", mb_word, "Comma-separated letters")->required();
  member->add_option("--lang", mb_lang, "Corpus language");
  member->add_option("--grammar", mb_grammar_file, "Grammar file");
  member->add_option("--builtin", mb_builtin, "Builtin grammar name");
  member->add_option("--dfa", mb_dfa_file, "DFA JSON file");

  // intersect-check
  std::size_t ic_max_len = 8;
  auto* intersect = app.add_subcommand("intersect-check", "Compare L(G2,1) and L(G2,2) with L2 by length");
  intersect->add_option("--max-len", ic_max_len, "Maximum length")->capture_default_str();

  // slice-stats
  std::string ss_lang;
  std::size_t ss_n = 0, ss_j = 0;
  std::optional<std::string> ss_advice, ss_advice_table;
  auto* slice_stats = app.add_subcommand("slice-stats", "Tabulate |S_{i,u}| for a slice");
  slice_stats->add_option("--lang", ss_lang, "Corpus language")->required();
  slice_stats->add_option("--n", ss_n, "Slice length")->required();
  slice_stats->add_option("--j", ss_j, "Window length")->required();
  slice_stats->add_option("--advice", ss_advice, "Builtin advice name");
  slice_stats->add_option("--advice-table", ss_advice_table, "Advice table JSON file");

  // bound-check
  std::size_t bc_n = 0;
  std::optional<std::size_t> bc_j;
  auto* bound_check = app.add_subcommand("bound-check", "Check max_u |S_{i,u}| <= 2^{n/4 - ceil(j/2)} on L2");
  bound_check->add_option("--n", bc_n, "Slice length (multiple of 4)")->required();
  bound_check->add_option("--j", bc_j, "Window length (default: all j <= n/4)");

  // swap-scan
  std::string sw_lang, sw_expect = "any";
  std::size_t sw_n = 0, sw_j_min = 1, sw_j_max = 1;
  std::optional<std::size_t> sw_i_min, sw_i_max;
  std::optional<std::string> sw_advice, sw_advice_table;
  auto* swap_scan = app.add_subcommand("swap-scan", "Search a slice for swaps that stay in the language");
  swap_scan->add_option("--lang", sw_lang, "Corpus language")->required();
  swap_scan->add_option("--n", sw_n, "Slice length")->required();
  swap_scan->add_option("--j-min", sw_j_min, "Smallest window length")->capture_default_str();
  swap_scan->add_option("--j-max", sw_j_max, "Largest window length")->capture_default_str();
  swap_scan->add_option("--i-min", sw_i_min, "Smallest window offset");
  swap_scan->add_option("--i-max", sw_i_max, "Largest window offset");
  swap_scan->add_option("--expect", sw_expect, "any, or none to fail on the first witness")
      ->check(CLI::IsMember({"any", "none"}))
      ->capture_default_str();
  swap_scan->add_option("--advice", sw_advice, "Builtin advice name");
  swap_scan->add_option("--advice-table", sw_advice_table, "Advice table JSON file");

  // params
  std::uint64_t pm_m = 1;
  auto* params = app.add_subcommand("params", "Choose (n, k, j0) for a given m and verify the chain");
  params->add_option("--m", pm_m, "Number of advice bits per length")->capture_default_str();

  // advice-check
  bool ac_parallel = false, ac_serial = false;
  std::optional<std::string> ac_inner, ac_advice, ac_advice_table, ac_expect, ac_words_file;
  std::vector<std::string> ac_words;
  std::optional<std::size_t> ac_exhaustive, ac_conversion;
  std::vector<std::uint64_t> ac_alphabet{0, 1};
  auto* advice_check = app.add_subcommand("advice-check", "Decide words of an advised language");
  auto* mode_parallel = advice_check->add_flag("--parallel", ac_parallel, "Advice on a second track");
  auto* mode_serial = advice_check->add_flag("--serial", ac_serial, "Advice as a prefix");
  mode_parallel->excludes(mode_serial);
  advice_check->add_option("--inner", ac_inner, "Inner language: grammar file, or DFA if it ends in .json");
  advice_check->add_option("--advice", ac_advice, "Builtin advice name (leq-parallel)");
  advice_check->add_option("--advice-table", ac_advice_table, "Advice table JSON file");
  advice_check->add_option("--word", ac_words, "Word to decide (repeatable)");
  advice_check->add_option("--words", ac_words_file, "File with one comma-separated word per line");
  advice_check->add_option("--exhaustive", ac_exhaustive, "Also decide every word up to this length");
  advice_check->add_option("--alphabet", ac_alphabet, "Alphabet for --exhaustive")->delimiter(',');
  advice_check->add_option("--expect", ac_expect, "Corpus language the verdicts must match");
  advice_check->add_option("--check-conversion", ac_conversion,
                           "Compare against the parallel conversion up to this length");

  // pump-refute
  std::optional<std::string> pr_grammar_file, pr_builtin;
  std::string pr_predicate;
  std::size_t pr_max_len = 0;
  auto* pump_refute = app.add_subcommand("pump-refute", "Find a pumped word of a grammar outside a predicate");
  pump_refute->add_option("--grammar", pr_grammar_file, "Grammar file");
  pump_refute->add_option("--builtin", pr_builtin, "Builtin grammar name");
  pump_refute->add_option("--predicate", pr_predicate, "Corpus language name or even_length")->required();
  pump_refute->add_option("--max-len", pr_max_len, "Length of the word to pump (>= pumping constant)")
      ->required();

  // grammar
  std::optional<std::string> gr_file, gr_builtin, gr_lang;
  bool gr_cnf = false;
  auto* grammar = app.add_subcommand("grammar", "Print a grammar, optionally in Chomsky normal form");
  grammar->add_option("--grammar", gr_file, "Grammar file");
  grammar->add_option("--builtin", gr_builtin, "Builtin grammar name");
  grammar->add_option("--lang", gr_lang, "Corpus language with a grammar");
  grammar->add_flag("--cnf", gr_cnf, "Convert first");

  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::string command_name = "cflab";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error(command_name, "usage", e.what());
    return kExitUsage;
  }

  Invocation inv;
  try {
    auto* sub = app.get_subcommands().front();
    inv.command = sub->get_name();
    command_name = inv.command;
    auto& a = inv.args;
    if (common.symtab) a["symtab_text"] = read_file(*common.symtab);
    if (common.force) a["force"] = true;

    if (sub == enumerate) {
      put(a, "lang", en_lang);
      put(a, "length", en_length);
      put(a, "grammar", en_grammar);
      if (en_grammar_file) a["grammar_text"] = read_file(*en_grammar_file);
      put(a, "max_len", en_max_len);
    } else if (sub == member) {
      a["word"] = mb_word;
      put(a, "lang", mb_lang);
      put(a, "grammar", mb_builtin);
      if (mb_grammar_file) a["grammar_text"] = read_file(*mb_grammar_file);
      if (mb_dfa_file) a["dfa_text"] = read_file(*mb_dfa_file);
    } else if (sub == intersect) {
      a["max_len"] = ic_max_len;
    } else if (sub == slice_stats) {
      a["lang"] = ss_lang;
      a["n"] = ss_n;
      a["j"] = ss_j;
      put(a, "advice", ss_advice);
      if (ss_advice_table) a["advice_table_text"] = read_file(*ss_advice_table);
      a["format"] = format;
    } else if (sub == bound_check) {
      a["n"] = bc_n;
      put(a, "j", bc_j);
    } else if (sub == swap_scan) {
      a["lang"] = sw_lang;
      a["n"] = sw_n;
      a["j_min"] = sw_j_min;
      a["j_max"] = sw_j_max;
      put(a, "i_min", sw_i_min);
      put(a, "i_max", sw_i_max);
      a["expect"] = sw_expect;
      put(a, "advice", sw_advice);
      if (sw_advice_table) a["advice_table_text"] = read_file(*sw_advice_table);
    } else if (sub == params) {
      a["m"] = pm_m;
    } else if (sub == advice_check) {
      a["mode"] = ac_serial ? "serial" : "parallel";
      put(a, "advice", ac_advice);
      if (ac_advice_table) a["advice_table_text"] = read_file(*ac_advice_table);
      if (ac_inner) a[is_json_file(*ac_inner) ? "inner_dfa_text" : "inner_grammar_text"] = read_file(*ac_inner);
      std::vector<std::string> words = ac_words;
      if (ac_words_file) {
        std::istringstream lines(read_file(*ac_words_file));
        for (std::string line; std::getline(lines, line);) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (!line.empty() && line.front() != '#') words.push_back(line);
        }
      }
      if (!words.empty()) a["words"] = words;
      if (ac_exhaustive) {
        a["exhaustive_alphabet"] = ac_alphabet;
        a["exhaustive_max_len"] = *ac_exhaustive;
      }
      put(a, "expect_lang", ac_expect);
      put(a, "conversion_max_len", ac_conversion);
    } else if (sub == pump_refute) {
      if (pr_grammar_file) a["grammar_text"] = read_file(*pr_grammar_file);
      put(a, "grammar", pr_builtin);
      a["predicate"] = pr_predicate;
      a["max_len"] = pr_max_len;
    } else if (sub == grammar) {
      if (gr_file) a["grammar_text"] = read_file(*gr_file);
      put(a, "grammar", gr_builtin);
      put(a, "lang", gr_lang);
      if (gr_cnf) a["cnf"] = true;
    } else if (sub == suite) {
      put(a, "seed", seed);
    }
    inv.format = format;
  } catch (const UsageError& e) {
    print_error(command_name, "usage", e.what());
    return kExitUsage;
  }

  char* report = nullptr;
  cflab_verdict verdict = CFLAB_PASS;
  const cflab_status status = cflab_run(inv.command.c_str(), inv.args.dump().c_str(), &report, &verdict);
  if (status != CFLAB_OK) {
    print_error(inv.command, status_name(status), cflab_last_error());
    return kExitUsage;
  }
  std::string text(report);
  cflab_string_free(report);

  if (inv.format == "csv" && inv.command == "slice-stats") {
    std::cout << ordered_json::parse(text)["payload"]["csv"].get<std::string>();
  } else {
    std::cout << text << '\n';
  }
  return verdict == CFLAB_FAIL ? kExitFail : kExitPass;
}
