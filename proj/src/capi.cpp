// Licensed under the Apache License 2.0 (see LICENSE file).

#include "cflab/cflab.h"

#include <cstring>
#include <string>

#include "cflab/corpus.hpp"
#include "cflab/dfa.hpp"
#include "cflab/error.hpp"
#include "cflab/grammar.hpp"
#include "commands.hpp"

struct cflab_grammar {
  cflab::Cfg cfg;
  cflab::CnfGrammar cnf;
};

struct cflab_dfa {
  cflab::Dfa dfa;
};

namespace {

thread_local std::string last_error;

template <typename F>
cflab_status guarded(F&& body) {
  try {
    body();
    return CFLAB_OK;
  } catch (const cflab::ParseError& e) {
    last_error = e.what();
    return CFLAB_ERR_PARSE;
  } catch (const cflab::PreconditionError& e) {
    last_error = e.what();
    return CFLAB_ERR_PRECONDITION;
  } catch (const cflab::CostGuardError& e) {
    last_error = e.what();
    return CFLAB_ERR_COST_GUARD;
  } catch (const cflab::InvalidArgument& e) {
    last_error = e.what();
    return CFLAB_ERR_INVALID_ARGUMENT;
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("JSON: ") + e.what();
    return CFLAB_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CFLAB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CFLAB_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw cflab::InvalidArgument(std::string(what) + " is null");
}

cflab::Word word_of(const cflab_letter* letters, std::size_t len) {
  if (len > 0) require(letters, "word");
  return cflab::Word(std::vector<cflab::Letter>(letters, letters + len));
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* cflab_version(void) { return "0.1.0"; }

const char* cflab_last_error(void) { return last_error.c_str(); }

void cflab_string_free(char* s) { std::free(s); }

cflab_status cflab_grammar_parse(const char* text, cflab_grammar** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto cfg = cflab::Cfg::parse(text);
    auto cnf = cflab::to_cnf(cfg);
    *out = new cflab_grammar{std::move(cfg), std::move(cnf)};
  });
}

cflab_status cflab_grammar_builtin(const char* name, cflab_grammar** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto& cfg = cflab::named_grammar(name);
    *out = new cflab_grammar{cfg, cflab::to_cnf(cfg)};
  });
}

void cflab_grammar_free(cflab_grammar* g) { delete g; }

cflab_status cflab_grammar_member(const cflab_grammar* g, const cflab_letter* word, size_t len, int* out) {
  return guarded([&] {
    require(g, "grammar");
    require(out, "out");
    *out = cflab::cyk_member(g->cnf, word_of(word, len)) ? 1 : 0;
  });
}

cflab_status cflab_grammar_pumping_constant(const cflab_grammar* g, uint64_t* out) {
  return guarded([&] {
    require(g, "grammar");
    require(out, "out");
    *out = g->cnf.pumping_constant();
  });
}

cflab_status cflab_grammar_enumerate(const cflab_grammar* g, size_t max_len, char** out_json) {
  return guarded([&] {
    require(g, "grammar");
    require(out_json, "out_json");
    *out_json = dup_string(cflab::to_json(cflab::enumerate_language(g->cnf, max_len)).dump());
  });
}

cflab_status cflab_grammar_to_text(const cflab_grammar* g, int cnf, char** out_text) {
  return guarded([&] {
    require(g, "grammar");
    require(out_text, "out_text");
    *out_text = dup_string(cnf ? g->cnf.to_cfg().to_text() : g->cfg.to_text());
  });
}

cflab_status cflab_dfa_parse(const char* json, cflab_dfa** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new cflab_dfa{cflab::Dfa::from_json(json)};
  });
}

void cflab_dfa_free(cflab_dfa* m) { delete m; }

cflab_status cflab_dfa_accepts(const cflab_dfa* m, const cflab_letter* word, size_t len, int* out) {
  return guarded([&] {
    require(m, "dfa");
    require(out, "out");
    *out = m->dfa.accepts(word_of(word, len)) ? 1 : 0;
  });
}

cflab_status cflab_language_member(const char* name, const cflab_letter* word, size_t len, int* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = cflab::corpus_language(name).contains(word_of(word, len)) ? 1 : 0;
  });
}

cflab_status cflab_scale(const cflab_letter* word, size_t len, uint64_t c, cflab_letter* out) {
  return guarded([&] {
    if (len > 0) require(out, "out");
    const cflab::Word w = cflab::scale(word_of(word, len), c);
    std::copy(w.begin(), w.end(), out);
  });
}

cflab_status cflab_nest_l2(const cflab_letter* word, size_t len, cflab_letter* out) {
  return guarded([&] {
    require(out, "out");
    const cflab::Word w = cflab::nest_l2(word_of(word, len));
    std::copy(w.begin(), w.end(), out);
  });
}

cflab_status cflab_run(const char* command, const char* args_json, char** report_json, cflab_verdict* verdict) {
  return guarded([&] {
    require(command, "command");
    require(report_json, "report_json");
    const auto args = nlohmann::json::parse(args_json ? args_json : "{}");
    const cflab::Json report = cflab::run_command(command, args);
    const std::string v = report["verdict"].get<std::string>();
    if (verdict) *verdict = v == "pass" ? CFLAB_PASS : v == "fail" ? CFLAB_FAIL : CFLAB_INCONCLUSIVE;
    *report_json = dup_string(report.dump(2));
  });
}

}  // extern "C"
