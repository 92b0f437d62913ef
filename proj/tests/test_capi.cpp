// Licensed under the Apache License 2.0 (see LICENSE file).

#include <string>
#include <vector>

#include "cflab/cflab.h"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { cflab_string_free(p); }
};

nlohmann::json run(const char* command, const nlohmann::json& args, cflab_status* status = nullptr,
                   cflab_verdict* verdict = nullptr) {
  Owned out;
  cflab_verdict v = CFLAB_PASS;
  const cflab_status s = cflab_run(command, args.dump().c_str(), &out.p, &v);
  if (status) *status = s;
  if (verdict) *verdict = v;
  return s == CFLAB_OK ? nlohmann::json::parse(out.p) : nlohmann::json();
}

}  // namespace

TEST_CASE("grammar handles") {
  cflab_grammar* g = nullptr;
  REQUIRE(cflab_grammar_parse("S -> 'a' S 'b' | 'a' 'b'", &g) == CFLAB_OK);
  const cflab_letter yes[] = {97, 97, 98, 98};
  const cflab_letter no[] = {97, 98, 98};
  int member = -1;
  CHECK(cflab_grammar_member(g, yes, 4, &member) == CFLAB_OK);
  CHECK(member == 1);
  CHECK(cflab_grammar_member(g, no, 3, &member) == CFLAB_OK);
  CHECK(member == 0);
  std::uint64_t p = 0;
  CHECK(cflab_grammar_pumping_constant(g, &p) == CFLAB_OK);
  CHECK(p >= 2);

  Owned words;
  REQUIRE(cflab_grammar_enumerate(g, 4, &words.p) == CFLAB_OK);
  CHECK(nlohmann::json::parse(words.p) == nlohmann::json::parse("[[97,98],[97,97,98,98]]"));
  Owned text;
  CHECK(cflab_grammar_to_text(g, 1, &text.p) == CFLAB_OK);
  CHECK(std::string(text.p).find("->") != std::string::npos);
  cflab_grammar_free(g);

  CHECK(cflab_grammar_parse("S -> X", &g) == CFLAB_ERR_PARSE);
  CHECK(std::string(cflab_last_error()).size() > 0);
  CHECK(cflab_grammar_builtin("nope", &g) == CFLAB_ERR_INVALID_ARGUMENT);
  CHECK(cflab_grammar_builtin("L2_1", &g) == CFLAB_OK);
  cflab_grammar_free(g);
  CHECK(cflab_grammar_member(nullptr, yes, 4, &member) == CFLAB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("dfa handles") {
  cflab_dfa* m = nullptr;
  REQUIRE(cflab_dfa_parse(R"({"states":[0,1],"alphabet":[0,1],"start":0,"accepting":[0],
      "transitions":[[0,0,0],[0,1,1],[1,0,1],[1,1,0]]})",
                          &m) == CFLAB_OK);
  const cflab_letter w[] = {1, 0, 1};
  const cflab_letter bad[] = {3};
  int accepted = -1;
  CHECK(cflab_dfa_accepts(m, w, 3, &accepted) == CFLAB_OK);
  CHECK(accepted == 1);
  CHECK(cflab_dfa_accepts(m, bad, 1, &accepted) == CFLAB_ERR_INVALID_ARGUMENT);
  cflab_dfa_free(m);
  CHECK(cflab_dfa_parse("{", &m) == CFLAB_ERR_PARSE);
}

TEST_CASE("word helpers") {
  const cflab_letter w[] = {1, 2, 1, 1};
  cflab_letter out[8] = {};
  REQUIRE(cflab_scale(w, 4, 3, out) == CFLAB_OK);
  CHECK(std::vector<cflab_letter>(out, out + 4) == std::vector<cflab_letter>{3, 6, 3, 3});
  CHECK(cflab_scale(w, 4, 0, out) == CFLAB_ERR_INVALID_ARGUMENT);
  REQUIRE(cflab_nest_l2(w, 2, out) == CFLAB_OK);
  CHECK(std::vector<cflab_letter>(out, out + 8) == std::vector<cflab_letter>{1, 2, 6, 3, 15, 30, 10, 5});
  int member = 0;
  CHECK(cflab_language_member("L2", out, 8, &member) == CFLAB_OK);
  CHECK(member == 1);
  CHECK(cflab_language_member("nope", out, 8, &member) == CFLAB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("run reports") {
  cflab_status s;
  cflab_verdict v;
  auto r = run("member", {{"lang", "L2"}, {"word", "1,2,6,3,15,30,10,5"}}, &s, &v);
  CHECK(s == CFLAB_OK);
  CHECK(v == CFLAB_PASS);
  CHECK(r["payload"]["member"] == true);
  CHECK(r["command"] == "member");
  CHECK(r.contains("elapsed_ms"));

  r = run("params", {{"m", 1}});
  CHECK(r["payload"]["n"] == 288);
  CHECK(r["payload"]["k"] == 72);
  CHECK(r["payload"]["j0"] == 36);

  r = run("intersect-check", {{"max_len", 8}}, &s, &v);
  CHECK(v == CFLAB_PASS);

  r = run("swap-scan", {{"lang", "EvenPal"}, {"n", 4}, {"j_min", 2}, {"j_max", 2}, {"expect", "none"}}, &s, &v);
  CHECK(s == CFLAB_OK);
  CHECK(v == CFLAB_FAIL);
  CHECK(r["payload"].contains("counterexample"));

  run("nope", nlohmann::json::object(), &s);
  CHECK(s == CFLAB_ERR_INVALID_ARGUMENT);
  run("enumerate", {{"lang", "L2_1"}, {"length", 14}}, &s);
  CHECK(s == CFLAB_ERR_COST_GUARD);
  run("member", {{"grammar_text", "S -> "}, {"word", "1"}}, &s);
  CHECK(s == CFLAB_ERR_PARSE);
  run("pump-refute", {{"grammar", "AnBn"}, {"predicate", "L2_dprime"}, {"max_len", 1}}, &s);
  CHECK(s == CFLAB_ERR_PRECONDITION);
  Owned out;
  CHECK(cflab_run("member", "{", &out.p, nullptr) == CFLAB_ERR_PARSE);
}

TEST_CASE("reports are deterministic modulo elapsed time") {
  const nlohmann::json args{{"lang", "L2"}, {"n", 8}, {"j_min", 1}, {"j_max", 2}};
  auto a = run("swap-scan", args);
  auto b = run("swap-scan", args);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a.dump() == b.dump());
}
