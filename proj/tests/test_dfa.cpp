// Licensed under the Apache License 2.0 (see LICENSE file).

#include "cflab/dfa.hpp"
#include "cflab/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cflab;

namespace {

const char* kParity = R"({
  "states": ["even", "odd"], "alphabet": [0, 1], "start": "even", "accepting": ["even"],
  "transitions": [["even", 0, "even"], ["even", 1, "odd"], ["odd", 0, "odd"], ["odd", 1, "even"]]
})";

const char* kZeros = R"({
  "states": [0, 1], "alphabet": [0, 1], "start": 0, "accepting": [0],
  "transitions": [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 1]]
})";

}  // namespace

TEST_CASE("parity of ones") {
  const Dfa m = Dfa::from_json(kParity);
  CHECK(dfa_accepts(m, Word{1, 1}));
  CHECK_FALSE(dfa_accepts(m, Word{1}));
  for (std::size_t q = 0; q < m.state_count(); ++q) CHECK(dfa_run(m, q, Word{}) == q);
  for (const auto& w : oracle::words_upto({0, 1}, 8)) {
    const auto ones = std::count(w.begin(), w.end(), 1u);
    CHECK(m.accepts(Word(w)) == (ones % 2 == 0));
  }
}

TEST_CASE("zeros only") {
  const Dfa m = Dfa::from_json(kZeros);
  CHECK(m.accepts(Word{0, 0, 0}));
  CHECK_FALSE(m.accepts(Word{0, 1}));
  CHECK(m.accepts(Word{}));
}

TEST_CASE("foreign letters and malformed automata") {
  const Dfa m = Dfa::from_json(kParity);
  CHECK_THROWS_AS(m.accepts(Word{2}), InvalidArgument);
  CHECK_FALSE(m.has_letter(2));
  // Missing transition.
  CHECK_THROWS(Dfa::from_json(R"({"states":[0],"alphabet":[0,1],"start":0,"accepting":[],
                                 "transitions":[[0,0,0]]})"));
  // Conflicting transition.
  CHECK_THROWS(Dfa::from_json(R"({"states":[0,1],"alphabet":[0],"start":0,"accepting":[],
                                 "transitions":[[0,0,0],[0,0,1],[1,0,1]]})"));
  CHECK_THROWS(Dfa::from_json("not json"));
}

TEST_CASE("json round trip") {
  const Dfa m = Dfa::from_json(kParity);
  const Dfa n = Dfa::from_json(m.to_json());
  CHECK(n.state_names() == m.state_names());
  for (const auto& w : oracle::words_upto({0, 1}, 5)) CHECK(n.accepts(Word(w)) == m.accepts(Word(w)));
}
