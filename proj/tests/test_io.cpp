#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nlg/io.hpp"
#include "nlg/support_gen.hpp"

using namespace nlg;

namespace {

const char* kGhzDoc = R"({
  "players": 3,
  "inputs": [["0","1"],["0","1"],["0","1"]],
  "outputs": [["0","1"],["0","1"],["0","1"]],
  "relation": [],
  "promise": [["0","0","0"],["0","1","1"],["1","0","1"],["1","1","0"]]
})";

std::string ghz_doc_with_relation() {
  // Winning tuples of the GHZ rule, written out through the serializer.
  GameDocument doc;
  doc.inputLabels = {{"0", "1"}, {"0", "1"}, {"0", "1"}};
  doc.outputLabels = {{"0", "1"}, {"0", "1"}, {"0", "1"}};
  const PromiseGame pg = ghz_mermin_promise_game();
  doc.unfolded = pg.base;
  doc.game = fold_promise(pg);
  doc.promise = pg.promise;
  return serialize_game_document(doc);
}

}  // namespace

TEST_CASE("game document round-trip is byte identical") {
  const std::string text = ghz_doc_with_relation();
  const GameDocument doc = parse_game_document(text);
  CHECK(serialize_game_document(doc) == text);
  // And the parsed game behaves like the fixture.
  const Game g = ghz_mermin_game();
  for (std::int64_t in = 0; in < g.joint_inputs(); ++in)
    for (std::int64_t out = 0; out < g.joint_outputs(); ++out)
      CHECK(doc.game.winning_index(in, out) == g.winning_index(in, out));
}

TEST_CASE("game document rejects unknown fields") {
  CHECK_THROWS_AS(parse_game_document(R"({"players":2,"inputs":[["x"],["y"]],
    "outputs":[["a"],["b"]],"relation":[],"zzz":1})"),
                  ParseError);
}

TEST_CASE("game document rejects malformed JSON and bad labels") {
  CHECK_THROWS_AS(parse_game_document("{"), ParseError);
  CHECK_THROWS_AS(parse_game_document(R"({"players":2,"inputs":[["x"],["y"]],
    "outputs":[["a"],["b"]],"relation":[["x","nope","a","b"]]})"),
                  ParseError);
}

TEST_CASE("promise parsing folds the relation") {
  const GameDocument doc = parse_game_document(kGhzDoc);
  REQUIRE(doc.promise.has_value());
  CHECK(doc.promise->size() == 4);
  // Empty relation + promise: off-promise inputs are all-winning.
  CHECK(is_winning(doc.game, {1, 0, 0}, {0, 0, 0}));
  CHECK_FALSE(is_winning(doc.game, {0, 0, 0}, {0, 0, 0}));
}

TEST_CASE("strategy document round-trip is byte identical") {
  StrategyDocument doc;
  doc.strategy = random_support_bundle(11).strategy;
  const std::string text = serialize_strategy_document(doc);
  const StrategyDocument back = parse_strategy_document(text);
  CHECK(serialize_strategy_document(back) == text);
  CHECK(back.strategy.dimA == 2);
  CHECK(back.strategy.answerA == doc.strategy.answerA);
}

TEST_CASE("three-player strategy document round-trip") {
  StrategyDocument doc;
  doc.players = 3;
  doc.strategy3 = ghz_strategy();
  const std::string text = serialize_strategy_document(doc);
  const StrategyDocument back = parse_strategy_document(text);
  CHECK(back.players == 3);
  CHECK(serialize_strategy_document(back) == text);
  CHECK(verify_winning(back.strategy3, ghz_mermin_game()).wins);
}

TEST_CASE("strategy document validates its contents") {
  StrategyDocument doc;
  doc.strategy = random_support_bundle(12).strategy;
  std::string text = serialize_strategy_document(doc);
  // Corrupt an answer map entry count by dropping Bob's answers.
  auto pos = text.find("\"B\": [");
  REQUIRE(pos != std::string::npos);
  CHECK_THROWS_AS(parse_strategy_document(R"({"dims":[2,2],"state":[[1,0],[0,0],[0,0],[0,0]],
    "measurements":{"A":[],"B":[]},"answers":{"A":[],"B":[]}})"),
                  ParseError);
}

TEST_CASE("deterministic strategy document round-trip") {
  DeterministicStrategy s;
  s.outputs = {{0, 1}, {1, 0}};
  const std::string text = serialize_deterministic_strategy(s);
  const DeterministicStrategy back = parse_deterministic_strategy(text);
  CHECK(back.outputs == s.outputs);
  CHECK(serialize_deterministic_strategy(back) == text);
}

TEST_CASE("povm document round-trip") {
  std::mt19937_64 rng(77);
  const Povm p = random_qubit_povm(rng);
  const std::string text = serialize_povm_document(p);
  const Povm back = parse_povm_document(text);
  CHECK(serialize_povm_document(back) == text);
  CHECK(validate_povm(back).ok);
}
