#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlg/classical_types.hpp"
#include "nlg/games.hpp"
#include "nlg/strategies.hpp"

namespace nlg {

// Parse failures carry a human-readable position/context message.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Game file: symbolic labels live here only; the in-memory Game uses
// 0-based indices in label-list order.
struct GameDocument {
  std::vector<std::vector<std::string>> inputLabels;   // per player
  std::vector<std::vector<std::string>> outputLabels;  // per player
  Game game;                                            // promise already folded
  std::optional<std::vector<std::vector<int>>> promise;
  Game unfolded;                                        // relation as written

  GameDocument() : game({2, 2}, {2, 2}), unfolded({2, 2}, {2, 2}) {}
};

GameDocument parse_game_document(const std::string& text);
std::string serialize_game_document(const GameDocument& doc);

// Two-player documents carry `strategy`; three-player ones (the GHZ
// fixture shape) carry `strategy3`.
struct StrategyDocument {
  int players = 2;
  QuantumStrategy strategy;
  QuantumStrategy3 strategy3;
};

StrategyDocument parse_strategy_document(const std::string& text);
std::string serialize_strategy_document(const StrategyDocument& doc);

std::string serialize_deterministic_strategy(const DeterministicStrategy& s);
DeterministicStrategy parse_deterministic_strategy(const std::string& text);

Povm parse_povm_document(const std::string& text);
std::string serialize_povm_document(const Povm& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace nlg
