#pragma once

#include <vector>

#include "nlg/games.hpp"

namespace nlg {

// One output table per player: outputs[p][x] is player p's answer to x.
struct DeterministicStrategy {
  std::vector<std::vector<int>> outputs;

  int answer(int player, int input) const { return outputs[player][input]; }
};

// Wins of a deterministic strategy counted over a set of joint inputs.
bool deterministic_wins_everywhere(const Game& g, const DeterministicStrategy& s);

// Which joint outcomes are possible (probability above the support
// threshold) for each joint input of a two-player scenario.
struct SupportTable {
  std::vector<int> inputSizes;   // two players
  std::vector<int> outputSizes;
  std::vector<bool> possible;    // [jointInput * jointOutputs + jointOutput]

  std::int64_t joint_inputs() const;
  std::int64_t joint_outputs() const;
  bool at(const std::vector<int>& inputs, const std::vector<int>& outputs) const;

  // Game whose relation is exactly the possible set.
  Game induced_game() const;
};

}  // namespace nlg
