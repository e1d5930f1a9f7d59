#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nlg {

// Finite nonlocal game: per-player input/output alphabets (0-based integer
// ranges) and a winning relation stored as a dense boolean table over
// (joint input, joint output). Immutable after construction.
class Game {
 public:
  Game(std::vector<int> inputSizes, std::vector<int> outputSizes);

  int player_count() const { return static_cast<int>(inputSizes_.size()); }
  const std::vector<int>& input_sizes() const { return inputSizes_; }
  const std::vector<int>& output_sizes() const { return outputSizes_; }
  std::int64_t joint_inputs() const { return jointInputs_; }
  std::int64_t joint_outputs() const { return jointOutputs_; }

  std::int64_t input_index(const std::vector<int>& inputs) const;
  std::int64_t output_index(const std::vector<int>& outputs) const;
  std::vector<int> input_tuple(std::int64_t index) const;
  std::vector<int> output_tuple(std::int64_t index) const;

  void set_winning(const std::vector<int>& inputs, const std::vector<int>& outputs, bool w);
  void set_winning_index(std::int64_t in, std::int64_t out, bool w) { table_[in * jointOutputs_ + out] = w; }
  bool winning_index(std::int64_t in, std::int64_t out) const { return table_[in * jointOutputs_ + out]; }

 private:
  std::vector<int> inputSizes_;
  std::vector<int> outputSizes_;
  std::int64_t jointInputs_ = 0;
  std::int64_t jointOutputs_ = 0;
  std::vector<bool> table_;
};

// Game plus a nonempty subset of joint inputs that may actually be asked.
struct PromiseGame {
  Game base;
  std::vector<std::vector<int>> promise;  // joint input tuples
};

bool is_winning(const Game& g, const std::vector<int>& inputs, const std::vector<int>& outputs);

// Off-promise inputs become all-winning; on-promise rows are untouched.
Game fold_promise(const PromiseGame& pg);

// Three-player GHZ/Mermin game, promise x^y^z = 0 folded in:
// win iff a^b^c = x|y|z.
Game ghz_mermin_game();
PromiseGame ghz_mermin_promise_game();

}  // namespace nlg
