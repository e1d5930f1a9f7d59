#include "nlg/games.hpp"

namespace nlg {

namespace {
constexpr std::int64_t kTableCap = 1'000'000;

std::int64_t mixed_radix_index(const std::vector<int>& tuple, const std::vector<int>& sizes) {
  if (tuple.size() != sizes.size()) throw std::invalid_argument("tuple arity mismatch");
  std::int64_t idx = 0;
  for (size_t p = 0; p < tuple.size(); ++p) {
    if (tuple[p] < 0 || tuple[p] >= sizes[p]) throw std::out_of_range("tuple entry out of range");
    idx = idx * sizes[p] + tuple[p];
  }
  return idx;
}

std::vector<int> mixed_radix_tuple(std::int64_t index, const std::vector<int>& sizes) {
  std::vector<int> tuple(sizes.size());
  for (size_t p = sizes.size(); p-- > 0;) {
    tuple[p] = static_cast<int>(index % sizes[p]);
    index /= sizes[p];
  }
  return tuple;
}
}  // namespace

Game::Game(std::vector<int> inputSizes, std::vector<int> outputSizes)
    : inputSizes_(std::move(inputSizes)), outputSizes_(std::move(outputSizes)) {
  if (inputSizes_.size() < 2 || inputSizes_.size() != outputSizes_.size())
    throw std::invalid_argument("game needs >= 2 players with matching alphabet lists");
  jointInputs_ = 1;
  jointOutputs_ = 1;
  for (int s : inputSizes_) {
    if (s <= 0) throw std::invalid_argument("empty input alphabet");
    jointInputs_ *= s;
  }
  for (int s : outputSizes_) {
    if (s <= 0) throw std::invalid_argument("empty output alphabet");
    jointOutputs_ *= s;
  }
  if (jointInputs_ * jointOutputs_ > kTableCap)
    throw std::invalid_argument("relation table exceeds the 10^6 entry cap");
  table_.assign(static_cast<size_t>(jointInputs_ * jointOutputs_), false);
}

std::int64_t Game::input_index(const std::vector<int>& inputs) const {
  return mixed_radix_index(inputs, inputSizes_);
}

std::int64_t Game::output_index(const std::vector<int>& outputs) const {
  return mixed_radix_index(outputs, outputSizes_);
}

std::vector<int> Game::input_tuple(std::int64_t index) const {
  return mixed_radix_tuple(index, inputSizes_);
}

std::vector<int> Game::output_tuple(std::int64_t index) const {
  return mixed_radix_tuple(index, outputSizes_);
}

void Game::set_winning(const std::vector<int>& inputs, const std::vector<int>& outputs, bool w) {
  set_winning_index(input_index(inputs), output_index(outputs), w);
}

bool is_winning(const Game& g, const std::vector<int>& inputs, const std::vector<int>& outputs) {
  return g.winning_index(g.input_index(inputs), g.output_index(outputs));
}

Game fold_promise(const PromiseGame& pg) {
  if (pg.promise.empty()) throw std::invalid_argument("promise must be nonempty");
  Game g = pg.base;
  std::vector<bool> onPromise(static_cast<size_t>(g.joint_inputs()), false);
  for (const auto& t : pg.promise) onPromise[static_cast<size_t>(g.input_index(t))] = true;
  for (std::int64_t in = 0; in < g.joint_inputs(); ++in) {
    if (onPromise[static_cast<size_t>(in)]) continue;
    for (std::int64_t out = 0; out < g.joint_outputs(); ++out) g.set_winning_index(in, out, true);
  }
  return g;
}

PromiseGame ghz_mermin_promise_game() {
  Game base({2, 2, 2}, {2, 2, 2});
  std::vector<std::vector<int>> promise;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        if ((x ^ y ^ z) != 0) continue;
        promise.push_back({x, y, z});
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
              base.set_winning({x, y, z}, {a, b, c}, (a ^ b ^ c) == (x | y | z));
      }
  return PromiseGame{std::move(base), std::move(promise)};
}

Game ghz_mermin_game() { return fold_promise(ghz_mermin_promise_game()); }

}  // namespace nlg
