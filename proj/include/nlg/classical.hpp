#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nlg/classical_types.hpp"
#include "nlg/games.hpp"

namespace nlg {

// Exact classical value: wins and instance counts are integers, the value is
// the fraction wins/instances under the uniform question distribution over
// all joint inputs of the (folded) game.
struct ClassicalValueReport {
  std::int64_t wins = 0;
  std::int64_t instances = 0;
  DeterministicStrategy witness;
  std::int64_t strategies_searched = 0;
  // Same witness restricted to a promise subset, when one was supplied.
  std::optional<std::int64_t> promise_wins;
  std::optional<std::int64_t> promise_instances;

  double value() const { return static_cast<double>(wins) / static_cast<double>(instances); }
  std::string fraction() const;
};

// Exhaustive search over all deterministic strategies. The promise, when
// given, only adds the promise-restricted tally of the best strategy; the
// maximization itself is over all joint inputs. Deterministic result for
// any thread count: ranges merge by max wins then smallest strategy index.
ClassicalValueReport classical_value(const Game& g,
                                     const std::vector<std::vector<int>>* promise = nullptr,
                                     int threads = 1);

bool has_classical_winning_strategy(const Game& g);

// Support pattern of Hardy's state measured in the computational or
// Hadamard basis on each side.
SupportTable hardy_support();

struct FeasibilityReport {
  bool feasible = false;
  // Greedy covering set of admissible deterministic strategies (feasible),
  // or the first possible event no admissible strategy produces.
  std::vector<DeterministicStrategy> covering;
  std::vector<int> uncovered_inputs;
  std::vector<int> uncovered_outputs;
};

// Can a mixture of local deterministic strategies have support exactly
// inside (and covering) the table's possible set?
FeasibilityReport local_support_feasible(const SupportTable& t);

}  // namespace nlg
