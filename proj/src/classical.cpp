#include "nlg/classical.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "nlg/strategies.hpp"

namespace nlg {

namespace {
constexpr std::int64_t kSearchCap = 100'000'000;

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Decode a global strategy index (Alice-major lexicographic) into tables.
DeterministicStrategy decode_strategy(std::int64_t index, const Game& g,
                                      const std::vector<std::int64_t>& playerSpace) {
  DeterministicStrategy d;
  d.outputs.resize(g.player_count());
  for (int p = g.player_count() - 1; p >= 0; --p) {
    std::int64_t local = index % playerSpace[p];
    index /= playerSpace[p];
    const int inputs = g.input_sizes()[p];
    const int outputs = g.output_sizes()[p];
    d.outputs[p].resize(inputs);
    for (int x = inputs - 1; x >= 0; --x) {
      d.outputs[p][x] = static_cast<int>(local % outputs);
      local /= outputs;
    }
  }
  return d;
}

std::int64_t count_wins(const Game& g, const DeterministicStrategy& d) {
  std::int64_t wins = 0;
  for (std::int64_t in = 0; in < g.joint_inputs(); ++in) {
    const std::vector<int> inputs = g.input_tuple(in);
    std::vector<int> outs(g.player_count());
    for (int p = 0; p < g.player_count(); ++p) outs[p] = d.answer(p, inputs[p]);
    if (g.winning_index(in, g.output_index(outs))) ++wins;
  }
  return wins;
}

}  // namespace

bool deterministic_wins_everywhere(const Game& g, const DeterministicStrategy& s) {
  return count_wins(g, s) == g.joint_inputs();
}

std::string ClassicalValueReport::fraction() const {
  const std::int64_t d = gcd64(wins == 0 ? instances : wins, instances);
  std::ostringstream os;
  os << wins / d << "/" << instances / d;
  return os.str();
}

ClassicalValueReport classical_value(const Game& g, const std::vector<std::vector<int>>* promise,
                                     int threads) {
  std::vector<std::int64_t> playerSpace(g.player_count());
  std::int64_t total = 1;
  for (int p = 0; p < g.player_count(); ++p) {
    std::int64_t space = 1;
    for (int x = 0; x < g.input_sizes()[p]; ++x) {
      space *= g.output_sizes()[p];
      if (space > kSearchCap) throw std::invalid_argument("strategy space exceeds the 10^8 cap");
    }
    playerSpace[p] = space;
    total *= space;
    if (total > kSearchCap) throw std::invalid_argument("strategy space exceeds the 10^8 cap");
  }

  struct Partial {
    std::int64_t bestWins = -1;
    std::int64_t bestIndex = -1;
  };

  const int nthreads = std::max(1, threads);
  std::vector<Partial> partials(nthreads);
  auto worker = [&](int t) {
    const std::int64_t lo = total * t / nthreads;
    const std::int64_t hi = total * (t + 1) / nthreads;
    Partial part;
    for (std::int64_t idx = lo; idx < hi; ++idx) {
      const std::int64_t wins = count_wins(g, decode_strategy(idx, g, playerSpace));
      if (wins > part.bestWins) {
        part.bestWins = wins;
        part.bestIndex = idx;
      }
    }
    partials[t] = part;
  };

  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  // Max wins, then smallest index: identical result for any thread count.
  Partial best;
  for (const Partial& p : partials) {
    if (p.bestWins > best.bestWins ||
        (p.bestWins == best.bestWins && p.bestIndex < best.bestIndex))
      best = p;
  }

  ClassicalValueReport rep;
  rep.wins = best.bestWins;
  rep.instances = g.joint_inputs();
  rep.witness = decode_strategy(best.bestIndex, g, playerSpace);
  rep.strategies_searched = total;
  if (promise) {
    std::int64_t pw = 0;
    for (const auto& inputs : *promise) {
      std::vector<int> outs(g.player_count());
      for (int p = 0; p < g.player_count(); ++p) outs[p] = rep.witness.answer(p, inputs[p]);
      if (is_winning(g, inputs, outs)) ++pw;
    }
    rep.promise_wins = pw;
    rep.promise_instances = static_cast<std::int64_t>(promise->size());
  }
  return rep;
}

bool has_classical_winning_strategy(const Game& g) {
  const ClassicalValueReport rep = classical_value(g);
  return rep.wins == rep.instances;
}

std::int64_t SupportTable::joint_inputs() const {
  std::int64_t n = 1;
  for (int s : inputSizes) n *= s;
  return n;
}

std::int64_t SupportTable::joint_outputs() const {
  std::int64_t n = 1;
  for (int s : outputSizes) n *= s;
  return n;
}

bool SupportTable::at(const std::vector<int>& inputs, const std::vector<int>& outputs) const {
  const Game g = induced_game();  // reuse the index math
  return possible[static_cast<size_t>(g.input_index(inputs) * joint_outputs() +
                                      g.output_index(outputs))];
}

Game SupportTable::induced_game() const {
  Game g(inputSizes, outputSizes);
  for (std::int64_t in = 0; in < g.joint_inputs(); ++in)
    for (std::int64_t out = 0; out < g.joint_outputs(); ++out)
      g.set_winning_index(in, out, possible[static_cast<size_t>(in * g.joint_outputs() + out)]);
  return g;
}

SupportTable hardy_support() {
  const QuantumStrategy s = hardy_strategy();
  SupportTable t;
  t.inputSizes = {2, 2};
  t.outputSizes = {2, 2};
  t.possible.assign(16, false);
  size_t idx = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          t.possible[idx++] = joint_probability(s, x, y, a, b) > tol().support;
  return t;
}

FeasibilityReport local_support_feasible(const SupportTable& t) {
  if (t.inputSizes.size() != 2) throw std::invalid_argument("two-player tables only");
  const Game g = t.induced_game();

  // Admissible strategies: support contained in the possible set.
  std::vector<DeterministicStrategy> admissible;
  std::vector<std::int64_t> playerSpace(2);
  std::int64_t total = 1;
  for (int p = 0; p < 2; ++p) {
    std::int64_t space = 1;
    for (int x = 0; x < t.inputSizes[p]; ++x) space *= t.outputSizes[p];
    playerSpace[p] = space;
    total *= space;
    if (total > kSearchCap) throw std::invalid_argument("strategy space exceeds the 10^8 cap");
  }
  for (std::int64_t idx = 0; idx < total; ++idx) {
    DeterministicStrategy d = decode_strategy(idx, g, playerSpace);
    if (deterministic_wins_everywhere(g, d)) admissible.push_back(std::move(d));
  }

  // Every possible event must be produced by some admissible strategy.
  FeasibilityReport rep;
  std::vector<bool> covered(t.possible.size(), false);
  for (const auto& d : admissible)
    for (std::int64_t in = 0; in < g.joint_inputs(); ++in) {
      const std::vector<int> inputs = g.input_tuple(in);
      std::vector<int> outs = {d.answer(0, inputs[0]), d.answer(1, inputs[1])};
      covered[static_cast<size_t>(in * g.joint_outputs() + g.output_index(outs))] = true;
    }

  for (std::int64_t in = 0; in < g.joint_inputs(); ++in)
    for (std::int64_t out = 0; out < g.joint_outputs(); ++out) {
      const size_t cell = static_cast<size_t>(in * g.joint_outputs() + out);
      if (t.possible[cell] && !covered[cell]) {
        rep.feasible = false;
        rep.uncovered_inputs = g.input_tuple(in);
        rep.uncovered_outputs = g.output_tuple(out);
        return rep;
      }
    }

  // Greedy cover: keep strategies that add at least one not-yet-covered event.
  rep.feasible = true;
  std::vector<bool> done(t.possible.size(), false);
  for (const auto& d : admissible) {
    bool adds = false;
    for (std::int64_t in = 0; in < g.joint_inputs(); ++in) {
      const std::vector<int> inputs = g.input_tuple(in);
      std::vector<int> outs = {d.answer(0, inputs[0]), d.answer(1, inputs[1])};
      const size_t cell = static_cast<size_t>(in * g.joint_outputs() + g.output_index(outs));
      if (!done[cell]) {
        adds = true;
        done[cell] = true;
      }
    }
    if (adds) rep.covering.push_back(d);
  }
  return rep;
}

}  // namespace nlg
