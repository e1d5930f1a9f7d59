#pragma once

#include <cstdint>
#include <random>

#include "nlg/games.hpp"
#include "nlg/strategies.hpp"

namespace nlg {

// Reproducible random objects for the extraction pipeline: a random
// 2x2 quantum strategy together with its support game, which the strategy
// wins by construction.
struct SupportBundle {
  QuantumStrategy strategy;
  Game game;
};

// Random qubit POVM: weighted computational projectors conjugated by
// random unitaries, 2..4 rank-1 elements.
Povm random_qubit_povm(std::mt19937_64& rng);

// Random Haar-ish 2x2 unitary.
ComplexMatrix random_unitary2(std::mt19937_64& rng);

// Strategy over alpha|00>+beta|11> rotated by random local unitaries,
// alpha drawn away from degeneracy, with random answer maps. Any instance
// with a probability inside the ambiguous band (support threshold, 1e-8)
// is redrawn so the support relation is numerically clean.
SupportBundle random_support_bundle(std::uint64_t seed, int inputsPerPlayer = 2,
                                    int outputsPerPlayer = 2);

}  // namespace nlg
