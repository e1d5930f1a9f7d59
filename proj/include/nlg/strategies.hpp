#pragma once

#include <optional>
#include <vector>

#include "nlg/games.hpp"
#include "nlg/linalg.hpp"
#include "nlg/povm.hpp"

namespace nlg {

// Shared Schmidt rank is 1: the state is a product and the quantum strategy
// is classically simulable; callers route this case explicitly.
struct ProductStateError : std::runtime_error {
  ProductStateError() : std::runtime_error("shared state is a product state (Schmidt rank 1)") {}
};

// Two-player quantum strategy: shared pure state, one POVM per input per
// player, and maps from (input, outcome) to answers.
struct QuantumStrategy {
  StateVector shared;
  int dimA = 0;
  int dimB = 0;
  std::vector<Povm> povmsA;                // indexed by Alice's input x
  std::vector<Povm> povmsB;                // indexed by Bob's input y
  std::vector<std::vector<int>> answerA;   // [x][outcome] -> a
  std::vector<std::vector<int>> answerB;   // [y][outcome] -> b

  void validate() const;
};

// Normal form after the Schmidt reduction: state alpha|00> + beta|11> with
// strictly positive coefficients and rank-1 refined POVMs. Answers are per
// refined element, carried over from the original outcome labels.
struct SchmidtStrategy2x2 {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<std::vector<Rank1Element>> povmsA;
  std::vector<std::vector<Rank1Element>> povmsB;
  std::vector<std::vector<int>> answerA;   // [x][refined index] -> a
  std::vector<std::vector<int>> answerB;
};

// Three-player strategy, just enough for the GHZ fixture.
struct QuantumStrategy3 {
  StateVector shared;                       // dim 8
  std::vector<std::vector<Povm>> povms;     // [player][input]
  std::vector<std::vector<std::vector<int>>> answers;  // [player][input][outcome]
};

// <Psi| M_i x N_j |Psi> by direct tensor contraction.
double joint_probability(const QuantumStrategy& s, int x, int y, int i, int j);

// The closed form for alpha|00>+beta|11> with rank-1 elements:
//   g g' [a^2 cos^2 t cos^2 t' + b^2 sin^2 t sin^2 t'
//         + 2 a b cos t cos t' cos(phi+phi') sin t sin t'].
double closed_form_probability(double alpha, double beta, const Rank1Element& eA,
                               const Rank1Element& eB);

double joint_probability(const SchmidtStrategy2x2& s, int x, int y, size_t i, size_t j);

// Schmidt normalization: rotate the shared state to alpha|00>+beta|11> by local
// unitaries, conjugate the POVMs accordingly, refine to rank 1. Throws
// ProductStateError on Schmidt rank 1.
SchmidtStrategy2x2 schmidt_normalize(const QuantumStrategy& s);

// Dimension reduction: compress both sides onto the Schmidt support so the
// strategy lives in d x d, d = min(dimA, dimB). Identity when dimA == dimB.
QuantumStrategy reduce_dimension(const QuantumStrategy& s);

struct VerifyResult {
  bool wins = false;
  double worst_losing_mass = 0.0;
  // Worst violating tuple when not winning.
  std::vector<int> inputs;
  std::vector<int> outputs;
  double probability = 0.0;
  // Losing probability mass per joint input (game input-index order).
  std::vector<double> losing_mass;
};

VerifyResult verify_winning(const QuantumStrategy& s, const Game& g,
                            double tolerance = tol().winning_mass);
VerifyResult verify_winning(const QuantumStrategy3& s, const Game& g,
                            double tolerance = tol().winning_mass);

// Marginal answer distribution Pr[a,b | x,y] via the answer maps.
std::vector<std::vector<double>> answer_distribution(const QuantumStrategy& s, const Game& g,
                                                     int x, int y);

// GHZ state strategy: X-basis measurement on input 0, Y-basis on input 1,
// outcome 0 <-> +1 eigenvector. Wins ghz_mermin_game().
QuantumStrategy3 ghz_strategy();

// Hardy fixture: state (|01>+|10>+|11>)/sqrt(3), inputs choose the
// computational (0) or Hadamard (1) basis, answers are the outcomes.
QuantumStrategy hardy_strategy();

}  // namespace nlg
