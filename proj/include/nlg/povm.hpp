#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlg/linalg.hpp"

namespace nlg {

// Generalized measurement: positive matrices summing to identity.
// Outcome labels are the element indices 0..n-1.
struct Povm {
  int dim = 0;
  std::vector<ComplexMatrix> elements;
};

// Weighted rank-1 projector gamma * P(theta, phi) with the projector
// parameterized as
//   [[cos^2 t, e^{-i phi} sin t cos t], [e^{i phi} sin t cos t, sin^2 t]].
// Conventions: theta=0 => phi=0; theta=pi/2 => phi=pi.
// `original` is the outcome of the coarse POVM this element refines;
// `sub` distinguishes refined outcomes of the same original one.
struct Rank1Element {
  double gamma = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  int original = 0;
  int sub = 0;
};

struct BlochPoint {
  double x = 0.0, y = 0.0, z = 0.0;
};

enum class Hemisphere { East, West, Both, Neither };

struct PovmValidation {
  bool ok = false;
  std::string message;       // first violated condition, empty when ok
  int element_index = -1;    // offending element, -1 for completeness failures
};

PovmValidation validate_povm(const Povm& p);

// Spectral refinement: terms b_ij P_ij of every element become
// elements of their own; terms with weight <= truncation tolerance are
// dropped and completeness is re-verified.
std::vector<Rank1Element> refine_to_rank1(const Povm& p);

// Matrix form gamma * P(theta, phi) of a refined element.
ComplexMatrix rank1_matrix(const Rank1Element& e);

// Angles of a 2x2 rank-1 projector, pole conventions applied last.
std::pair<double, double> projector_to_angles(const ComplexMatrix& p);

BlochPoint angles_to_bloch(double theta, double phi);

// Completeness in Bloch form: sum gamma_i v_i = 0 and sum gamma_i = 2.
bool check_vector_condition(const std::vector<Rank1Element>& elems);

Hemisphere hemisphere_of(const Rank1Element& e);

// Smallest index classified East-or-Both (resp. West-or-Both). Throws
// std::logic_error if none qualifies: for a valid POVM that indicates an
// internal canonicalization bug, not a property of the input.
size_t pick_east(const std::vector<Rank1Element>& elems);
size_t pick_west(const std::vector<Rank1Element>& elems);

// Probability of a refined outcome on a pure qubit state.
double rank1_probability(const Rank1Element& e, const std::vector<cplx>& state);

}  // namespace nlg
