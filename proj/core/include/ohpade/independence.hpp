#pragma once

#include "ohpade/hp_solver.hpp"

namespace ohpade {

struct IndependenceReport {
  bool independent = false;
  int rank = 0;       // rank of the principal-part map
  int unknowns = 0;   // |m|, the number of coefficients of (v_1, ..., v_d)
  int conditions = 0; // number of (pole, order) principal-part slots
};

// Exact test of polynomial independence with respect to m: no nonzero
// (v_1..v_d), deg v_i < m_i, makes Σ v_i F_i a polynomial. All arithmetic is
// over Gaussian rationals built from the exact binary values of the inputs.
// Throws UnsupportedInputError if some F_i is not rational.
IndependenceReport poly_independence(const FunctionSystem& system);
bool poly_independence_check(const FunctionSystem& system);

}  // namespace ohpade
