#pragma once

#include <span>
#include <vector>

#include "ohpade/domain.hpp"

namespace ohpade {

// Monomial coefficients, lowest degree first.
using Poly = std::vector<Complex>;

struct Root {
  Complex z;
  int multiplicity = 1;
};

Complex poly_eval(std::span<const Complex> p, Complex z);
Poly poly_from_roots(std::span<const Complex> roots);
Poly poly_mul(std::span<const Complex> a, std::span<const Complex> b);
// Degree after ignoring top coefficients with |c| <= tol·max|c|.
int poly_degree(std::span<const Complex> p, double tol = 0.0);
// max_j |a_j - b_j| with the shorter operand padded by zeros.
double coeff_distance(std::span<const Complex> a, std::span<const Complex> b);

// Zeros of p as eigenvalues of the balanced companion matrix, merged when
// closer than cluster_radius and sorted by (re, im). Degree 0 gives {}.
std::vector<Root> roots(std::span<const Complex> p, double cluster_radius = 1e-7);
// Zeros listed with repetition according to multiplicity.
std::vector<Complex> root_list(std::span<const Complex> p, double cluster_radius = 1e-7);

// Optimal assignment of each target to a distinct candidate minimising the
// largest distance, ties broken by the total. Returns the distance for each
// target (infinity when there are fewer candidates than targets).
std::vector<double> match_distances(std::span<const Complex> targets,
                                    std::span<const Complex> candidates);

}  // namespace ohpade
