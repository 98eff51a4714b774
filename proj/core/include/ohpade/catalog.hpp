#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ohpade/hp_solver.hpp"
#include "ohpade/ortho_basis.hpp"
#include "ohpade/poles.hpp"

namespace ohpade {

struct IncompleteSetup {
  int m = 1;
  int m_star = 1;
};

struct CatalogEntry {
  std::string id;
  std::string summary;
  MeasureSpec measure;
  FunctionSystem system;
  std::optional<GroundTruth> truth;
  std::string derivation;
  // Hand-derived θ, checked against predicted_theta by the catalog suite.
  std::optional<double> theta;
  std::optional<bool> expect_unique;
  std::optional<bool> expect_independent;
  // First n from which the denominator is exact (rational entries).
  std::optional<int> exact_from;
  std::optional<IncompleteSetup> incomplete;
  // Hand-derived ρ₀ of the first function.
  std::optional<double> rho0;
};

const std::vector<CatalogEntry>& catalog();
// Throws ParameterError for an unknown id.
const CatalogEntry& catalog_entry(const std::string& id);

}  // namespace ohpade
