#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ncdb/axioms.hpp"

namespace ncdb {

// Generators to invert, 0-based, in the order their inverses are appended.
struct LocalisationPlan {
  std::vector<int> invert;

  static LocalisationPlan all(const Algebra& alg);
  // Looks generator names up in the algebra; throws on unknown or repeated names.
  static LocalisationPlan from_names(const Algebra& alg, const std::vector<std::string>& names);
};

struct LocalisationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Localised {
  BracketSpec spec;
  WeightVector weight;  // extended: one entry per generator, then one per inverse
  VerificationReport base_weight;
};

// The base pair (spec, w) must pass the weight check on its free algebra. With
// require_poisson the base Poisson property is demanded as well.
Localised localize(const BracketSpec& spec, const WeightVector& w, const LocalisationPlan& plan,
                   bool require_poisson = false);

}  // namespace ncdb
