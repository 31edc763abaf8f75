#pragma once

// Shared named models used across the test suite.

#include <vector>

#include "octant/stepset.hpp"

namespace helpers {

using octant::Step;
using octant::StepSet;

// four-step model with a free-product group and no visible relations
inline StepSet model_s1() {
  return StepSet::from_steps({{-1, -1, -1}, {-1, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

// four-step model with (ab)^2 = (ac)^2 = 1, Hadamard of kind (1,2)
inline StepSet model_s2() {
  return StepSet::from_steps({{-1, 0, 0}, {1, -1, 1}, {1, 0, 1}, {1, 1, -1}});
}

// three-step model with group G4, used for the cone-invariance worked example
inline StepSet model_cone_example() {
  return StepSet::from_steps({{-1, -1, 1}, {0, 1, -1}, {1, 0, 1}});
}

// (x + x^-1)(1 + y + y^-1 + z + z^-1): commuting ten-step Hadamard model with
// a finite group
inline StepSet model_product() {
  std::vector<Step> steps;
  for (int e : {-1, 1})
    for (auto [f, g] : {std::pair{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}})
      steps.push_back({e, f, g});
  return StepSet::from_steps(steps);
}

}  // namespace helpers
