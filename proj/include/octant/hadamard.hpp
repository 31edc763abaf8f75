#pragma once

#include <optional>

#include "octant/groups.hpp"
#include "octant/stepset.hpp"

namespace octant {

// P_S = U + V*T with the variables split (1,2) or (2,1) around one
// distinguished axis. U holds all monomials pure in the distinguished axis
// (kind (1,2)) resp. free of it (kind (2,1)); T carries no pure part.
struct HadamardDecomposition {
  int kind1, kind2;  // (1,2) or (2,1)
  int axis;          // distinguished axis
  Laurent U, V, T;
};

std::optional<HadamardDecomposition> detect_hadamard(const StepSet& s);

// witnessing permutation puts the commuting generator first
struct CommutationWitness {
  bool commutes;
  std::array<int, 3> perm;  // perm[0] commutes with perm[1] and perm[2]
};

CommutationWitness commutation_test(const StepSet& s, uint64_t seed = kDefaultSeed);

struct HadamardGroupStructure {
  bool dihedral_finite;
  int dihedral_order;  // |D| = 2 * ord(product); 0 when infinite
  bool confirmed;
};

HadamardGroupStructure hadamard_group_structure(const StepSet& s, int cutoff = kDefaultOrderCutoff,
                                                uint64_t seed = kDefaultSeed);

}  // namespace octant
