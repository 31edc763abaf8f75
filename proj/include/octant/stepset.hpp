#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "octant/laurent.hpp"

namespace octant {

struct Step {
  int dx, dy, dz;
  int operator[](int axis) const { return axis == 0 ? dx : axis == 1 ? dy : dz; }
  bool operator==(const Step&) const = default;
  bool operator<(const Step& o) const {
    return std::tie(dx, dy, dz) < std::tie(o.dx, o.dy, o.dz);
  }
};

// P_S collected along one axis: part[axis][sign+1] is the bivariate Laurent
// polynomial A_-, A_0, A_+ (axis 0), B_* (axis 1), C_* (axis 2).
struct AxisDecomposition {
  Laurent part[3][3];
  const Laurent& minus(int axis) const { return part[axis][0]; }
  const Laurent& zero(int axis) const { return part[axis][1]; }
  const Laurent& plus(int axis) const { return part[axis][2]; }
};

// Subset of {-1,0,1}^3 \ {0} as a 26-bit mask. The bit layout follows the
// diagram encoding: layers z=-1,0,+1; within a layer y then x ascending; the
// middle layer skips the cell (x,y)=(0,0).
class StepSet {
 public:
  StepSet() : bits_(0) {}
  explicit StepSet(uint32_t bits);
  static StepSet from_steps(const std::vector<Step>& steps);

  // diagram codec (26 characters of '0'/'1'); throws std::invalid_argument
  static StepSet decode_diagram(const std::string& text);
  std::string encode_diagram() const;

  // 7 lowercase hex digits, diagram bit 1 = least significant
  static StepSet from_hex(const std::string& hex);
  std::string to_hex() const;

  uint32_t bits() const { return bits_; }
  int size() const { return __builtin_popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(const Step& s) const;
  std::vector<Step> steps() const;
  bool operator==(const StepSet&) const = default;

  // minimum bit-mask over the 6 coordinate permutations, plus one permutation
  // achieving it (perm[i] = source axis for destination axis i)
  std::pair<StepSet, std::array<int, 3>> canonicalize() const;
  bool is_canonical() const { return canonicalize().first.bits_ == bits_; }
  StepSet permuted(const std::array<int, 3>& perm) const;

  // 9-bit support mask of the axis part with the given sign; bit index
  // 3*(e1+1)+(e2+1) where (e1,e2) are the exponents of the two remaining
  // axes in increasing axis order
  uint16_t support_mask(int axis, int sign) const;

  bool has_group() const;
  AxisDecomposition decompose() const;
  Laurent polynomial() const;

  // default 2D singularity predicate: every projected step (i,j) has
  // i + j >= 0 and at least one projected step has a negative coordinate
  using Singular2D = std::function<bool(const std::vector<std::pair<int, int>>&)>;
  static bool default_singular_2d(const std::vector<std::pair<int, int>>& proj);

  // flag per dropped axis: is the projection to the other two coordinates a
  // singular 2D model?
  std::array<bool, 3> singular_projections(const Singular2D& pred = default_singular_2d) const;

  // census universe filters ("up to bijection" with genuinely 3D models):
  // no octant constraint implied by the other two, and every step usable
  bool dimension_reducible() const;
  bool has_unusable_step() const;
  bool fully_three_dimensional() const { return !dimension_reducible() && !has_unusable_step(); }

 private:
  uint32_t bits_;
};

// fixed bijection between bit indices 0..25 and steps
const std::array<Step, 26>& step_table();
int step_index(const Step& s);

}  // namespace octant
