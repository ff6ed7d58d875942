#pragma once

// Root data for A_{n-1} and C_n and lattice-point counts over the faces of
// the dilated fundamental alcove.
//
// Roots live in the ambient space Z^n. Index 0 of `extended` is alpha_0, the
// negative of the highest root; indices 1..r are the simple roots.

#include <cstdint>
#include <vector>

#include "cellini/weyl.hpp"

namespace cellini {

using RootVector = std::vector<int>;

struct RootDatum {
  WeylType type = WeylType::A;
  int n = 0;     ///< ambient dimension
  int rank = 0;  ///< r = n-1 for type A, n for type C
  std::vector<RootVector> extended;  ///< alpha_0, alpha_1, ..., alpha_r
  bool zero_sum = false;             ///< coroot lattice restricted to sum 0 (type A)

  /// A_{n-1}, n >= 2.
  static RootDatum type_A(int n);
  /// C_n, n >= 1.
  static RootDatum type_C(int n);
  static RootDatum make(WeylType t, int n);

  const RootVector& highest_root() const { return highest_; }
  bool is_root(const RootVector& v) const;

 private:
  RootVector highest_;
};

/// Subsets of the extended simple roots as bitmasks; bit i stands for alpha_i.
using IndexSet = std::uint32_t;

/// Histogram of coroot-lattice points of the closed k-dilated alcove by the set
/// of walls they lie on: entry I is a_{k,I}. Bit 0 marks the far wall
/// <theta, t> = k, bit i the wall <alpha_i, t> = 0.
std::vector<std::uint64_t> alcove_face_counts(const RootDatum& datum, int k);

std::uint64_t a_k_I(const RootDatum& datum, int k, IndexSet I);

struct RootImage {
  RootVector root;
  bool positive = false;
};

/// w(alpha) under e_i -> e_{w(i)} (signed for type C). Throws
/// std::invalid_argument when alpha is not a root of the datum.
RootImage root_image(const RootDatum& datum, const PermA& w, const RootVector& alpha);
RootImage root_image(const RootDatum& datum, const PermC& w, const RootVector& alpha);

/// Indices i in 0..r with w(alpha_i) negative, as a bitmask.
IndexSet cyclic_descent_mask(const RootDatum& datum, const PermA& w);
IndexSet cyclic_descent_mask(const RootDatum& datum, const PermC& w);

}  // namespace cellini
