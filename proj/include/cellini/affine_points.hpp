#pragma once

// Points of the closed fundamental alcove of type A_{n-1} fixed by the
// Frobenius action v -> w^{-1}(q v) modulo the coroot lattice, and the
// induced measure on S_n through shortest elements.
//
// S_n acts on R^n by e_i -> e_{w(i)}, so (w.v)_{w(i)} = v_i.

#include <string>
#include <vector>

#include "cellini/measure.hpp"
#include "cellini/rational.hpp"
#include "cellini/weyl.hpp"

namespace cellini {

struct AlcovePoint {
  std::vector<Rational> v;

  int n() const { return static_cast<int>(v.size()); }
  /// sum 0, weakly decreasing, v_1 - v_n <= 1.
  bool in_closed_alcove() const;
  /// (-v_n, ..., -v_1).
  AlcovePoint dual() const;
  std::string to_string() const;

  auto operator<=>(const AlcovePoint&) const = default;
};

std::vector<Rational> act(const PermA& w, const std::vector<Rational>& v);

/// All v in the closed alcove with q v - w.v in Y for some w; sorted.
/// Requires n <= 5, q <= 7, q a prime power. Throws InvariantError unless
/// exactly q^{n-1} points are found.
std::vector<AlcovePoint> stable_points(int n, int q);

struct StabilizerData {
  AlcovePoint point;
  std::vector<PermA> members;            ///< {w : q v - w.v integral}, sorted
  std::vector<std::vector<int>> blocks;  ///< positions grouped by v_i mod 1
  PermA minimal;                         ///< unique shortest member
};

/// Throws InvariantError if the set is empty, is not a left coset of the
/// Young subgroup of the mod-1 blocks, or has two shortest members.
StabilizerData stabilizer_set(const AlcovePoint& p, int q);

/// Uniform over stable points, pushed through the shortest stabilizing element.
MeasureA refined_measure(int n, int q);

/// Class pushforward of refined_measure equals the SL(n, q) class distribution.
bool refinement_class_consistency(int n, int q);

}  // namespace cellini
