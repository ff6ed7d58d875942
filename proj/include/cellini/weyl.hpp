#pragma once

// Elements of the Weyl groups of type A_{n-1} (permutations of 1..n) and
// C_n (signed permutations), with descent and cycle statistics.
//
// Permutations are stored in one-line form: images()[i-1] = w(i).
// Products compose right to left: (u * v)(i) = u(v(i)).

#include <compare>
#include <string>
#include <vector>

#include "cellini/numtheory.hpp"

namespace cellini {

enum class WeylType { A, C };

std::string to_string(WeylType t);
WeylType parse_weyl_type(const std::string& s);

class PermA {
 public:
  /// Throws std::invalid_argument unless images is a permutation of 1..n.
  explicit PermA(std::vector<int> images);
  static PermA identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  PermA inverse() const;
  /// Inversion count, the Coxeter length.
  int length() const;
  std::string to_string() const;

  friend PermA operator*(const PermA& u, const PermA& v);
  auto operator<=>(const PermA&) const = default;

 private:
  std::vector<int> images_;
};

class PermC {
 public:
  /// Throws std::invalid_argument unless |images| is a permutation of 1..n.
  explicit PermC(std::vector<int> images);
  static PermC identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  /// Defined for i in [-n, -1] u [1, n] via w(-i) = -w(i).
  int operator()(int i) const {
    return i > 0 ? images_[static_cast<std::size_t>(i - 1)] : -images_[static_cast<std::size_t>(-i - 1)];
  }
  const std::vector<int>& images() const { return images_; }

  PermC inverse() const;
  /// Underlying permutation of absolute values.
  PermA unsigned_part() const;
  std::string to_string() const;

  friend PermC operator*(const PermC& u, const PermC& v);
  auto operator<=>(const PermC&) const = default;

 private:
  std::vector<int> images_;
};

struct DescentStatsA {
  std::vector<int> descents;  ///< positions i < n with w(i) > w(i+1)
  int d = 0;
  bool affine_descent = false;  ///< alpha_0 = e_n - e_1 sent negative: w(n) > w(1)
  int cd = 0;
  int maj = 0;
  int length = 0;
};

struct DescentStatsC {
  std::vector<int> descents;  ///< positions 1..n, position n iff w(n) < 0
  int d = 0;
  bool affine_descent = false;  ///< alpha_0 = -2e_1 sent negative: w(1) > 0
  int cd = 0;
};

DescentStatsA descent_stats(const PermA& w);
/// Uses the order 1 < 2 < ... < n < -n < ... < -1 on values.
DescentStatsC descent_stats(const PermC& w);

/// Conjugacy class label. Type A: the cycle-length partition. Type C: the
/// lengths of positive cycles and of negative cycles as two partitions, so
/// lambda_i (mu_i) is the multiplicity of i in positive (negative).
struct ClassLabel {
  WeylType type = WeylType::A;
  nt::Partition positive;
  nt::Partition negative;

  static ClassLabel type_a(nt::Partition cycles);
  static ClassLabel type_c(nt::Partition positive, nt::Partition negative);
  /// Point mass label of the identity of A_{n-1} or C_n.
  static ClassLabel identity(WeylType t, int n);

  /// n, i.e. sum of i * (lambda_i + mu_i).
  int weight() const;
  std::string to_string() const;

  auto operator<=>(const ClassLabel&) const = default;
};

ClassLabel cycle_type(const PermA& w);
/// A cycle of |w| is negative iff the product of signs along it is -1.
ClassLabel cycle_type(const PermC& w);

/// A cycle relabelled by the order-preserving bijection of its support onto
/// 1..k, written starting from 1: word[j] -> word[j+1] -> ... -> word[0].
struct CycleShape {
  std::vector<int> word;

  int size() const { return static_cast<int>(word.size()); }
  /// The cycle as an element of S_k.
  PermA as_permutation() const;
  std::string to_string() const;

  auto operator<=>(const CycleShape&) const = default;
};

using ShapeMultiset = std::vector<CycleShape>;  ///< sorted ascending

/// Cycles of w as sequences i, w(i), w(w(i)), ..., each starting at its minimum,
/// ordered by minimum.
std::vector<std::vector<int>> cycles(const PermA& w);
ShapeMultiset cycle_shape_multiset(const PermA& w);
std::string to_string(const ShapeMultiset& shapes);

/// Group order n! or 2^n n!; throws SizeGuardError beyond 10^7.
long long group_order(WeylType t, int n);

/// All elements, lexicographic in one-line notation (signed entries compared
/// as integers). Throws SizeGuardError when the group has more than 10^7 elements.
std::vector<PermA> enumerate_A(int n);
std::vector<PermC> enumerate_C(int n);

template <class Perm>
std::vector<Perm> enumerate_group(int n);
template <>
inline std::vector<PermA> enumerate_group<PermA>(int n) { return enumerate_A(n); }
template <>
inline std::vector<PermC> enumerate_group<PermC>(int n) { return enumerate_C(n); }

template <class Perm>
constexpr WeylType weyl_type_of();
template <>
constexpr WeylType weyl_type_of<PermA>() { return WeylType::A; }
template <>
constexpr WeylType weyl_type_of<PermC>() { return WeylType::C; }

}  // namespace cellini
