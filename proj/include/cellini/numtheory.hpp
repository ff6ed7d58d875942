#pragma once

// Exact number-theoretic primitives: Möbius function, Ramanujan sums,
// Von Sterneck multiset counts, Gaussian binomials and necklace counts.
// Everything is integer or rational; no floating point.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cellini/rational.hpp"

namespace cellini::nt {

/// Least nonnegative residue of n mod m (m >= 1).
std::int64_t mod(std::int64_t n, std::int64_t m);

int mobius(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::int64_t> common_divisors(std::int64_t a, std::int64_t b);

/// Binomial coefficient; zero when b < 0 or b > a. Requires a >= 0.
BigInt binomial(std::int64_t a, std::int64_t b);
BigInt pow(std::int64_t base, unsigned exp);

/// C_m(n) = sum over d | gcd(m, n) of d * mu(m / d).
std::int64_t ramanujan_sum(std::int64_t m, std::int64_t n);

/// Number of size-k multisets from {0, ..., m-1} whose sum is n mod m,
/// via the Von Sterneck closed form. Requires m >= 1, k >= 1.
BigInt von_sterneck_count(std::int64_t n, std::int64_t m, std::int64_t k);

/// Whether von_sterneck_count(n, y, x) == von_sterneck_count(n, x, y).
bool reciprocity_check(std::int64_t x, std::int64_t y, std::int64_t n);

/// Dense integer polynomial, coefficient of q^j at index j, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(std::int64_t j) const;
  BigInt eval(const BigInt& x) const;
  std::string to_string() const;

  bool operator==(const IntPoly&) const = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Gaussian binomial [a choose b]_q; zero polynomial when b > a.
IntPoly q_binomial(std::int64_t a, std::int64_t b);

/// Partitions with at most parts_max parts, each at most size_max, with
/// total congruent to residue mod modulus.
BigInt box_partition_count_mod(std::int64_t parts_max, std::int64_t size_max,
                               std::int64_t residue, std::int64_t modulus);

/// Coefficient of z^n in (1 + z + ... + z^(k-1))^d: words of length d over
/// {0, ..., k-1} with symbol sum n.
BigInt f_coeff(std::int64_t n, std::int64_t k, std::int64_t d);

/// Aperiodic necklaces of length i over {0, ..., k-1} with symbol sum m:
/// (1/i) sum over d | gcd(i, m) of mu(d) f_coeff(m/d, k, i/d).
BigInt aperiodic_necklace_count(std::int64_t i, std::int64_t k, std::int64_t m);

/// Aperiodic necklaces of length i over k symbols, any sum.
BigInt aperiodic_necklace_total(std::int64_t i, std::int64_t k);

/// Weakly decreasing list of positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Sorts descending and drops zero parts; throws on negative parts.
  explicit Partition(std::vector<int> raw);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
};

}  // namespace cellini::nt
