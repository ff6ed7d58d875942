#pragma once

// Finite fields F_q (q = p^m <= 64) with table arithmetic, monic polynomials
// over them, factorization by trial division, and the counting identities for
// irreducible polynomials.
//
// A field element is an index in [0, q): the residue class of
// c_0 + c_1 x + ... + c_{m-1} x^{m-1} has index c_0 + c_1 p + ... .

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cellini/rational.hpp"

namespace cellini::ff {

using Elem = int;

class Fq {
 public:
  /// Throws std::invalid_argument unless q is a prime power <= 64.
  static Fq make(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return m_; }
  /// Monic irreducible over F_p defining the field, constant term first.
  const std::vector<int>& modulus() const { return modulus_; }
  /// Least element of multiplicative order q - 1.
  Elem generator() const { return generator_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[static_cast<std::size_t>(a)]; }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(long long n) const;
  /// Discrete logarithm base generator(); throws on zero.
  int log(Elem a) const;
  int order(Elem a) const;

 private:
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b); }

  int q_ = 0, p_ = 0, m_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_, log_;
  Elem generator_ = 0;
};

/// Polynomial over F_q, constant term first, no trailing zeros.
struct FqPoly {
  std::vector<Elem> c;

  FqPoly() = default;
  explicit FqPoly(std::vector<Elem> coeffs);
  static FqPoly monomial(int degree);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Elem coeff(int i) const { return i < 0 || i >= static_cast<int>(c.size()) ? 0 : c[static_cast<std::size_t>(i)]; }
  Elem lead() const { return c.empty() ? 0 : c.back(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  /// Lower coefficients of a monic polynomial read as base-q digits.
  std::uint64_t code(int q) const;
  std::string to_string() const;

  auto operator<=>(const FqPoly&) const = default;
};

/// Monic polynomial of degree d whose lower coefficients are the base-q digits of code.
FqPoly monic_from_code(int q, int d, std::uint64_t code);

FqPoly add(const Fq& f, const FqPoly& a, const FqPoly& b);
FqPoly mul(const Fq& f, const FqPoly& a, const FqPoly& b);
/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<FqPoly, FqPoly> divmod(const Fq& f, const FqPoly& a, const FqPoly& b);
FqPoly pow(const Fq& f, const FqPoly& a, unsigned e);
Elem eval(const Fq& f, const FqPoly& a, Elem x);
FqPoly make_monic(const Fq& f, FqPoly a);

/// All monic irreducibles of degree d in code order; q^d <= 10^7.
std::vector<FqPoly> irreducibles(const Fq& f, int d);
/// (1/d) sum over e | d of mu(e) q^(d/e).
BigInt irreducible_count_formula(int q, int d);
bool is_irreducible(const Fq& f, const FqPoly& a);

struct Factor {
  FqPoly poly;
  int multiplicity = 0;
  auto operator<=>(const Factor&) const = default;
};
/// Distinct monic irreducible factors sorted by (degree, code).
using Factorization = std::vector<Factor>;

/// Trial division against cached tables of irreducibles. Reuse one instance
/// when factoring many polynomials of the same field.
class Factorizer {
 public:
  explicit Factorizer(Fq field) : field_(std::move(field)) {}
  const Fq& field() const { return field_; }
  /// f monic of degree >= 1. Throws InvariantError if the product of the
  /// factors does not reproduce f.
  Factorization factor(const FqPoly& f);

 private:
  const std::vector<FqPoly>& table(int d);
  Fq field_;
  std::map<int, std::vector<FqPoly>> tables_;
};

Factorization factor(const Fq& f, const FqPoly& a);
FqPoly expand(const Fq& f, const Factorization& fac);

/// f(0)^{-1} z^deg f(1/z); requires f monic with f(0) != 0.
FqPoly reciprocal_conjugate(const Fq& f, const FqPoly& a);
/// (-1)^deg f(-z); requires f monic.
FqPoly sign_conjugate(const Fq& f, const FqPoly& a);

/// Monic irreducibles of degree n fixed by reciprocal_conjugate, closed formula.
BigInt count_selfreciprocal_irreducibles(int q, int n);
/// The same count by enumeration.
BigInt count_selfreciprocal_irreducibles_enumerated(const Fq& f, int n);
/// Monic irreducibles of degree n with f(z) = sign_conjugate(f), by enumeration.
BigInt count_even_irreducibles_enumerated(const Fq& f, int n);

/// (1/2n) sum over odd d | n of mu(d) 2^(n/d).
BigInt count_transitive_unimodal(int n);

/// Histogram of norms (-1)^i f(0), keyed by discrete log base the generator,
/// over monic irreducibles of degree i other than z. Requires q^i <= 10^6.
std::map<int, BigInt> irreducible_count_by_norm(const Fq& f, int i);
/// Aperiodic necklaces of length i over q symbols with nonzero digit sum,
/// grouped by digit sum mod q - 1.
std::map<int, BigInt> necklace_norm_histogram(int q, int i);

/// p and m with q = p^m, or throws std::invalid_argument.
std::pair<int, int> prime_power(int q);
bool is_prime_power(int q);

}  // namespace cellini::ff
