#pragma once

// Card shuffles realized through the pile-label word model, the
// Gessel-Reutenauer correspondence, unimodal permutations and cycle shapes.
//
// A shuffle result is an arrangement: position i (1 = top) holds card w(i).
// For the type C shuffle a negative entry is a face-up card.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cellini/measure.hpp"
#include "cellini/weyl.hpp"

namespace cellini {

enum class ShuffleFamily { GSR, TypeC, HalfAndFlip };

struct ShuffleKind {
  ShuffleFamily family = ShuffleFamily::GSR;
  int k = 2;

  static ShuffleKind gsr(int k) { return {ShuffleFamily::GSR, k}; }
  static ShuffleKind type_c(int k) { return {ShuffleFamily::TypeC, k}; }
  static ShuffleKind half_and_flip() { return {ShuffleFamily::HalfAndFlip, 2}; }

  std::string to_string() const;
};

/// "gsr", "typec" or "halfflip".
ShuffleKind parse_shuffle_kind(const std::string& name, int k);

using Word = std::vector<int>;  ///< pile labels 0..k-1, one per output position

/// Pile a holds the next block of cards; position i takes the next card of
/// pile word[i].
PermA gsr_arrangement(const Word& word, int k);
/// As gsr_arrangement, but piles numbered 2, 4, ... (k odd) or 1, 3, ...
/// (k even) are turned over: reversed and negated.
PermC type_c_arrangement(const Word& word, int k);
/// Binary word with an even number j2 = 2j of ones. Pile 1 holds j+1..N-j,
/// pile 2 holds N-j+1..N followed by 1..j. Throws on odd parity.
PermA half_and_flip_arrangement(const Word& word);

/// Exact distributions by enumerating all k^n words (2^{N-1} even-parity
/// words for the half-and-flip shuffle). Guard: k^n <= 10^7.
MeasureA gsr_distribution(int n, int k);
MeasureC type_c_distribution(int n, int k);
MeasureA half_and_flip_distribution(int n);

using ShuffleResult = std::variant<PermA, PermC>;

/// Distribution of kind on n cards.
std::variant<MeasureA, MeasureC> exact_distribution(const ShuffleKind& kind, int n);

/// Deterministic sampler; the seed fixes the whole stream.
class ShuffleSampler {
 public:
  ShuffleSampler(ShuffleKind kind, int n, std::uint64_t seed);
  ShuffleResult next();

 private:
  ShuffleKind kind_;
  int n_;
  std::mt19937_64 rng_;
};

/// (1/k^n) binomial(n + k - d(w^{-1}) - 1, n): the GSR probability of the
/// arrangement w.
Rational gsr_probability(const PermA& w, int k);

// ---- Gessel-Reutenauer ----

/// Rank of each letter, ties broken left to right.
PermA standard_permutation(const std::string& word);
/// Necklaces in least rotation, sorted.
using NecklaceMultiset = std::vector<std::string>;
/// Cycles of st(w) with each position replaced by its letter.
NecklaceMultiset gr_necklace_multiset(const std::string& word);

// ---- unimodal permutations ----

/// Increasing then decreasing one-line form; lexicographic order. 2^{n-1} <= 10^6.
std::vector<PermA> unimodal_enumerate(int n);
bool is_unimodal(const PermA& w);
/// Unimodal n-cycles counted by enumeration.
std::uint64_t transitive_unimodal_enumerated(int n);

/// Number of unimodal permutations realizing each multiset of cycle shapes.
std::map<ShapeMultiset, std::uint64_t> gannon_census(int n);
/// Number of distinct shapes in the multiset.
int distinct_shapes(const ShapeMultiset& s);

/// Exact fraction of unimodal permutations of S_n with a fixed point.
Rational fixed_point_fraction_unimodal(int n);

/// Whether w is an arrangement produced by the type C 2-shuffle.
bool in_type_c2_support(const PermC& w);
/// Invert, forget signs, conjugate by i -> n+1-i. Throws outside the support.
PermA eta(const PermC& w);

// ---- cycle shapes under the GSR shuffle ----

/// Exact law of cycle_shape_multiset under the GSR k-shuffle; k^n <= 10^7.
std::map<ShapeMultiset, Rational> shape_distribution(int n, int k);
/// (1/k^n) prod over distinct shapes s of multichoose(binomial(|s|+k-d(s^{-1})-1, |s|), n_s).
Rational shape_product_formula(const ShapeMultiset& shapes, int k);

}  // namespace cellini
