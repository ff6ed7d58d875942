#pragma once

// Probability measures on W, the elements x_k, and conjugacy-class
// pushforwards.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cellini/errors.hpp"
#include "cellini/linalg.hpp"
#include "cellini/rational.hpp"
#include "cellini/weyl.hpp"

namespace cellini {

/// Finitely supported map W -> Q. Absent elements have value 0, and equality
/// ignores explicitly stored zeros.
template <class Perm>
class Measure {
 public:
  explicit Measure(int n = 1) : n_(n) {}

  static Measure point_mass(const Perm& w) {
    Measure m(w.n());
    m.set(w, 1);
    return m;
  }

  static Measure uniform(int n) {
    const auto elems = enumerate_group<Perm>(n);
    Measure m(n);
    const Rational each(1, static_cast<unsigned long>(elems.size()));
    for (const auto& w : elems) m.set(w, each);
    return m;
  }

  int n() const { return n_; }
  static constexpr WeylType type() { return weyl_type_of<Perm>(); }

  Rational at(const Perm& w) const {
    const auto it = values_.find(w);
    return it == values_.end() ? Rational(0) : it->second;
  }

  void set(const Perm& w, Rational v) {
    check(w);
    values_[w] = std::move(v);
  }

  void add(const Perm& w, const Rational& v) {
    check(w);
    values_[w] += v;
  }

  const std::map<Perm, Rational>& entries() const { return values_; }

  Rational total() const {
    Rational s = 0;
    for (const auto& [w, v] : values_) s += v;
    return s;
  }

  friend bool operator==(const Measure& a, const Measure& b) {
    if (a.n_ != b.n_) return false;
    for (const auto& [w, v] : a.values_)
      if (b.at(w) != v) return false;
    for (const auto& [w, v] : b.values_)
      if (a.at(w) != v) return false;
    return true;
  }

  /// Set by the x_k constructors; reported in serialized output.
  std::optional<int> k;

 private:
  void check(const Perm& w) const {
    if (w.n() != n_) throw std::invalid_argument("element outside the measure's group");
  }

  int n_;
  std::map<Perm, Rational> values_;
};

using MeasureA = Measure<PermA>;
using MeasureC = Measure<PermC>;

/// Map ClassLabel -> Q with zero entries removed.
class ClassMeasure {
 public:
  Rational at(const ClassLabel& c) const;
  void add(const ClassLabel& c, const Rational& v);
  const std::map<ClassLabel, Rational>& entries() const { return values_; }
  Rational total() const;
  bool operator==(const ClassMeasure&) const = default;

 private:
  std::map<ClassLabel, Rational> values_;
};

template <class Key>
struct ValueDiff {
  Key key;
  Rational left;
  Rational right;
};

/// Keys where the two measures disagree, in key order.
template <class Perm>
std::vector<ValueDiff<Perm>> diff(const Measure<Perm>& a, const Measure<Perm>& b) {
  std::map<Perm, ValueDiff<Perm>> out;
  for (const auto& [w, v] : a.entries())
    if (b.at(w) != v) out.emplace(w, ValueDiff<Perm>{w, v, b.at(w)});
  for (const auto& [w, v] : b.entries())
    if (a.at(w) != v) out.emplace(w, ValueDiff<Perm>{w, a.at(w), v});
  std::vector<ValueDiff<Perm>> list;
  for (auto& [w, d] : out) list.push_back(std::move(d));
  return list;
}

std::vector<ValueDiff<ClassLabel>> diff(const ClassMeasure& a, const ClassMeasure& b);

// ---- x_k ----

enum class XkMethod { closed_form, definition };
XkMethod parse_xk_method(const std::string& s);

/// The four expressions for the type A coefficient of w in x_k.
struct TypeAForms {
  Rational partitions;    ///< at most n-1 parts of size at most k-cd
  Rational transposed;    ///< at most k-cd parts of size at most n-1
  Rational ramanujan;     ///< Ramanujan-sum expression with its boundary cases
  Rational q_extraction;  ///< coefficients of q^{rn} in q^maj [k+n-cd-1 choose n-1]_q

  bool agree() const {
    return partitions == transposed && partitions == ramanujan && partitions == q_extraction;
  }
};

TypeAForms xk_coefficient_A_forms(const PermA& w, int k);
Rational xk_coefficient_A(const PermA& w, int k);
Rational xk_coefficient_C(const PermC& w, int k);

/// Dense x_k over the whole group. The definition method sums lattice-point
/// counts over faces of the dilated alcove and is limited to rank 5.
MeasureA xk_measure_A(int n, int k, XkMethod method = XkMethod::closed_form);
MeasureC xk_measure_C(int n, int k, XkMethod method = XkMethod::closed_form);

template <class Perm>
Measure<Perm> xk_measure(int n, int k, XkMethod method = XkMethod::closed_form);
template <>
inline MeasureA xk_measure<PermA>(int n, int k, XkMethod method) { return xk_measure_A(n, k, method); }
template <>
inline MeasureC xk_measure<PermC>(int n, int k, XkMethod method) { return xk_measure_C(n, k, method); }

// ---- group algebra ----

/// Coefficient of w is the sum over u v = w of m1(u) m2(v).
template <class Perm>
Measure<Perm> convolve(const Measure<Perm>& m1, const Measure<Perm>& m2) {
  if (m1.n() != m2.n()) throw std::invalid_argument("convolution of measures on different groups");
  Measure<Perm> out(m1.n());
  for (const auto& [u, a] : m1.entries()) {
    if (a == 0) continue;
    for (const auto& [v, b] : m2.entries()) {
      if (b == 0) continue;
      out.add(u * v, a * b);
    }
  }
  return out;
}

template <class Perm>
ClassMeasure pushforward_classes(const Measure<Perm>& m) {
  ClassMeasure out;
  for (const auto& [w, v] : m.entries()) out.add(cycle_type(w), v);
  return out;
}

template <class Perm>
struct LeftMultMatrix {
  std::vector<Perm> basis;  ///< group elements in enumeration order
  RationalMatrix matrix;    ///< column v holds the distribution of u v under m
};

/// Left multiplication by sum m(u) u in the group-element basis; |W| <= 384.
template <class Perm>
LeftMultMatrix<Perm> left_mult_matrix(const Measure<Perm>& m) {
  const long long order = group_order(weyl_type_of<Perm>(), m.n());
  if (order > 384) throw SizeGuardError("left multiplication matrix limited to groups of order 384");
  LeftMultMatrix<Perm> out{enumerate_group<Perm>(m.n()), {}};
  const auto size = out.basis.size();
  out.matrix = RationalMatrix(size, size);
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < size; ++i) index.emplace(out.basis[i], i);
  for (const auto& [u, a] : m.entries()) {
    if (a == 0) continue;
    for (std::size_t col = 0; col < size; ++col) out.matrix(index.at(u * out.basis[col]), col) += a;
  }
  return out;
}

/// Floating-point spectrum, sorted by decreasing modulus. Exploratory output
/// only; nothing in the verification path depends on it.
std::vector<std::complex<double>> approximate_eigenvalues(const RationalMatrix& m);

}  // namespace cellini
