#include "cellini/measure.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

#include "cellini/numtheory.hpp"
#include "cellini/root_datum.hpp"

namespace cellini {

Rational ClassMeasure::at(const ClassLabel& c) const {
  const auto it = values_.find(c);
  return it == values_.end() ? Rational(0) : it->second;
}

void ClassMeasure::add(const ClassLabel& c, const Rational& v) {
  if (v == 0) return;
  auto& slot = values_[c];
  slot += v;
  if (slot == 0) values_.erase(c);
}

Rational ClassMeasure::total() const {
  Rational s = 0;
  for (const auto& [c, v] : values_) s += v;
  return s;
}

std::vector<ValueDiff<ClassLabel>> diff(const ClassMeasure& a, const ClassMeasure& b) {
  std::map<ClassLabel, ValueDiff<ClassLabel>> out;
  for (const auto& [c, v] : a.entries())
    if (b.at(c) != v) out.emplace(c, ValueDiff<ClassLabel>{c, v, b.at(c)});
  for (const auto& [c, v] : b.entries())
    if (a.at(c) != v) out.emplace(c, ValueDiff<ClassLabel>{c, a.at(c), v});
  std::vector<ValueDiff<ClassLabel>> list;
  for (auto& [c, d] : out) list.push_back(std::move(d));
  return list;
}

XkMethod parse_xk_method(const std::string& s) {
  if (s == "closed" || s == "closed_form") return XkMethod::closed_form;
  if (s == "definition") return XkMethod::definition;
  throw std::invalid_argument("unknown x_k method: " + s);
}

namespace {

Rational over_power(const BigInt& count, int k, int e) {
  return make_rational(count, nt::pow(k, static_cast<unsigned>(e)));
}

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
}

}  // namespace

TypeAForms xk_coefficient_A_forms(const PermA& w, int k) {
  check_k(k);
  const int n = w.n();
  const auto s = descent_stats(w);
  const int room = k - s.cd;
  const int e = n - 1;
  TypeAForms f;

  f.partitions = over_power(nt::box_partition_count_mod(n - 1, room, -s.maj, n), k, e);
  f.transposed = over_power(nt::box_partition_count_mod(room, n - 1, -s.maj, n), k, e);

  if (room > 0) {
    BigInt sum = 0;
    for (auto d : nt::common_divisors(n, room))
      sum += nt::binomial((n + room - d) / d, room / d) * nt::ramanujan_sum(d, -s.maj);
    f.ramanujan = make_rational(sum, BigInt(n) * nt::pow(k, static_cast<unsigned>(e)));
  } else if (room == 0 && nt::mod(s.maj, n) == 0) {
    f.ramanujan = over_power(1, k, e);
  } else {
    f.ramanujan = 0;
  }

  if (room >= 0) {
    const auto qb = nt::q_binomial(k + n - s.cd - 1, n - 1);
    BigInt sum = 0;
    for (int j = 0; j <= qb.degree(); ++j)
      if ((j + s.maj) % n == 0) sum += qb.coeff(j);
    f.q_extraction = over_power(sum, k, e);
  } else {
    f.q_extraction = 0;
  }
  return f;
}

Rational xk_coefficient_A(const PermA& w, int k) {
  check_k(k);
  const auto s = descent_stats(w);
  const int n = w.n();
  return over_power(nt::box_partition_count_mod(n - 1, k - s.cd, -s.maj, n), k, n - 1);
}

Rational xk_coefficient_C(const PermC& w, int k) {
  check_k(k);
  const auto s = descent_stats(w);
  const int n = w.n();
  const BigInt top = k % 2 == 1 ? nt::binomial((k - 1) / 2 + n - s.d, n) : nt::binomial(k / 2 + n - s.cd, n);
  return over_power(top, k, n);
}

namespace {

// g[S] = sum of hist[I] over subsets I of S.
std::vector<std::uint64_t> subset_sums(std::vector<std::uint64_t> g, int bits) {
  for (int b = 0; b < bits; ++b)
    for (std::size_t s = 0; s < g.size(); ++s)
      if (s & (std::size_t{1} << b)) g[s] += g[s ^ (std::size_t{1} << b)];
  return g;
}

template <class Perm, class Closed>
Measure<Perm> build(int n, int k, XkMethod method, Closed closed) {
  check_k(k);
  const auto elems = enumerate_group<Perm>(n);
  Measure<Perm> m(n);
  m.k = k;
  if (method == XkMethod::closed_form) {
    for (const auto& w : elems) m.set(w, closed(w));
    return m;
  }
  if (weyl_type_of<Perm>() == WeylType::A && n == 1) {
    m.set(elems.front(), 1);
    return m;
  }
  const auto datum = RootDatum::make(weyl_type_of<Perm>(), n);
  const int bits = datum.rank + 1;
  const auto sums = subset_sums(alcove_face_counts(datum, k), bits);
  const std::size_t full = (std::size_t{1} << bits) - 1;
  for (const auto& w : elems) {
    const std::size_t allowed = full & ~static_cast<std::size_t>(cyclic_descent_mask(datum, w));
    m.set(w, over_power(BigInt(static_cast<unsigned long>(sums[allowed])), k, datum.rank));
  }
  return m;
}

}  // namespace

MeasureA xk_measure_A(int n, int k, XkMethod method) {
  return build<PermA>(n, k, method, [k](const PermA& w) { return xk_coefficient_A(w, k); });
}

MeasureC xk_measure_C(int n, int k, XkMethod method) {
  return build<PermC>(n, k, method, [k](const PermC& w) { return xk_coefficient_C(w, k); });
}

std::vector<std::complex<double>> approximate_eigenvalues(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues of a non-square matrix");
  const auto size = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd a(size, size);
  for (Eigen::Index r = 0; r < size; ++r)
    for (Eigen::Index c = 0; c < size; ++c)
      a(r, c) = to_double(m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < size; ++i) out.push_back(solver.eigenvalues()(i));
  std::stable_sort(out.begin(), out.end(), [](auto x, auto y) { return std::abs(x) > std::abs(y); });
  return out;
}

}  // namespace cellini
