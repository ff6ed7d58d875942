#include <catch_amalgamated.hpp>

#include "cellini/errors.hpp"
#include "cellini/measure.hpp"
#include "cellini/root_datum.hpp"

using namespace cellini;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

ClassLabel label_a(std::vector<int> parts) { return ClassLabel::type_a(nt::Partition(std::move(parts))); }

// x_k straight from the definition, with a_{k,I} summed over every I
// disjoint from the cyclic descent set.
template <class Perm>
Measure<Perm> definition_oracle(int n, int k) {
  const auto datum = RootDatum::make(weyl_type_of<Perm>(), n);
  const auto counts = alcove_face_counts(datum, k);
  BigInt scale = 1;
  for (int i = 0; i < datum.rank; ++i) scale *= k;
  Measure<Perm> m(n);
  for (const auto& w : enumerate_group<Perm>(n)) {
    const IndexSet cdes = cyclic_descent_mask(datum, w);
    BigInt sum = 0;
    for (IndexSet I = 0; I < counts.size(); ++I)
      if ((I & cdes) == 0) sum += counts[I];
    m.set(w, make_rational(sum, scale));
  }
  return m;
}

}  // namespace

TEST_CASE("x_k examples") {
  CHECK(xk_coefficient_A(PermA::identity(3), 2) == q(1, 4));
  CHECK(xk_coefficient_A(PermA({2, 1, 3}), 2) == 0);
  CHECK(xk_coefficient_A(PermA({3, 2, 1}), 2) == q(1, 4));
  CHECK(xk_coefficient_C(PermC::identity(1), 3) == q(2, 3));
  CHECK(xk_coefficient_C(PermC({-1}), 3) == q(1, 3));
  CHECK(xk_coefficient_C(PermC::identity(1), 2) == q(1, 2));

  MeasureA x2(3);
  for (auto img : {std::vector<int>{1, 2, 3}, {3, 2, 1}, {2, 3, 1}, {3, 1, 2}}) x2.set(PermA(img), q(1, 4));
  CHECK(xk_measure_A(3, 2) == x2);
  for (int n = 1; n <= 4; ++n) CHECK(xk_measure_A(n, 1) == MeasureA::point_mass(PermA::identity(n)));
  MeasureC c12(1);
  c12.set(PermC({1}), q(1, 2));
  c12.set(PermC({-1}), q(1, 2));
  CHECK(xk_measure_C(1, 2) == c12);
}

TEST_CASE("x_k is a probability measure") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 6; ++k) REQUIRE(xk_measure_A(n, k).total() == 1);
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 6; ++k) REQUIRE(xk_measure_C(n, k).total() == 1);
}

TEST_CASE("definition agrees with closed forms") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 4; ++k) {
      INFO("A n=" << n << " k=" << k);
      const auto def = xk_measure_A(n, k, XkMethod::definition);
      REQUIRE(def == xk_measure_A(n, k));
      if (n >= 2) REQUIRE(def == definition_oracle<PermA>(n, k));
    }
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k) {
      INFO("C n=" << n << " k=" << k);
      const auto def = xk_measure_C(n, k, XkMethod::definition);
      REQUIRE(def == xk_measure_C(n, k));
      REQUIRE(def == definition_oracle<PermC>(n, k));
    }
}

TEST_CASE("the four type A forms agree") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 6; ++k)
      for (const auto& w : enumerate_A(n)) {
        INFO(w.to_string() << " k=" << k);
        REQUIRE(xk_coefficient_A_forms(w, k).agree());
      }
}

TEST_CASE("odd k type C coefficients depend only on descents") {
  for (int n = 1; n <= 4; ++n)
    for (int k : {1, 3, 5}) {
      std::map<int, Rational> by_d;
      for (const auto& w : enumerate_C(n)) {
        const auto [it, fresh] = by_d.emplace(descent_stats(w).d, xk_coefficient_C(w, k));
        if (!fresh) REQUIRE(it->second == xk_coefficient_C(w, k));
      }
    }
}

TEST_CASE("convolution x_k * x_h = x_kh") {
  for (int k = 1; k <= 9; ++k)
    for (int h = 1; k * h <= 9; ++h) {
      for (int n = 1; n <= 5; ++n)
        REQUIRE(convolve(xk_measure_A(n, k), xk_measure_A(n, h)) == xk_measure_A(n, k * h));
      for (int n = 1; n <= 3; ++n)
        REQUIRE(convolve(xk_measure_C(n, k), xk_measure_C(n, h)) == xk_measure_C(n, k * h));
    }
  const auto m = xk_measure_C(2, 3);
  CHECK(convolve(MeasureC::point_mass(PermC::identity(2)), m) == m);
  CHECK_THROWS_AS(convolve(xk_measure_A(2, 2), xk_measure_A(3, 2)), std::invalid_argument);
}

TEST_CASE("class pushforward") {
  const auto c = pushforward_classes(xk_measure_A(3, 2));
  CHECK(c.entries().size() == 3);
  CHECK(c.at(label_a({1, 1, 1})) == q(1, 4));
  CHECK(c.at(label_a({2, 1})) == q(1, 4));
  CHECK(c.at(label_a({3})) == q(1, 2));
  const auto id = pushforward_classes(MeasureA::point_mass(PermA::identity(4)));
  CHECK(id.entries().size() == 1);
  CHECK(id.at(ClassLabel::identity(WeylType::A, 4)) == 1);
  const auto c1 = pushforward_classes(xk_measure_C(1, 3));
  CHECK(c1.at(ClassLabel::type_c(nt::Partition({1}), {})) == q(2, 3));
  CHECK(c1.at(ClassLabel::type_c({}, nt::Partition({1}))) == q(1, 3));
}

TEST_CASE("measure equality ignores stored zeros") {
  MeasureA a(2), b(2);
  a.set(PermA({2, 1}), 0);
  CHECK(a == b);
  b.add(PermA({1, 2}), q(1, 3));
  const auto d = diff(a, b);
  REQUIRE(d.size() == 1);
  CHECK(d[0].right == q(1, 3));
  CHECK_THROWS_AS(a.set(PermA::identity(3), 1), std::invalid_argument);
}

TEST_CASE("left multiplication matrix") {
  const auto id = left_mult_matrix(MeasureA::point_mass(PermA::identity(3)));
  CHECK(id.matrix == RationalMatrix::identity(6));
  const auto m = left_mult_matrix(xk_measure_A(3, 2));
  for (std::size_t c = 0; c < m.matrix.cols(); ++c) {
    Rational s = 0;
    for (std::size_t r = 0; r < m.matrix.rows(); ++r) s += m.matrix(r, c);
    REQUIRE(s == 1);
  }
  CHECK_THROWS_AS(left_mult_matrix(xk_measure_A(6, 2)), SizeGuardError);
  const auto ev = approximate_eigenvalues(m.matrix);
  REQUIRE(ev.size() == 6);
  CHECK(std::abs(ev.front() - std::complex<double>(1, 0)) < 1e-9);
}

TEST_CASE("method names") {
  CHECK(parse_xk_method("definition") == XkMethod::definition);
  CHECK(parse_xk_method("closed") == XkMethod::closed_form);
  CHECK_THROWS(parse_xk_method("other"));
}
