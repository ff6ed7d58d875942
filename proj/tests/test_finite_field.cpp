#include <catch_amalgamated.hpp>

#include "cellini/errors.hpp"
#include "cellini/finite_field.hpp"
#include "cellini/numtheory.hpp"
#include "oracles.hpp"

using namespace cellini;
using namespace cellini::ff;

namespace {

constexpr int kFields[] = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64};

std::vector<FqPoly> all_monic(int q, int d) {
  std::vector<FqPoly> out;
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(q);
  for (std::uint64_t c = 0; c < total; ++c) out.push_back(monic_from_code(q, d, c));
  return out;
}

// Irreducible iff no monic factor of degree 1..d/2 divides it.
bool irreducible_oracle(const Fq& f, const FqPoly& a) {
  for (int e = 1; 2 * e <= a.degree(); ++e)
    for (const auto& g : all_monic(f.q(), e))
      if (divmod(f, a, g).second.is_zero()) return false;
  return a.degree() >= 1;
}

}  // namespace

TEST_CASE("field axioms") {
  for (int q : kFields) {
    const auto f = Fq::make(q);
    INFO("q=" << q);
    REQUIRE(f.order(f.generator()) == q - 1);
    for (Elem g = 1; g < f.generator(); ++g) REQUIRE(f.order(g) < q - 1);
    for (Elem a = 0; a < q; ++a) {
      REQUIRE(f.add(a, f.neg(a)) == 0);
      REQUIRE(f.add(a, 0) == a);
      REQUIRE(f.mul(a, 1) == a);
      if (a != 0) {
        REQUIRE(f.mul(a, f.inv(a)) == 1);
        REQUIRE(f.pow(f.generator(), static_cast<std::uint64_t>(f.log(a))) == a);
      }
      for (Elem b = 0; b < q; ++b) {
        REQUIRE(f.add(a, b) == f.add(b, a));
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        for (Elem c = 0; c < q; c += 3) {
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
      }
    }
  }
  CHECK_THROWS_AS(Fq::make(6), std::invalid_argument);
  CHECK_THROWS_AS(Fq::make(81), std::invalid_argument);
  CHECK_THROWS_AS(Fq::make(3).inv(0), std::domain_error);
}

TEST_CASE("field examples") {
  CHECK(Fq::make(2).generator() == 1);
  CHECK(Fq::make(4).modulus() == std::vector<int>{1, 1, 1});
  const auto f9 = Fq::make(9);
  // Lex-least monic irreducible quadratic over F_3, constant term first.
  std::vector<int> least;
  for (int c0 = 0; c0 < 3 && least.empty(); ++c0)
    for (int c1 = 0; c1 < 3 && least.empty(); ++c1) {
      bool root = false;
      for (int x = 0; x < 3; ++x) root = root || (x * x + c1 * x + c0) % 3 == 0;
      if (!root) least = {c0, c1, 1};
    }
  CHECK(f9.modulus() == least);
}

TEST_CASE("irreducible polynomials") {
  const auto f2 = Fq::make(2);
  CHECK(irreducibles(f2, 3) == std::vector<FqPoly>{FqPoly({1, 1, 0, 1}), FqPoly({1, 0, 1, 1})});
  CHECK(irreducibles(f2, 1) == std::vector<FqPoly>{FqPoly({0, 1}), FqPoly({1, 1})});
  CHECK(irreducibles(Fq::make(3), 2).size() == 3);
  for (int q : {2, 3, 4, 5, 7, 8, 9})
    for (int d = 1; d <= 6; ++d) {
      std::uint64_t size = 1;
      for (int i = 0; i < d; ++i) size *= static_cast<std::uint64_t>(q);
      if (size > 600000) continue;
      const auto f = Fq::make(q);
      INFO("q=" << q << " d=" << d);
      REQUIRE(BigInt(irreducibles(f, d).size()) == irreducible_count_formula(q, d));
    }
  for (int q : {2, 3, 4}) {
    const auto f = Fq::make(q);
    for (int d = 1; d <= 4; ++d) {
      std::vector<FqPoly> expect;
      for (const auto& g : all_monic(q, d))
        if (irreducible_oracle(f, g)) expect.push_back(g);
      REQUIRE(irreducibles(f, d) == expect);
      for (const auto& g : all_monic(q, d)) REQUIRE(is_irreducible(f, g) == irreducible_oracle(f, g));
    }
  }
}

TEST_CASE("factorization") {
  const auto f2 = Fq::make(2);
  CHECK(factor(f2, FqPoly({1, 0, 0, 1})) == Factorization{{FqPoly({1, 1}), 1}, {FqPoly({1, 1, 1}), 1}});
  CHECK(factor(f2, FqPoly({1, 0, 1, 1})) == Factorization{{FqPoly({1, 0, 1, 1}), 1}});
  CHECK(factor(Fq::make(5), FqPoly({0, 1})) == Factorization{{FqPoly({0, 1}), 1}});
  for (int q : {2, 3, 4, 5}) {
    const auto f = Fq::make(q);
    Factorizer fz(f);
    for (int d = 1; d <= 6; ++d) {
      if (q == 5 && d == 6) continue;
      for (const auto& g : all_monic(q, d)) {
        const auto fac = fz.factor(g);
        REQUIRE(expand(f, fac) == g);
        int deg = 0;
        for (const auto& [p, mult] : fac) {
          REQUIRE(p.is_monic());
          deg += p.degree() * mult;
        }
        REQUIRE(deg == d);
        if (d <= 4) {
          const auto r = oracle::roots(f, g);
          for (const auto& [a, mult] : r) {
            const FqPoly lin({f.neg(a), 1});
            const auto it = std::find_if(fac.begin(), fac.end(), [&](const Factor& x) { return x.poly == lin; });
            REQUIRE(it != fac.end());
            REQUIRE(it->multiplicity == mult);
          }
        }
      }
    }
  }
  const auto fac5 = factor(Fq::make(5), FqPoly({0, 1}));
  CHECK(fac5.size() == 1);
}

TEST_CASE("conjugations") {
  const auto f3 = Fq::make(3);
  const FqPoly zm1({f3.neg(1), 1});
  CHECK(reciprocal_conjugate(f3, zm1) == zm1);
  const auto f2 = Fq::make(2);
  CHECK(reciprocal_conjugate(f2, FqPoly({1, 1, 1})) == FqPoly({1, 1, 1}));
  CHECK(reciprocal_conjugate(f3, FqPoly({1, 2, 0, 2, 1})) == FqPoly({1, 2, 0, 2, 1}));
  CHECK(sign_conjugate(f3, FqPoly({1, 0, 1})) == FqPoly({1, 0, 1}));
  const auto f7 = Fq::make(7);
  CHECK(sign_conjugate(f7, FqPoly({f7.neg(3), 1})) == FqPoly({3, 1}));
  for (const auto& g : all_monic(2, 4)) CHECK(sign_conjugate(f2, g) == g);

  for (int q : {2, 3, 4, 5}) {
    const auto f = Fq::make(q);
    for (int d = 1; d <= 5; ++d)
      for (const auto& g : all_monic(q, d)) {
        REQUIRE(sign_conjugate(f, sign_conjugate(f, g)) == g);
        const bool irr = is_irreducible(f, g);
        REQUIRE(is_irreducible(f, sign_conjugate(f, g)) == irr);
        if (g.coeff(0) == 0) continue;
        REQUIRE(reciprocal_conjugate(f, reciprocal_conjugate(f, g)) == g);
        REQUIRE(is_irreducible(f, reciprocal_conjugate(f, g)) == irr);
      }
  }
}

TEST_CASE("self-reciprocal and even irreducible counts") {
  CHECK(count_selfreciprocal_irreducibles(3, 1) == 2);
  CHECK(count_selfreciprocal_irreducibles(3, 3) == 0);
  CHECK(count_selfreciprocal_irreducibles(3, 2) == 1);
  for (int q : {2, 3, 4, 5}) {
    const auto f = Fq::make(q);
    for (int n = 1; n <= 8; ++n) {
      if (q == 5 && n == 8) continue;
      INFO("q=" << q << " n=" << n);
      REQUIRE(count_selfreciprocal_irreducibles(q, n) == count_selfreciprocal_irreducibles_enumerated(f, n));
    }
  }
  for (int q : {3, 5}) {
    const auto f = Fq::make(q);
    for (int m = 1; m <= 3; ++m)
      REQUIRE(count_selfreciprocal_irreducibles_enumerated(f, 2 * m) == count_even_irreducibles_enumerated(f, 2 * m));
  }
}

TEST_CASE("self-reciprocal count at q = 5, n = 8") {
  // Enumeration over 5^8 polynomials; kept separate so failures are localized.
  const auto f = Fq::make(5);
  CHECK(count_selfreciprocal_irreducibles(5, 8) == count_selfreciprocal_irreducibles_enumerated(f, 8));
}

TEST_CASE("transitive unimodal counts") {
  CHECK(count_transitive_unimodal(1) == 1);
  CHECK(count_transitive_unimodal(4) == 2);
  CHECK(count_transitive_unimodal(6) == 5);
}

TEST_CASE("norm histograms") {
  const auto f2 = Fq::make(2);
  for (int i = 1; i <= 6; ++i) {
    const auto h = irreducible_count_by_norm(f2, i);
    REQUIRE(h.size() == 1);
    BigInt expect = irreducible_count_formula(2, i) - (i == 1 ? 1 : 0);
    REQUIRE(h.at(0) == expect);
  }
  const auto f3 = Fq::make(3);
  const auto h1 = irreducible_count_by_norm(f3, 1);
  CHECK(h1.at(0) == 1);
  CHECK(h1.at(1) == 1);
  for (int q : {3, 4, 5, 7, 9}) {
    const auto f = Fq::make(q);
    for (int i = 1; i <= 4; ++i) {
      std::uint64_t size = 1;
      for (int j = 0; j < i; ++j) size *= static_cast<std::uint64_t>(q);
      if (size > 1000000) continue;
      INFO("q=" << q << " i=" << i);
      REQUIRE(irreducible_count_by_norm(f, i) == necklace_norm_histogram(q, i));
    }
  }
}

TEST_CASE("prime powers") {
  CHECK(prime_power(27) == std::pair{3, 3});
  CHECK(is_prime_power(49));
  CHECK_FALSE(is_prime_power(12));
  CHECK_FALSE(is_prime_power(1));
}
