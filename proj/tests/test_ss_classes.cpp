#include <catch_amalgamated.hpp>

#include "cellini/errors.hpp"
#include "cellini/ss_classes.hpp"
#include "oracles.hpp"

using namespace cellini;
using namespace cellini::ff;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

ClassLabel lab(std::vector<int> pos, std::vector<int> neg) {
  return ClassLabel::type_c(nt::Partition(std::move(pos)), nt::Partition(std::move(neg)));
}

long long ipow(long long b, int e) {
  long long out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

// Factor multiset as a sorted list of polynomials repeated by multiplicity.
std::vector<FqPoly> flatten(const Factorization& fac) {
  std::vector<FqPoly> out;
  for (const auto& [p, m] : fac)
    for (int i = 0; i < m; ++i) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("SL classes") {
  const auto f2 = Fq::make(2);
  CHECK(enumerate_sl(f2, 3) == std::vector<FqPoly>{FqPoly({1, 0, 0, 1}), FqPoly({1, 1, 0, 1}),
                                                   FqPoly({1, 0, 1, 1}), FqPoly({1, 1, 1, 1})});
  CHECK(enumerate_sl(Fq::make(7), 1) == std::vector<FqPoly>{FqPoly({1, 1})});
  CHECK(enumerate_sl(Fq::make(3), 2).size() == 3);
  Factorizer fz(f2);
  CHECK(phi_A(fz, FqPoly({1, 0, 0, 1})) == ClassLabel::type_a(nt::Partition({2, 1})));
  CHECK(phi_A(fz, FqPoly({1, 1, 1, 1})) == ClassLabel::type_a(nt::Partition({1, 1, 1})));
  CHECK(phi_A(fz, FqPoly({1, 1, 0, 1})) == ClassLabel::type_a(nt::Partition({3})));
}

TEST_CASE("SL class counts") {
  for (int qq : {2, 3, 4, 5}) {
    const auto f = Fq::make(qq);
    for (int n = 1; n <= 4; ++n) REQUIRE(static_cast<long long>(enumerate_sl(f, n).size()) == ipow(qq, n - 1));
  }
}

TEST_CASE("Sp classes") {
  const auto f2 = Fq::make(2);
  CHECK(enumerate_sp(f2, 1) == std::vector<FqPoly>{FqPoly({1, 0, 1}), FqPoly({1, 1, 1})});
  const auto f3 = Fq::make(3);
  CHECK(enumerate_sp(f3, 1) == std::vector<FqPoly>{FqPoly({1, 0, 1}), FqPoly({1, 1, 1}), FqPoly({1, 2, 1})});
  for (int qq : {2, 3, 4, 5, 7}) CHECK(enumerate_sp(Fq::make(qq), 1).size() == static_cast<std::size_t>(qq));

  Factorizer fz2(f2);
  CHECK(phi_C(fz2, FqPoly({1, 1, 1})) == lab({}, {1}));
  CHECK(phi_C(fz2, FqPoly({1, 0, 1})) == lab({1}, {}));
  Factorizer fz3(f3);
  CHECK(phi_C(fz3, FqPoly({1, 0, 2, 0, 1})) == lab({2}, {}));
}

TEST_CASE("Sp enumeration matches a direct filter") {
  for (int qq : {2, 3, 4, 5}) {
    const auto f = Fq::make(qq);
    for (int n = 1; n <= 2; ++n) {
      std::vector<FqPoly> expect;
      const long long total = ipow(qq, 2 * n);
      for (long long c = 0; c < total; ++c) {
        const auto g = monic_from_code(qq, 2 * n, static_cast<std::uint64_t>(c));
        if (g.coeff(0) == 0 || reciprocal_conjugate(f, g) != g) continue;
        const auto r = oracle::roots(f, g);
        bool ok = true;
        for (Elem s : {Elem{1}, f.neg(1)}) {
          const auto it = r.find(s);
          if (it != r.end() && it->second % 2 != 0) ok = false;
        }
        if (ok) expect.push_back(g);
      }
      std::sort(expect.begin(), expect.end(), [&](const FqPoly& a, const FqPoly& b) { return a.code(qq) < b.code(qq); });
      INFO("q=" << qq << " n=" << n);
      REQUIRE(enumerate_sp(f, n) == expect);
    }
  }
}

TEST_CASE("sp orbits") {
  const auto f3 = Fq::make(3);
  Factorizer fz(f3);
  CHECK(phi_C_lie(fz, FqPoly({0, 0, 1})) == lab({1}, {}));
  CHECK(phi_C_lie(fz, FqPoly({1, 0, 1})) == lab({}, {1}));
  CHECK(phi_C_lie(fz, FqPoly({2, 0, 1})) == lab({1}, {}));
  CHECK_THROWS_AS(enumerate_sp_lie(Fq::make(4), 1), std::invalid_argument);
}

TEST_CASE("Steinberg counts and closure") {
  for (int qq : {2, 3, 4, 5, 7}) {
    const auto f = Fq::make(qq);
    Factorizer fz(f);
    for (int n = 1; n <= 3; ++n) {
      if (ipow(qq, 2 * n) > 10000000) continue;
      const auto sp = enumerate_sp(f, n);
      REQUIRE(static_cast<long long>(sp.size()) == ipow(qq, n));
      for (const auto& g : sp) {
        const auto fac = fz.factor(g);
        Factorization conj;
        for (const auto& [p, m] : fac) conj.push_back({reciprocal_conjugate(f, p), m});
        REQUIRE(flatten(conj) == flatten(fac));
        REQUIRE(phi_C(fz, g).weight() == n);
      }
      if (qq % 2 == 0) continue;
      const auto lie = enumerate_sp_lie(f, n);
      REQUIRE(static_cast<long long>(lie.size()) == ipow(qq, n));
      for (const auto& g : lie) {
        const auto fac = fz.factor(g);
        Factorization conj;
        for (const auto& [p, m] : fac) conj.push_back({sign_conjugate(f, p), m});
        REQUIRE(flatten(conj) == flatten(fac));
        REQUIRE(phi_C_lie(fz, g).weight() == n);
      }
    }
  }
}

TEST_CASE("class distributions") {
  const auto sl32 = class_distribution(ClassKind::SL, 3, 2);
  CHECK(sl32.at(ClassLabel::type_a(nt::Partition({1, 1, 1}))) == q(1, 4));
  CHECK(sl32.at(ClassLabel::type_a(nt::Partition({2, 1}))) == q(1, 4));
  CHECK(sl32.at(ClassLabel::type_a(nt::Partition({3}))) == q(1, 2));
  const auto sl23 = class_distribution(ClassKind::SL, 2, 3);
  CHECK(sl23.at(ClassLabel::type_a(nt::Partition({1, 1}))) == q(2, 3));
  CHECK(sl23.at(ClassLabel::type_a(nt::Partition({2}))) == q(1, 3));
  const auto sp13 = class_distribution(ClassKind::Sp, 1, 3);
  CHECK(sp13.at(lab({1}, {})) == q(2, 3));
  CHECK(sp13.at(lab({}, {1})) == q(1, 3));
  for (int qq : {3, 5})
    for (int n = 1; n <= 3; ++n) {
      INFO("q=" << qq << " n=" << n);
      REQUIRE(class_distribution(ClassKind::Sp, n, qq) == class_distribution(ClassKind::SpLie, n, qq));
    }
  CHECK(class_count(ClassKind::SL, 4, 3) == 27);
  CHECK_THROWS_AS(class_count(ClassKind::SL, 12, 5), SizeGuardError);
}
