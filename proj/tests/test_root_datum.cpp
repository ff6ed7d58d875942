#include <catch_amalgamated.hpp>

#include "cellini/root_datum.hpp"
#include "oracles.hpp"

using namespace cellini;

namespace {

IndexSet all_bits(int r) { return (IndexSet{1} << (r + 1)) - 1; }

std::uint64_t pow_u(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

}  // namespace

TEST_CASE("root data") {
  const auto a2 = RootDatum::type_A(3);
  CHECK(a2.rank == 2);
  CHECK(a2.highest_root() == RootVector{1, 0, -1});
  CHECK(a2.extended[0] == RootVector{-1, 0, 1});
  const auto c2 = RootDatum::type_C(2);
  CHECK(c2.extended[0] == RootVector{-2, 0});
  CHECK(c2.extended[2] == RootVector{0, 2});
  CHECK(c2.is_root({1, 1}));
  CHECK_FALSE(c2.is_root({2, 2}));
  CHECK_THROWS_AS(RootDatum::type_A(1), std::invalid_argument);
}

TEST_CASE("a_{k,I} examples") {
  const auto a2 = RootDatum::type_A(3);
  CHECK(a_k_I(a2, 2, 0b110) == 1);
  for (IndexSet I = 0; I <= all_bits(2); ++I) CHECK(a_k_I(a2, 1, I) == (I == 0b110 ? 1u : 0u));
  const auto a5 = RootDatum::type_A(6);
  CHECK(a_k_I(a5, 2, all_bits(5) & ~IndexSet{0b100010}) == 1);
}

TEST_CASE("face counts match direct lattice enumeration") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= 4; ++k) {
      const auto counts = alcove_face_counts(RootDatum::type_A(n), k);
      const auto hist = oracle::alcove_faces_A(n, k);
      for (IndexSet I = 0; I < counts.size(); ++I) {
        const auto it = hist.find(I);
        INFO("A n=" << n << " k=" << k << " I=" << I);
        REQUIRE(counts[I] == (it == hist.end() ? 0u : static_cast<std::uint64_t>(it->second)));
      }
    }
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 4; ++k) {
      const auto counts = alcove_face_counts(RootDatum::type_C(n), k);
      const auto hist = oracle::alcove_faces_C(n, k);
      for (IndexSet I = 0; I < counts.size(); ++I) {
        const auto it = hist.find(I);
        INFO("C n=" << n << " k=" << k << " I=" << I);
        REQUIRE(counts[I] == (it == hist.end() ? 0u : static_cast<std::uint64_t>(it->second)));
      }
    }
}

namespace {

template <class Perm>
void check_u_sum(const RootDatum& datum, int k) {
  std::vector<std::uint64_t> u(std::size_t{1} << (datum.rank + 1), 0);
  for (const auto& w : enumerate_group<Perm>(datum.n)) {
    const IndexSet cdes = cyclic_descent_mask(datum, w);
    for (IndexSet I = 0; I < u.size(); ++I)
      if ((cdes & I) == 0) ++u[I];
  }
  const auto counts = alcove_face_counts(datum, k);
  std::uint64_t total = 0;
  for (IndexSet I = 0; I < u.size(); ++I) total += counts[I] * u[I];
  REQUIRE(total == pow_u(static_cast<std::uint64_t>(k), datum.rank));
}

}  // namespace

TEST_CASE("weighted face counts sum to k^r") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= 4; ++k) check_u_sum<PermA>(RootDatum::type_A(n), k);
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k) check_u_sum<PermC>(RootDatum::type_C(n), k);
}

TEST_CASE("k = 2 faces in even type A") {
  for (int m = 1; m <= 3; ++m) {
    const auto datum = RootDatum::type_A(2 * m);
    const auto counts = alcove_face_counts(datum, 2);
    // Points with j coordinates 1, j coordinates -1 and zeros in between.
    std::set<IndexSet> expected;
    for (int j = 0; j <= m; ++j) {
      IndexSet walls = all_bits(2 * m - 1);
      if (j == 0) {
        walls &= ~IndexSet{1};
      } else {
        walls &= ~(IndexSet{1} << j);
        walls &= ~(IndexSet{1} << (2 * m - j));
      }
      expected.insert(walls);
    }
    std::set<IndexSet> nonzero;
    for (IndexSet I = 0; I < counts.size(); ++I)
      if (counts[I] != 0) {
        nonzero.insert(I);
        REQUIRE(counts[I] == 1);
      }
    CHECK(nonzero == expected);
  }
}

TEST_CASE("root images") {
  const auto a2 = RootDatum::type_A(3);
  const auto id = root_image(a2, PermA::identity(3), a2.extended[0]);
  CHECK(id.root == a2.extended[0]);
  CHECK_FALSE(id.positive);
  const auto r = root_image(a2, PermA({2, 3, 1}), a2.extended[0]);
  CHECK(r.root == RootVector{1, -1, 0});
  CHECK(r.positive);
  const auto c1 = RootDatum::type_C(1);
  const auto s = root_image(c1, PermC({-1}), RootVector{2});
  CHECK(s.root == RootVector{-2});
  CHECK_FALSE(s.positive);
  CHECK_THROWS_AS(root_image(a2, PermA::identity(3), RootVector{1, 1, 0}), std::invalid_argument);
}
