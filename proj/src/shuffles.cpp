#include "cellini/shuffles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cellini/errors.hpp"
#include "cellini/numtheory.hpp"

namespace cellini {

namespace {

constexpr std::uint64_t kWordGuard = 10'000'000;
constexpr std::uint64_t kUnimodalGuard = 1'000'000;

std::uint64_t word_count(int n, int k) {
  if (n < 1) throw std::invalid_argument("deck size must be positive");
  if (k < 1) throw std::invalid_argument("number of piles must be positive");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(k);
    if (total > kWordGuard) throw SizeGuardError("word enumeration limited to k^n <= 10^7");
  }
  return total;
}

// Calls fn on each word of length n over k letters, first letter fastest.
template <class Fn>
void for_each_word(int n, int k, Fn fn) {
  const auto total = word_count(n, k);
  Word w(static_cast<std::size_t>(n), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    if (t > 0) {
      for (std::size_t i = 0;; ++i) {
        if (++w[i] < k) break;
        w[i] = 0;
      }
    }
    fn(w);
  }
}

std::vector<std::vector<int>> cut(const Word& word, int k) {
  std::vector<int> sizes(static_cast<std::size_t>(k), 0);
  for (int a : word) {
    if (a < 0 || a >= k) throw std::invalid_argument("pile label out of range");
    ++sizes[static_cast<std::size_t>(a)];
  }
  std::vector<std::vector<int>> piles(static_cast<std::size_t>(k));
  int next = 1;
  for (std::size_t a = 0; a < piles.size(); ++a)
    for (int j = 0; j < sizes[a]; ++j) piles[a].push_back(next++);
  return piles;
}

std::vector<int> interleave(const Word& word, const std::vector<std::vector<int>>& piles) {
  std::vector<std::size_t> ptr(piles.size(), 0);
  std::vector<int> out;
  out.reserve(word.size());
  for (int a : word) out.push_back(piles[static_cast<std::size_t>(a)][ptr[static_cast<std::size_t>(a)]++]);
  return out;
}

}  // namespace

std::string ShuffleKind::to_string() const {
  switch (family) {
    case ShuffleFamily::GSR: return "gsr(" + std::to_string(k) + ")";
    case ShuffleFamily::TypeC: return "typec(" + std::to_string(k) + ")";
    case ShuffleFamily::HalfAndFlip: return "halfflip";
  }
  return "?";
}

ShuffleKind parse_shuffle_kind(const std::string& name, int k) {
  if (name == "gsr") return ShuffleKind::gsr(k);
  if (name == "typec") return ShuffleKind::type_c(k);
  if (name == "halfflip") return ShuffleKind::half_and_flip();
  throw std::invalid_argument("unknown shuffle kind: " + name);
}

PermA gsr_arrangement(const Word& word, int k) { return PermA(interleave(word, cut(word, k))); }

PermC type_c_arrangement(const Word& word, int k) {
  auto piles = cut(word, k);
  for (std::size_t a = 0; a < piles.size(); ++a) {
    const auto number = a + 1;
    const bool flip = k % 2 == 1 ? number % 2 == 0 : number % 2 == 1;
    if (!flip) continue;
    std::reverse(piles[a].begin(), piles[a].end());
    for (int& x : piles[a]) x = -x;
  }
  return PermC(interleave(word, piles));
}

PermA half_and_flip_arrangement(const Word& word) {
  const int n = static_cast<int>(word.size());
  const auto ones = std::count(word.begin(), word.end(), 1);
  if (ones % 2 != 0) throw std::invalid_argument("half-and-flip word needs an even number of ones");
  const int j = static_cast<int>(ones / 2);
  std::vector<std::vector<int>> piles(2);
  for (int c = j + 1; c <= n - j; ++c) piles[0].push_back(c);
  for (int c = n - j + 1; c <= n; ++c) piles[1].push_back(c);
  for (int c = 1; c <= j; ++c) piles[1].push_back(c);
  for (int a : word)
    if (a != 0 && a != 1) throw std::invalid_argument("half-and-flip word must be binary");
  return PermA(interleave(word, piles));
}

MeasureA gsr_distribution(int n, int k) {
  const Rational each = make_rational(1, nt::pow(k, static_cast<unsigned>(n)));
  MeasureA m(n);
  for_each_word(n, k, [&](const Word& w) { m.add(gsr_arrangement(w, k), each); });
  return m;
}

MeasureC type_c_distribution(int n, int k) {
  const Rational each = make_rational(1, nt::pow(k, static_cast<unsigned>(n)));
  MeasureC m(n);
  for_each_word(n, k, [&](const Word& w) { m.add(type_c_arrangement(w, k), each); });
  return m;
}

MeasureA half_and_flip_distribution(int n) {
  const Rational each = make_rational(1, nt::pow(2, static_cast<unsigned>(n - 1)));
  MeasureA m(n);
  for_each_word(n, 2, [&](const Word& w) {
    if (std::count(w.begin(), w.end(), 1) % 2 == 0) m.add(half_and_flip_arrangement(w), each);
  });
  return m;
}

std::variant<MeasureA, MeasureC> exact_distribution(const ShuffleKind& kind, int n) {
  switch (kind.family) {
    case ShuffleFamily::GSR: return gsr_distribution(n, kind.k);
    case ShuffleFamily::TypeC: return type_c_distribution(n, kind.k);
    case ShuffleFamily::HalfAndFlip: return half_and_flip_distribution(n);
  }
  throw std::logic_error("unreachable shuffle family");
}

ShuffleSampler::ShuffleSampler(ShuffleKind kind, int n, std::uint64_t seed) : kind_(kind), n_(n), rng_(seed) {
  if (n < 1) throw std::invalid_argument("deck size must be positive");
  if (kind.k < 1) throw std::invalid_argument("number of piles must be positive");
}

ShuffleResult ShuffleSampler::next() {
  Word w(static_cast<std::size_t>(n_));
  const int letters = kind_.family == ShuffleFamily::HalfAndFlip ? 2 : kind_.k;
  std::uniform_int_distribution<int> pick(0, letters - 1);
  for (auto& a : w) a = pick(rng_);
  switch (kind_.family) {
    case ShuffleFamily::GSR: return gsr_arrangement(w, kind_.k);
    case ShuffleFamily::TypeC: return type_c_arrangement(w, kind_.k);
    case ShuffleFamily::HalfAndFlip: {
      // The last letter restores even parity; the word stays uniform on the
      // even-parity half of {0,1}^n.
      const auto ones = std::count(w.begin(), w.end() - 1, 1);
      w.back() = static_cast<int>(ones % 2);
      return half_and_flip_arrangement(w);
    }
  }
  throw std::logic_error("unreachable shuffle family");
}

Rational gsr_probability(const PermA& w, int k) {
  const int n = w.n();
  const int d = descent_stats(w.inverse()).d;
  return make_rational(nt::binomial(n + k - d - 1, n), nt::pow(k, static_cast<unsigned>(n)));
}

// ---- Gessel-Reutenauer ----

PermA standard_permutation(const std::string& word) {
  if (word.empty()) throw std::invalid_argument("standard permutation of an empty word");
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return word[static_cast<std::size_t>(a)] < word[static_cast<std::size_t>(b)];
  });
  std::vector<int> rank(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[static_cast<std::size_t>(order[r])] = static_cast<int>(r + 1);
  return PermA(std::move(rank));
}

NecklaceMultiset gr_necklace_multiset(const std::string& word) {
  NecklaceMultiset out;
  for (const auto& cyc : cycles(standard_permutation(word))) {
    std::string s;
    for (int pos : cyc) s += word[static_cast<std::size_t>(pos - 1)];
    std::string best = s;
    for (std::size_t r = 1; r < s.size(); ++r) best = std::min(best, s.substr(r) + s.substr(0, r));
    out.push_back(std::move(best));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- unimodal permutations ----

std::vector<PermA> unimodal_enumerate(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  if (n > 21 || count > kUnimodalGuard) throw SizeGuardError("unimodal enumeration limited to 2^{n-1} <= 10^6");
  std::vector<PermA> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    // Bit i - 1 set: value i precedes n.
    std::vector<int> up, down;
    for (int i = 1; i < n; ++i) (mask >> (i - 1) & 1 ? up : down).push_back(i);
    up.push_back(n);
    up.insert(up.end(), down.rbegin(), down.rend());
    out.emplace_back(std::move(up));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_unimodal(const PermA& w) {
  int i = 1;
  while (i < w.n() && w(i) < w(i + 1)) ++i;
  while (i < w.n() && w(i) > w(i + 1)) ++i;
  return i == w.n();
}

std::uint64_t transitive_unimodal_enumerated(int n) {
  std::uint64_t count = 0;
  for (const auto& w : unimodal_enumerate(n))
    if (cycles(w).size() == 1) ++count;
  return count;
}

std::map<ShapeMultiset, std::uint64_t> gannon_census(int n) {
  std::map<ShapeMultiset, std::uint64_t> out;
  for (const auto& w : unimodal_enumerate(n)) ++out[cycle_shape_multiset(w)];
  return out;
}

int distinct_shapes(const ShapeMultiset& s) {
  ShapeMultiset u = s;
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return static_cast<int>(u.size());
}

Rational fixed_point_fraction_unimodal(int n) {
  const auto perms = unimodal_enumerate(n);
  unsigned long with_fixed = 0;
  for (const auto& w : perms) {
    for (int i = 1; i <= n; ++i) {
      if (w(i) == i) {
        ++with_fixed;
        break;
      }
    }
  }
  return make_rational(with_fixed, static_cast<unsigned long>(perms.size()));
}

bool in_type_c2_support(const PermC& w) {
  int last_neg = -w.n() - 1;
  int last_pos = 0;
  int negatives = 0;
  for (int v : w.images()) {
    if (v < 0) {
      if (v <= last_neg) return false;
      last_neg = v;
      ++negatives;
    } else {
      if (v <= last_pos) return false;
      last_pos = v;
    }
  }
  // Face-up cards must be exactly the top block 1..j.
  for (int v : w.images())
    if (v < 0 && -v > negatives) return false;
  return true;
}

PermA eta(const PermC& w) {
  if (!in_type_c2_support(w)) throw std::invalid_argument("element is not produced by the type C 2-shuffle");
  const PermA u = w.inverse().unsigned_part();
  const int n = w.n();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = n + 1 - u(n + 1 - i);
  return PermA(std::move(out));
}

// ---- cycle shapes ----

std::map<ShapeMultiset, Rational> shape_distribution(int n, int k) {
  std::map<ShapeMultiset, Rational> out;
  const auto dist = gsr_distribution(n, k);
  for (const auto& [w, v] : dist.entries()) out[cycle_shape_multiset(w)] += v;
  return out;
}

Rational shape_product_formula(const ShapeMultiset& shapes, int k) {
  int n = 0;
  BigInt num = 1;
  for (std::size_t i = 0; i < shapes.size();) {
    std::size_t j = i;
    while (j < shapes.size() && shapes[j] == shapes[i]) ++j;
    const int len = shapes[i].size();
    const auto ns = static_cast<std::int64_t>(j - i);
    const int d = descent_stats(shapes[i].as_permutation().inverse()).d;
    const BigInt choices = nt::binomial(len + k - d - 1, len);
    // Multisets of size ns from `choices` kinds.
    BigInt top = choices + ns - 1;
    num *= choices == 0 ? BigInt(0) : nt::binomial(top.get_si(), ns);
    n += len * static_cast<int>(ns);
    i = j;
  }
  return make_rational(num, nt::pow(k, static_cast<unsigned>(n)));
}

}  // namespace cellini
