#include "cellini/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "cellini/errors.hpp"

namespace cellini {

namespace {

constexpr long long kGroupGuard = 10'000'000;

void check_bijection(const std::vector<int>& images, bool allow_signs) {
  std::vector<char> seen(images.size() + 1, 0);
  for (int x : images) {
    const int a = allow_signs ? std::abs(x) : x;
    if (a < 1 || a > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("not a (signed) permutation of 1..n");
    seen[static_cast<std::size_t>(a)] = 1;
  }
}

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

std::string to_string(WeylType t) { return t == WeylType::A ? "A" : "C"; }

WeylType parse_weyl_type(const std::string& s) {
  if (s == "A" || s == "a") return WeylType::A;
  if (s == "C" || s == "c") return WeylType::C;
  throw std::invalid_argument("unsupported Weyl type: " + s);
}

// ---- PermA ----

PermA::PermA(std::vector<int> images) : images_(std::move(images)) { check_bijection(images_, false); }

PermA PermA::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return PermA(std::move(v));
}

PermA PermA::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return PermA(std::move(inv));
}

int PermA::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

std::string PermA::to_string() const { return join(images_); }

PermA operator*(const PermA& u, const PermA& v) {
  if (u.n() != v.n()) throw std::invalid_argument("product of permutations of different degree");
  std::vector<int> out(v.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u(v.images_[i]);
  return PermA(std::move(out));
}

// ---- PermC ----

PermC::PermC(std::vector<int> images) : images_(std::move(images)) { check_bijection(images_, true); }

PermC PermC::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return PermC(std::move(v));
}

PermC PermC::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const int x = images_[i];
    const int pos = static_cast<int>(i + 1);
    inv[static_cast<std::size_t>(std::abs(x) - 1)] = x > 0 ? pos : -pos;
  }
  return PermC(std::move(inv));
}

PermA PermC::unsigned_part() const {
  std::vector<int> v(images_.size());
  std::transform(images_.begin(), images_.end(), v.begin(), [](int x) { return std::abs(x); });
  return PermA(std::move(v));
}

std::string PermC::to_string() const { return join(images_); }

PermC operator*(const PermC& u, const PermC& v) {
  if (u.n() != v.n()) throw std::invalid_argument("product of signed permutations of different degree");
  std::vector<int> out(v.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u(v.images_[i]);
  return PermC(std::move(out));
}

// ---- statistics ----

DescentStatsA descent_stats(const PermA& w) {
  DescentStatsA s;
  const int n = w.n();
  for (int i = 1; i < n; ++i) {
    if (w(i) > w(i + 1)) {
      s.descents.push_back(i);
      s.maj += i;
    }
  }
  s.d = static_cast<int>(s.descents.size());
  // For n = 1 there are no roots at all, so alpha_0 cannot be a descent.
  s.affine_descent = n > 1 && w(n) > w(1);
  s.cd = s.d + (s.affine_descent ? 1 : 0);
  s.length = w.length();
  return s;
}

DescentStatsC descent_stats(const PermC& w) {
  DescentStatsC s;
  const int n = w.n();
  const auto key = [n](int x) { return x > 0 ? x : 2 * n + 1 + x; };
  for (int i = 1; i < n; ++i)
    if (key(w(i)) > key(w(i + 1))) s.descents.push_back(i);
  if (w(n) < 0) s.descents.push_back(n);
  s.d = static_cast<int>(s.descents.size());
  s.affine_descent = w(1) > 0;
  s.cd = s.d + (s.affine_descent ? 1 : 0);
  return s;
}

// ---- class labels ----

ClassLabel ClassLabel::type_a(nt::Partition cycles) {
  return ClassLabel{WeylType::A, std::move(cycles), {}};
}

ClassLabel ClassLabel::type_c(nt::Partition positive, nt::Partition negative) {
  return ClassLabel{WeylType::C, std::move(positive), std::move(negative)};
}

ClassLabel ClassLabel::identity(WeylType t, int n) {
  nt::Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
  return t == WeylType::A ? type_a(std::move(ones)) : type_c(std::move(ones), {});
}

int ClassLabel::weight() const { return positive.size() + negative.size(); }

std::string ClassLabel::to_string() const {
  if (type == WeylType::A) return positive.to_string();
  return "+" + positive.to_string() + "-" + negative.to_string();
}

std::vector<std::vector<int>> cycles(const PermA& w) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(w.n() + 1), 0);
  for (int i = 1; i <= w.n(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> c;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = w(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

ClassLabel cycle_type(const PermA& w) {
  std::vector<int> lengths;
  for (const auto& c : cycles(w)) lengths.push_back(static_cast<int>(c.size()));
  return ClassLabel::type_a(nt::Partition(std::move(lengths)));
}

ClassLabel cycle_type(const PermC& w) {
  std::vector<int> pos, neg;
  for (const auto& c : cycles(w.unsigned_part())) {
    bool negative = false;
    for (int i : c)
      if (w(i) < 0) negative = !negative;
    (negative ? neg : pos).push_back(static_cast<int>(c.size()));
  }
  return ClassLabel::type_c(nt::Partition(std::move(pos)), nt::Partition(std::move(neg)));
}

// ---- cycle shapes ----

PermA CycleShape::as_permutation() const {
  std::vector<int> img(word.size());
  for (std::size_t j = 0; j < word.size(); ++j)
    img[static_cast<std::size_t>(word[j] - 1)] = word[(j + 1) % word.size()];
  return PermA(std::move(img));
}

std::string CycleShape::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(word[i]);
  }
  return s + ")";
}

ShapeMultiset cycle_shape_multiset(const PermA& w) {
  ShapeMultiset shapes;
  for (const auto& c : cycles(w)) {
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    CycleShape s;
    s.word.reserve(c.size());
    // Each cycle from cycles() already starts at its minimum.
    for (int x : c)
      s.word.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
    shapes.push_back(std::move(s));
  }
  std::sort(shapes.begin(), shapes.end());
  return shapes;
}

std::string to_string(const ShapeMultiset& shapes) {
  std::string s = "{";
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i) s += ",";
    s += shapes[i].to_string();
  }
  return s + "}";
}

// ---- enumeration ----

long long group_order(WeylType t, int n) {
  if (n < 1) throw std::invalid_argument("group rank must be positive");
  long long order = 1;
  for (int i = 1; i <= n; ++i) {
    order *= (t == WeylType::A ? i : 2LL * i);
    if (order > kGroupGuard)
      throw SizeGuardError("group " + to_string(t) + " with n=" + std::to_string(n) + " exceeds 10^7 elements");
  }
  return order;
}

std::vector<PermA> enumerate_A(int n) {
  const auto order = group_order(WeylType::A, n);
  std::vector<PermA> out;
  out.reserve(static_cast<std::size_t>(order));
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<PermC> enumerate_C(int n) {
  const auto order = group_order(WeylType::C, n);
  std::vector<PermC> out;
  out.reserve(static_cast<std::size_t>(order));
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> s = v;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s[static_cast<std::size_t>(i)] = -s[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(s));
    }
  } while (std::next_permutation(v.begin(), v.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cellini
