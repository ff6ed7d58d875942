#include "cellini/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "cellini/linalg.hpp"

namespace cellini {

namespace {

constexpr int kMaxDefinitionRank = 5;

RootVector unit(int n, int i, int scale = 1) {
  RootVector v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = scale;
  return v;
}

RootVector negate(RootVector v) {
  for (int& x : v) x = -x;
  return v;
}

bool first_nonzero_positive(const RootVector& v) {
  for (int x : v)
    if (x != 0) return x > 0;
  return false;
}

long long pair(const RootVector& a, const std::vector<int>& t) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * t[i];
  return s;
}

// Corners of the closed k-dilated alcove: the origin and, for each simple
// root alpha_i, the point on every other simple wall and on the far wall.
std::vector<std::vector<Rational>> alcove_vertices(const RootDatum& d, int k) {
  const auto n = static_cast<std::size_t>(d.n);
  std::vector<std::vector<Rational>> verts{std::vector<Rational>(n, 0)};
  for (int i = 1; i <= d.rank; ++i) {
    RationalMatrix a(n, n);
    std::vector<Rational> b(n, 0);
    std::size_t row = 0;
    for (int j = 1; j <= d.rank; ++j) {
      if (j == i) continue;
      for (std::size_t c = 0; c < n; ++c) a(row, c) = d.extended[static_cast<std::size_t>(j)][c];
      ++row;
    }
    for (std::size_t c = 0; c < n; ++c) a(row, c) = d.highest_root()[c];
    b[row] = k;
    ++row;
    if (d.zero_sum) {
      for (std::size_t c = 0; c < n; ++c) a(row, c) = 1;
      ++row;
    }
    auto sol = solve(a, b);
    if (!sol) throw std::logic_error("degenerate alcove vertex system");
    verts.push_back(std::move(*sol));
  }
  return verts;
}

}  // namespace

RootDatum RootDatum::type_A(int n) {
  if (n < 2) throw std::invalid_argument("type A root datum needs n >= 2");
  RootDatum d;
  d.type = WeylType::A;
  d.n = n;
  d.rank = n - 1;
  d.zero_sum = true;
  d.highest_ = unit(n, 0);
  d.highest_[static_cast<std::size_t>(n - 1)] = -1;
  d.extended.push_back(negate(d.highest_));
  for (int i = 0; i + 1 < n; ++i) {
    RootVector a = unit(n, i);
    a[static_cast<std::size_t>(i + 1)] = -1;
    d.extended.push_back(std::move(a));
  }
  return d;
}

RootDatum RootDatum::type_C(int n) {
  if (n < 1) throw std::invalid_argument("type C root datum needs n >= 1");
  RootDatum d;
  d.type = WeylType::C;
  d.n = n;
  d.rank = n;
  d.highest_ = unit(n, 0, 2);
  d.extended.push_back(negate(d.highest_));
  for (int i = 0; i + 1 < n; ++i) {
    RootVector a = unit(n, i);
    a[static_cast<std::size_t>(i + 1)] = -1;
    d.extended.push_back(std::move(a));
  }
  d.extended.push_back(unit(n, n - 1, 2));
  return d;
}

RootDatum RootDatum::make(WeylType t, int n) { return t == WeylType::A ? type_A(n) : type_C(n); }

bool RootDatum::is_root(const RootVector& v) const {
  if (static_cast<int>(v.size()) != n) return false;
  std::vector<int> nz;
  for (int x : v)
    if (x != 0) nz.push_back(x);
  if (type == WeylType::A) return nz.size() == 2 && nz[0] + nz[1] == 0 && std::abs(nz[0]) == 1;
  if (nz.size() == 1) return std::abs(nz[0]) == 2;
  return nz.size() == 2 && std::abs(nz[0]) == 1 && std::abs(nz[1]) == 1;
}

std::vector<std::uint64_t> alcove_face_counts(const RootDatum& datum, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (datum.rank > kMaxDefinitionRank)
    throw std::invalid_argument("lattice-point definition limited to rank 5");
  const auto verts = alcove_vertices(datum, k);
  const auto n = static_cast<std::size_t>(datum.n);
  std::vector<int> lo(n), hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    Rational mn = verts[0][c], mx = verts[0][c];
    for (const auto& v : verts) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    mpz_class f, cl;
    mpz_fdiv_q(f.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(cl.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[c] = static_cast<int>(f.get_si()) - 1;
    hi[c] = static_cast<int>(cl.get_si()) + 1;
  }

  std::vector<std::uint64_t> hist(std::size_t{1} << (datum.rank + 1), 0);
  std::vector<int> t(n, 0);
  const std::size_t free_coords = datum.zero_sum ? n - 1 : n;

  const auto classify = [&] {
    IndexSet mask = 0;
    const long long top = pair(datum.highest_root(), t);
    if (top > k) return;
    if (top == k) mask |= 1u;
    for (int i = 1; i <= datum.rank; ++i) {
      const long long v = pair(datum.extended[static_cast<std::size_t>(i)], t);
      if (v < 0) return;
      if (v == 0) mask |= 1u << i;
    }
    ++hist[mask];
  };

  std::function<void(std::size_t, long long)> rec = [&](std::size_t c, long long sum) {
    if (c == free_coords) {
      if (datum.zero_sum) {
        const long long last = -sum;
        if (last < lo[n - 1] || last > hi[n - 1]) return;
        t[n - 1] = static_cast<int>(last);
      }
      classify();
      return;
    }
    for (int x = lo[c]; x <= hi[c]; ++x) {
      t[c] = x;
      rec(c + 1, sum + x);
    }
  };
  rec(0, 0);
  return hist;
}

std::uint64_t a_k_I(const RootDatum& datum, int k, IndexSet I) {
  const auto hist = alcove_face_counts(datum, k);
  if (I >= hist.size()) throw std::invalid_argument("index set outside the extended simple roots");
  return hist[I];
}

namespace {

template <class Perm>
RootImage image_impl(const RootDatum& datum, const Perm& w, const RootVector& alpha) {
  if (!datum.is_root(alpha)) throw std::invalid_argument("vector is not a root of the datum");
  if (w.n() != datum.n) throw std::invalid_argument("element and root datum have different rank");
  RootVector out(alpha.size(), 0);
  for (int i = 1; i <= w.n(); ++i) {
    const int img = w(i);
    const int sign = img > 0 ? 1 : -1;
    out[static_cast<std::size_t>(std::abs(img) - 1)] += sign * alpha[static_cast<std::size_t>(i - 1)];
  }
  return RootImage{out, first_nonzero_positive(out)};
}

template <class Perm>
IndexSet descent_mask_impl(const RootDatum& datum, const Perm& w) {
  IndexSet mask = 0;
  for (int i = 0; i <= datum.rank; ++i)
    if (!image_impl(datum, w, datum.extended[static_cast<std::size_t>(i)]).positive) mask |= 1u << i;
  return mask;
}

}  // namespace

RootImage root_image(const RootDatum& datum, const PermA& w, const RootVector& alpha) {
  if (datum.type != WeylType::A) throw std::invalid_argument("type A element with non-A datum");
  return image_impl(datum, w, alpha);
}

RootImage root_image(const RootDatum& datum, const PermC& w, const RootVector& alpha) {
  if (datum.type != WeylType::C) throw std::invalid_argument("type C element with non-C datum");
  return image_impl(datum, w, alpha);
}

IndexSet cyclic_descent_mask(const RootDatum& datum, const PermA& w) {
  if (datum.type != WeylType::A) throw std::invalid_argument("type A element with non-A datum");
  return descent_mask_impl(datum, w);
}

IndexSet cyclic_descent_mask(const RootDatum& datum, const PermC& w) {
  if (datum.type != WeylType::C) throw std::invalid_argument("type C element with non-C datum");
  return descent_mask_impl(datum, w);
}

}  // namespace cellini
