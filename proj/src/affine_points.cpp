#include "cellini/affine_points.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cellini/errors.hpp"
#include "cellini/finite_field.hpp"
#include "cellini/linalg.hpp"
#include "cellini/numtheory.hpp"
#include "cellini/ss_classes.hpp"

namespace cellini {

namespace {

void check_params(int n, int q) {
  if (n < 1 || n > 5) throw SizeGuardError("alcove point search limited to 1 <= n <= 5");
  if (q > 7) throw SizeGuardError("alcove point search limited to q <= 7");
  if (!ff::is_prime_power(q)) throw std::invalid_argument("q must be a prime power");
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace

bool AlcovePoint::in_closed_alcove() const {
  if (v.empty()) return false;
  Rational s = 0;
  for (const auto& x : v) s += x;
  if (s != 0) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return v.front() - v.back() <= 1;
}

AlcovePoint AlcovePoint::dual() const {
  AlcovePoint d;
  for (auto it = v.rbegin(); it != v.rend(); ++it) d.v.push_back(-*it);
  return d;
}

std::string AlcovePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += cellini::to_string(v[i]);
  }
  return s + ")";
}

std::vector<Rational> act(const PermA& w, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != w.n()) throw std::invalid_argument("dimension mismatch in action");
  std::vector<Rational> out(v.size());
  for (int i = 1; i <= w.n(); ++i) out[static_cast<std::size_t>(w(i) - 1)] = v[static_cast<std::size_t>(i - 1)];
  return out;
}

std::vector<AlcovePoint> stable_points(int n, int q) {
  check_params(n, q);
  const auto un = static_cast<std::size_t>(n);
  const long long bound = q + 1;
  // Points as integer numerators over a common positive denominator, reduced.
  std::set<std::vector<long long>> seen;

  for (const auto& w : enumerate_A(n)) {
    // M = q I - P_w with (P_w v)_{w(i)} = v_i. Solve M v = y via the
    // integer adjugate: v = adj(M) y / det(M), det(M) > 0.
    RationalMatrix m(un, un);
    for (std::size_t i = 0; i < un; ++i) m(i, i) = q;
    for (int i = 1; i <= n; ++i) m(static_cast<std::size_t>(w(i) - 1), static_cast<std::size_t>(i - 1)) -= 1;
    const Rational det = determinant(m);
    const auto inv = inverse(m);
    if (!inv || det <= 0 || !is_integer(det)) throw InvariantError("q I - w is not invertible with positive determinant");
    const long long d = det.get_num().get_si();
    std::vector<long long> adj(un * un);
    for (std::size_t r = 0; r < un; ++r)
      for (std::size_t c = 0; c < un; ++c) {
        const Rational e = (*inv)(r, c) * det;
        if (!is_integer(e)) throw InvariantError("adjugate entry is not an integer");
        adj[r * un + c] = e.get_num().get_si();
      }

    std::vector<long long> y(un, -bound);
    std::vector<long long> u(un);
    for (;;) {
      long long partial = 0;
      for (std::size_t i = 0; i + 1 < un; ++i) partial += y[i];
      y[un - 1] = -partial;
      if (y[un - 1] >= -bound && y[un - 1] <= bound) {
        for (std::size_t r = 0; r < un; ++r) {
          long long s = 0;
          for (std::size_t c = 0; c < un; ++c) s += adj[r * un + c] * y[c];
          u[r] = s;
        }
        bool ok = u[0] - u[un - 1] <= d;
        for (std::size_t i = 0; ok && i + 1 < un; ++i) ok = u[i] >= u[i + 1];
        if (ok) {
          long long g = d;
          for (auto x : u) g = std::gcd(g, x);
          std::vector<long long> key;
          for (auto x : u) key.push_back(x / g);
          key.push_back(d / g);
          seen.insert(std::move(key));
        }
      }
      // Advance the odometer over y_1 .. y_{n-1}.
      std::size_t i = 0;
      while (i + 1 < un && ++y[i] > bound) y[i++] = -bound;
      if (i + 1 >= un) break;
    }
  }

  std::vector<AlcovePoint> out;
  for (const auto& key : seen) {
    AlcovePoint p;
    const long long den = key.back();
    for (std::size_t i = 0; i < un; ++i) p.v.push_back(make_rational(BigInt(static_cast<long>(key[i])), BigInt(static_cast<long>(den))));
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  const auto expected = nt::pow(q, static_cast<unsigned>(n - 1));
  if (BigInt(static_cast<unsigned long>(out.size())) != expected)
    throw InvariantError("found " + std::to_string(out.size()) + " stable alcove points, expected q^{n-1}");
  return out;
}

StabilizerData stabilizer_set(const AlcovePoint& p, int q) {
  const int n = p.n();
  StabilizerData s{p, {}, {}, PermA::identity(n)};
  std::vector<Rational> qv = p.v;
  for (auto& x : qv) x *= q;
  for (const auto& w : enumerate_A(n)) {
    const auto wv = act(w, p.v);
    bool integral = true;
    for (int i = 0; i < n && integral; ++i) integral = is_integer(qv[static_cast<std::size_t>(i)] - wv[static_cast<std::size_t>(i)]);
    if (integral) s.members.push_back(w);
  }
  if (s.members.empty()) throw InvariantError("point " + p.to_string() + " has no stabilizing element");

  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    std::vector<int> block;
    for (int j = i; j < n; ++j) {
      if (!used[static_cast<std::size_t>(j)] && is_integer(p.v[static_cast<std::size_t>(i)] - p.v[static_cast<std::size_t>(j)])) {
        used[static_cast<std::size_t>(j)] = 1;
        block.push_back(j + 1);
      }
    }
    s.blocks.push_back(std::move(block));
  }

  // members must be w0 H with H the Young subgroup of the blocks.
  std::vector<int> block_of(static_cast<std::size_t>(n + 1));
  BigInt young = 1;
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    for (int i : s.blocks[b]) block_of[static_cast<std::size_t>(i)] = static_cast<int>(b);
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), s.blocks[b].size());
    young *= f;
  }
  if (BigInt(static_cast<unsigned long>(s.members.size())) != young)
    throw InvariantError("stabilizer of " + p.to_string() + " is not a coset of the block Young subgroup");
  const PermA w0_inv = s.members.front().inverse();
  for (const auto& w : s.members) {
    const PermA h = w0_inv * w;
    for (int i = 1; i <= n; ++i)
      if (block_of[static_cast<std::size_t>(h(i))] != block_of[static_cast<std::size_t>(i)])
        throw InvariantError("stabilizer of " + p.to_string() + " is not a coset of the block Young subgroup");
  }

  int best = -1;
  int ties = 0;
  for (const auto& w : s.members) {
    const int len = w.length();
    if (best < 0 || len < best) {
      best = len;
      ties = 1;
      s.minimal = w;
    } else if (len == best) {
      ++ties;
    }
  }
  if (ties != 1) throw InvariantError("shortest stabilizing element of " + p.to_string() + " is not unique");
  return s;
}

MeasureA refined_measure(int n, int q) {
  const auto points = stable_points(n, q);
  MeasureA m(n);
  m.k = q;
  for (const auto& w : enumerate_A(n)) m.set(w, 0);
  const Rational each = make_rational(1, static_cast<unsigned long>(points.size()));
  for (const auto& p : points) m.add(stabilizer_set(p, q).minimal, each);
  return m;
}

bool refinement_class_consistency(int n, int q) {
  return pushforward_classes(refined_measure(n, q)) == class_distribution(ClassKind::SL, n, q);
}

}  // namespace cellini
