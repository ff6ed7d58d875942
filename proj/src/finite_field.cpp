#include "cellini/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cellini/errors.hpp"
#include "cellini/numtheory.hpp"

namespace cellini::ff {

namespace {

constexpr int kMaxFieldSize = 64;
constexpr std::uint64_t kIrreducibleGuard = 10'000'000;
constexpr std::uint64_t kNormGuard = 1'000'000;

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

std::pair<int, int> prime_power(int q) {
  if (q < 2) throw std::invalid_argument("field size must be a prime power, got " + std::to_string(q));
  int p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw std::invalid_argument("field size must be a prime power, got " + std::to_string(q));
  return {p, m};
}

bool is_prime_power(int q) {
  try {
    prime_power(q);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

// ---- Fq ----

Fq Fq::make(int q) {
  const auto [p, m] = prime_power(q);
  if (q > kMaxFieldSize) throw std::invalid_argument("field size limited to 64");
  Fq f;
  f.q_ = q;
  f.p_ = p;
  f.m_ = m;
  const auto n = static_cast<std::size_t>(q);
  f.add_.resize(n * n);
  f.mul_.resize(n * n);
  f.neg_.resize(n);

  if (m == 1) {
    f.modulus_ = {0, 1};
    for (int a = 0; a < q; ++a) {
      f.neg_[static_cast<std::size_t>(a)] = (q - a) % q;
      for (int b = 0; b < q; ++b) {
        f.add_[f.idx(a, b)] = (a + b) % q;
        f.mul_[f.idx(a, b)] = (a * b) % q;
      }
    }
  } else {
    const Fq prime = make(p);
    // Candidates z^m + c_{m-1} z^{m-1} + ... + c_0 in lexicographic order of
    // (c_0, c_1, ..., c_{m-1}).
    const auto count = ipow(static_cast<std::uint64_t>(p), m);
    for (std::uint64_t t = 0; t < count && f.modulus_.empty(); ++t) {
      std::vector<Elem> c(static_cast<std::size_t>(m + 1), 0);
      std::uint64_t rest = t;
      for (int i = m - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = static_cast<Elem>(rest % static_cast<std::uint64_t>(p));
        rest /= static_cast<std::uint64_t>(p);
      }
      c[static_cast<std::size_t>(m)] = 1;
      const FqPoly cand(c);
      if (is_irreducible(prime, cand)) f.modulus_ = cand.c;
    }
    const FqPoly mod(f.modulus_);
    const auto to_poly = [&](int e) {
      std::vector<Elem> c;
      for (int i = 0; i < m; ++i, e /= p) c.push_back(e % p);
      return FqPoly(c);
    };
    const auto to_index = [&](const FqPoly& a) {
      int e = 0;
      for (int i = a.degree(); i >= 0; --i) e = e * p + a.coeff(i);
      return e;
    };
    for (int a = 0; a < q; ++a) {
      const auto pa = to_poly(a);
      auto negated = pa.c;
      for (auto& x : negated) x = prime.neg(x);
      f.neg_[static_cast<std::size_t>(a)] = to_index(FqPoly(std::move(negated)));
      for (int b = 0; b < q; ++b) {
        const auto pb = to_poly(b);
        f.add_[f.idx(a, b)] = to_index(ff::add(prime, pa, pb));
        f.mul_[f.idx(a, b)] = to_index(divmod(prime, ff::mul(prime, pa, pb), mod).second);
      }
    }
  }

  f.inv_.assign(n, 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f.mul(a, b) == 1) f.inv_[static_cast<std::size_t>(a)] = b;

  for (int g = 1; g < q; ++g) {
    if (f.order(g) == q - 1) {
      f.generator_ = g;
      break;
    }
  }
  if (f.generator_ == 0) throw InvariantError("multiplicative group of F_" + std::to_string(q) + " is not cyclic");
  f.log_.assign(n, -1);
  Elem x = 1;
  for (int e = 0; e < q - 1; ++e, x = f.mul(x, f.generator_)) f.log_[static_cast<std::size_t>(x)] = e;
  return f;
}

Elem Fq::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return inv_[static_cast<std::size_t>(a)];
}

Elem Fq::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Fq::from_int(long long n) const { return static_cast<Elem>(nt::mod(n, p_)); }

int Fq::log(Elem a) const {
  if (a == 0) throw std::domain_error("discrete log of zero");
  return log_[static_cast<std::size_t>(a)];
}

int Fq::order(Elem a) const {
  if (a == 0) throw std::domain_error("order of zero");
  int k = 1;
  for (Elem x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

// ---- polynomials ----

FqPoly::FqPoly(std::vector<Elem> coeffs) : c(std::move(coeffs)) { trim(c); }

FqPoly FqPoly::monomial(int degree) {
  std::vector<Elem> c(static_cast<std::size_t>(degree + 1), 0);
  c.back() = 1;
  return FqPoly(std::move(c));
}

std::uint64_t FqPoly::code(int q) const {
  std::uint64_t r = 0;
  for (int i = degree() - 1; i >= 0; --i) r = r * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(coeff(i));
  return r;
}

std::string FqPoly::to_string() const {
  if (c.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Elem a = coeff(i);
    if (a == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || a != 1) s += std::to_string(a);
    if (i > 0) s += i == 1 ? "z" : "z^" + std::to_string(i);
  }
  return s;
}

FqPoly monic_from_code(int q, int d, std::uint64_t code) {
  std::vector<Elem> c(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i < d; ++i, code /= static_cast<std::uint64_t>(q))
    c[static_cast<std::size_t>(i)] = static_cast<Elem>(code % static_cast<std::uint64_t>(q));
  c[static_cast<std::size_t>(d)] = 1;
  return FqPoly(std::move(c));
}

FqPoly add(const Fq& f, const FqPoly& a, const FqPoly& b) {
  std::vector<Elem> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FqPoly(std::move(c));
}

FqPoly mul(const Fq& f, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
  }
  return FqPoly(std::move(c));
}

std::pair<FqPoly, FqPoly> divmod(const Fq& f, const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {FqPoly(), a};
  std::vector<Elem> r = a.c;
  std::vector<Elem> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const Elem lead_inv = f.inv(b.lead());
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t top = r.size(); top-- > db;) {
    const Elem coef = f.mul(r[top], lead_inv);
    if (coef == 0) continue;
    const std::size_t shift = top - db;
    quot[shift] = coef;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] = f.sub(r[shift + j], f.mul(coef, b.c[j]));
  }
  return {FqPoly(std::move(quot)), FqPoly(std::move(r))};
}

FqPoly pow(const Fq& f, const FqPoly& a, unsigned e) {
  FqPoly r({1});
  for (unsigned i = 0; i < e; ++i) r = mul(f, r, a);
  return r;
}

Elem eval(const Fq& f, const FqPoly& a, Elem x) {
  Elem r = 0;
  for (int i = a.degree(); i >= 0; --i) r = f.add(f.mul(r, x), a.coeff(i));
  return r;
}

FqPoly make_monic(const Fq& f, FqPoly a) {
  if (a.is_zero()) throw std::domain_error("zero polynomial has no monic normalization");
  const Elem s = f.inv(a.lead());
  for (auto& x : a.c) x = f.mul(x, s);
  return a;
}

// ---- irreducibles ----

BigInt irreducible_count_formula(int q, int d) {
  BigInt total = 0;
  for (auto e : nt::divisors(d)) total += nt::mobius(e) * nt::pow(q, static_cast<unsigned>(d / e));
  return total / d;
}

std::vector<FqPoly> irreducibles(const Fq& f, int d) {
  if (d < 1) throw std::invalid_argument("irreducible degree must be positive");
  const int q = f.q();
  const auto total = ipow(static_cast<std::uint64_t>(q), d);
  if (total > kIrreducibleGuard) throw SizeGuardError("irreducible sieve limited to q^d <= 10^7");
  // Sieve: mark every product g * h with g irreducible of degree e <= d/2.
  std::vector<char> reducible(total, 0);
  for (int e = 1; 2 * e <= d; ++e) {
    const auto lower = irreducibles(f, e);
    const auto cofactors = ipow(static_cast<std::uint64_t>(q), d - e);
    for (const auto& g : lower)
      for (std::uint64_t t = 0; t < cofactors; ++t) reducible[mul(f, g, monic_from_code(q, d - e, t)).code(q)] = 1;
  }
  std::vector<FqPoly> out;
  for (std::uint64_t t = 0; t < total; ++t)
    if (!reducible[t]) out.push_back(monic_from_code(q, d, t));
  return out;
}

bool is_irreducible(const Fq& f, const FqPoly& a) {
  if (a.degree() < 1) return false;
  for (int e = 1; 2 * e <= a.degree(); ++e)
    for (const auto& g : irreducibles(f, e))
      if (divmod(f, a, g).second.is_zero()) return false;
  return true;
}

// ---- factorization ----

const std::vector<FqPoly>& Factorizer::table(int d) {
  auto it = tables_.find(d);
  if (it == tables_.end()) it = tables_.emplace(d, irreducibles(field_, d)).first;
  return it->second;
}

Factorization Factorizer::factor(const FqPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument("factor expects a monic polynomial of positive degree");
  Factorization out;
  FqPoly rest = f;
  for (int e = 1; 2 * e <= rest.degree(); ++e) {
    for (const auto& g : table(e)) {
      int mult = 0;
      for (;;) {
        auto [quot, rem] = divmod(field_, rest, g);
        if (!rem.is_zero()) break;
        rest = std::move(quot);
        ++mult;
      }
      if (mult > 0) out.push_back({g, mult});
      if (2 * e > rest.degree()) break;
    }
  }
  if (rest.degree() >= 1) {
    // No factor of degree <= deg/2 remains, so rest is irreducible.
    out.push_back({rest, 1});
  }
  std::sort(out.begin(), out.end(), [&](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.code(field_.q()) < b.poly.code(field_.q());
  });
  if (expand(field_, out) != f) throw InvariantError("factorization does not recompose to " + f.to_string());
  return out;
}

Factorization factor(const Fq& f, const FqPoly& a) { return Factorizer(f).factor(a); }

FqPoly expand(const Fq& f, const Factorization& fac) {
  FqPoly r({1});
  for (const auto& [g, m] : fac) r = mul(f, r, pow(f, g, static_cast<unsigned>(m)));
  return r;
}

// ---- involutions ----

FqPoly reciprocal_conjugate(const Fq& f, const FqPoly& a) {
  if (!a.is_monic()) throw std::invalid_argument("reciprocal conjugate expects a monic polynomial");
  const Elem c0 = a.coeff(0);
  if (c0 == 0) throw std::domain_error("reciprocal conjugate needs a nonzero constant term");
  const Elem s = f.inv(c0);
  std::vector<Elem> c(a.c.rbegin(), a.c.rend());
  for (auto& x : c) x = f.mul(x, s);
  return FqPoly(std::move(c));
}

FqPoly sign_conjugate(const Fq& f, const FqPoly& a) {
  if (!a.is_monic()) throw std::invalid_argument("sign conjugate expects a monic polynomial");
  FqPoly r = a;
  const int d = a.degree();
  for (int i = 0; i <= d; ++i)
    if ((d - i) % 2 == 1) r.c[static_cast<std::size_t>(i)] = f.neg(r.c[static_cast<std::size_t>(i)]);
  return r;
}

// ---- counting identities ----

BigInt count_selfreciprocal_irreducibles(int q, int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  const int e = q % 2 == 0 ? 1 : 2;
  if (n == 1) return e;
  if (n % 2 == 1) return 0;
  BigInt total = 0;
  for (auto d : nt::divisors(n)) {
    if (d % 2 == 0) continue;
    total += nt::mobius(d) * (nt::pow(q, static_cast<unsigned>(n / (2 * d))) + 1 - e);
  }
  return total / n;
}

BigInt count_selfreciprocal_irreducibles_enumerated(const Fq& f, int n) {
  BigInt count = 0;
  for (const auto& g : irreducibles(f, n))
    if (g.coeff(0) != 0 && reciprocal_conjugate(f, g) == g) ++count;
  return count;
}

BigInt count_even_irreducibles_enumerated(const Fq& f, int n) {
  BigInt count = 0;
  for (const auto& g : irreducibles(f, n))
    if (sign_conjugate(f, g) == g) ++count;
  return count;
}

BigInt count_transitive_unimodal(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  BigInt total = 0;
  for (auto d : nt::divisors(n))
    if (d % 2 == 1) total += nt::mobius(d) * nt::pow(2, static_cast<unsigned>(n / d));
  return total / (2 * n);
}

std::map<int, BigInt> irreducible_count_by_norm(const Fq& f, int i) {
  if (ipow(static_cast<std::uint64_t>(f.q()), i) > kNormGuard) throw SizeGuardError("norm histogram limited to q^i <= 10^6");
  std::map<int, BigInt> hist;
  for (int r = 0; r < f.q() - 1; ++r) hist[r] = 0;
  for (const auto& g : irreducibles(f, i)) {
    if (g.coeff(0) == 0) continue;
    const Elem norm = i % 2 == 0 ? g.coeff(0) : f.neg(g.coeff(0));
    ++hist[f.log(norm)];
  }
  return hist;
}

std::map<int, BigInt> necklace_norm_histogram(int q, int i) {
  std::map<int, BigInt> hist;
  for (int r = 0; r < q - 1; ++r) hist[r] = 0;
  for (int m = 1; m <= i * (q - 1); ++m) hist[m % (q - 1)] += nt::aperiodic_necklace_count(i, q, m);
  return hist;
}

}  // namespace cellini::ff
