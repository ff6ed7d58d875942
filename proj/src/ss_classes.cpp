#include "cellini/ss_classes.hpp"

#include <map>
#include <stdexcept>

#include "cellini/errors.hpp"
#include "cellini/numtheory.hpp"

namespace cellini {

namespace {

constexpr std::uint64_t kSlGuard = 1'000'000;
constexpr std::uint64_t kSpGuard = 10'000'000;
constexpr std::uint64_t kLieGuard = 1'000'000;

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) {
    r *= b;
    if (r > 1'000'000'000'000ULL) return r;
  }
  return r;
}

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
}

// Multiplicity of the linear factor z - a.
int root_multiplicity(const ff::Fq& f, ff::FqPoly g, ff::Elem a) {
  const ff::FqPoly lin({f.neg(a), 1});
  int m = 0;
  for (;;) {
    auto [quot, rem] = ff::divmod(f, g, lin);
    if (!rem.is_zero()) return m;
    g = std::move(quot);
    ++m;
  }
}

ClassLabel from_counts(const std::map<int, int>& lambda, const std::map<int, int>& mu) {
  std::vector<int> pos, neg;
  for (const auto& [deg, count] : lambda) pos.insert(pos.end(), static_cast<std::size_t>(count), deg);
  for (const auto& [deg, count] : mu) neg.insert(neg.end(), static_cast<std::size_t>(count), deg);
  return ClassLabel::type_c(nt::Partition(std::move(pos)), nt::Partition(std::move(neg)));
}

template <class Conj>
ClassLabel pair_up(ff::Factorizer& fz, const ff::FqPoly& f, Conj conj) {
  const auto fac = fz.factor(f);
  std::map<ff::FqPoly, int> mult;
  for (const auto& [g, m] : fac) mult[g] = m;
  std::map<int, int> lambda, mu;
  for (const auto& [g, m] : fac) {
    const auto partner = conj(g);
    if (partner == g) {
      if (g.degree() % 2 == 1 && m % 2 == 1)
        throw InvariantError("odd-degree self-conjugate factor with odd multiplicity in " + f.to_string());
      lambda[g.degree()] += m / 2;
      if (m % 2 == 1) mu[g.degree() / 2] += 1;
      continue;
    }
    const auto it = mult.find(partner);
    if (it == mult.end() || it->second != m)
      throw InvariantError("factor " + g.to_string() + " is not matched by its conjugate in " + f.to_string());
    if (g < partner) lambda[g.degree()] += m;
  }
  auto label = from_counts(lambda, mu);
  if (2 * label.weight() != f.degree()) throw InvariantError("class label weight does not match degree");
  return label;
}

}  // namespace

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::SL: return "SL";
    case ClassKind::Sp: return "Sp";
    case ClassKind::SpLie: return "sp";
  }
  return "?";
}

std::vector<ff::FqPoly> enumerate_sl(const ff::Fq& f, int n) {
  check_rank(n);
  const auto count = ipow(static_cast<std::uint64_t>(f.q()), n - 1);
  if (count > kSlGuard) throw SizeGuardError("SL class enumeration limited to q^{n-1} <= 10^6");
  std::vector<ff::FqPoly> out;
  out.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    // Constant term fixed to 1; t supplies c_1 .. c_{n-1}.
    out.push_back(ff::monic_from_code(f.q(), n, t * static_cast<std::uint64_t>(f.q()) + 1));
  }
  return out;
}

std::vector<ff::FqPoly> enumerate_sp(const ff::Fq& f, int n) {
  check_rank(n);
  const int q = f.q();
  const int deg = 2 * n;
  const auto total = ipow(static_cast<std::uint64_t>(q), deg);
  if (total > kSpGuard) throw SizeGuardError("Sp class enumeration limited to q^{2n} <= 10^7");
  std::vector<ff::FqPoly> out;
  std::vector<ff::Elem> c(static_cast<std::size_t>(deg + 1), 0);
  c.back() = 1;
  // Odometer over c_0 .. c_{deg-1}, constant term fastest.
  for (std::uint64_t t = 0; t < total; ++t) {
    if (t > 0) {
      for (std::size_t i = 0;; ++i) {
        if (++c[i] < q) break;
        c[i] = 0;
      }
    }
    const ff::Elem c0 = c[0];
    if (c0 == 0) continue;
    const ff::Elem s = f.inv(c0);
    bool fixed = true;
    for (int i = 0; i <= deg && fixed; ++i)
      fixed = c[static_cast<std::size_t>(i)] == f.mul(s, c[static_cast<std::size_t>(deg - i)]);
    if (!fixed) continue;
    ff::FqPoly g(c);
    const int m_plus = root_multiplicity(f, g, 1);
    const int m_minus = root_multiplicity(f, g, f.neg(1));
    if (m_plus % 2 != 0 || m_minus % 2 != 0) continue;
    out.push_back(std::move(g));
  }
  if (out.size() != ipow(static_cast<std::uint64_t>(q), n))
    throw InvariantError("Sp(" + std::to_string(deg) + "," + std::to_string(q) + ") class count " +
                         std::to_string(out.size()) + " differs from q^n");
  return out;
}

std::vector<ff::FqPoly> enumerate_sp_lie(const ff::Fq& f, int n) {
  check_rank(n);
  if (f.q() % 2 == 0) throw std::invalid_argument("Lie algebra orbits are defined here for odd q only");
  const auto count = ipow(static_cast<std::uint64_t>(f.q()), n);
  if (count > kLieGuard) throw SizeGuardError("sp orbit enumeration limited to q^n <= 10^6");
  std::vector<ff::FqPoly> out;
  out.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    const auto g = ff::monic_from_code(f.q(), n, t);
    std::vector<ff::Elem> c(static_cast<std::size_t>(2 * n + 1), 0);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(2 * i)] = g.coeff(i);
    out.emplace_back(std::move(c));
  }
  return out;
}

ClassLabel phi_A(ff::Factorizer& fz, const ff::FqPoly& f) {
  std::vector<int> parts;
  for (const auto& [g, m] : fz.factor(f)) parts.insert(parts.end(), static_cast<std::size_t>(m), g.degree());
  return ClassLabel::type_a(nt::Partition(std::move(parts)));
}

ClassLabel phi_C(ff::Factorizer& fz, const ff::FqPoly& f) {
  const auto& field = fz.field();
  return pair_up(fz, f, [&](const ff::FqPoly& g) { return ff::reciprocal_conjugate(field, g); });
}

ClassLabel phi_C_lie(ff::Factorizer& fz, const ff::FqPoly& f) {
  const auto& field = fz.field();
  return pair_up(fz, f, [&](const ff::FqPoly& g) { return ff::sign_conjugate(field, g); });
}

ClassMeasure class_distribution(ClassKind kind, int n, int q) {
  const auto field = ff::Fq::make(q);
  ff::Factorizer fz(field);
  std::vector<ff::FqPoly> polys;
  switch (kind) {
    case ClassKind::SL: polys = enumerate_sl(field, n); break;
    case ClassKind::Sp: polys = enumerate_sp(field, n); break;
    case ClassKind::SpLie: polys = enumerate_sp_lie(field, n); break;
  }
  std::map<ClassLabel, unsigned long> counts;
  for (const auto& f : polys) {
    switch (kind) {
      case ClassKind::SL: ++counts[phi_A(fz, f)]; break;
      case ClassKind::Sp: ++counts[phi_C(fz, f)]; break;
      case ClassKind::SpLie: ++counts[phi_C_lie(fz, f)]; break;
    }
  }
  ClassMeasure out;
  for (const auto& [label, c] : counts) out.add(label, make_rational(c, polys.size()));
  return out;
}

std::size_t class_count(ClassKind kind, int n, int q) {
  const auto field = ff::Fq::make(q);
  switch (kind) {
    case ClassKind::SL: return enumerate_sl(field, n).size();
    case ClassKind::Sp: return enumerate_sp(field, n).size();
    case ClassKind::SpLie: return enumerate_sp_lie(field, n).size();
  }
  return 0;
}

}  // namespace cellini
