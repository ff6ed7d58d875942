#include "cellini/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cellini/errors.hpp"

namespace cellini::nt {

std::int64_t mod(std::int64_t n, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  const std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

int mobius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("mobius: argument must be positive");
  int result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::int64_t> common_divisors(std::int64_t a, std::int64_t b) {
  // gcd(a, 0) = a, so every divisor of a divides 0.
  return divisors(std::gcd(a, b));
}

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper index");
  if (b < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

BigInt pow(std::int64_t base, unsigned exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), BigInt(static_cast<long>(base)).get_mpz_t(), exp);
  return r;
}

std::int64_t ramanujan_sum(std::int64_t m, std::int64_t n) {
  if (m < 1) throw std::invalid_argument("ramanujan_sum: m must be positive");
  std::int64_t total = 0;
  for (auto d : common_divisors(m, mod(n, m))) total += d * mobius(m / d);
  return total;
}

BigInt von_sterneck_count(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (m < 1) throw std::invalid_argument("von_sterneck_count: m must be positive");
  if (k < 1) throw std::invalid_argument("von_sterneck_count: k must be positive");
  BigInt total = 0;
  for (auto d : common_divisors(m, k)) {
    total += binomial((m + k - d) / d, k / d) * ramanujan_sum(d, n);
  }
  if (total % m != 0) throw InvariantError("Von Sterneck sum not divisible by m");
  return total / m;
}

bool reciprocity_check(std::int64_t x, std::int64_t y, std::int64_t n) {
  if (x < 1 || y < 1) throw std::invalid_argument("reciprocity_check: x, y must be positive");
  return von_sterneck_count(n, y, x) == von_sterneck_count(n, x, y);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::int64_t j) const {
  if (j < 0 || j >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(j)];
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0 || coeffs_[j] != 1) os << coeffs_[j].get_str();
    if (j >= 1) os << "q";
    if (j >= 2) os << "^" << j;
  }
  return os.str();
}

IntPoly q_binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return IntPoly{};
  b = std::min(b, a - b);
  const std::int64_t top = b * (a - b);
  std::vector<BigInt> c(static_cast<std::size_t>(top + 1 + a), 0);
  c[0] = 1;
  std::int64_t deg = 0;
  for (std::int64_t i = 1; i <= b; ++i) {
    // Multiply by (1 - q^(a-b+i)).
    const std::int64_t s = a - b + i;
    for (std::int64_t j = deg; j >= 0; --j) c[static_cast<std::size_t>(j + s)] -= c[static_cast<std::size_t>(j)];
    deg += s;
    // Divide exactly by (1 - q^i): Q[j] = P[j] + Q[j - i].
    for (std::int64_t j = i; j <= deg; ++j) c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - i)];
    deg -= i;
  }
  c.resize(static_cast<std::size_t>(top + 1));
  return IntPoly(std::move(c));
}

BigInt box_partition_count_mod(std::int64_t parts_max, std::int64_t size_max,
                               std::int64_t residue, std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("box_partition_count_mod: modulus must be positive");
  // A negative bound admits nothing, not even the empty partition.
  if (parts_max < 0 || size_max < 0) return 0;
  const IntPoly gf = q_binomial(parts_max + size_max, parts_max);
  const std::int64_t r = mod(residue, modulus);
  BigInt total = 0;
  for (std::int64_t j = r; j <= gf.degree(); j += modulus) total += gf.coeff(j);
  return total;
}

BigInt f_coeff(std::int64_t n, std::int64_t k, std::int64_t d) {
  if (k < 1) throw std::invalid_argument("f_coeff: k must be positive");
  if (d < 0 || n < 0 || n > d * (k - 1)) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(n + 1), 0);
  row[0] = 1;
  for (std::int64_t step = 0; step < d; ++step) {
    // Multiply by 1 + z + ... + z^(k-1), truncated at degree n, via prefix sums.
    std::vector<BigInt> next(row.size(), 0);
    BigInt window = 0;
    for (std::int64_t j = 0; j <= n; ++j) {
      window += row[static_cast<std::size_t>(j)];
      if (j - k >= 0) window -= row[static_cast<std::size_t>(j - k)];
      next[static_cast<std::size_t>(j)] = window;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(n)];
}

BigInt aperiodic_necklace_count(std::int64_t i, std::int64_t k, std::int64_t m) {
  if (i < 1 || k < 1) throw std::invalid_argument("aperiodic_necklace_count: i, k must be positive");
  if (m < 0) return 0;
  BigInt total = 0;
  for (auto d : common_divisors(i, m)) {
    total += mobius(d) * f_coeff(m / d, k, i / d);
  }
  if (total % i != 0) throw InvariantError("necklace Möbius sum not divisible by length");
  return total / i;
}

BigInt aperiodic_necklace_total(std::int64_t i, std::int64_t k) {
  if (i < 1 || k < 1) throw std::invalid_argument("aperiodic_necklace_total: i, k must be positive");
  BigInt total = 0;
  for (auto d : divisors(i)) total += mobius(d) * pow(k, static_cast<unsigned>(i / d));
  return total / i;
}

Partition::Partition(std::vector<int> raw) {
  for (int p : raw) {
    if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (p > 0) parts.push_back(p);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

}  // namespace cellini::nt
