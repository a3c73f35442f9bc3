#include "perfgen/monomial.hpp"

#include <algorithm>

#include "perfgen/error.hpp"

namespace perfgen {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) {
    throw Error("too many variables: " + std::to_string(nvars) + " (max " +
                std::to_string(kMaxVars) + ")");
  }
}

Monomial::Monomial(std::size_t nvars, std::initializer_list<unsigned> exps)
    : Monomial(nvars, std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::size_t nvars, std::span<const unsigned> exps) : Monomial(nvars) {
  if (exps.size() != nvars) throw Error("exponent vector length does not match variable count");
  for (std::size_t i = 0; i < nvars; ++i) e_[i] = static_cast<Exponent>(exps[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  if (index >= nvars) throw Error("variable index out of range");
  m.e_[index] = static_cast<Exponent>(power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned s = 0;
  for (std::size_t i = 0; i < nvars_; ++i) s += e_[i];
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.e_[i] = static_cast<Exponent>(e_[i] + other.e_[i]);
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r = other;
  for (std::size_t i = 0; i < nvars_; ++i) r.e_[i] = static_cast<Exponent>(other.e_[i] - e_[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

bool Monomial::supported_below(std::size_t k) const {
  for (std::size_t i = k; i < nvars_; ++i) {
    if (e_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= e_[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e_[i] > 1) out += '^' + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void fill_degree(std::size_t nvars, std::size_t var, unsigned remaining, Monomial& cur,
                 std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.set(var, e);
    fill_degree(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  fill_degree(nvars, 0, degree, cur, out);
  return out;
}

std::vector<Monomial> monomials_below(std::size_t nvars, unsigned bound) {
  std::vector<Monomial> out;
  for (unsigned deg = 0; deg < bound; ++deg) {
    auto layer = monomials_of_degree(nvars, deg);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace perfgen
