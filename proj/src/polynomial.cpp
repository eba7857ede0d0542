#include "sasbi/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sasbi {

int total_degree(const ExponentVector& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVector subtract_exponents(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) throw std::invalid_argument("monomial does not divide");
  }
  return r;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVector lcm_exponents(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool is_zero_exponent(const ExponentVector& e) {
  for (int v : e)
    if (v != 0) return false;
  return true;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(ExponentVector(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(ExponentVector e, const Rational& c) {
  Polynomial p(e.size());
  for (int v : e)
    if (v < 0) throw std::invalid_argument("negative exponent");
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  ExponentVector e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
  return coefficient(ExponentVector(nvars_, 0));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int td = total_degree(e);
    if (d >= 0 && td != d) return false;
    d = td;
  }
  return true;
}

void Polynomial::check_arity(const Polynomial& other) const {
  if (other.nvars_ != nvars_)
    throw std::invalid_argument("polynomial variable-count mismatch: " +
                                std::to_string(nvars_) + " vs " +
                                std::to_string(other.nvars_));
}

void Polynomial::check_arity(const ExponentVector& e) const {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  check_arity(e);
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(nvars_);
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::shifted(const ExponentVector& shift, const Rational& c) const {
  check_arity(shift);
  Polynomial r(nvars_);
  if (sgn(c) == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(add_exponents(e, shift), v * c);
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  a += b;
  return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  a -= b;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial variable-count mismatch");
  Polynomial r(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) r.add_term(add_exponents(ea, eb), ca * cb);
  return r;
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> gens,
                   std::size_t target_nvars) {
  if (p.nvars() != gens.size())
    throw std::invalid_argument("compose: polynomial has " + std::to_string(p.nvars()) +
                                " variables but " + std::to_string(gens.size()) +
                                " substitutions were given");
  for (const auto& g : gens)
    if (g.nvars() != target_nvars)
      throw std::invalid_argument("compose: substitutions disagree on variable count");

  // powers[i][k] = gens[i]^k, grown on demand
  std::vector<std::vector<Polynomial>> powers(gens.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target_nvars, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * gens[i]);
    return cache[static_cast<std::size_t>(k)];
  };

  Polynomial result(target_nvars);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target_nvars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    result += term;
  }
  return result;
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> gens) {
  if (gens.empty()) {
    if (p.nvars() != 0) throw std::invalid_argument("compose: arity mismatch");
    throw std::invalid_argument("compose: target arity unknown for empty substitution");
  }
  return compose(p, gens, gens.front().nvars());
}

std::string to_debug_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << it->second.get_str();
    for (std::size_t i = 0; i < it->first.size(); ++i)
      if (it->first[i] > 0) out << "*x" << i << "^" << it->first[i];
  }
  return out.str();
}

}  // namespace sasbi
