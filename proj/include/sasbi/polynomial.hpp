#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sasbi {

/// Exact rational coefficient. GMP keeps it canonical: positive denominator,
/// reduced, zero stored as 0/1.
using Rational = mpq_class;

/// Exponent of a monomial x^a; one nonnegative entry per ring variable.
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& e);
ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b);
/// a - b; requires divides(b, a).
ExponentVector subtract_exponents(const ExponentVector& a, const ExponentVector& b);
/// True when x^a divides x^b.
bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm_exponents(const ExponentVector& a, const ExponentVector& b);
bool is_zero_exponent(const ExponentVector& e);

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are keyed by exponent vector in the std::vector lexicographic order,
/// which is an internal storage order only; every monomial ordering view is
/// produced by RingContext. No stored coefficient is ever zero.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial monomial(ExponentVector e, const Rational& c = 1);
  static Polynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const ExponentVector& e) const;
  Rational constant_term() const;
  /// Maximal total degree of the support; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  /// Adds c*x^e in place, dropping the term if it cancels.
  void add_term(const ExponentVector& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;

  Polynomial scaled(const Rational& c) const;
  /// this * c * x^shift
  Polynomial shifted(const ExponentVector& shift, const Rational& c) const;
  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_arity(const Polynomial& other) const;
  void check_arity(const ExponentVector& e) const;

  std::size_t nvars_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Substitutes gens[i] for the i-th variable of p and expands.
/// p.nvars() must equal gens.size(); all gens must share one arity.
/// `target_nvars` is the result arity, needed when gens is empty.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> gens,
                   std::size_t target_nvars);
Polynomial compose(const Polynomial& p, std::span<const Polynomial> gens);

/// Debug rendering with generic variable names x0, x1, ...
std::string to_debug_string(const Polynomial& p);

}  // namespace sasbi
