#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sasbi/polynomial.hpp"

namespace sasbi {

enum class OrderingClass { global, local, local_degree, mixed };

std::string_view to_string(OrderingClass c);

/// Integer k x n matrix defining x^a > x^b iff M*a >lex M*b.
/// Construction rejects matrices whose rank is below n.
class OrderingMatrix {
 public:
  using Row = std::vector<std::int64_t>;

  explicit OrderingMatrix(std::vector<Row> rows);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Row>& rows() const { return rows_; }

  friend bool operator==(const OrderingMatrix&, const OrderingMatrix&) = default;

 private:
  std::vector<Row> rows_;
  std::size_t nvars_ = 0;
};

/// global: first nonzero entry of every column positive; local: negative;
/// local_degree: local and the first row is one repeated negative value.
OrderingClass classify(const OrderingMatrix& m);

/// lp, dp, ls, ds and Ds on n variables. Throws std::invalid_argument on an
/// unknown name.
OrderingMatrix named_ordering(std::string_view name, std::size_t n);

/// Variable names plus a monomial ordering. Every ordering-dependent
/// question (comparisons, leading data, term order) goes through here.
class RingContext {
 public:
  /// `ordering_label` is kept for printing ("ds", "M(...)"); empty means the
  /// matrix form is printed.
  RingContext(std::vector<std::string> variable_names, OrderingMatrix matrix,
              std::string ordering_label = {});

  static RingContext named(std::vector<std::string> variable_names, std::string_view ordering);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const OrderingMatrix& matrix() const { return matrix_; }
  OrderingClass ordering_class() const { return class_; }
  const std::string& ordering_label() const { return label_; }

  bool is_global() const { return class_ == OrderingClass::global; }
  /// local or local_degree
  bool is_local() const {
    return class_ == OrderingClass::local || class_ == OrderingClass::local_degree;
  }
  bool is_local_degree() const { return class_ == OrderingClass::local_degree; }

  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;
  bool greater(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

 private:
  std::vector<std::string> names_;
  OrderingMatrix matrix_;
  OrderingClass class_;
  std::string label_;
};

/// Strict "comes first" predicate: the larger monomial sorts first.
struct MonomialGreater {
  const RingContext* ctx;
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return ctx->greater(a, b);
  }
};

struct LeadingData {
  ExponentVector lm;
  Rational lc;
  int ord = 0;    // deg(LM)
  int ecart = 0;  // deg(f) - ord
  const ExponentVector& le() const { return lm; }
};

/// Throws std::invalid_argument for the zero polynomial.
LeadingData leading_data(const Polynomial& f, const RingContext& ctx);
ExponentVector leading_monomial(const Polynomial& f, const RingContext& ctx);
Rational leading_coefficient(const Polynomial& f, const RingContext& ctx);
Polynomial leading_term(const Polynomial& f, const RingContext& ctx);
Polynomial tail(const Polynomial& f, const RingContext& ctx);
int ecart(const Polynomial& f, const RingContext& ctx);

/// Terms in strictly decreasing order under ctx.
std::vector<std::pair<ExponentVector, Rational>> sorted_terms(const Polynomial& f,
                                                              const RingContext& ctx);
/// f / LC(f); zero stays zero.
Polynomial make_monic(const Polynomial& f, const RingContext& ctx);

/// A polynomial kept sorted under one ordering, so the leading term is
/// always at hand. Used by every reduction loop.
class OrderedPolynomial {
 public:
  OrderedPolynomial(const Polynomial& p, const RingContext& ctx);

  bool is_zero() const { return terms_.empty(); }
  const ExponentVector& lm() const { return terms_.begin()->first; }
  const Rational& lc() const { return terms_.begin()->second; }
  int degree() const;
  int ecart() const { return degree() - total_degree(lm()); }

  /// this -= c * x^shift * p
  void subtract(const Polynomial& p, const ExponentVector& shift, const Rational& c);
  /// Removes and returns the leading term.
  std::pair<ExponentVector, Rational> pop_leading();

  Polynomial to_polynomial() const;

 private:
  std::size_t nvars_;
  std::map<ExponentVector, Rational, MonomialGreater> terms_;
};

}  // namespace sasbi
