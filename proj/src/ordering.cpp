#include "sasbi/ordering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sasbi {

namespace {

std::size_t rational_rank(const std::vector<OrderingMatrix::Row>& rows, std::size_t ncols) {
  std::vector<std::vector<Rational>> a;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (auto v : r) row.emplace_back(static_cast<long>(v));
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < ncols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::string_view to_string(OrderingClass c) {
  switch (c) {
    case OrderingClass::global: return "global";
    case OrderingClass::local: return "local";
    case OrderingClass::local_degree: return "local-degree";
    case OrderingClass::mixed: return "mixed";
  }
  return "?";
}

OrderingMatrix::OrderingMatrix(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("ordering matrix has no rows");
  nvars_ = rows_.front().size();
  for (const auto& r : rows_)
    if (r.size() != nvars_) throw std::invalid_argument("ordering matrix rows differ in length");
  if (rational_rank(rows_, nvars_) != nvars_)
    throw std::invalid_argument("ordering matrix is rank-deficient");
}

OrderingClass classify(const OrderingMatrix& m) {
  bool all_positive = true;
  bool all_negative = true;
  for (std::size_t col = 0; col < m.nvars(); ++col) {
    for (const auto& row : m.rows()) {
      if (row[col] == 0) continue;
      if (row[col] > 0) all_negative = false;
      else all_positive = false;
      break;
    }
  }
  if (all_positive) return OrderingClass::global;
  if (!all_negative) return OrderingClass::mixed;
  const auto& first = m.rows().front();
  bool uniform = std::all_of(first.begin(), first.end(),
                             [&](std::int64_t v) { return v == first.front() && v < 0; });
  return uniform ? OrderingClass::local_degree : OrderingClass::local;
}

OrderingMatrix named_ordering(std::string_view name, std::size_t n) {
  if (n == 0) throw std::invalid_argument("ordering needs at least one variable");
  auto unit = [n](std::size_t i, std::int64_t v) {
    OrderingMatrix::Row r(n, 0);
    r[i] = v;
    return r;
  };
  std::vector<OrderingMatrix::Row> rows;
  if (name == "lp" || name == "ls") {
    std::int64_t s = name == "lp" ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(unit(i, s));
  } else if (name == "dp" || name == "ds") {
    rows.emplace_back(n, name == "dp" ? 1 : -1);
    for (std::size_t i = n; i-- > 1;) rows.push_back(unit(i, -1));
  } else if (name == "Ds") {
    rows.emplace_back(n, -1);
    for (std::size_t i = 0; i + 1 < n; ++i) rows.push_back(unit(i, 1));
  } else {
    throw std::invalid_argument("unknown ordering '" + std::string(name) + "'");
  }
  return OrderingMatrix(std::move(rows));
}

RingContext::RingContext(std::vector<std::string> variable_names, OrderingMatrix matrix,
                         std::string ordering_label)
    : names_(std::move(variable_names)),
      matrix_(std::move(matrix)),
      class_(classify(matrix_)),
      label_(std::move(ordering_label)) {
  if (names_.size() != matrix_.nvars())
    throw std::invalid_argument("ordering matrix has " + std::to_string(matrix_.nvars()) +
                                " columns for " + std::to_string(names_.size()) + " variables");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
}

RingContext RingContext::named(std::vector<std::string> variable_names, std::string_view ordering) {
  auto n = variable_names.size();
  return RingContext(std::move(variable_names), named_ordering(ordering, n), std::string(ordering));
}

std::strong_ordering RingContext::compare(const ExponentVector& a, const ExponentVector& b) const {
  if (a.size() != names_.size() || b.size() != names_.size())
    throw std::invalid_argument("exponent length does not match the ring");
  for (const auto& row : matrix_.rows()) {
    std::int64_t wa = 0;
    std::int64_t wb = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      wa += row[i] * a[i];
      wb += row[i] * b[i];
    }
    if (wa != wb) return wa <=> wb;
  }
  return std::strong_ordering::equal;
}

LeadingData leading_data(const Polynomial& f, const RingContext& ctx) {
  if (f.is_zero()) throw std::invalid_argument("leading data of the zero polynomial");
  if (f.nvars() != ctx.nvars()) throw std::invalid_argument("polynomial does not match the ring");
  auto best = f.terms().begin();
  int deg = 0;
  for (auto it = f.terms().begin(); it != f.terms().end(); ++it) {
    deg = std::max(deg, total_degree(it->first));
    if (ctx.greater(it->first, best->first)) best = it;
  }
  LeadingData d;
  d.lm = best->first;
  d.lc = best->second;
  d.ord = total_degree(d.lm);
  d.ecart = deg - d.ord;
  return d;
}

ExponentVector leading_monomial(const Polynomial& f, const RingContext& ctx) {
  return leading_data(f, ctx).lm;
}

Rational leading_coefficient(const Polynomial& f, const RingContext& ctx) {
  return leading_data(f, ctx).lc;
}

Polynomial leading_term(const Polynomial& f, const RingContext& ctx) {
  auto d = leading_data(f, ctx);
  return Polynomial::monomial(d.lm, d.lc);
}

Polynomial tail(const Polynomial& f, const RingContext& ctx) {
  return f - leading_term(f, ctx);
}

int ecart(const Polynomial& f, const RingContext& ctx) { return leading_data(f, ctx).ecart; }

std::vector<std::pair<ExponentVector, Rational>> sorted_terms(const Polynomial& f,
                                                              const RingContext& ctx) {
  std::vector<std::pair<ExponentVector, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ctx.greater(a.first, b.first); });
  return terms;
}

Polynomial make_monic(const Polynomial& f, const RingContext& ctx) {
  if (f.is_zero()) return f;
  Rational lc = leading_coefficient(f, ctx);
  return f.scaled(1 / lc);
}

OrderedPolynomial::OrderedPolynomial(const Polynomial& p, const RingContext& ctx)
    : nvars_(p.nvars()), terms_(MonomialGreater{&ctx}) {
  if (p.nvars() != ctx.nvars()) throw std::invalid_argument("polynomial does not match the ring");
  for (const auto& [e, c] : p.terms()) terms_.emplace(e, c);
}

int OrderedPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void OrderedPolynomial::subtract(const Polynomial& p, const ExponentVector& shift,
                                 const Rational& c) {
  for (const auto& [e, v] : p.terms()) {
    auto key = add_exponents(e, shift);
    Rational delta = v * c;
    auto [it, inserted] = terms_.try_emplace(std::move(key), -delta);
    if (inserted) continue;
    it->second -= delta;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::pair<ExponentVector, Rational> OrderedPolynomial::pop_leading() {
  auto node = terms_.extract(terms_.begin());
  return {std::move(node.key()), std::move(node.mapped())};
}

Polynomial OrderedPolynomial::to_polynomial() const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) p.add_term(e, c);
  return p;
}

}  // namespace sasbi
