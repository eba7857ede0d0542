#include "sasbi/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace sasbi {

namespace {

void require_global(const RingContext& ctx, const char* what) {
  if (!ctx.is_global())
    throw std::domain_error(std::string(what) + " requires a global ordering");
}

struct Pair {
  std::size_t i;
  std::size_t j;
  int lcm_degree;
};

// Full reduction of f by `basis`, whose leading data is precomputed.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const std::vector<LeadingData>& leads, const RingContext& ctx) {
  OrderedPolynomial h(f, ctx);
  Polynomial remainder(f.nvars());
  while (!h.is_zero()) {
    const ExponentVector& lm = h.lm();
    std::size_t k = 0;
    while (k < basis.size() && !divides(leads[k].lm, lm)) ++k;
    if (k == basis.size()) {
      auto [e, c] = h.pop_leading();
      remainder.add_term(e, c);
      continue;
    }
    Rational factor = h.lc() / leads[k].lc;
    h.subtract(basis[k], subtract_exponents(lm, leads[k].lm), factor);
  }
  return remainder;
}

}  // namespace

Polynomial division_nf(const Polynomial& f, std::span<const Polynomial> basis,
                       const RingContext& ctx) {
  require_global(ctx, "division_nf");
  std::vector<Polynomial> b(basis.begin(), basis.end());
  std::vector<LeadingData> leads;
  for (const auto& g : b) {
    if (g.is_zero()) throw std::invalid_argument("division_nf: zero basis element");
    leads.push_back(leading_data(g, ctx));
  }
  return reduce_full(f, b, leads, ctx);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const RingContext& ctx) {
  auto lf = leading_data(f, ctx);
  auto lg = leading_data(g, ctx);
  auto l = lcm_exponents(lf.lm, lg.lm);
  return f.shifted(subtract_exponents(l, lf.lm), 1 / lf.lc) -
         g.shifted(subtract_exponents(l, lg.lm), 1 / lg.lc);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const RingContext& ctx) {
  require_global(ctx, "buchberger");
  std::vector<Polynomial> basis;
  std::vector<LeadingData> leads;
  std::vector<Pair> pairs;

  auto insert = [&](Polynomial p) {
    p = make_monic(p, ctx);
    leads.push_back(leading_data(p, ctx));
    basis.push_back(std::move(p));
    std::size_t j = basis.size() - 1;
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, total_degree(lcm_exponents(leads[i].lm, leads[j].lm))});
  };

  for (const auto& g : gens) {
    if (g.nvars() != ctx.nvars()) throw std::invalid_argument("buchberger: arity mismatch");
    if (g.is_zero()) throw std::invalid_argument("buchberger: zero generator");
    Polynomial r = reduce_full(g, basis, leads, ctx);
    if (!r.is_zero()) insert(std::move(r));
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair p = *it;
    pairs.erase(it);

    const auto& li = leads[p.i].lm;
    const auto& lj = leads[p.j].lm;
    if (add_exponents(li, lj) == lcm_exponents(li, lj)) continue;  // coprime

    Polynomial r = reduce_full(s_polynomial(basis[p.i], basis[p.j], ctx), basis, leads, ctx);
    if (!r.is_zero()) insert(std::move(r));
  }

  // Minimalize: drop elements whose LM is divisible by another's.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !divides(leads[j].lm, leads[i].lm)) continue;
      redundant = leads[j].lm != leads[i].lm || j < i;
    }
    if (!redundant) keep.push_back(i);
  }

  std::vector<Polynomial> minimal;
  std::vector<LeadingData> minimal_leads;
  for (auto i : keep) {
    minimal.push_back(basis[i]);
    minimal_leads.push_back(leads[i]);
  }

  // Inter-reduce tails.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    std::vector<LeadingData> other_leads;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j]);
      other_leads.push_back(minimal_leads[j]);
    }
    Polynomial lt = Polynomial::monomial(minimal_leads[i].lm, minimal_leads[i].lc);
    Polynomial t = reduce_full(minimal[i] - lt, others, other_leads, ctx);
    reduced.push_back(make_monic(lt + t, ctx));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ctx.greater(leading_monomial(a, ctx), leading_monomial(b, ctx));
  });
  return reduced;
}

RingContext tag_ring(std::span<const ExponentVector> lms) {
  const std::size_t m = lms.size();
  if (m == 0) throw std::invalid_argument("tag ring needs at least one tag");
  std::vector<OrderingMatrix::Row> rows;
  OrderingMatrix::Row weights(m);
  for (std::size_t i = 0; i < m; ++i) weights[i] = total_degree(lms[i]);
  rows.push_back(weights);
  auto ds = named_ordering("ds", m);
  rows.insert(rows.end(), ds.rows().begin(), ds.rows().end());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("@y" + std::to_string(i + 1));
  return RingContext(std::move(names), OrderingMatrix(std::move(rows)));
}

TaggedRing TaggedRing::make(const RingContext& base, std::span<const ExponentVector> lms) {
  const std::size_t n = base.nvars();
  const std::size_t m = lms.size();
  const std::size_t total = n + m;
  std::vector<OrderingMatrix::Row> rows;

  OrderingMatrix::Row x_degree(total, 0);
  for (std::size_t i = 0; i < n; ++i) x_degree[i] = 1;
  rows.push_back(x_degree);
  for (std::size_t i = n; i-- > 1;) {
    OrderingMatrix::Row r(total, 0);
    r[i] = -1;
    rows.push_back(r);
  }
  if (m > 0) {
    auto yring = tag_ring(lms);
    for (const auto& yr : yring.matrix().rows()) {
      OrderingMatrix::Row r(total, 0);
      std::copy(yr.begin(), yr.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
      rows.push_back(r);
    }
  }

  std::vector<std::string> names = base.variable_names();
  for (std::size_t i = 0; i < m; ++i) names.push_back("@y" + std::to_string(i + 1));
  return TaggedRing{RingContext(std::move(names), OrderingMatrix(std::move(rows))), n, m};
}

RelationIdeal toric_relations(std::span<const ExponentVector> lms, const RingContext& base) {
  for (const auto& e : lms) {
    if (e.size() != base.nvars())
      throw std::invalid_argument("toric_relations: exponent length mismatch");
    if (is_zero_exponent(e))
      throw std::invalid_argument("toric_relations: zero exponent vector");
  }
  const std::size_t n = base.nvars();
  const std::size_t m = lms.size();
  if (m == 0) {
    // No tags: the relation ideal lives in a ring with no variables.
    return RelationIdeal{RingContext::named({"@y1"}, "dp"), {}};
  }
  auto tagged = TaggedRing::make(base, lms);

  std::vector<Polynomial> ideal;
  for (std::size_t i = 0; i < m; ++i) {
    ExponentVector x(n + m, 0);
    std::copy(lms[i].begin(), lms[i].end(), x.begin());
    ExponentVector y(n + m, 0);
    y[n + i] = 1;
    Polynomial p = Polynomial::monomial(x);
    p.add_term(y, -1);
    ideal.push_back(std::move(p));
  }
  auto gb = buchberger(ideal, tagged.ctx);

  RelationIdeal result{tag_ring(lms), {}};
  for (const auto& g : gb) {
    bool pure_tag = true;
    for (const auto& [e, c] : g.terms())
      for (std::size_t i = 0; i < n && pure_tag; ++i)
        if (e[i] != 0) pure_tag = false;
    if (!pure_tag) continue;
    Polynomial y(m);
    for (const auto& [e, c] : g.terms()) y.add_term(ExponentVector(e.begin() + static_cast<std::ptrdiff_t>(n), e.end()), c);
    result.gens.push_back(make_monic(y, result.ctx));
  }
  return result;
}

}  // namespace sasbi
