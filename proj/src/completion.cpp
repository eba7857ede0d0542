#include "sasbi/completion.hpp"

#include <algorithm>
#include <functional>

#include "sasbi/groebner.hpp"
#include "sasbi/homogenization.hpp"

namespace sasbi {

namespace {

struct Reduction {
  Polynomial remainder;
  bool complete;
};

using Reducer = std::function<Reduction(const Polynomial&, const GeneratorSet&)>;
// Checked at the start of every round; true ends the loop as complete.
using StopTest = std::function<bool(const GeneratorSet&)>;

void sort_descending(std::vector<Polynomial>& polys, const RingContext& ctx) {
  std::sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ctx.greater(leading_monomial(a, ctx), leading_monomial(b, ctx));
  });
}

void push_unique(std::vector<Polynomial>& polys, Polynomial p) {
  if (std::find(polys.begin(), polys.end(), p) == polys.end()) polys.push_back(std::move(p));
}

CompletionResult complete_loop(const GeneratorSet& G, const CompletionLimits& limits,
                               const Reducer& reduce, const StopTest& stop = {}) {
  GeneratorSet F = G;
  for (std::size_t round = 1; round <= limits.max_rounds; ++round) {
    if (stop && stop(F)) return {std::move(F), CompletionStatus::complete, round};
    std::vector<Polynomial> added;
    bool capped = false;
    for (const auto& p : evaluated_spolys(F)) {
      auto r = reduce(p, F);
      if (!r.complete) capped = true;
      if (!r.remainder.is_zero()) push_unique(added, make_monic(r.remainder, F.ctx()));
    }
    if (capped) {
      if (limits.on_limit == OnLimit::fail) throw LimitExceeded("reduction step cap exceeded");
      return {std::move(F), CompletionStatus::limit_exceeded, round};
    }
    if (added.empty()) return {std::move(F), CompletionStatus::complete, round};
    sort_descending(added, F.ctx());
    for (auto& p : added) F = F.appended(std::move(p));
  }
  if (limits.on_limit == OnLimit::fail) throw LimitExceeded("completion round limit exceeded");
  return {std::move(F), CompletionStatus::limit_exceeded, limits.max_rounds};
}

Reducer reducer_for(const RingContext& ctx, std::size_t max_steps) {
  if (ctx.is_local_degree())
    return [max_steps](const Polynomial& p, const GeneratorSet& F) {
      auto r = wsnf(p, F, max_steps);
      return Reduction{std::move(r.remainder), r.transcript.complete};
    };
  if (ctx.is_global())
    return [max_steps](const Polynomial& p, const GeneratorSet& F) {
      auto r = subduce(p, F, max_steps);
      return Reduction{std::move(r.remainder), r.complete};
    };
  throw std::domain_error("Sasbi/Sagbi reduction needs a global or local degree ordering, got " +
                          std::string(to_string(ctx.ordering_class())));
}

}  // namespace

std::vector<Polynomial> evaluated_spolys(const GeneratorSet& G) {
  std::vector<Polynomial> out;
  if (G.empty()) return out;
  const auto& ctx = G.ctx();
  auto lms = G.leading_monomials();
  auto relations = toric_relations(lms, ctx);
  for (const auto& rel : relations.gens) {
    Polynomial s = compose(rel, G.gens(), ctx.nvars());
    if (s.is_zero()) continue;
    push_unique(out, make_monic(s, ctx));
  }
  sort_descending(out, ctx);
  return out;
}

Verdict is_sasbi(const GeneratorSet& G, const CompletionLimits& limits) {
  auto reduce = reducer_for(G.ctx(), limits.max_steps);
  bool capped = false;
  for (const auto& p : evaluated_spolys(G)) {
    auto r = reduce(p, G);
    if (!r.complete) {
      capped = true;
      continue;
    }
    if (!r.remainder.is_zero()) return Verdict::fails;
  }
  return capped ? Verdict::indeterminate : Verdict::holds;
}

CompletionResult sasbi_basis(const GeneratorSet& G, const CompletionLimits& limits) {
  if (!G.ctx().is_local_degree())
    throw std::domain_error("sasbi_basis requires a local degree ordering, got " +
                            std::string(to_string(G.ctx().ordering_class())));
  return complete_loop(G, limits, reducer_for(G.ctx(), limits.max_steps));
}

CompletionResult sagbi_basis(const GeneratorSet& G, const CompletionLimits& limits) {
  if (!G.ctx().is_global())
    throw std::domain_error("sagbi_basis requires a global ordering, got " +
                            std::string(to_string(G.ctx().ordering_class())));
  return complete_loop(G, limits, reducer_for(G.ctx(), limits.max_steps));
}

namespace {

GeneratorSet dehomogenized(const GeneratorSet& lifted, const RingContext& base) {
  std::vector<Polynomial> basis;
  for (const auto& S : lifted.gens()) {
    Polynomial s = dehomogenize(S);
    if (s.is_zero() || s.degree() == 0) continue;  // the image of t
    push_unique(basis, std::move(s));
  }
  return GeneratorSet(std::move(basis), base);
}

}  // namespace

CompletionResult sasbi_via_homogenization(const GeneratorSet& G, const CompletionLimits& limits) {
  const auto& base = G.ctx();
  auto hc = lift_ordering(base);
  std::vector<Polynomial> lifted;
  for (const auto& g : G.gens()) lifted.push_back(homogenize(g));
  // t itself joins the lifted algebra. Without it, t^k * f^h for f in K[G]
  // need not lie in K[G^h], and relations such as g2 - g1^2 with
  // LM(g2^h) = t^2 * LM(g1^h)^2 would never be seen.
  lifted.push_back(Polynomial::variable(hc.lifted.nvars(), 0));

  // K[t, G^h] may lack a finite Sagbi basis even when K[G]_> has a finite
  // Sasbi basis, so under a local degree ordering each round first checks
  // the dehomogenized set against the local criterion.
  StopTest stop;
  if (base.is_local_degree())
    stop = [&](const GeneratorSet& F) {
      return is_sasbi(dehomogenized(F, base), limits) == Verdict::holds;
    };
  auto result = complete_loop(GeneratorSet(std::move(lifted), hc.lifted), limits,
                              reducer_for(hc.lifted, limits.max_steps), stop);
  return {dehomogenized(result.basis, base), result.status, result.rounds_used};
}

bool leading_monomials_covered(const std::vector<ExponentVector>& lms,
                               const std::vector<ExponentVector>& generators) {
  return std::all_of(lms.begin(), lms.end(), [&](const ExponentVector& lm) {
    return !monomial_membership(lm, generators).empty();
  });
}

}  // namespace sasbi
