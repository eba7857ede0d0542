#include "sasbi/subalgebra.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace sasbi {

namespace {

void require_local_degree(const RingContext& ctx, const char* what) {
  if (!ctx.is_local_degree())
    throw std::domain_error(std::string(what) + " requires a local degree ordering, got " +
                            std::string(to_string(ctx.ordering_class())));
}

// Memoized powers of working-set members.
class PowerCache {
 public:
  explicit PowerCache(std::size_t nvars) : nvars_(nvars) {}

  Polynomial product(const GeneratorSet& T, const GExponent& alpha) {
    Polynomial r = Polynomial::constant(nvars_, 1);
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] > 0) r = r * power(T, i, alpha[i]);
    return r;
  }

 private:
  const Polynomial& power(const GeneratorSet& T, std::size_t i, int k) {
    if (cache_.size() <= i) cache_.resize(i + 1);
    auto& c = cache_[i];
    if (c.empty()) c.push_back(Polynomial::constant(nvars_, 1));
    while (static_cast<int>(c.size()) <= k) c.push_back(c.back() * T[i]);
    return c[static_cast<std::size_t>(k)];
  }

  std::size_t nvars_;
  std::vector<std::vector<Polynomial>> cache_;
};

void enumerate(std::size_t i, ExponentVector& remaining, std::span<const ExponentVector> lms,
               const std::vector<std::vector<bool>>& coverable, GExponent& alpha,
               std::vector<GExponent>& out) {
  if (i == lms.size()) {
    if (is_zero_exponent(remaining)) out.push_back(alpha);
    return;
  }
  // Every coordinate still owed must be reachable by lms[i..].
  for (std::size_t k = 0; k < remaining.size(); ++k)
    if (remaining[k] > 0 && !coverable[i][k]) return;

  const auto& v = lms[i];
  int bound = INT_MAX;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] > 0) bound = std::min(bound, remaining[k] / v[k]);

  for (int a = 0; a <= bound; ++a) {
    alpha[i] = a;
    enumerate(i + 1, remaining, lms, coverable, alpha, out);
    for (std::size_t k = 0; k < v.size(); ++k) remaining[k] -= v[k];
  }
  for (std::size_t k = 0; k < v.size(); ++k) remaining[k] += (bound + 1) * v[k];
  alpha[i] = 0;
}

// Coordinates that lms[i..] can still supply: coverable[i][k] is true when
// some lms[j], j >= i, has a positive k-th entry.
std::vector<std::vector<bool>> coverable_table(const ExponentVector& target,
                                               std::span<const ExponentVector> lms) {
  std::vector<std::vector<bool>> coverable(lms.size() + 1,
                                           std::vector<bool>(target.size(), false));
  for (std::size_t i = lms.size(); i-- > 0;)
    for (std::size_t k = 0; k < target.size(); ++k)
      coverable[i][k] = coverable[i + 1][k] || lms[i][k] > 0;
  return coverable;
}

// Branch and bound for the witness of minimal (weighted ecart, factors),
// lexicographically first among equals. The depth-first walk visits
// solutions in lexicographic order, so a branch whose lower bound already
// reaches the incumbent key cannot win.
class WitnessSearch {
 public:
  using Key = std::pair<long, long>;

  WitnessSearch(const ExponentVector& target, std::span<const ExponentVector> lms,
                const std::vector<int>& ecarts)
      : lms_(lms), ecarts_(ecarts), coverable_(coverable_table(target, lms)),
        max_degree_(lms.size() + 1, 0), min_ecart_(lms.size() + 1, INT_MAX),
        remaining_(target), alpha_(lms.size(), 0) {
    for (std::size_t i = lms.size(); i-- > 0;) {
      max_degree_[i] = std::max(max_degree_[i + 1], total_degree(lms[i]));
      min_ecart_[i] = std::min(min_ecart_[i + 1], ecarts[i]);
    }
  }

  std::optional<GExponent> run() {
    walk(0, 0, 0);
    return best_;
  }

 private:
  void walk(std::size_t i, long ecart, long factors) {
    const int owed = total_degree(remaining_);
    if (owed == 0) {
      Key key{ecart, factors};
      if (!best_ || key < best_key_) {
        best_ = alpha_;
        best_key_ = key;
      }
      return;
    }
    if (i == lms_.size()) return;
    for (std::size_t k = 0; k < remaining_.size(); ++k)
      if (remaining_[k] > 0 && !coverable_[i][k]) return;
    if (best_) {
      const long need = (owed + max_degree_[i] - 1) / max_degree_[i];
      if (Key{ecart + need * min_ecart_[i], factors + need} >= best_key_) return;
    }

    const auto& v = lms_[i];
    int bound = INT_MAX;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] > 0) bound = std::min(bound, remaining_[k] / v[k]);

    int taken = 0;
    for (int a = 0; a <= bound; ++a, ++taken) {
      alpha_[i] = a;
      walk(i + 1, ecart + static_cast<long>(a) * ecarts_[i], factors + a);
      for (std::size_t k = 0; k < v.size(); ++k) remaining_[k] -= v[k];
    }
    for (std::size_t k = 0; k < v.size(); ++k) remaining_[k] += taken * v[k];
    alpha_[i] = 0;
  }

  std::span<const ExponentVector> lms_;
  const std::vector<int>& ecarts_;
  std::vector<std::vector<bool>> coverable_;
  std::vector<int> max_degree_;
  std::vector<int> min_ecart_;
  ExponentVector remaining_;
  GExponent alpha_;
  std::optional<GExponent> best_;
  Key best_key_{};
};

// Minimal weighted ecart, then fewest factors, then lexicographic.
std::optional<GExponent> select_witness(const ExponentVector& target,
                                        const std::vector<ExponentVector>& lms,
                                        const std::vector<int>& ecarts) {
  for (const auto& v : lms)
    if (is_zero_exponent(v)) throw std::invalid_argument("witness search: zero leading exponent");
  return WitnessSearch(target, lms, ecarts).run();
}

std::vector<int> ecarts_of(const GeneratorSet& T) {
  std::vector<int> e;
  for (std::size_t i = 0; i < T.size(); ++i) e.push_back(T.leading(i).ecart);
  return e;
}

GCombination to_combination(const Polynomial& tag_poly, std::size_t slots) {
  GCombination out;
  for (auto it = tag_poly.terms().rbegin(); it != tag_poly.terms().rend(); ++it) {
    GExponent alpha(it->first.begin(), it->first.begin() + static_cast<std::ptrdiff_t>(slots));
    out.push_back({it->second, std::move(alpha)});
  }
  return out;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<Polynomial> gens, RingContext ctx)
    : gens_(std::move(gens)), ctx_(std::move(ctx)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.nvars() != ctx_.nvars())
      throw std::invalid_argument("generator " + std::to_string(i + 1) +
                                  " does not match the ring");
    if (g.is_zero()) throw std::invalid_argument("generator " + std::to_string(i + 1) + " is zero");
    if (ctx_.is_local() && sgn(g.constant_term()) != 0)
      throw std::invalid_argument("generator " + std::to_string(i + 1) +
                                  " has a constant term under a local ordering");
    leads_.push_back(leading_data(g, ctx_));
  }
}

std::vector<ExponentVector> GeneratorSet::leading_monomials() const {
  std::vector<ExponentVector> out;
  for (const auto& l : leads_) out.push_back(l.lm);
  return out;
}

GeneratorSet GeneratorSet::appended(Polynomial p) const {
  if (p.is_zero()) throw std::invalid_argument("cannot append the zero polynomial");
  auto gens = gens_;
  auto leads = leads_;
  leads.push_back(leading_data(p, ctx_));
  gens.push_back(std::move(p));
  return GeneratorSet(std::move(gens), std::move(leads), ctx_, Unchecked{});
}

ExponentVector GeneratorSet::product_lm(const GExponent& alpha) const {
  ExponentVector lm(ctx_.nvars(), 0);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t k = 0; k < lm.size(); ++k) lm[k] += alpha[i] * leads_[i].lm[k];
  return lm;
}

Rational GeneratorSet::product_lc(const GExponent& alpha) const {
  Rational lc = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (int k = 0; k < alpha[i]; ++k) lc *= leads_[i].lc;
  return lc;
}

int GeneratorSet::product_ecart(const GExponent& alpha) const {
  int e = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) e += alpha[i] * leads_[i].ecart;
  return e;
}

Polynomial GeneratorSet::product(const GExponent& alpha) const {
  if (alpha.size() > gens_.size()) throw std::invalid_argument("G-exponent too long");
  Polynomial r = Polynomial::constant(ctx_.nvars(), 1);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] > 0) r = r * gens_[i].pow(static_cast<unsigned>(alpha[i]));
  return r;
}

std::vector<GExponent> monomial_membership(const ExponentVector& target,
                                           std::span<const ExponentVector> lms) {
  for (const auto& v : lms) {
    if (v.size() != target.size()) throw std::invalid_argument("monomial length mismatch");
    if (is_zero_exponent(v))
      throw std::invalid_argument("monomial_membership: zero exponent among generators");
  }
  for (int v : target)
    if (v < 0) throw std::invalid_argument("negative exponent");

  auto coverable = coverable_table(target, lms);
  std::vector<GExponent> out;
  ExponentVector remaining = target;
  GExponent alpha(lms.size(), 0);
  enumerate(0, remaining, lms, coverable, alpha, out);
  return out;
}

std::optional<GExponent> min_ecart_witness(const ExponentVector& target,
                                           const GeneratorSet& working_set) {
  return select_witness(target, working_set.leading_monomials(), ecarts_of(working_set));
}

Polynomial expand_combination(const GCombination& combo, std::span<const Polynomial> gens,
                              std::size_t nvars) {
  Polynomial out(nvars);
  for (const auto& t : combo) {
    if (t.alpha.size() > gens.size()) throw std::invalid_argument("G-exponent too long");
    Polynomial term = Polynomial::constant(nvars, t.coefficient);
    for (std::size_t i = 0; i < t.alpha.size(); ++i)
      if (t.alpha[i] > 0) term = term * gens[i].pow(static_cast<unsigned>(t.alpha[i]));
    out += term;
  }
  return out;
}

TruncatedNf truncated_nf_traced(const Polynomial& g, const GeneratorSet& G, int d) {
  const auto& ctx = G.ctx();
  require_local_degree(ctx, "truncated_nf");
  OrderedPolynomial h(g, ctx);
  Polynomial irreducible(ctx.nvars());
  Polynomial combination(G.size());
  PowerCache cache(ctx.nvars());
  const auto lms = G.leading_monomials();
  const auto ecarts = ecarts_of(G);

  while (!h.is_zero() && total_degree(h.lm()) <= d) {
    auto alpha = select_witness(h.lm(), lms, ecarts);
    if (!alpha) {
      auto [e, c] = h.pop_leading();
      irreducible.add_term(e, c);
      continue;
    }
    Rational c = h.lc() / G.product_lc(*alpha);
    h.subtract(cache.product(G, *alpha), ExponentVector(ctx.nvars(), 0), c);
    combination.add_term(*alpha, c);
  }
  return {irreducible + h.to_polynomial(), to_combination(combination, G.size())};
}

Polynomial truncated_nf(const Polynomial& g, const GeneratorSet& G, int d) {
  return truncated_nf_traced(g, G, d).result;
}

WsnfResult wsnf(const Polynomial& f, const GeneratorSet& G, std::size_t max_steps) {
  const auto& ctx = G.ctx();
  require_local_degree(ctx, "wsnf");
  if (f.nvars() != ctx.nvars()) throw std::invalid_argument("wsnf: polynomial does not match the ring");

  ReductionTranscript t;
  t.input = f;
  GeneratorSet T = G;
  PowerCache cache(ctx.nvars());
  const ExponentVector no_shift(ctx.nvars(), 0);

  OrderedPolynomial h(f, ctx);
  while (!h.is_zero()) {
    auto alpha = min_ecart_witness(h.lm(), T);
    if (!alpha) break;
    if (t.steps.size() >= max_steps) {
      t.complete = false;
      break;
    }
    bool extended = std::any_of(alpha->begin() + static_cast<std::ptrdiff_t>(G.size()),
                                alpha->end(), [](int a) { return a > 0; });
    Rational c = h.lc() / T.product_lc(*alpha);
    Polynomial reducer = cache.product(T, *alpha);
    if (T.product_ecart(*alpha) > h.ecart()) {
      t.extensions.push_back(t.steps.size());
      T = T.appended(h.to_polynomial());
    }
    h.subtract(reducer, no_shift, c);
    t.steps.push_back({extended ? ReducerKind::extended_product : ReducerKind::generator_product,
                       std::move(*alpha), c});
  }
  t.result = h.to_polynomial();
  return {t.result, std::move(t)};
}

std::vector<Polynomial> replay(const ReductionTranscript& t, const GeneratorSet& G) {
  std::vector<Polynomial> trail{t.input};
  GeneratorSet T = G;
  Polynomial h = t.input;
  std::size_t next_ext = 0;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& step = t.steps[i];
    Polynomial reducer = T.product(step.alpha);
    while (next_ext < t.extensions.size() && t.extensions[next_ext] == i) {
      T = T.appended(h);
      ++next_ext;
    }
    h -= reducer.scaled(step.coefficient);
    trail.push_back(h);
  }
  return trail;
}

SasbiRepresentation reconstruct_representation(const ReductionTranscript& t,
                                               const GeneratorSet& G) {
  if (!t.complete)
    throw std::invalid_argument("cannot reconstruct a representation from an incomplete run");
  const std::size_t m = G.size();
  const std::size_t slots = m + 1;  // last slot: the input f
  const Polynomial f_tag = Polynomial::variable(slots, m);

  // Invariant: u * f == body + h, both as polynomials in the tags.
  Polynomial u = Polynomial::constant(slots, 1);
  Polynomial body(slots);
  // Appended member k equals ext_u[k] * f - ext_body[k].
  std::vector<Polynomial> ext_u;
  std::vector<Polynomial> ext_body;

  std::size_t next_ext = 0;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    while (next_ext < t.extensions.size() && t.extensions[next_ext] == i) {
      ext_u.push_back(u);
      ext_body.push_back(body);
      ++next_ext;
    }
    const auto& step = t.steps[i];
    ExponentVector beta(slots, 0);
    Polynomial p = Polynomial::constant(slots, 1);
    for (std::size_t k = 0; k < step.alpha.size(); ++k) {
      if (step.alpha[k] == 0) continue;
      if (k < m) {
        beta[k] = step.alpha[k];
        continue;
      }
      std::size_t e = k - m;
      if (e >= ext_u.size()) throw std::invalid_argument("transcript refers to a missing extension");
      Polynomial member = ext_u[e] * f_tag - ext_body[e];
      p *= member.pow(static_cast<unsigned>(step.alpha[k]));
    }
    // Split p = p0 + f * r.
    Polynomial p0(slots);
    Polynomial r(slots);
    for (const auto& [e, c] : p.terms()) {
      if (e[m] == 0) {
        p0.add_term(e, c);
      } else {
        auto lowered = e;
        --lowered[m];
        r.add_term(lowered, c);
      }
    }
    u -= r.shifted(beta, step.coefficient);
    body += p0.shifted(beta, step.coefficient);
  }

  SasbiRepresentation rep;
  rep.unit_constant = u.constant_term();
  u.add_term(ExponentVector(slots, 0), -rep.unit_constant);
  rep.unit_combination = to_combination(u, slots);
  rep.body = to_combination(body, m);
  rep.remainder = t.result;
  return rep;
}

Polynomial expand_unit(const SasbiRepresentation& rep, const GeneratorSet& G,
                       const Polynomial& f) {
  std::vector<Polynomial> slots = G.gens();
  slots.push_back(f);
  Polynomial u = expand_combination(rep.unit_combination, slots, G.ctx().nvars());
  u.add_term(ExponentVector(G.ctx().nvars(), 0), rep.unit_constant);
  return u;
}

ExponentVector height(const GCombination& body, const GeneratorSet& G) {
  if (body.empty()) throw std::invalid_argument("height of an empty representation");
  ExponentVector best = G.product_lm(body.front().alpha);
  for (const auto& t : body) {
    auto lm = G.product_lm(t.alpha);
    if (G.ctx().greater(lm, best)) best = std::move(lm);
  }
  return best;
}

RepresentationCheck check_representation(const SasbiRepresentation& rep, const GeneratorSet& G,
                                         const Polynomial& f) {
  const auto& ctx = G.ctx();
  RepresentationCheck check;
  Polynomial u = expand_unit(rep, G, f);
  Polynomial body = expand_combination(rep.body, G.gens(), ctx.nvars());
  check.identity = (u * f - body - rep.remainder).is_zero();
  check.unit_is_unit = !u.is_zero() && is_zero_exponent(leading_monomial(u, ctx));
  check.height = rep.body.empty() || (!f.is_zero() && height(rep.body, G) == leading_monomial(f, ctx));
  return check;
}

SubductionResult subduce(const Polynomial& f, const GeneratorSet& G, std::size_t max_steps) {
  const auto& ctx = G.ctx();
  if (!ctx.is_global()) throw std::domain_error("subduce requires a global ordering");
  OrderedPolynomial h(f, ctx);
  PowerCache cache(ctx.nvars());
  const auto lms = G.leading_monomials();
  const std::vector<int> no_ecart(G.size(), 0);
  const ExponentVector no_shift(ctx.nvars(), 0);
  std::size_t steps = 0;
  while (!h.is_zero()) {
    auto alpha = select_witness(h.lm(), lms, no_ecart);
    if (!alpha) break;
    if (steps++ >= max_steps) return {h.to_polynomial(), false};
    h.subtract(cache.product(G, *alpha), no_shift, h.lc() / G.product_lc(*alpha));
  }
  return {h.to_polynomial(), true};
}

}  // namespace sasbi
