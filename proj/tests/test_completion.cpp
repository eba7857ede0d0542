#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "sasbi/completion.hpp"
#include "sasbi/parse.hpp"

using namespace sasbi;

namespace {

std::vector<Polynomial> polys(const RingContext& ctx, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_poly(t, ctx));
  return out;
}

GeneratorSet gens_of(const RingContext& ctx, std::initializer_list<const char*> texts) {
  return GeneratorSet(polys(ctx, texts), ctx);
}

const RingContext& Ds() {
  static const RingContext ctx = RingContext::named({"x", "y"}, "Ds");
  return ctx;
}

GeneratorSet session_gens() { return gens_of(Ds(), {"x^2", "x^4+x^5+x^6", "x^7", "y^2", "y^3+x^8"}); }

bool covered_both_ways(const GeneratorSet& a, const GeneratorSet& b) {
  return leading_monomials_covered(a.leading_monomials(), b.leading_monomials()) &&
         leading_monomials_covered(b.leading_monomials(), a.leading_monomials());
}

}  // namespace

TEST_CASE("evaluated S-polynomials") {
  CHECK(evaluated_spolys(session_gens()) == polys(Ds(), {"x^5+x^6", "x^8*y^3+1/2*x^16"}));
  CHECK(evaluated_spolys(gens_of(Ds(), {"x"})).empty());
  CHECK(evaluated_spolys(gens_of(Ds(), {"x^2", "x^3"})).empty());
  auto dp = RingContext::named({"x", "y"}, "dp");
  CHECK(evaluated_spolys(gens_of(dp, {"x^2", "x^3"})).empty());
  CHECK(evaluated_spolys(GeneratorSet({}, Ds())).empty());
}

TEST_CASE("criterion examples") {
  CHECK(is_sasbi(session_gens()) == Verdict::fails);
  auto six = gens_of(Ds(), {"x^2", "x^4+x^5+x^6", "x^7", "y^2", "y^3+x^8", "x^5+x^6"});
  CHECK(is_sasbi(six) == Verdict::holds);
  CHECK(is_sasbi(gens_of(Ds(), {"x+y^2"})) == Verdict::holds);

  CompletionLimits tight;
  tight.max_steps = 1;
  CHECK(is_sasbi(six, tight) == Verdict::indeterminate);

  RingContext mixed({"x", "y"}, OrderingMatrix({{1, 0}, {0, -1}}));
  CHECK_THROWS_AS(is_sasbi(gens_of(mixed, {"x"})), std::domain_error);
}

TEST_CASE("local completion examples") {
  auto r = sasbi_basis(session_gens());
  CHECK(r.status == CompletionStatus::complete);
  CHECK(r.rounds_used == 2);
  CHECK(r.basis.gens() ==
        polys(Ds(), {"x^2", "x^4+x^5+x^6", "x^7", "y^2", "y^3+x^8", "x^5+x^6"}));

  auto alt = gens_of(Ds(), {"x^4", "x^4+x^5+x^6", "y^2", "x^7", "y^3+x^8"});
  auto spolys = evaluated_spolys(alt);
  auto y_relation = polys(Ds(), {"x^8*y^3+1/2*x^16"}).front();
  bool saw_y = false;
  for (const auto& s : spolys)
    if (s == y_relation) {
      saw_y = true;
      CHECK(wsnf(s, alt).remainder.is_zero());
    }
  CHECK(saw_y);
  auto ra = sasbi_basis(alt);
  CHECK(ra.status == CompletionStatus::complete);
  auto target = parse_poly("x^5+x^6", Ds());
  bool contains = false;
  for (const auto& g : ra.basis.gens()) contains = contains || g == target;
  CHECK(contains);

  auto single = gens_of(Ds(), {"x^2"});
  CHECK(sasbi_basis(single).basis.gens() == single.gens());
  CHECK_THROWS_AS(sasbi_basis(gens_of(RingContext::named({"x"}, "dp"), {"x"})), std::domain_error);
}

TEST_CASE("global completion examples") {
  auto dp = RingContext::named({"x", "y"}, "dp");
  auto cubic = gens_of(dp, {"x^2", "x^3"});
  auto r0 = sagbi_basis(cubic);
  CHECK(r0.status == CompletionStatus::complete);
  CHECK(r0.basis.gens() == cubic.gens());

  auto r = sagbi_basis(gens_of(dp, {"x+y", "x^2+y^2"}));
  CHECK(r.status == CompletionStatus::complete);
  CHECK(r.basis.gens() == polys(dp, {"x+y", "x^2+y^2", "x*y"}));
  CHECK(sagbi_basis(gens_of(dp, {"x"})).basis.size() == 1);
  CHECK_THROWS_AS(sagbi_basis(session_gens()), std::domain_error);
}

TEST_CASE("round limits") {
  // K[x+y, x*y, x*y^2] has no finite Sagbi basis under lp.
  auto lp = RingContext::named({"x", "y"}, "lp");
  auto G = gens_of(lp, {"x+y", "x*y", "x*y^2"});
  CompletionLimits limits;
  limits.max_rounds = 3;
  auto r = sagbi_basis(G, limits);
  CHECK(r.status == CompletionStatus::limit_exceeded);
  CHECK(r.rounds_used == 3);
  CHECK(r.basis.size() > G.size());
  limits.on_limit = OnLimit::fail;
  CHECK_THROWS_AS(sagbi_basis(G, limits), LimitExceeded);
}

TEST_CASE("homogenization route") {
  auto ls = RingContext::named({"x"}, "ls");
  auto G = gens_of(ls, {"x^3+x^6", "x-x^2"});
  auto via = sasbi_via_homogenization(G);
  auto direct = sasbi_basis(G);
  CHECK(via.status == CompletionStatus::complete);
  CHECK(covered_both_ways(via.basis, direct.basis));
  CHECK(leading_monomials_covered({{3}, {1}}, via.basis.leading_monomials()));

  auto single = gens_of(ls, {"x^2"});
  CHECK(sasbi_via_homogenization(single).basis.gens() == single.gens());

  // LM(g2^h) = t^2*x^4 is not a power of LM(g1^h) = x^2, so x^5+x^6 only
  // appears once t is part of the lifted algebra.
  auto pair = gens_of(ls, {"x^2", "x^4+x^5+x^6"});
  auto pair_via = sasbi_via_homogenization(pair);
  CHECK(pair_via.status == CompletionStatus::complete);
  CHECK(leading_monomials_covered({{5}}, pair_via.basis.leading_monomials()));
  CHECK(covered_both_ways(pair_via.basis, sasbi_basis(pair).basis));

  auto session_via = sasbi_via_homogenization(session_gens());
  CHECK(session_via.status == CompletionStatus::complete);
  CHECK(covered_both_ways(session_via.basis, sasbi_basis(session_gens()).basis));
}

TEST_CASE("completed bases satisfy the criterion") {
  oracle::Rng rng(71);
  auto ds = RingContext::named({"x", "y"}, "ds");
  int completed = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens;
    int count = rng.uniform(1, 3);
    while (static_cast<int>(gens.size()) < count) {
      auto g = rng.polynomial(2, 2, 3);
      g.add_term({0, 0}, -g.constant_term());
      if (!g.is_zero()) gens.push_back(g);
    }
    GeneratorSet G(gens, ds);
    CompletionLimits limits;
    limits.max_rounds = 4;
    limits.max_steps = 500;
    auto r = sasbi_basis(G, limits);
    for (std::size_t i = 0; i < G.size(); ++i) CHECK(r.basis[i] == G[i]);
    for (std::size_t i = G.size(); i < r.basis.size(); ++i)
      CHECK(leading_coefficient(r.basis[i], ds) == 1);
    if (r.status != CompletionStatus::complete) continue;
    ++completed;
    CHECK(is_sasbi(r.basis, limits) == Verdict::holds);
  }
  CHECK(completed > 20);
}

TEST_CASE("random members of a completed basis reduce to zero") {
  auto F = sasbi_basis(session_gens()).basis;
  oracle::Rng rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    auto tags = rng.polynomial(F.size(), 3, 2);
    tags.add_term(ExponentVector(F.size(), 0), -tags.constant_term());
    auto f = oracle::naive_compose(tags, F.gens(), 2);
    auto r = wsnf(f, F);
    CHECK(r.transcript.complete);
    CHECK(r.remainder.is_zero());
  }
}

TEST_CASE("both routes generate the same leading-monomial algebra") {
  oracle::Rng rng(73);
  const RingContext rings[] = {RingContext::named({"x"}, "ls"), RingContext::named({"x", "y"}, "ds")};
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto& ctx = rings[trial % 2];
    std::vector<Polynomial> gens;
    int count = rng.uniform(1, 3);
    while (static_cast<int>(gens.size()) < count) {
      auto g = rng.polynomial(ctx.nvars(), 2, 4);
      g.add_term(ExponentVector(ctx.nvars(), 0), -g.constant_term());
      if (!g.is_zero()) gens.push_back(g);
    }
    GeneratorSet G(gens, ctx);
    CompletionLimits limits;
    limits.max_rounds = 4;
    limits.max_steps = 300;
    auto direct = sasbi_basis(G, limits);
    auto via = sasbi_via_homogenization(G, limits);
    if (direct.status != CompletionStatus::complete || via.status != CompletionStatus::complete)
      continue;
    ++compared;
    CHECK(covered_both_ways(direct.basis, via.basis));
  }
  CHECK(compared > 30);
}
