#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "sasbi/parse.hpp"
#include "sasbi/subalgebra.hpp"

using namespace sasbi;

namespace {

GeneratorSet gens_of(const RingContext& ctx, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> gens;
  for (const char* t : texts) gens.push_back(parse_poly(t, ctx));
  return GeneratorSet(std::move(gens), ctx);
}

const RingContext& ls1() {
  static const RingContext ctx = RingContext::named({"x"}, "ls");
  return ctx;
}

const RingContext& ds2() {
  static const RingContext ctx = RingContext::named({"x", "y"}, "Ds");
  return ctx;
}

GeneratorSet example_gens() {
  return gens_of(ds2(), {"x^2", "x^4+x^5+x^6", "x^7", "y^2", "y^3+x^8"});
}

bool lm_in_monoid(const Polynomial& h, const GeneratorSet& G) {
  return !oracle::box_membership(leading_monomial(h, G.ctx()), G.leading_monomials()).empty();
}

// Random local generators: nonzero, no constant term.
GeneratorSet random_local_gens(oracle::Rng& rng, const RingContext& ctx, int count) {
  std::vector<Polynomial> gens;
  while (static_cast<int>(gens.size()) < count) {
    auto g = rng.polynomial(ctx.nvars(), 3, 4);
    g.add_term(ExponentVector(ctx.nvars(), 0), -g.constant_term());
    if (!g.is_zero()) gens.push_back(g);
  }
  return GeneratorSet(std::move(gens), ctx);
}

}  // namespace

TEST_CASE("generator set validation and products") {
  CHECK_THROWS_AS(GeneratorSet({Polynomial(1)}, ls1()), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet({parse_poly("1+x", ls1())}, ls1()), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet({Polynomial(2)}, ls1()), std::invalid_argument);

  auto G = gens_of(ls1(), {"x^3+x^6", "2*x-x^2"});
  CHECK(G.product_lm({1, 2}) == ExponentVector{5});
  CHECK(G.product_lc({1, 2}) == 4);
  CHECK(G.product_ecart({1, 2}) == 3 + 2);
  CHECK(G.product({1, 2}) == G[0] * G[1] * G[1]);
  CHECK(G.product({0, 0}) == Polynomial::constant(1, 1));
  CHECK(G.appended(parse_poly("x^9", ls1())).size() == 3);
  CHECK_THROWS_AS(G.appended(Polynomial(1)), std::invalid_argument);
}

TEST_CASE("monomial membership examples") {
  std::vector<ExponentVector> lms = {{2, 0}, {4, 0}, {7, 0}, {0, 2}, {0, 3}};
  CHECK(monomial_membership({4, 0}, lms) ==
        std::vector<GExponent>{{0, 1, 0, 0, 0}, {2, 0, 0, 0, 0}});
  CHECK(monomial_membership({5, 0}, lms).empty());
  CHECK(monomial_membership({0, 0}, lms) == std::vector<GExponent>{{0, 0, 0, 0, 0}});
  CHECK(monomial_membership({9, 5}, lms).size() ==
        oracle::box_membership({9, 5}, lms).size());
}

TEST_CASE("monomial membership matches box enumeration") {
  oracle::Rng rng(51);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<ExponentVector> lms;
    while (lms.size() < m) {
      auto e = rng.exponent(n, 4);
      if (!is_zero_exponent(e)) lms.push_back(e);
    }
    auto target = rng.exponent(n, 12);
    CHECK(monomial_membership(target, lms) == oracle::box_membership(target, lms));
  }
}

TEST_CASE("witness selection") {
  // equal total ecart: fewer factors wins
  auto G = gens_of(ls1(), {"x^3+x^6", "x-x^2"});
  CHECK(min_ecart_witness({3}, G) == GExponent{1, 0});
  auto H = gens_of(ls1(), {"x^2", "x^4+x^5+x^6"});
  CHECK(min_ecart_witness({4}, H) == GExponent{2, 0});
  CHECK_FALSE(min_ecart_witness({3}, H).has_value());
}

TEST_CASE("witness selection matches exhaustive minimisation") {
  oracle::Rng rng(56);
  for (int trial = 0; trial < 300; ++trial) {
    auto T = random_local_gens(rng, ds2(), rng.uniform(1, 5));
    auto target = rng.exponent(2, 12);
    auto lms = T.leading_monomials();
    std::optional<GExponent> best;
    std::pair<long, long> best_key;
    for (const auto& a : oracle::box_membership(target, lms)) {
      long e = 0, f = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        e += static_cast<long>(a[i]) * T.leading(i).ecart;
        f += a[i];
      }
      if (!best || std::pair{e, f} < best_key) {
        best = a;
        best_key = {e, f};
      }
    }
    CHECK(min_ecart_witness(target, T) == best);
  }
}

TEST_CASE("truncated normal form") {
  auto G = gens_of(ls1(), {"x^2"});
  CHECK(truncated_nf(parse_poly("x^4+x^5", ls1()), G, 4) == parse_poly("x^5", ls1()));
  CHECK(truncated_nf(Polynomial(1), G, 4).is_zero());
  CHECK(truncated_nf(parse_poly("x^3", ls1()), G, 10) == parse_poly("x^3", ls1()));

  auto dp = RingContext::named({"x"}, "dp");
  CHECK_THROWS_AS(truncated_nf(parse_poly("x", dp), GeneratorSet({parse_poly("x", dp)}, dp), 3),
                  std::domain_error);

  oracle::Rng rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    auto T = random_local_gens(rng, ds2(), rng.uniform(1, 3));
    auto g = rng.polynomial(2, 5, 6);
    int d = rng.uniform(0, 7);
    auto r = truncated_nf_traced(g, T, d);
    CHECK(g - r.result == expand_combination(r.combination, T.gens(), 2));
    for (const auto& [e, c] : r.result.terms())
      if (total_degree(e) <= d) CHECK(oracle::box_membership(e, T.leading_monomials()).empty());
  }
}

TEST_CASE("weak normal form of the cubic example") {
  auto G = gens_of(ls1(), {"x^3+x^6", "x-x^2"});
  auto f = parse_poly("x^3+x^4", ls1());
  auto r = wsnf(f, G);
  CHECK(r.remainder.is_zero());
  CHECK(r.transcript.complete);
  CHECK(r.transcript.extensions.size() == 1);

  auto rep = reconstruct_representation(r.transcript, G);
  CHECK(expand_unit(rep, G, f) == parse_poly("1-x+x^2", ls1()));
  CHECK(expand_combination(rep.body, G.gens(), 1) == parse_poly("x^3+x^6", ls1()));
  CHECK(rep.remainder.is_zero());
  CHECK(height(rep.body, G) == ExponentVector{3});
  CHECK(check_representation(rep, G, f).ok());
}

TEST_CASE("weak normal form edge cases") {
  GeneratorSet empty({}, ds2());
  auto f = parse_poly("x*y+y^4", ds2());
  auto r = wsnf(f, empty);
  CHECK(r.remainder == f);
  auto rep = reconstruct_representation(r.transcript, empty);
  CHECK(rep.unit_constant == 1);
  CHECK(rep.unit_combination.empty());
  CHECK(rep.body.empty());
  CHECK(rep.remainder == f);
  CHECK(check_representation(rep, empty, f).ok());
  CHECK_THROWS(height(rep.body, empty));

  // one plain step: unit stays 1
  auto G = gens_of(ls1(), {"x^2"});
  auto s = wsnf(parse_poly("x^2+x^3", ls1()), G);
  CHECK(s.remainder == parse_poly("x^3", ls1()));
  auto srep = reconstruct_representation(s.transcript, G);
  CHECK(srep.unit_constant == 1);
  CHECK(srep.unit_combination.empty());

  // the step cap is reported, not thrown
  auto capped = wsnf(parse_poly("x^2+x^4+x^6", ls1()), G, 1);
  CHECK_FALSE(capped.transcript.complete);
  CHECK_THROWS(reconstruct_representation(capped.transcript, G));
}

TEST_CASE("height of a body") {
  auto G = gens_of(ls1(), {"x^3", "x^4"});
  GCombination body = {{1, {1, 0}}, {1, {0, 1}}};
  CHECK(height(body, G) == ExponentVector{3});
  GCombination single = {{5, {0, 2}}};
  CHECK(height(single, G) == ExponentVector{8});
}

TEST_CASE("weak normal form contract on random inputs") {
  oracle::Rng rng(53);
  int complete_runs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto G = random_local_gens(rng, ds2(), rng.uniform(1, 3));
    auto f = rng.polynomial(2, 5, 6);
    auto r = wsnf(f, G, 60);
    if (!r.transcript.complete) continue;
    ++complete_runs;
    if (!r.remainder.is_zero()) CHECK_FALSE(lm_in_monoid(r.remainder, G));

    auto trail = replay(r.transcript, G);
    CHECK(trail.front() == f);
    CHECK(trail.back() == r.remainder);
    for (std::size_t i = 1; i < trail.size(); ++i) {
      if (trail[i].is_zero()) continue;
      CHECK(ds2().greater(leading_monomial(trail[i - 1], ds2()), leading_monomial(trail[i], ds2())));
    }

    auto rep = reconstruct_representation(r.transcript, G);
    auto check = check_representation(rep, G, f);
    CHECK(check.identity);
    CHECK(check.unit_is_unit);
    CHECK(check.height);
  }
  CHECK(complete_runs > 200);
}

TEST_CASE("members of the subalgebra reduce to zero over a known basis") {
  // K[x^2, x^3] in one local variable: every LM of a member is covered
  auto G = gens_of(ls1(), {"x^2", "x^3"});
  oracle::Rng rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    auto tags = rng.polynomial(2, 4, 4);
    tags.add_term({0, 0}, -tags.constant_term());
    auto f = oracle::naive_compose(tags, G.gens(), 1);
    CHECK(wsnf(f, G).remainder.is_zero());
  }
}

TEST_CASE("global subduction") {
  auto dp = RingContext::named({"x", "y"}, "dp");
  auto G = gens_of(dp, {"x+y", "x*y"});
  oracle::Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = oracle::random_subalgebra_element(rng, G.gens(), 2, 4, 4);
    auto r = subduce(f, G);
    CHECK(r.complete);
    CHECK(r.remainder.is_zero());
  }
  auto r = subduce(parse_poly("x^2+y^2", dp), gens_of(dp, {"x+y"}));
  CHECK(r.remainder == parse_poly("-2*x*y", dp));
  CHECK_THROWS_AS(subduce(parse_poly("x", ds2()), example_gens()), std::domain_error);
}
