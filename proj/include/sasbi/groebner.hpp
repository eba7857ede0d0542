#pragma once

#include <span>
#include <vector>

#include "sasbi/ordering.hpp"
#include "sasbi/polynomial.hpp"

namespace sasbi {

/// Full multivariate division remainder: no support monomial of the result is
/// divisible by any LM(basis_i). ctx must be global.
Polynomial division_nf(const Polynomial& f, std::span<const Polynomial> basis,
                       const RingContext& ctx);

/// Reduced Groebner basis (monic, inter-reduced, sorted by LM descending).
/// Normal selection strategy with the coprime-leading-monomial criterion.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const RingContext& ctx);

/// S-polynomial of two nonzero polynomials under ctx.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const RingContext& ctx);

/// Ring of base variables x_1..x_n followed by tag variables y_1..y_m.
///
/// Block elimination ordering: any monomial containing an x exceeds every
/// pure-y monomial; dp inside the x-block. Inside the y-block y_i carries the
/// weight deg(LM(g_i)), ties go to fewer factors, then ds. The toric ideal is
/// homogeneous for that weight, so its reduced basis favours expressing
/// products through single tags.
struct TaggedRing {
  RingContext ctx;
  std::size_t base_vars;
  std::size_t tags;

  static TaggedRing make(const RingContext& base, std::span<const ExponentVector> lms);
};

/// Ordering used on pure tag polynomials (the y-block of TaggedRing).
RingContext tag_ring(std::span<const ExponentVector> lms);

/// Generators of AR(G) as polynomials in the tag variables only. They form a
/// reduced Groebner basis of the relation ideal under `ctx`.
struct RelationIdeal {
  RingContext ctx;
  std::vector<Polynomial> gens;
};

/// Kernel of y_i -> x^{lms_i} by elimination. Every lms_i must be nonzero.
RelationIdeal toric_relations(std::span<const ExponentVector> lms, const RingContext& base);

}  // namespace sasbi
