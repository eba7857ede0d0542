#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sasbi/ordering.hpp"
#include "sasbi/polynomial.hpp"

namespace sasbi {

/// Exponent of a G-monomial g_1^a_1 ... g_m^a_m.
using GExponent = std::vector<int>;

/// Ordered subalgebra generators with cached leading data.
///
/// Generators are nonzero and, under a local ordering, have no constant term.
class GeneratorSet {
 public:
  GeneratorSet(std::vector<Polynomial> gens, RingContext ctx);

  const RingContext& ctx() const { return ctx_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const Polynomial& operator[](std::size_t i) const { return gens_[i]; }
  const LeadingData& leading(std::size_t i) const { return leads_[i]; }
  std::vector<ExponentVector> leading_monomials() const;

  /// Copy with p appended. Used for the wsnf working set, whose extra
  /// members are reduction remainders rather than user generators.
  GeneratorSet appended(Polynomial p) const;

  /// LM, LC and ecart of G^alpha without expanding it.
  ExponentVector product_lm(const GExponent& alpha) const;
  Rational product_lc(const GExponent& alpha) const;
  int product_ecart(const GExponent& alpha) const;
  Polynomial product(const GExponent& alpha) const;

 private:
  struct Unchecked {};
  GeneratorSet(std::vector<Polynomial> gens, std::vector<LeadingData> leads, RingContext ctx,
               Unchecked)
      : gens_(std::move(gens)), leads_(std::move(leads)), ctx_(std::move(ctx)) {}

  std::vector<Polynomial> gens_;
  std::vector<LeadingData> leads_;
  RingContext ctx_;
};

/// All alpha >= 0 with sum alpha_i * lms_i == target, in lexicographic order.
/// Empty when target is not in the monoid generated by lms. Every lms_i must
/// be nonzero, which keeps the solution set finite.
std::vector<GExponent> monomial_membership(const ExponentVector& target,
                                           std::span<const ExponentVector> lms);

/// Witness for LM(target) of minimal ecart(T^alpha) = sum alpha_i*ecart(T_i).
/// Ties: fewest factors, then lexicographically smallest alpha.
std::optional<GExponent> min_ecart_witness(const ExponentVector& target,
                                           const GeneratorSet& working_set);

struct GTerm {
  Rational coefficient;
  GExponent alpha;
  friend bool operator==(const GTerm&, const GTerm&) = default;
};
using GCombination = std::vector<GTerm>;

/// sum c * G^alpha, expanded. `gens` may be longer than G when the
/// combination refers to extra slots (see SasbiRepresentation).
Polynomial expand_combination(const GCombination& combo, std::span<const Polynomial> gens,
                              std::size_t nvars);

struct TruncatedNf {
  Polynomial result;
  GCombination combination;  // g - result == expand(combination)
};

/// Normal form up to degree d under a local degree ordering: reduce while
/// ord(h) <= d, moving irreducible leading terms to the output.
TruncatedNf truncated_nf_traced(const Polynomial& g, const GeneratorSet& G, int d);
Polynomial truncated_nf(const Polynomial& g, const GeneratorSet& G, int d);

enum class ReducerKind { generator_product, extended_product };

struct ReductionStep {
  ReducerKind kind;
  GExponent alpha;  // over the working set as it stood before this step
  Rational coefficient;
};

/// Record of one weak normal form run. Replaying the steps from `input`
/// reproduces `result`.
struct ReductionTranscript {
  Polynomial input;
  std::vector<ReductionStep> steps;
  /// For each appended working-set member, the index of the step before whose
  /// subtraction the running h was appended.
  std::vector<std::size_t> extensions;
  Polynomial result;
  bool complete = true;
};

struct WsnfResult {
  Polynomial remainder;
  ReductionTranscript transcript;
};

constexpr std::size_t kDefaultStepCap = 10000;

/// Ecart-driven weak normal form under a local degree ordering. Stops at the
/// first leading monomial outside K[LM(T)], so only LM(h) is guaranteed
/// irreducible. A run that hits `max_steps` returns with
/// transcript.complete == false.
WsnfResult wsnf(const Polynomial& f, const GeneratorSet& G,
                std::size_t max_steps = kDefaultStepCap);

/// All intermediate h values of a transcript, starting with the input.
std::vector<Polynomial> replay(const ReductionTranscript& t, const GeneratorSet& G);

/// u * f = sum(body) + remainder with u = unit_constant + sum(unit_combination).
///
/// unit_combination exponents have |G|+1 entries; the last one is the power
/// of the input f itself, which enters through the appended working-set
/// members. Every unit_combination term has leading monomial below 1.
struct SasbiRepresentation {
  Rational unit_constant;
  GCombination unit_combination;
  GCombination body;
  Polynomial remainder;
};

SasbiRepresentation reconstruct_representation(const ReductionTranscript& t,
                                               const GeneratorSet& G);

Polynomial expand_unit(const SasbiRepresentation& rep, const GeneratorSet& G,
                       const Polynomial& f);

/// max LM(G^alpha) over the body. Throws on an empty body.
ExponentVector height(const GCombination& body, const GeneratorSet& G);

struct RepresentationCheck {
  bool identity = false;      // u*f - body - remainder == 0
  bool unit_is_unit = false;  // LM(u) == 1
  bool height = false;        // height(body) == LM(f), or body empty
  bool ok() const { return identity && unit_is_unit && height; }
};

RepresentationCheck check_representation(const SasbiRepresentation& rep, const GeneratorSet& G,
                                         const Polynomial& f);

struct SubductionResult {
  Polynomial remainder;
  bool complete = true;
};

/// Top subduction under a global ordering: subtract G-monomial multiples of
/// the leading term until LM(h) is outside K[LM(G)].
SubductionResult subduce(const Polynomial& f, const GeneratorSet& G,
                         std::size_t max_steps = kDefaultStepCap);

}  // namespace sasbi
