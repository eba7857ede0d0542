#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sasbi/subalgebra.hpp"

namespace sasbi {

enum class OnLimit {
  report,  // return a limit-exceeded result
  fail,    // throw LimitExceeded
};

struct CompletionLimits {
  std::size_t max_rounds = 20;
  std::size_t max_steps = kDefaultStepCap;
  OnLimit on_limit = OnLimit::report;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CompletionStatus { complete, limit_exceeded };

struct CompletionResult {
  GeneratorSet basis;
  CompletionStatus status;
  std::size_t rounds_used;
};

/// Generators of AR(G) evaluated at G: zero results dropped, the rest made
/// monic, deduplicated and sorted by LM descending.
std::vector<Polynomial> evaluated_spolys(const GeneratorSet& G);

enum class Verdict { holds, fails, indeterminate };

/// Every evaluated S-polynomial reduces to zero. Local degree orderings use
/// wsnf, global ones subduction. `indeterminate` when a reduction hits the
/// step cap.
Verdict is_sasbi(const GeneratorSet& G, const CompletionLimits& limits = {});

/// Completion under a local degree ordering.
CompletionResult sasbi_basis(const GeneratorSet& G, const CompletionLimits& limits = {});

/// Completion under a global ordering (Sagbi basis).
CompletionResult sagbi_basis(const GeneratorSet& G, const CompletionLimits& limits = {});

/// Homogenize, complete K[t, G^h] as a Sagbi basis under the lifted global
/// ordering, set t = 1 and drop the constant coming from t. Requires a local
/// ordering. Under a local degree ordering the loop also stops as soon as
/// the dehomogenized set passes is_sasbi.
CompletionResult sasbi_via_homogenization(const GeneratorSet& G,
                                          const CompletionLimits& limits = {});

/// True when every LM in `lms` lies in the monoid generated by `generators`.
bool leading_monomials_covered(const std::vector<ExponentVector>& lms,
                               const std::vector<ExponentVector>& generators);

}  // namespace sasbi
