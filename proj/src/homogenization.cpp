#include "sasbi/homogenization.hpp"

#include <algorithm>
#include <stdexcept>

namespace sasbi {

Polynomial homogenize(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("homogenize: zero polynomial");
  const int d = f.degree();
  Polynomial out(f.nvars() + 1);
  for (const auto& [e, c] : f.terms()) {
    ExponentVector lifted(e.size() + 1);
    lifted[0] = d - total_degree(e);
    std::copy(e.begin(), e.end(), lifted.begin() + 1);
    out.add_term(lifted, c);
  }
  return out;
}

Polynomial dehomogenize(const Polynomial& F) {
  if (F.nvars() == 0) throw std::invalid_argument("dehomogenize: no t variable");
  Polynomial out(F.nvars() - 1);
  for (const auto& [e, c] : F.terms()) out.add_term(ExponentVector(e.begin() + 1, e.end()), c);
  return out;
}

HomogenizedContext lift_ordering(const RingContext& base) {
  if (!base.is_local())
    throw std::domain_error("lift_ordering requires a local ordering, got " +
                            std::string(to_string(base.ordering_class())));
  const std::size_t n = base.nvars();
  std::vector<OrderingMatrix::Row> rows;
  rows.emplace_back(n + 1, 1);
  for (const auto& r : base.matrix().rows()) {
    OrderingMatrix::Row lifted(n + 1, 0);
    std::copy(r.begin(), r.end(), lifted.begin() + 1);
    rows.push_back(std::move(lifted));
  }

  std::vector<std::string> names;
  std::string t = "t";
  const auto& base_names = base.variable_names();
  while (std::find(base_names.begin(), base_names.end(), t) != base_names.end()) t += "_";
  names.push_back(t);
  names.insert(names.end(), base_names.begin(), base_names.end());

  RingContext lifted(std::move(names), OrderingMatrix(std::move(rows)));
  if (!lifted.is_global()) throw std::logic_error("lifted ordering is not global");
  return {base, std::move(lifted)};
}

}  // namespace sasbi
