#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sasbi/ordering.hpp"
#include "sasbi/polynomial.hpp"

namespace sasbi {

/// Grammar or validation failure. `offset` is the byte position in the text
/// that was handed to the parser; line/column are 1-based and filled in by
/// parse_problem (single-string parsers report line 1).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::size_t line = 1,
             std::size_t column = 0)
      : std::runtime_error(message),
        offset_(offset),
        line_(line),
        column_(column == 0 ? offset + 1 : column) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

/// `ring 0 (v1,...,vn) ORDER;` with ORDER one of lp, dp, ls, ds, Ds or an
/// integer matrix `M(r11 r12; r21 r22)`.
RingContext parse_ring(std::string_view text);

/// Sums of terms `[coeff *] var[^e] * ...` with explicit `*` and `^`.
Polynomial parse_poly(std::string_view text, const RingContext& ctx);

/// Terms in decreasing order under ctx; unit coefficients elided except on
/// the constant term. parse_poly(format_poly(f)) == f.
std::string format_poly(const Polynomial& f, const RingContext& ctx);
std::string format_monomial(const ExponentVector& e, const RingContext& ctx);
std::string format_ring(const RingContext& ctx);

/// Contents of an input file: one ring statement followed by one `gens:`
/// statement. `#` starts a comment that runs to end of line.
struct ProblemFile {
  RingContext ring;
  std::vector<Polynomial> gens;
};

ProblemFile parse_problem(std::string_view text);
std::string format_problem(const RingContext& ctx, const std::vector<Polynomial>& gens);

/// `[1]=p1\n[2]=p2\n...`
std::string format_numbered(const std::vector<Polynomial>& polys, const RingContext& ctx);

}  // namespace sasbi
