#include "sasbi/parse.hpp"

#include <cctype>
#include <climits>
#include <optional>
#include <sstream>

namespace sasbi {

namespace {

constexpr int kMaxExponent = 1'000'000;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  std::size_t offset() const { return base_ + pos_; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(message, base_ + pos);
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  std::string found() const {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + peek() + "'";
  }

  std::string identifier() {
    skip_ws();
    if (!is_ident_start(peek())) fail("expected identifier" + found());
    std::size_t start = pos_;
    while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t signed_integer() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    std::string d = digits();
    if (d.empty()) fail_at(start, "expected integer" + found());
    if (d.size() > 15) fail_at(start, "integer out of range");
    std::int64_t v = std::stoll(d);
    return negative ? -v : v;
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

OrderingMatrix parse_matrix(Cursor& cur) {
  std::size_t start = cur.pos();
  cur.expect('(');
  std::vector<OrderingMatrix::Row> rows(1);
  for (;;) {
    cur.skip_ws();
    if (cur.peek() == ')') {
      cur.advance();
      break;
    }
    if (cur.peek() == ';') {
      cur.advance();
      rows.emplace_back();
      continue;
    }
    if (cur.peek() == ',') {
      cur.advance();
      continue;
    }
    rows.back().push_back(cur.signed_integer());
  }
  try {
    return OrderingMatrix(std::move(rows));
  } catch (const std::invalid_argument& e) {
    cur.fail_at(start, e.what());
  }
}

Rational parse_coefficient(Cursor& cur) {
  std::size_t start = cur.pos();
  std::string num = cur.digits();
  if (cur.accept('/')) {
    cur.skip_ws();
    std::size_t den_pos = cur.pos();
    std::string den = cur.digits();
    if (den.empty()) cur.fail("expected denominator" + cur.found());
    mpz_class d(den);
    if (d == 0) cur.fail_at(den_pos, "zero denominator");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
  }
  if (num.empty()) cur.fail_at(start, "expected number");
  return Rational(mpz_class(num));
}

void parse_factor(Cursor& cur, const RingContext& ctx, ExponentVector& exps) {
  cur.skip_ws();
  std::size_t start = cur.pos();
  std::string name = cur.identifier();
  const auto& names = ctx.variable_names();
  std::size_t idx = 0;
  while (idx < names.size() && names[idx] != name) ++idx;
  if (idx == names.size()) cur.fail_at(start, "unknown variable '" + name + "'");
  int e = 1;
  if (cur.accept('^')) {
    cur.skip_ws();
    std::size_t epos = cur.pos();
    std::string d = cur.digits();
    if (d.empty()) cur.fail_at(epos, "malformed exponent" + cur.found());
    if (d.size() > 7 || std::stol(d) > kMaxExponent) cur.fail_at(epos, "exponent too large");
    e = static_cast<int>(std::stol(d));
  }
  exps[idx] += e;
}

}  // namespace

RingContext parse_ring(std::string_view text) {
  Cursor cur(text);
  cur.skip_ws();
  std::size_t kw = cur.pos();
  if (cur.identifier() != "ring") cur.fail_at(kw, "expected 'ring'");
  cur.skip_ws();
  std::size_t char_pos = cur.pos();
  std::string characteristic = cur.digits();
  if (characteristic.empty()) cur.fail("expected characteristic" + cur.found());
  if (characteristic != "0") cur.fail_at(char_pos, "only characteristic 0 is supported");

  cur.expect('(');
  std::vector<std::string> names;
  for (;;) {
    cur.skip_ws();
    std::size_t vpos = cur.pos();
    std::string name = cur.identifier();
    for (const auto& n : names)
      if (n == name) cur.fail_at(vpos, "duplicate variable '" + name + "'");
    names.push_back(std::move(name));
    if (cur.accept(')')) break;
    cur.expect(',');
  }

  cur.skip_ws();
  std::size_t opos = cur.pos();
  std::string order = cur.identifier();
  std::optional<RingContext> ctx;
  if (order == "M") {
    auto m = parse_matrix(cur);
    try {
      ctx.emplace(names, std::move(m));
    } catch (const std::invalid_argument& e) {
      cur.fail_at(opos, e.what());
    }
  } else {
    try {
      ctx.emplace(RingContext::named(names, order));
    } catch (const std::invalid_argument& e) {
      cur.fail_at(opos, e.what());
    }
  }
  cur.expect(';');
  cur.skip_ws();
  if (!cur.at_end()) cur.fail("unexpected text after ring declaration");
  return *ctx;
}

namespace {

Polynomial parse_poly_at(std::string_view text, std::size_t base, const RingContext& ctx) {
  Cursor cur(text, base);
  Polynomial result(ctx.nvars());
  cur.skip_ws();
  if (cur.at_end()) cur.fail("empty polynomial");

  bool first = true;
  for (;;) {
    cur.skip_ws();
    int sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
      sign = cur.peek() == '-' ? -1 : 1;
      cur.advance();
    } else if (!first) {
      cur.fail("expected '+' or '-'" + cur.found());
    }
    first = false;

    cur.skip_ws();
    Rational coeff = sign;
    ExponentVector exps(ctx.nvars(), 0);
    if (is_digit(cur.peek())) {
      coeff *= parse_coefficient(cur);
      if (cur.accept('*')) {
        parse_factor(cur, ctx, exps);
        while (cur.accept('*')) parse_factor(cur, ctx, exps);
      }
    } else if (is_ident_start(cur.peek())) {
      parse_factor(cur, ctx, exps);
      while (cur.accept('*')) parse_factor(cur, ctx, exps);
    } else {
      cur.fail("expected term" + cur.found());
    }
    result.add_term(exps, coeff);

    cur.skip_ws();
    if (cur.at_end()) break;
  }
  return result;
}

std::string format_coefficient(const Rational& c) { return c.get_str(); }

}  // namespace

Polynomial parse_poly(std::string_view text, const RingContext& ctx) {
  return parse_poly_at(text, 0, ctx);
}

std::string format_monomial(const ExponentVector& e, const RingContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.variable_names()[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_poly(const Polynomial& f, const RingContext& ctx) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(f, ctx)) {
    bool negative = sgn(c) < 0;
    if (negative) out += '-';
    else if (!first) out += '+';
    first = false;
    Rational magnitude = abs(c);
    if (is_zero_exponent(e)) {
      out += format_coefficient(magnitude);
    } else if (magnitude == 1) {
      out += format_monomial(e, ctx);
    } else {
      out += format_coefficient(magnitude) + "*" + format_monomial(e, ctx);
    }
  }
  return out;
}

std::string format_ring(const RingContext& ctx) {
  std::string out = "ring 0 (";
  for (std::size_t i = 0; i < ctx.nvars(); ++i) {
    if (i) out += ',';
    out += ctx.variable_names()[i];
  }
  out += ") ";
  if (!ctx.ordering_label().empty() && ctx.ordering_label() != "M") {
    out += ctx.ordering_label();
  } else {
    out += "M(";
    bool first_row = true;
    for (const auto& row : ctx.matrix().rows()) {
      if (!first_row) out += "; ";
      first_row = false;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(row[i]);
      }
    }
    out += ')';
  }
  out += ';';
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ProblemFile parse_problem(std::string_view raw) {
  // Blank out comments in place so offsets stay valid.
  std::string text(raw);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '#') continue;
    while (i < text.size() && text[i] != '\n') text[i++] = ' ';
  }

  auto relocate = [&](const ParseError& e, std::size_t base) -> ParseError {
    std::size_t off = base + e.offset();
    auto [line, col] = line_column(raw, off);
    return ParseError(e.what(), off, line, col);
  };
  auto error_at = [&](std::size_t off, const std::string& msg) -> ParseError {
    auto [line, col] = line_column(raw, off);
    return ParseError(msg, off, line, col);
  };

  // Matrix rows are also separated by ';', so skip those inside parentheses.
  std::size_t ring_end = std::string::npos;
  for (std::size_t i = 0, depth = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && depth) --depth;
    if (text[i] == ';' && depth == 0) {
      ring_end = i;
      break;
    }
  }
  if (ring_end == std::string::npos)
    throw error_at(text.size(), "missing ring declaration terminated by ';'");
  std::optional<RingContext> ring;
  try {
    ring.emplace(parse_ring(std::string_view(text).substr(0, ring_end + 1)));
  } catch (const ParseError& e) {
    throw relocate(e, 0);
  }

  std::size_t pos = ring_end + 1;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (text.compare(pos, 4, "gens") != 0) throw error_at(pos, "expected 'gens:'");
  pos += 4;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size() || text[pos] != ':') throw error_at(pos, "expected ':' after 'gens'");
  ++pos;
  std::size_t gens_end = text.find(';', pos);
  if (gens_end == std::string::npos) throw error_at(text.size(), "missing ';' after generators");
  for (std::size_t i = gens_end + 1; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw error_at(i, "unexpected text after generators");

  std::vector<Polynomial> gens;
  std::size_t start = pos;
  while (start <= gens_end) {
    std::size_t comma = text.find(',', start);
    std::size_t stop = (comma == std::string::npos || comma > gens_end) ? gens_end : comma;
    std::string_view piece = std::string_view(text).substr(start, stop - start);
    Polynomial g(ring->nvars());
    try {
      g = parse_poly_at(piece, 0, *ring);
    } catch (const ParseError& e) {
      throw relocate(e, start);
    }
    std::size_t first_char = start;
    while (first_char < stop && std::isspace(static_cast<unsigned char>(text[first_char])))
      ++first_char;
    if (g.is_zero()) throw error_at(first_char, "generator is zero");
    if (ring->is_local() && sgn(g.constant_term()) != 0)
      throw error_at(first_char,
                     "generator has a nonzero constant term, not allowed under a local ordering");
    gens.push_back(std::move(g));
    start = stop + 1;
  }
  if (gens.empty()) throw error_at(pos, "no generators");
  return ProblemFile{std::move(*ring), std::move(gens)};
}

std::string format_problem(const RingContext& ctx, const std::vector<Polynomial>& gens) {
  std::string out = format_ring(ctx) + "\ngens: ";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += format_poly(gens[i], ctx);
  }
  out += ";\n";
  return out;
}

std::string format_numbered(const std::vector<Polynomial>& polys, const RingContext& ctx) {
  std::ostringstream out;
  for (std::size_t i = 0; i < polys.size(); ++i)
    out << "[" << i + 1 << "]=" << format_poly(polys[i], ctx) << "\n";
  return out.str();
}

}  // namespace sasbi
