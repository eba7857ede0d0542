#include "sasbi/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sasbi/completion.hpp"
#include "sasbi/parse.hpp"
#include "sasbi/subalgebra.hpp"

namespace sasbi::cli {

namespace {

struct Options {
  std::string input;
  std::string poly;
  std::string monomial;
  std::string output;
  int degree = 0;
  std::size_t max_rounds = CompletionLimits{}.max_rounds;
  std::size_t max_steps = kDefaultStepCap;
  bool via_homogenization = false;
  bool show_representation = false;
  bool monic = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ProblemFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_problem(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                     ": error: " + e.what());
  }
}

Polynomial parse_option_poly(const std::string& text, const RingContext& ctx, const char* flag) {
  try {
    return parse_poly(text, ctx);
  } catch (const ParseError& e) {
    throw InputError(std::string(flag) + ":" + std::to_string(e.column()) + ": error: " + e.what());
  }
}

// Tag ring g1..gm (plus f) used to print G-combinations.
RingContext combination_ring(std::size_t m, bool with_input) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("g" + std::to_string(i + 1));
  if (with_input) names.push_back("f");
  if (names.empty()) names.push_back("g0");
  return RingContext::named(std::move(names), "dp");
}

std::string format_combination(const GCombination& combo, std::size_t m, bool with_input,
                               const Rational& constant = 0) {
  auto ring = combination_ring(m, with_input);
  Polynomial p(ring.nvars());
  for (const auto& t : combo) {
    ExponentVector e(ring.nvars(), 0);
    std::copy(t.alpha.begin(), t.alpha.end(), e.begin());
    p.add_term(e, t.coefficient);
  }
  p.add_term(ExponentVector(ring.nvars(), 0), constant);
  return format_poly(p, ring);
}

std::string parenthesized(const Polynomial& p, const RingContext& ctx) {
  return "(" + format_poly(p, ctx) + ")";
}

int print_completion(const CompletionResult& r, const Options& opt, std::ostream& out) {
  const auto& ctx = r.basis.ctx();
  out << format_numbered(r.basis.gens(), ctx);
  bool complete = r.status == CompletionStatus::complete;
  out << "status=" << (complete ? "complete" : "limit-exceeded") << " rounds=" << r.rounds_used
      << "\n";
  if (!opt.output.empty()) {
    std::ofstream file(opt.output);
    if (!file) throw InputError(opt.output + ": cannot write file");
    file << format_problem(ctx, r.basis.gens());
  }
  return complete ? kSuccess : kLimitExceeded;
}

int cmd_nf(const Options& opt, std::ostream& out) {
  auto problem = load(opt.input);
  GeneratorSet G(problem.gens, problem.ring);
  auto f = parse_option_poly(opt.poly, problem.ring, "--poly");
  auto r = truncated_nf(f, G, opt.degree);
  if (opt.monic) r = make_monic(r, problem.ring);
  out << format_poly(r, problem.ring) << "\n";
  return kSuccess;
}

int cmd_wsnf(const Options& opt, std::ostream& out, std::ostream& err) {
  auto problem = load(opt.input);
  const auto& ctx = problem.ring;
  GeneratorSet G(problem.gens, ctx);
  auto f = parse_option_poly(opt.poly, ctx, "--poly");
  auto r = wsnf(f, G, opt.max_steps);
  Polynomial h = opt.monic ? make_monic(r.remainder, ctx) : r.remainder;
  out << format_poly(h, ctx) << "\n";
  if (!r.transcript.complete) {
    err << "wsnf: step cap of " << opt.max_steps << " exceeded; result is partial\n";
    return kLimitExceeded;
  }
  if (opt.show_representation) {
    auto rep = reconstruct_representation(r.transcript, G);
    auto check = check_representation(rep, G, f);
    if (!check.ok()) throw InvariantViolation("reconstructed representation does not verify");
    Polynomial unit = expand_unit(rep, G, f);
    Polynomial body = expand_combination(rep.body, G.gens(), ctx.nvars());
    const std::size_t m = G.size();
    out << "unit=" << format_poly(unit, ctx) << "\n";
    out << "unit_in_G=" << format_combination(rep.unit_combination, m, true, rep.unit_constant)
        << "\n";
    out << "body_in_G=" << format_combination(rep.body, m, false) << "\n";
    out << "identity=" << parenthesized(unit, ctx) << "*" << parenthesized(f, ctx) << " = "
        << parenthesized(body, ctx) << " + " << parenthesized(rep.remainder, ctx) << "\n";
  }
  return kSuccess;
}

int cmd_spoly(const Options& opt, std::ostream& out) {
  auto problem = load(opt.input);
  GeneratorSet G(problem.gens, problem.ring);
  out << format_numbered(evaluated_spolys(G), problem.ring);
  return kSuccess;
}

CompletionLimits limits_of(const Options& opt) {
  CompletionLimits limits;
  limits.max_rounds = opt.max_rounds;
  limits.max_steps = opt.max_steps;
  return limits;
}

int cmd_sasbi(const Options& opt, std::ostream& out) {
  auto problem = load(opt.input);
  GeneratorSet G(problem.gens, problem.ring);
  auto r = opt.via_homogenization ? sasbi_via_homogenization(G, limits_of(opt))
                                  : sasbi_basis(G, limits_of(opt));
  if (r.status == CompletionStatus::complete && !opt.via_homogenization &&
      is_sasbi(r.basis, limits_of(opt)) == Verdict::fails)
    throw InvariantViolation("completed basis fails the criterion");
  return print_completion(r, opt, out);
}

int cmd_sagbi(const Options& opt, std::ostream& out) {
  auto problem = load(opt.input);
  GeneratorSet G(problem.gens, problem.ring);
  return print_completion(sagbi_basis(G, limits_of(opt)), opt, out);
}

int cmd_member(const Options& opt, std::ostream& out) {
  auto problem = load(opt.input);
  GeneratorSet G(problem.gens, problem.ring);
  auto m = parse_option_poly(opt.monomial, problem.ring, "--monomial");
  if (m.size() != 1 || m.terms().begin()->second != 1)
    throw InputError("--monomial: expected a single monomial with coefficient 1");
  auto witnesses = monomial_membership(m.terms().begin()->first, G.leading_monomials());
  if (witnesses.empty()) {
    out << "none\n";
    return kSuccess;
  }
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    out << "[" << k + 1 << "]=(";
    for (std::size_t i = 0; i < witnesses[k].size(); ++i) out << (i ? "," : "") << witnesses[k][i];
    out << ")\n";
  }
  return kSuccess;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  auto problem = load(opt.input);
  GeneratorSet G(problem.gens, problem.ring);
  CompletionLimits limits;
  limits.max_steps = opt.max_steps;
  switch (is_sasbi(G, limits)) {
    case Verdict::holds: out << "true\n"; return kSuccess;
    case Verdict::fails: out << "false\n"; return kSuccess;
    case Verdict::indeterminate: out << "indeterminate\n"; return kLimitExceeded;
  }
  return kInternalError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subalgebra bases (Sagbi/Sasbi) over the rationals"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "problem file")->required();
  };
  auto add_steps = [&](CLI::App* sub) {
    sub->add_option("--max-steps", opt.max_steps, "reduction step cap")
        ->check(CLI::PositiveNumber);
  };
  auto add_rounds = [&](CLI::App* sub) {
    sub->add_option("--max-rounds", opt.max_rounds, "completion round cap")
        ->check(CLI::PositiveNumber);
  };

  auto* nf = app.add_subcommand("nf", "normal form up to a degree (local degree orderings)");
  add_input(nf);
  nf->add_option("--poly", opt.poly, "polynomial to reduce")->required();
  nf->add_option("--degree", opt.degree, "truncation degree")->required()->check(CLI::NonNegativeNumber);
  nf->add_flag("--monic", opt.monic, "print the result monic");

  auto* ws = app.add_subcommand("wsnf", "weak Sasbi normal form");
  add_input(ws);
  ws->add_option("--poly", opt.poly, "polynomial to reduce")->required();
  ws->add_flag("--show-representation", opt.show_representation,
               "print the unit and the reconstructed identity");
  ws->add_flag("--monic", opt.monic, "print the result monic");
  add_steps(ws);

  auto* sp = app.add_subcommand("spoly", "evaluated S-polynomials (generators of AR(G) at G)");
  add_input(sp);

  auto* sa = app.add_subcommand("sasbi", "Sasbi basis completion (local degree orderings)");
  add_input(sa);
  sa->add_flag("--via-homogenization", opt.via_homogenization,
               "compute through a Sagbi basis of the homogenized algebra");
  add_rounds(sa);
  add_steps(sa);
  sa->add_option("--output", opt.output, "also write the basis as a problem file");

  auto* sg = app.add_subcommand("sagbi", "Sagbi basis completion (global orderings)");
  add_input(sg);
  add_rounds(sg);
  add_steps(sg);
  sg->add_option("--output", opt.output, "also write the basis as a problem file");

  auto* mb = app.add_subcommand("member", "witnesses for a monomial in K[LM(G)]");
  add_input(mb);
  mb->add_option("--monomial", opt.monomial, "monomial, e.g. x^4*y")->required();

  auto* vf = app.add_subcommand("verify", "check the Sasbi/Sagbi criterion");
  add_input(vf);
  add_steps(vf);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (nf->parsed()) return cmd_nf(opt, out);
    if (ws->parsed()) return cmd_wsnf(opt, out, err);
    if (sp->parsed()) return cmd_spoly(opt, out);
    if (sa->parsed()) return cmd_sasbi(opt, out);
    if (sg->parsed()) return cmd_sagbi(opt, out);
    if (mb->parsed()) return cmd_member(opt, out);
    if (vf->parsed()) return cmd_verify(opt, out);
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    err << opt.input << ": error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << opt.input << ": error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}

}  // namespace sasbi::cli
