#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sasbi/cli.hpp"
#include "sasbi/completion.hpp"
#include "sasbi/parse.hpp"
#include "sasbi/subalgebra.hpp"

namespace py = pybind11;
using namespace sasbi;

namespace {

std::vector<std::string> formatted(const std::vector<Polynomial>& ps, const RingContext& ctx) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_poly(p, ctx));
  return out;
}

struct PyCompletion {
  std::vector<std::string> basis;
  std::string status;
  std::size_t rounds;
};

struct PyRepresentation {
  std::string remainder;
  std::string unit;
  std::string body;
  bool verified;
};

// A parsed problem file. Polynomials cross the boundary as text in the
// problem grammar, so results print the same way the command line does.
class Problem {
 public:
  explicit Problem(const std::string& text) : file_(parse_problem(text)) {}

  std::string ring() const { return format_ring(file_.ring); }
  std::vector<std::string> gens() const { return formatted(file_.gens, file_.ring); }
  std::string text() const { return format_problem(file_.ring, file_.gens); }

  std::vector<std::string> spolys() const { return formatted(evaluated_spolys(G()), file_.ring); }

  std::string wsnf_of(const std::string& poly, std::size_t max_steps) const {
    auto r = sasbi::wsnf(parse_poly(poly, file_.ring), G(), max_steps);
    if (!r.transcript.complete) throw LimitExceeded("wsnf step cap exceeded");
    return format_poly(r.remainder, file_.ring);
  }

  PyRepresentation representation(const std::string& poly, std::size_t max_steps) const {
    auto gs = G();
    auto f = parse_poly(poly, file_.ring);
    auto r = sasbi::wsnf(f, gs, max_steps);
    if (!r.transcript.complete) throw LimitExceeded("wsnf step cap exceeded");
    auto rep = reconstruct_representation(r.transcript, gs);
    const auto& ctx = file_.ring;
    return {format_poly(rep.remainder, ctx), format_poly(expand_unit(rep, gs, f), ctx),
            format_poly(expand_combination(rep.body, gs.gens(), ctx.nvars()), ctx),
            check_representation(rep, gs, f).ok()};
  }

  std::string nf(const std::string& poly, int degree) const {
    return format_poly(truncated_nf(parse_poly(poly, file_.ring), G(), degree), file_.ring);
  }

  std::vector<GExponent> member(const std::string& monomial) const {
    auto m = parse_poly(monomial, file_.ring);
    if (m.size() != 1 || m.terms().begin()->second != 1)
      throw std::invalid_argument("expected a single monomial with coefficient 1");
    return monomial_membership(m.terms().begin()->first, G().leading_monomials());
  }

  std::string verify(std::size_t max_steps) const {
    CompletionLimits limits;
    limits.max_steps = max_steps;
    switch (is_sasbi(G(), limits)) {
      case Verdict::holds: return "true";
      case Verdict::fails: return "false";
      case Verdict::indeterminate: break;
    }
    return "indeterminate";
  }

  PyCompletion sasbi(std::size_t max_rounds, std::size_t max_steps, bool via_homogenization) const {
    auto limits = limits_of(max_rounds, max_steps);
    return wrap(via_homogenization ? sasbi_via_homogenization(G(), limits) : sasbi_basis(G(), limits));
  }

  PyCompletion sagbi(std::size_t max_rounds, std::size_t max_steps) const {
    return wrap(sagbi_basis(G(), limits_of(max_rounds, max_steps)));
  }

 private:
  GeneratorSet G() const { return GeneratorSet(file_.gens, file_.ring); }

  static CompletionLimits limits_of(std::size_t rounds, std::size_t steps) {
    CompletionLimits limits;
    limits.max_rounds = rounds;
    limits.max_steps = steps;
    return limits;
  }

  PyCompletion wrap(const CompletionResult& r) const {
    return {formatted(r.basis.gens(), file_.ring),
            r.status == CompletionStatus::complete ? "complete" : "limit-exceeded", r.rounds_used};
  }

  ProblemFile file_;
};

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> argv{"sasbi"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int code = cli::run(argv, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sagbi/Sasbi subalgebra bases over the rationals";

  auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
  (void)parse_error;

  py::class_<PyCompletion>(m, "CompletionResult")
      .def_readonly("basis", &PyCompletion::basis)
      .def_readonly("status", &PyCompletion::status)
      .def_readonly("rounds", &PyCompletion::rounds)
      .def("__repr__", [](const PyCompletion& r) {
        return "<CompletionResult status=" + r.status + " rounds=" + std::to_string(r.rounds) +
               " size=" + std::to_string(r.basis.size()) + ">";
      });

  py::class_<PyRepresentation>(m, "Representation")
      .def_readonly("remainder", &PyRepresentation::remainder)
      .def_readonly("unit", &PyRepresentation::unit)
      .def_readonly("body", &PyRepresentation::body)
      .def_readonly("verified", &PyRepresentation::verified);

  py::class_<Problem>(m, "Problem")
      .def(py::init<const std::string&>(), py::arg("text"),
           "Parse a problem: `ring 0 (x,y) Ds;` followed by `gens: ...;`.")
      .def_property_readonly("ring", &Problem::ring)
      .def_property_readonly("gens", &Problem::gens)
      .def("text", &Problem::text)
      .def("spolys", &Problem::spolys, "Evaluated S-polynomials, monic, LM descending.")
      .def("wsnf", &Problem::wsnf_of, py::arg("poly"), py::arg("max_steps") = kDefaultStepCap)
      .def("representation", &Problem::representation, py::arg("poly"),
           py::arg("max_steps") = kDefaultStepCap)
      .def("nf", &Problem::nf, py::arg("poly"), py::arg("degree"))
      .def("member", &Problem::member, py::arg("monomial"))
      .def("verify", &Problem::verify, py::arg("max_steps") = kDefaultStepCap)
      .def("sasbi", &Problem::sasbi, py::arg("max_rounds") = CompletionLimits{}.max_rounds,
           py::arg("max_steps") = kDefaultStepCap, py::arg("via_homogenization") = false)
      .def("sagbi", &Problem::sagbi, py::arg("max_rounds") = CompletionLimits{}.max_rounds,
           py::arg("max_steps") = kDefaultStepCap);

  m.def("run_cli", &run_cli, py::arg("args"),
        "Run one command line; returns (exit_code, stdout, stderr).");
}
