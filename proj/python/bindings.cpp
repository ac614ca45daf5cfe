#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "splitegh/cli.hpp"
#include "splitegh/egh.hpp"
#include "splitegh/errors.hpp"
#include "splitegh/json_output.hpp"
#include "splitegh/macaulay.hpp"
#include "splitegh/problem.hpp"

namespace py = pybind11;
using namespace splitegh;

namespace {

IdealPresentation full_ideal(const ProblemFile& p) {
  IdealPresentation ideal(p.num_vars, p.field, p.ideal);
  for (const auto& fs : p.sequence) ideal.add_generator(product(fs, p.num_vars, p.field));
  return ideal;
}

std::vector<std::uint64_t> hilbert(const std::string& text, std::optional<int> maxdeg) {
  const ProblemFile p = parse_problem(text);
  int top = 0;
  if (maxdeg) {
    top = *maxdeg;
  } else if (!p.sequence.empty()) {
    top = SplitSequence(p.num_vars, p.field, p.sequence).socle_bound() + 1;
  } else {
    throw ArgumentError("maxdeg is required without a sequence section");
  }
  return hilbert_function(full_ideal(p), top).values();
}

std::string egh(const std::string& text, bool recurse) {
  const ProblemFile p = parse_problem(text);
  EghInput input(full_ideal(p), SplitSequence(p.num_vars, p.field, p.sequence));
  EghOptions options;
  options.recurse = recurse;
  return egh_json(egh_construct(input, options)).dump();
}

std::vector<std::string> lpp(const std::vector<std::uint64_t>& h, const std::vector<int>& powers) {
  std::vector<std::string> out;
  for (const auto& m : lpp_realize(HilbertFunction(h), powers).generators()) out.push_back(m.to_string());
  return out;
}

std::string reduce(const std::string& text, const std::string& poly) {
  const ProblemFile p = parse_problem(text);
  auto q = SplitSequence(p.num_vars, p.field, p.sequence).quadratic_shape();
  if (!q) throw ArgumentError("the sequence is not of the form x_i * l_i");
  return squarefree_reduce(parse_polynomial(poly, p.num_vars, p.field), *q).to_string();
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_splitegh, m) {
  m.doc() = "Hilbert functions and pure-power monomial ideals for split regular sequences";

  // translators registered later are tried first, so the base class goes first
  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NotRealizableError>(m, "NotRealizableError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());

  m.def("hilbert", &hilbert, py::arg("problem"), py::arg("maxdeg") = py::none(),
        "H(0..maxdeg) of the ideal in a problem-file text");
  m.def("egh_json", &egh, py::arg("problem"), py::arg("recurse") = true, "full construction, as a JSON string");
  m.def("lpp", &lpp, py::arg("hilbert"), py::arg("powers"), "generators of the lex-plus-powers ideal");
  m.def("kk_check", [](const std::vector<std::uint64_t>& h) { return kk_bound_check(HilbertFunction(h)).to_string(); });
  m.def("macaulay_upper", [](long p, int q) { return macaulay_upper(p, q).get_si(); }, py::arg("p"), py::arg("q"));
  m.def("reduce", &reduce, py::arg("problem"), py::arg("poly"), "square-free normal form");
  m.def("run", &run, py::arg("args"), "run the command-line tool in-process; returns (code, stdout, stderr)");
}
