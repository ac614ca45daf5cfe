#include "splitegh/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "splitegh/egh.hpp"
#include "splitegh/errors.hpp"
#include "splitegh/json_output.hpp"
#include "splitegh/lpp.hpp"
#include "splitegh/problem.hpp"
#include "splitegh/regseq.hpp"

namespace splitegh {

namespace {

using nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_problem(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

IdealPresentation full_ideal(const ProblemFile& p) {
  IdealPresentation ideal(p.num_vars, p.field, p.ideal);
  for (const auto& fs : p.sequence) ideal.add_generator(product(fs, p.num_vars, p.field));
  return ideal;
}

SplitSequence problem_sequence(const ProblemFile& p) {
  if (p.sequence.empty()) throw UsageError("the problem file has no 'sequence:' section");
  SplitSequence seq(p.num_vars, p.field, p.sequence);
  if (p.powers && *p.powers != seq.degrees()) throw UsageError("'powers' does not match the degrees of the sequence");
  return seq;
}

std::vector<std::uint64_t> parse_counts(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw UsageError("expected comma-separated non-negative integers, got '" + text + "'");
    }
    if (used != item.size() || item.empty() || item[0] == '-')
      throw UsageError("expected comma-separated non-negative integers, got '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<int> parse_powers(const std::string& text) {
  std::vector<int> out;
  for (auto v : parse_counts(text)) out.push_back(static_cast<int>(v));
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < items.size(); ++k) s += (k ? sep : "") + items[k];
  return s;
}

// drops the zeros after the first one: "1,5,8,3,0"
std::string short_form(const HilbertFunction& h) {
  std::vector<std::uint64_t> v;
  for (auto x : h.values()) {
    v.push_back(x);
    if (x == 0) break;
  }
  return HilbertFunction(v).to_string();
}

std::vector<std::string> monomial_strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions and monomial ideals with pure powers for split regular sequences", "splitegh"};
  app.require_subcommand(1);

  std::string file, poly, hilbert_text, powers_text, report_path;
  std::optional<int> maxdeg;
  bool as_json = false, no_recurse = false;
  int threads = 1;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the ideal in a problem file");
  hilbert->add_option("file", file, "problem file")->required();
  hilbert->add_option("--maxdeg", maxdeg, "last degree to compute");
  hilbert->add_flag("--json", as_json, "machine-readable output");
  hilbert->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* regseq = app.add_subcommand("check-regseq", "test whether the sequence section is a regular sequence");
  regseq->add_option("file", file, "problem file")->required();

  auto* reduce = app.add_subcommand("reduce", "square-free normal form modulo the sequence");
  reduce->add_option("file", file, "problem file")->required();
  reduce->add_option("--poly", poly, "homogeneous polynomial")->required();

  auto* lpp = app.add_subcommand("lpp", "lex-plus-powers ideal with a given Hilbert function");
  lpp->add_option("--hilbert", hilbert_text, "H(0),H(1),...")->required();
  lpp->add_option("--powers", powers_text, "a_1,...,a_n")->required();
  lpp->add_flag("--json", as_json, "machine-readable output");

  auto* kk = app.add_subcommand("kk", "check H(d+1) <= H(d)^(d)");
  kk->add_option("--hilbert", hilbert_text, "H(0),H(1),...")->required();

  auto* egh = app.add_subcommand("egh", "monomial ideal with pure powers and the same Hilbert function");
  egh->add_option("file", file, "problem file")->required();
  egh->add_option("--maxdeg", maxdeg, "last degree to compute");
  egh->add_flag("--json", as_json, "machine-readable output");
  egh->add_option("--report", report_path, "write the verification report as JSON");
  egh->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  egh->add_flag("--no-recurse", no_recurse, "read slice ideals off their Hilbert functions");

  std::vector<const char*> argv{"splitegh"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (hilbert->parsed()) {
      const ProblemFile p = load_problem(file);
      int top = 0;
      if (maxdeg) {
        top = *maxdeg;
      } else if (!p.sequence.empty()) {
        top = problem_sequence(p).socle_bound() + 1;
      } else {
        throw UsageError("--maxdeg is required when the file has no sequence section");
      }
      if (top < 0) throw UsageError("--maxdeg must be non-negative");
      const IdealPresentation ideal = full_ideal(p);
      const HilbertFunction h = hilbert_function(ideal, top);
      if (as_json) {
        json gens = json::array();
        for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
        out << json{{"schema", 1}, {"hilbert", h.values()}, {"generators", gens}, {"verified", false}, {"report", json::object()}}
                   .dump(2)
            << "\n";
      } else {
        out << h.to_string() << "\n";
      }
      return exit_ok;
    }

    if (regseq->parsed()) {
      const ProblemFile p = load_problem(file);
      const SplitSequence seq = problem_sequence(p);
      if (seq.size() != seq.num_vars()) {
        out << "not regular: " << seq.size() << " forms in " << seq.num_vars() << " variables\n";
        return exit_infeasible;
      }
      if (auto q = seq.quadratic_shape()) {
        const MinorsResult res = is_regular_minors(q->matrix());
        if (!res.regular) {
          std::vector<std::string> idx;
          for (int i : res.failing_subset) idx.push_back(std::to_string(i));
          out << "not regular: principal minor on {" << join(idx, ",") << "} vanishes\n";
          return exit_infeasible;
        }
        out << "regular: all " << ((1ULL << seq.num_vars()) - 1) << " principal minors are nonzero\n";
        return exit_ok;
      }
      const int top = seq.socle_bound() + 1;
      const HilbertFunction h = hilbert_function(seq.ideal(), top);
      if (h[top] != 0) {
        out << "not regular: H(S/P, " << top << ") = " << h[top] << "\n";
        return exit_infeasible;
      }
      out << "regular: H(S/P) = " << h.to_string() << "\n";
      return exit_ok;
    }

    if (reduce->parsed()) {
      const ProblemFile p = load_problem(file);
      const SplitSequence seq = problem_sequence(p);
      auto q = seq.quadratic_shape();
      if (!q) throw UsageError("reduce needs a sequence of forms (x_i)*(l_i), one per variable");
      const MinorsResult res = is_regular_minors(q->matrix());
      if (!res.regular) {
        out << "not regular: principal minor vanishes\n";
        return exit_infeasible;
      }
      Polynomial g = parse_polynomial(poly, p.num_vars, p.field);
      out << squarefree_reduce(g, *q).to_string() << "\n";
      return exit_ok;
    }

    if (lpp->parsed()) {
      const HilbertFunction h(parse_counts(hilbert_text));
      const LppIdeal ideal = lpp_realize(h, parse_powers(powers_text));
      const auto gens = monomial_strings(ideal.generators());
      if (as_json) {
        json segments = json::array();
        for (int d = 0; d <= ideal.truncation(); ++d) segments.push_back(monomial_strings(ideal.segment(d)));
        out << json{{"schema", 1},
                    {"hilbert", h.values()},
                    {"generators", gens},
                    {"verified", ideal.hilbert() == h},
                    {"report", {{"powers", ideal.powers()}, {"segments", segments}}}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& g : gens) out << g << "\n";
        out << "H = " << short_form(ideal.hilbert()) << "\n";
      }
      return exit_ok;
    }

    if (kk->parsed()) {
      const KkResult res = kk_bound_check(HilbertFunction(parse_counts(hilbert_text)));
      out << res.to_string() << "\n";
      return res.ok ? exit_ok : exit_infeasible;
    }

    if (egh->parsed()) {
      const ProblemFile p = load_problem(file);
      const SplitSequence seq = problem_sequence(p);
      if (seq.size() != seq.num_vars() || !is_regular_general(seq)) {
        out << "not regular: the sequence section is not a regular sequence\n";
        return exit_infeasible;
      }
      const EghInput input(full_ideal(p), seq);
      EghOptions options;
      options.recurse = !no_recurse;
      options.threads = threads;
      options.max_degree = maxdeg;
      const EghResult result = egh_construct(input, options);
      const json doc = egh_json(result);
      if (!report_path.empty()) {
        std::ofstream rep(report_path);
        if (!rep) throw UsageError("cannot write " + report_path);
        rep << doc["report"].dump(2) << "\n";
      }
      if (as_json) {
        out << doc.dump(2) << "\n";
      } else {
        for (const auto& g : result.generators()) out << g.to_string() << "\n";
        out << "H = " << short_form(result.hilbert)
            << (result.report.hilbert_equal ? " (matches input)" : " (DIFFERS from input)") << "\n";
      }
      return exit_ok;
    }
  } catch (const NotRealizableError& e) {
    err << "not realizable: " << e.what() << "\n";
    return exit_infeasible;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return exit_internal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_usage;
}

}  // namespace splitegh
