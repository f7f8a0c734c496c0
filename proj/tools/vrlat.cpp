// vrlat: Vietoris–Rips complexes of set families under the symmetric-difference
// metric. See README.md for the command reference.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vrlat/complex.hpp"
#include "vrlat/family_spec.hpp"
#include "vrlat/formulas.hpp"
#include "vrlat/homology.hpp"
#include "vrlat/report.hpp"
#include "vrlat/verify.hpp"

namespace {

using namespace vrlat;

int run_homology(const std::string& spec_text, int scale, int max_dim, const std::string& coeff,
                 const std::string& format, long long budget_ms, std::size_t max_simplices) {
  const auto spec = parse_family_spec(spec_text);
  const auto family = materialize(spec);
  const auto budget = budget_ms > 0 ? Budget::with_time_limit(std::chrono::milliseconds(budget_ms), max_simplices)
                                    : Budget{max_simplices, std::nullopt};
  const auto k = build_flag(family, scale, max_dim, budget, worker_threads_from_env());
  const std::string canonical = to_string(spec);
  std::optional<std::int64_t> chi;
  if (k.is_complete()) chi = euler_characteristic(k);

  std::vector<std::uint64_t> values;
  int complete_through = -1;
  std::vector<std::pair<int, mpz_class>> torsion;
  Coefficients c = Coefficients::Z2;
  if (coeff == "z2") {
    const auto b = betti_z2(k, max_dim - 1, ReductionMode::Sequential, budget);
    values = b.values;
    complete_through = b.complete_through;
  } else if (coeff == "int") {
    c = Coefficients::Z;
    complete_through = max_dim - 1;
    for (int d = 0; d <= complete_through; ++d) {
      const auto h = homology_integer(k, d);
      values.push_back(h.rank);
      for (const auto& t : h.torsion) torsion.emplace_back(d, t);
    }
  } else {
    throw Error("unknown coefficients '" + coeff + "' (expected z2 or int)");
  }

  const auto fmt = parse_report_format(format);
  if (fmt == ReportFormat::Json) {
    std::cout << homology_json(canonical, scale, c, values, complete_through, chi) << "\n";
  } else if (fmt == ReportFormat::Csv) {
    std::cout << "family,scale,coeff,betti,complete_through,chi\n\"" << canonical << "\"," << scale << ","
              << coeff << ",";
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? ";" : "") << values[i];
    std::cout << "," << complete_through << "," << (chi ? std::to_string(*chi) : "") << "\n";
  } else {
    std::cout << canonical << " at scale " << scale << ", f-vector";
    for (auto f : k.f_vector()) std::cout << " " << f;
    std::cout << "\n";
    for (std::size_t d = 0; d < values.size(); ++d) std::cout << "  b~" << d << " = " << values[d] << "\n";
    if (chi) std::cout << "  chi = " << *chi << "\n";
    else std::cout << "  (truncated at dimension " << k.max_dim() << ")\n";
  }
  for (const auto& [d, t] : torsion) std::cerr << "torsion Z/" << t.get_str() << " in dimension " << d << "\n";
  return 0;
}

int run_facets(const std::string& spec_text, int scale, bool closed_form) {
  const auto spec = parse_family_spec(spec_text);
  const auto family = materialize(spec);
  std::vector<Simplex> facets;
  if (closed_form) {
    const auto* uniform = spec.terms.size() == 1 ? std::get_if<UniformTerm>(&spec.terms[0]) : nullptr;
    if (!uniform || scale != 2) throw Error("--closed-form needs a single F(m,n) term at scale 2");
    facets = maximal_simplices_closed_form(uniform->m, uniform->n);
  } else {
    facets = maximal_simplices_bk(family, scale, [](std::size_t found) {
      std::cerr << "... " << found << " facets\n";
    });
  }
  std::cout << format_simplex_dump(family, scale, to_string(spec), facets);
  return 0;
}

int run_check_sc(const std::string& spec_text, int scale, const std::string& sub_text) {
  const auto family = materialize(parse_family_spec(spec_text));
  const auto sub = materialize(parse_family_spec(sub_text));
  const auto k = build_flag(family, scale, 1);
  std::vector<Vertex> l;
  for (const auto& s : sub.vertices()) {
    const auto idx = family.index_of(s);
    if (!idx) throw Error("subfamily vertex " + s.to_string() + " is not in the family");
    l.push_back(static_cast<Vertex>(*idx));
  }
  const auto check = sc_hypothesis_check(k, l);
  if (check.holds) {
    std::cout << "holds\n";
    return 0;
  }
  std::cout << "violated " << family[check.violation->first].to_string() << " "
            << family[check.violation->second].to_string() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vietoris-Rips complexes of set families under the symmetric-difference metric"};
  app.require_subcommand(1);

  std::string family, coeff = "z2", format = "json", suite, subfamily, formula;
  int scale = 2, max_dim = 0, m_max = 6, three_m = 0, three_n = 0;
  long long budget_ms = 0;
  std::size_t max_simplices = std::numeric_limits<std::size_t>::max();
  bool closed_form = false, show_terms = false, no_timings = false;
  std::optional<int> verify_max_dim;
  std::vector<std::string> formula_args;

  auto* homology = app.add_subcommand("homology", "Reduced Betti numbers of VR(family, scale)");
  homology->add_option("--family", family, "Family spec, e.g. F(5,2)+F(5,3)")->required();
  homology->add_option("--scale", scale, "Scale r")->required();
  homology->add_option("--max-dim", max_dim, "Build through this dimension; Betti through max-dim - 1")
      ->required()->check(CLI::NonNegativeNumber);
  homology->add_option("--coeff", coeff, "z2 or int")->check(CLI::IsMember({"z2", "int"}));
  homology->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  homology->add_option("--budget-ms", budget_ms, "Wall-time budget in milliseconds");
  homology->add_option("--max-simplices", max_simplices, "Simplex-count cap");

  auto* facets = app.add_subcommand("facets", "Maximal simplices of VR(family, scale)");
  facets->add_option("--family", family)->required();
  facets->add_option("--scale", scale)->required();
  facets->add_flag("--closed-form", closed_form, "Use the N/L closed form (single F(m,n), scale 2)");

  auto* verify = app.add_subcommand("verify", "Compare computed homology against closed forms");
  verify->add_option("--suite", suite)->required()->check(
      CLI::IsMember({"uniform", "adjacent", "skip", "prefix", "power", "all"}));
  verify->add_option("--m-max", m_max)->required();
  verify->add_option("--budget-ms", budget_ms, "Per-instance wall-time budget");
  verify->add_option("--max-simplices", max_simplices, "Per-instance simplex cap");
  verify->add_option("--max-dim", verify_max_dim, "Override the suite's build dimension");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_flag("--no-timings", no_timings, "Omit wall times for byte-stable output");

  auto* formula_cmd = app.add_subcommand("formula", "Evaluate a closed-form count");
  formula_cmd->add_option("name", formula, "Formula name")->required();
  formula_cmd->add_option("--args", formula_args, "Arguments, e.g. --args 6 3 or --args 5 {1,2,3}");
  formula_cmd->add_flag("--show-terms", show_terms, "Print the term decomposition");

  auto* check_sc = app.add_subcommand("check-sc", "Check the star-cluster lemma hypothesis");
  check_sc->add_option("--family", family)->required();
  check_sc->add_option("--scale", scale)->required();
  check_sc->add_option("--subfamily", subfamily, "Vertices of L as a family spec")->required();

  auto* three = app.add_subcommand("three-layer", "Compare F_n+F_{n+1}+F_{n+2} with F_n+F_{n+2}");
  three->add_option("--m", three_m)->required();
  three->add_option("--n", three_n)->required();
  three->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*homology) return run_homology(family, scale, max_dim, coeff, format, budget_ms, max_simplices);
    if (*facets) return run_facets(family, scale, closed_form);
    if (*check_sc) return run_check_sc(family, scale, subfamily);
    if (*formula_cmd) {
      const auto eval = evaluate_formula(formula, formula_args);
      std::cout << eval.value << "\n";
      if (show_terms)
        for (const auto& t : eval.terms) std::cout << "  " << t.label << " = " << t.value << "\n";
      return 0;
    }
    if (*verify) {
      VerifyOptions opt;
      opt.m_max = m_max;
      if (budget_ms > 0) opt.time_budget = std::chrono::milliseconds(budget_ms);
      opt.max_simplices = max_simplices;
      opt.threads = worker_threads_from_env();
      opt.max_dim = verify_max_dim;
      const auto report = run_verify(parse_suite(suite), opt);
      std::cout << emit_report(report, parse_report_format(format), {.timings = !no_timings});
      if (format == "json") std::cout << "\n";
      return report.all_matched() ? 0 : 1;
    }
    if (*three) {
      Report r;
      r.entries.push_back(run_three_layer_check(three_m, three_n));
      std::cout << emit_report(r, parse_report_format(format));
      if (format == "json") std::cout << "\n";
      return r.all_matched() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
