// verify: runs the per-surface pipelines and compares against the expected-value file.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "birat/harness.hpp"

#ifndef BIRAT_DATA_FILE
#define BIRAT_DATA_FILE "data/tables.json"
#endif

int main(int argc, char** argv) {
  using namespace birat;
  CLI::App app{"Reproduces the surface and congruence tables over a prime field."};
  std::vector<std::string> rows;
  Coef prime = 0;
  std::uint64_t seed = 1;
  bool with_inverse = false, with_normal = false, with_lines = false;
  std::string out, data = BIRAT_DATA_FILE;
  std::vector<std::string> dump;
  double budget = 1800;

  app.add_option("--row", rows, "surface tag (repeatable; default all)");
  app.add_option("--prime", prime, "field characteristic (default BIRAT_PRIME or 32003)");
  app.add_option("--seed", seed, "random seed");
  app.add_flag("--with-inverse", with_inverse, "inverse maps and base loci");
  app.add_flag("--with-normal-bundle", with_normal, "h0 of the normal sheaves");
  app.add_flag("--with-line-counts", with_lines, "secant curves through a general point");
  app.add_option("--out", out, "JSON report file");
  app.add_option("--dump-surface", dump, "write the ideal of TAG to FILE")->expected(2)->type_name("TAG FILE");
  app.add_option("--data", data, "expected-value file");
  app.add_option("--step-budget", budget, "seconds per pipeline step");
  CLI11_PARSE(app, argc, argv);

  try {
    if (prime == 0) prime = default_prime();
    if (!dump.empty()) {
      auto s = build_surface({parse_tag(dump[0]), prime, seed});
      std::ofstream f(dump[1]);
      f << format_poly_file(s.ideal.ring(), s.ideal.gens());
      if (!f) throw std::runtime_error("cannot write " + dump[1]);
      std::cout << "wrote " << tag_name(s.tag) << " (degree " << s.degree << ", " << s.ideal.gens().size()
                << " generators) to " << dump[1] << "\n";
      if (rows.empty()) return 0;
    }

    auto plans = load_plans(data);
    std::vector<RowPlan> selected;
    if (rows.empty()) {
      selected = plans;
    } else {
      for (const auto& r : rows) {
        SurfaceTag t = parse_tag(r);
        auto it = std::find_if(plans.begin(), plans.end(), [&](const RowPlan& p) { return p.tag == t; });
        if (it == plans.end()) throw std::invalid_argument("no expected values for " + r);
        selected.push_back(*it);
      }
    }

    RunOptions opts;
    opts.prime = prime;
    opts.seed = seed;
    opts.step_budget_seconds = budget;
    std::vector<RowReport> reports;
    for (auto plan : selected) {
      plan.with_inverse = with_inverse;
      plan.with_normal_bundle = with_normal;
      plan.with_line_counts = with_lines;
      std::cerr << "running " << tag_name(plan.tag) << "..." << std::endl;
      reports.push_back(run_row(plan, opts));
    }

    std::cout << format_tables(reports);
    if (!out.empty()) {
      std::ofstream f(out);
      if (!f) throw std::runtime_error("cannot write " + out);
      emit_report(reports, f);
    }
    bool ok = std::all_of(reports.begin(), reports.end(), [](const RowReport& r) { return r.passed(); });
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }
}
