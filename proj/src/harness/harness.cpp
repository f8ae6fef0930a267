#include "birat/harness.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "birat/cancel.hpp"
#include "birat/hilbert.hpp"
#include "birat/homalg.hpp"
#include "birat/linsys.hpp"

namespace birat {

namespace {

constexpr int kSchema = 1;

const std::map<std::string, std::string>& optional_groups() {
  static const std::map<std::string, std::string> groups = {
      {"inverse_delta", "--with-inverse"},
      {"base_degree", "--with-inverse"},
      {"base_genus", "--with-inverse"},
      {"base_reduced_degree", "--with-inverse"},
      {"base_reduced_genus", "--with-inverse"},
      {"inverse_multidegree", "--with-inverse"},
      {"h0_normal_ambient", "--with-normal-bundle"},
      {"h0_normal_cubic", "--with-normal-bundle"},
      {"lines_through_point", "--with-line-counts"},
      {"secant_lines", "--with-line-counts"},
      {"secant_conics", "--with-line-counts"},
      {"secant_cubics", "--with-line-counts"},
  };
  return groups;
}

std::uint64_t reseed(std::uint64_t seed, int attempt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Json to_json(const std::vector<std::int64_t>& v) { return Json(v); }

std::int64_t count_of_degree(const std::vector<MultiPoly>& gens, int d) {
  return std::count_if(gens.begin(), gens.end(), [d](const MultiPoly& g) { return g.degree() == d; });
}

class GenericityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RowRun {
 public:
  RowRun(const RowPlan& plan, const RunOptions& opts, RowReport& rep) : plan_(plan), opts_(opts), rep_(rep) {
    for (const auto& c : rep.checks) done_.insert(c.name);
  }

  // runs fn under the step budget; on failure the listed checks take the step's status
  template <class Fn>
  bool step(const std::string& label, const std::vector<std::string>& names, Fn&& fn) {
    start_ = std::chrono::steady_clock::now();
    try {
      ScopedDeadline guard(std::chrono::duration<double>(opts_.step_budget_seconds));
      fn();
      return true;
    } catch (const Timeout&) {
      rep_.diagnostics.push_back(label + ": timeout after " + std::to_string(static_cast<int>(elapsed())) + " s");
      close(names, CheckStatus::Timeout, "step budget exceeded in " + label);
      return false;
    } catch (const MathError& e) {
      rep_.diagnostics.push_back(label + ": " + e.what());
      close(names, CheckStatus::Error, label + ": " + e.what());
      throw GenericityFailure(label + ": " + e.what());
    } catch (const std::exception& e) {
      rep_.diagnostics.push_back(label + ": " + e.what());
      close(names, CheckStatus::Error, label + ": " + e.what());
      return false;
    }
  }

  void record(const std::string& name, Json computed, const std::string& note = {}) {
    auto it = plan_.expected.find(name);
    if (it == plan_.expected.end()) return;
    add(name, it->second.value, std::move(computed), it->second.citation, note);
  }

  // a check whose expected value does not come from the data file
  void record_derived(const std::string& name, Json expected, Json computed, const std::string& citation,
                      const std::string& note = {}) {
    add(name, std::move(expected), std::move(computed), citation, note);
  }

  bool wants(const std::string& name) const { return plan_.expected.count(name) > 0; }

  // every expected value not yet reported
  void finish(const std::string& reason_if_reached) {
    for (const auto& [name, ev] : plan_.expected) {
      if (done_.count(name)) continue;
      CheckResult c;
      c.name = name;
      c.expected = ev.value;
      c.citation = ev.citation;
      c.status = CheckStatus::Skipped;
      auto g = optional_groups().find(name);
      bool enabled = g == optional_groups().end() || (g->second == "--with-inverse" && plan_.with_inverse) ||
                     (g->second == "--with-normal-bundle" && plan_.with_normal_bundle) ||
                     (g->second == "--with-line-counts" && plan_.with_line_counts);
      c.note = enabled ? reason_if_reached : "needs " + g->second;
      rep_.checks.push_back(c);
    }
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void add(const std::string& name, Json expected, Json computed, const std::string& citation, const std::string& note) {
    CheckResult c;
    c.name = name;
    c.status = expected == computed ? CheckStatus::Pass : CheckStatus::Fail;
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    c.citation = citation;
    c.seconds = elapsed();
    c.note = note;
    rep_.checks.push_back(std::move(c));
    done_.insert(name);
  }

  void close(const std::vector<std::string>& names, CheckStatus status, const std::string& note) {
    for (const auto& name : names) {
      if (done_.count(name)) continue;
      auto it = plan_.expected.find(name);
      if (it == plan_.expected.end() && name != "linsys_two_methods") continue;
      CheckResult c;
      c.name = name;
      if (it != plan_.expected.end()) {
        c.expected = it->second.value;
        c.citation = it->second.citation;
      }
      c.status = status;
      c.seconds = elapsed();
      c.note = note;
      rep_.checks.push_back(std::move(c));
      done_.insert(name);
    }
  }

  const RowPlan& plan_;
  const RunOptions& opts_;
  RowReport& rep_;
  std::set<std::string> done_;
  std::chrono::steady_clock::time_point start_;
};

void run_once(const RowPlan& plan, const RunOptions& opts, std::uint64_t seed, RowReport& rep) {
  RowRun run(plan, opts, rep);
  Rng rng(seed ^ 0xA5A5A5A5ULL);
  const int e = plan.multiplicity;

  ConstructedSurface surf;
  if (!run.step("surface", {"surface_degree", "h0_cubics", "nodes", "sectional_genus", "model_genus"}, [&] {
        surf = build_surface({plan.tag, opts.prime, seed});
        run.record("surface_degree", surf.degree);
        run.record("h0_cubics", surf.h0_cubics);
        run.record("nodes", surf.nodes,
                   "points of the singular locus; singular scheme length " + std::to_string(surf.singular_scheme_degree));
        run.record("sectional_genus", surf.sectional_genus);
        if (surf.model_genus) run.record("model_genus", *surf.model_genus);
        if (surf.attempts > 1) rep.diagnostics.push_back("surface: " + std::to_string(surf.attempts) + " construction attempts");
      })) {
    run.finish("not reached: surface construction failed");
    return;
  }

  run.step("discriminant", {"discriminant_admissible"},
           [&] { run.record("discriminant_admissible", admissible(plan.discriminant), "d = " + std::to_string(plan.discriminant)); });

  if (run.wants("linkage_base_dim")) {
    run.step("linkage",
             {"linkage_base_dim", "linkage_base_degree", "linkage_base_genus", "linkage_base_cubics",
              "linkage_residual_degree", "linkage_residual_singular_degree"},
             [&] {
               LinkageData link = build_linkage(opts.prime, seed);
               auto hb = hilbert_data(link.base_top);
               run.record("linkage_base_dim", hb.proj_dim);
               run.record("linkage_base_degree", hb.degree);
               run.record("linkage_base_genus", hb.sectional_genus());
               run.record("linkage_base_cubics", count_of_degree(link.base_top.minimal_generators(), 3));
               auto ht = hilbert_data(link.residual);
               run.record("linkage_residual_degree", ht.degree);
               auto [points, length] = surface_singularities(link.residual, rng);
               run.record("linkage_residual_singular_degree", points,
                          "compared: points of the singular locus; Jacobian scheme length " + std::to_string(length));
             });
  }

  LinearSystem sys;
  if (!run.step("linear_system", {"linsys_dim", "linsys_two_methods", "h0_I5", "conormal_difference"}, [&] {
        LinearSystem oracle = multiplicity_basis_oracle(surf.ideal, plan.degree, e);
        LinearSystem sat =
            power_saturation_basis(surf.ideal, plan.degree, e, rng, static_cast<int>(oracle.basis.size()));
        run.record("linsys_dim", static_cast<std::int64_t>(sat.basis.size()),
                   "saturation truncated at degree " + std::to_string(sat.truncation));
        run.record_derived("linsys_two_methods", true,
                           oracle.basis.size() == sat.basis.size() && same_span(oracle.basis, sat.basis),
                           "derived/partials-vs-saturated-power",
                           "oracle dimension " + std::to_string(oracle.basis.size()));
        if (run.wants("h0_I5")) {
          auto h5 = static_cast<std::int64_t>(surf.ideal.degree_part(5).size());
          run.record("h0_I5", h5);
          run.record("conormal_difference", h5 - static_cast<std::int64_t>(oracle.basis.size()));
        }
        sys = std::move(oracle);
      })) {
    run.finish("not reached: linear system failed");
    return;
  }

  std::optional<RationalMap> phi;
  Ideal image;
  std::int64_t image_degree = 0;
  if (!run.step("image", {"image_ambient_dim", "image_dim", "image_degree", "image_quadrics"}, [&] {
        phi.emplace(Ideal::zero(surf.ideal.ring()), sys.basis);
        image = image_up_to(*phi, 2, rng);
        auto hz = hilbert_data(image);
        image_degree = hz.degree;
        run.record("image_ambient_dim", phi->target_arity() - 1);
        run.record("image_dim", hz.proj_dim);
        run.record("image_degree", hz.degree);
        run.record("image_quadrics", count_of_degree(image.gens(), 2));
      })) {
    run.finish("not reached: image failed");
    return;
  }

  if (run.wants("unrestricted_multidegree"))
    run.step("unrestricted_degrees", {"unrestricted_multidegree"},
             [&] { run.record("unrestricted_multidegree", to_json(projective_degrees(*phi, rng))); });

  MultiPoly cubic;
  std::optional<RationalMap> restricted;
  ProjectiveDegrees restricted_degrees;
  bool have_restricted = run.step("restricted_degrees", {"multidegree", "birational"}, [&] {
    cubic = random_cubic_through(surf.ideal, rng);
    restricted.emplace(restrict_to_hypersurface(*phi, cubic));
    auto md = projective_degrees(*restricted, rng);
    restricted_degrees = md;
    run.record("multidegree", to_json(md));
    auto cert = is_birational(md, image_degree);
    run.record("birational", cert.birational,
               "top degree " + std::to_string(cert.top_degree) + ", image degree " + std::to_string(cert.image_degree));
  });

  run.step("fiber", {"fiber_dim", "fiber_degree", "fiber_genus", "fiber_secancy"}, [&] {
    auto p = phi->sample_point(rng);
    Ideal F = fiber_at(*phi, p, rng);
    auto cert = certify_congruence_fiber(F, surf.ideal, e, rng);
    run.record("fiber_dim", cert.fiber_dim);
    run.record("fiber_degree", cert.fiber_degree);
    run.record("fiber_genus", cert.fiber_genus);
    run.record("fiber_secancy", cert.secancy);
  });

  if (plan.with_inverse && have_restricted) {
    std::optional<Ideal> base;
    run.step("inverse", {"inverse_delta", "base_degree", "base_genus", "inverse_multidegree"}, [&] {
      auto inv = inverse_map(*restricted, image, rng);
      run.record("inverse_delta", inv.delta, "certified on " + std::to_string(inv.points_checked) + " points");
      base = saturate_irrelevant(inv.map.base_ideal(), rng);
      auto hb = hilbert_data(*base);
      std::string count;
      if (restricted_degrees.size() > 2)
        count = "; delta^2 - d_2 = " + std::to_string(std::int64_t{inv.delta} * inv.delta - restricted_degrees[2]);
      run.record("base_degree", hb.degree, "degree of the saturated base ideal" + count);
      run.record("base_genus", hb.sectional_genus(), "sectional genus from the Hilbert polynomial of the saturated base ideal");
      if (run.wants("inverse_multidegree")) run.record("inverse_multidegree", to_json(projective_degrees(inv.map, rng)));
    });
    if (base)
      run.step("reduced_base", {"base_reduced_degree", "base_reduced_genus"}, [&] {
        auto red = reduced_top_component(*base, rng);
        auto hr = hilbert_data(red.ideal);
        const std::string note = "generators up to degree " + std::to_string(red.generator_degree);
        run.record("base_reduced_degree", hr.degree, note);
        run.record("base_reduced_genus", hr.sectional_genus(), note);
      });
  }

  if (plan.with_normal_bundle && have_restricted)
    run.step("normal_bundle", {"h0_normal_ambient", "h0_normal_cubic"}, [&] {
      run.record("h0_normal_ambient", hom_degree_zero(surf.ideal));
      run.record("h0_normal_cubic", hom_degree_zero_relative(surf.ideal, cubic));
    });

  if (plan.with_line_counts)
    run.step("line_counts", {"lines_through_point", "secant_lines", "secant_conics", "secant_cubics"}, [&] {
      RationalMap cubics(Ideal::zero(surf.ideal.ring()), surf.ideal.degree_part(3));
      Ideal target(cubics.target_ring(), image_degree_part(cubics, 2, rng));
      auto q = cubics.evaluate(cubics.sample_point(rng));
      auto lines = lines_through_point(target, q);
      std::string note = "quadrics only";
      if (lines.dim > 0) {
        target = image_up_to(cubics, 3, rng);
        lines = lines_through_point(target, q);
        note = "quadrics and cubics";
      }
      if (lines.dim != 0) throw MathError("lines through the image point do not form a finite set");
      run.record("lines_through_point", lines.degree, "degree of the scheme of lines; image equations: " + note);
      std::int64_t by_degree[4] = {0, 0, 0, 0};
      std::ostringstream orbits;
      for (const auto& o : classify_lines(cubics, lines, surf.ideal, rng)) {
        const auto c = o.curve_degree();
        const bool consistent = o.pullback_dim == 1 && c >= 1 && c <= 3 && o.secancy == o.size * (3 * c - 1);
        if (consistent) by_degree[c] += o.size;
        orbits << o.size << "x(deg " << o.pullback_degree << ", sec " << o.secancy << ")" << (consistent ? "" : "?") << " ";
      }
      run.record("secant_lines", by_degree[1], "orbits " + orbits.str());
      run.record("secant_conics", by_degree[2]);
      run.record("secant_cubics", by_degree[3]);
    });

  run.finish(have_restricted ? "not reached" : "not reached: restricted map failed");
}

std::string cell(const RowReport& r, const std::string& name) {
  const CheckResult* c = r.find(name);
  if (!c) return "";
  auto show = [](const Json& j) {
    if (j.is_array()) {
      std::string s;
      for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + j[i].dump();
      return s;
    }
    return j.is_null() ? std::string("?") : j.dump();
  };
  switch (c->status) {
    case CheckStatus::Pass: return show(c->computed);
    case CheckStatus::Fail: return show(c->computed) + "!(" + show(c->expected) + ")";
    case CheckStatus::Timeout: return "T/O";
    case CheckStatus::Error: return "ERR";
    case CheckStatus::Skipped: return "-";
  }
  return "";
}

std::string table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& body) {
  std::vector<std::size_t> w(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
  for (const auto& r : body)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " | " : "") << std::left << std::setw(static_cast<int>(w[i])) << r[i];
    os << "\n";
  };
  line(head);
  std::size_t total = 0;
  for (auto x : w) total += x + 3;
  os << std::string(total - 3, '-') << "\n";
  for (const auto& r : body) line(r);
  return os.str();
}

}  // namespace

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Timeout: return "timeout";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Error: return "error";
  }
  return "?";
}

bool RowReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail || c.status == CheckStatus::Error; });
}

const CheckResult* RowReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<RowPlan> parse_plans(const Json& doc) {
  if (!doc.contains("schema") || doc["schema"].get<int>() != kSchema)
    throw std::runtime_error("expected-value file: unsupported schema");
  std::vector<RowPlan> out;
  for (const auto& r : doc.at("rows")) {
    RowPlan p;
    p.tag = parse_tag(r.at("tag").get<std::string>());
    p.discriminant = r.at("discriminant").at("value").get<std::int64_t>();
    p.degree = r.at("linear_system").at("degree").get<int>();
    p.multiplicity = r.at("linear_system").at("multiplicity").get<int>();
    for (const auto& [name, v] : r.at("expected").items())
      p.expected[name] = {v.at("value"), v.at("cite").get<std::string>()};
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<RowPlan> load_plans(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_plans(Json::parse(in));
}

RowReport run_row(const RowPlan& plan, const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> earlier;
  for (int attempt = 0;; ++attempt) {
    RowReport rep;
    rep.row = tag_name(plan.tag);
    rep.prime = opts.prime;
    rep.seed = attempt == 0 ? opts.seed : reseed(opts.seed, attempt);
    rep.retries = attempt;
    rep.diagnostics = earlier;
    try {
      run_once(plan, opts, rep.seed, rep);
    } catch (const GenericityFailure& e) {
      if (attempt + 1 < opts.max_retries) {
        earlier.push_back("seed " + std::to_string(rep.seed) + " abandoned: " + e.what());
        continue;
      }
      RowRun(plan, opts, rep).finish(std::string("not reached: ") + e.what());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
}

CongruenceCertificate certify_congruence_fiber(const Ideal& F, const Ideal& S, int e, Rng& rng) {
  CongruenceCertificate c;
  c.e = e;
  auto h = hilbert_data(F);
  c.fiber_dim = h.proj_dim;
  c.fiber_degree = h.degree;
  if (h.proj_dim == 1) {
    c.fiber_genus = h.sectional_genus();
    c.secancy = intersection_length(F, S, rng);
  }
  return c;
}

bool admissible(std::int64_t d) {
  if (d <= 6 || d % 2 != 0 || d % 4 == 0 || d % 9 == 0) return false;
  std::int64_t m = d;
  while (m % 2 == 0) m /= 2;
  for (std::int64_t p = 3; p * p <= m; p += 2) {
    if (m % p) continue;
    if (p % 3 == 2) return false;
    while (m % p == 0) m /= p;
  }
  return !(m > 1 && m % 3 == 2);
}

std::int64_t d_invariant(std::int64_t deg_s, std::int64_t self_intersection) {
  return 3 * self_intersection - deg_s * deg_s;
}

Coef default_prime() {
  if (const char* env = std::getenv("BIRAT_PRIME"); env && *env) {
    char* end = nullptr;
    unsigned long long p = std::strtoull(env, &end, 10);
    if (*end || p < 3) throw std::invalid_argument("BIRAT_PRIME is not a usable prime");
    return static_cast<Coef>(p);
  }
  return 32003;
}

Json report_json(const std::vector<RowReport>& reports) {
  Json rows = Json::array();
  for (const auto& r : reports) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json j = {{"name", c.name},   {"expected", c.expected}, {"computed", c.computed}, {"status", status_name(c.status)},
                {"citation", c.citation}, {"seconds", c.seconds}};
      if (!c.note.empty()) j["note"] = c.note;
      checks.push_back(j);
    }
    rows.push_back({{"row", r.row},
                    {"prime", r.prime},
                    {"seed", r.seed},
                    {"retries", r.retries},
                    {"seconds", r.seconds},
                    {"passed", r.passed()},
                    {"diagnostics", r.diagnostics},
                    {"checks", checks}});
  }
  return {{"schema", kSchema}, {"rows", rows}};
}

void emit_report(const std::vector<RowReport>& reports, std::ostream& json_out) {
  if (reports.empty()) throw std::invalid_argument("emit_report: no rows");
  json_out << report_json(reports).dump(2) << "\n";
  if (!json_out) throw std::runtime_error("emit_report: write failed");
}

std::string format_tables(const std::vector<RowReport>& reports) {
  std::vector<std::vector<std::string>> t1, t2;
  for (const auto& r : reports) {
    t1.push_back({r.row, cell(r, "surface_degree"), cell(r, "nodes"), cell(r, "secant_lines"), cell(r, "secant_conics"),
                  cell(r, "secant_cubics"), cell(r, "h0_cubics"), cell(r, "h0_normal_ambient"), cell(r, "h0_normal_cubic")});
    std::string y = cell(r, "image_degree") + " in P^" + cell(r, "image_ambient_dim");
    t2.push_back({r.row, cell(r, "linsys_dim"), cell(r, "fiber_degree"), cell(r, "multidegree"), y,
                  cell(r, "image_quadrics"), cell(r, "inverse_delta"), cell(r, "base_degree"), cell(r, "base_genus"),
                  cell(r, "base_reduced_degree"), cell(r, "base_reduced_genus")});
  }
  std::ostringstream os;
  os << table({"row", "deg", "nodes", "2-sec lines", "5-sec conics", "8-sec cubics", "h0 I(3)", "h0 N_P5", "h0 N_X"}, t1)
     << "\n"
     << table({"row", "h0", "e", "multidegree", "image", "quadrics", "delta", "deg B", "g B", "deg B_red", "g B_red"}, t2)
     << "\n";
  for (const auto& r : reports) {
    int counts[5] = {0, 0, 0, 0, 0};
    for (const auto& c : r.checks) ++counts[static_cast<int>(c.status)];
    os << r.row << " (p=" << r.prime << ", seed=" << r.seed << ", retries=" << r.retries << ", " << std::fixed
       << std::setprecision(1) << r.seconds << " s): " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
       << " timeout, " << counts[3] << " skipped, " << counts[4] << " error\n";
    for (const auto& c : r.checks)
      if (c.status == CheckStatus::Fail || c.status == CheckStatus::Error || c.status == CheckStatus::Timeout)
        os << "  " << status_name(c.status) << " " << c.name << ": expected " << c.expected.dump() << ", computed "
           << c.computed.dump() << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
    for (const auto& d : r.diagnostics) os << "  note: " << d << "\n";
  }
  return os.str();
}

}  // namespace birat
