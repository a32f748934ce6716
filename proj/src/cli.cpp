#include "parahess/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "parahess/catalog.hpp"
#include "parahess/focal.hpp"
#include "parahess/form_io.hpp"
#include "parahess/hessian.hpp"
#include "parahess/irreducibility.hpp"
#include "parahess/report.hpp"
#include "parahess/sampling.hpp"

namespace parahess {

namespace {

/// Bad flag values or an unusable input source.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CliConfig {
  std::string subcommand;
  std::string catalog;
  std::string input;
  std::string positional;
  std::uint64_t seed = 42;
  std::size_t samples = 25;
  std::string prime = "2147483647";
  std::string format = "json";
  bool full = false;
  std::size_t directions = 1;
  std::string mode = "exact";
  double eps = 1e-5;
  double rank_tol = 1e-9;
  double deriv_tol = 1e-6;
  std::string at;
  std::string out;
  bool timings = false;
  bool serial = false;
};

struct Input {
  std::string source;
  FormDocument form;
  std::optional<CatalogEntry> entry;
};

class Stopwatch {
 public:
  void lap(const std::string& name) {
    auto now = std::chrono::steady_clock::now();
    laps_[name] = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
  }
  const Json& laps() const { return laps_; }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  Json laps_ = Json::object();
};

Input load_input(const CliConfig& cfg) {
  std::string path = cfg.input.empty() ? cfg.positional : cfg.input;
  if (!cfg.catalog.empty() && !path.empty()) throw UsageError("give either --catalog or an input file, not both");
  Input in;
  if (!cfg.catalog.empty()) {
    in.entry = catalog_lookup(cfg.catalog);
    in.form = in.entry->form;
    in.source = "catalog:" + in.entry->name;
  } else if (!path.empty()) {
    if (!std::ifstream(path)) throw UsageError("cannot open form file '" + path + "'");
    in.form = load_form_file(path);
    in.source = path;
  } else {
    throw UsageError("no input: use --catalog NAME or --input FILE");
  }
  return in;
}

Vector<RationalField> parse_point(const std::string& text) {
  Vector<RationalField> p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty coordinate in --at");
    item = item.substr(b, e - b + 1);
    try {
      mpq_class q(item);
      if (q.get_den() == 0) throw UsageError("zero denominator in --at");
      q.canonicalize();
      p.push_back(q);
    } catch (const std::invalid_argument&) {
      throw UsageError("bad coordinate '" + item + "' in --at");
    }
  }
  if (p.empty()) throw UsageError("--at needs comma-separated coordinates");
  return p;
}

SamplingOptions sampling_options(const CliConfig& cfg) {
  SamplingOptions o;
  o.samples = cfg.samples;
  o.seed = cfg.seed;
  if (cfg.prime == "auto") {
    o.prime.reset();
  } else {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(cfg.prime, &used);
      if (used != cfg.prime.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("--prime must be an integer or 'auto'");
    }
    if (!is_prime(p) || p <= kMinAnalysisPrime || p >= (1ULL << 32))
      throw UsageError("--prime must be a prime in (2^20, 2^32)");
    o.prime = p;
  }
  o.execution = cfg.serial ? Execution::serial : Execution::parallel;
  return o;
}

Json config_json(const CliConfig& cfg) {
  Json c;
  c["subcommand"] = cfg.subcommand;
  c["seed"] = cfg.seed;
  c["samples"] = cfg.samples;
  c["prime"] = cfg.prime;
  c["format"] = cfg.format;
  c["full"] = cfg.full;
  c["directions"] = cfg.directions;
  c["mode"] = cfg.mode;
  c["eps"] = cfg.eps;
  c["rank_tol"] = cfg.rank_tol;
  c["deriv_tol"] = cfg.deriv_tol;
  if (!cfg.at.empty()) c["at"] = cfg.at;
  return c;
}

AnalysisReport base_report(const CliConfig& cfg, const Input& in) {
  AnalysisReport r;
  r.seed = cfg.seed;
  r.input["source"] = in.source;
  r.input["form"] = print_polynomial(in.form.poly);
  r.input["n"] = in.form.n;
  r.input["degree"] = in.form.degree;
  r.input["config"] = config_json(cfg);
  if (in.entry) {
    r.input["expected_h"] = in.entry->expected_h ? Json(*in.entry->expected_h) : Json();
    r.input["expected_hessian"] = to_string(in.entry->expected_hessian);
    r.input["singular_locus"] = in.entry->singular_locus;
  }
  r.warnings = in.form.warnings;
  return r;
}

DeterminantOptions det_options(const CliConfig& cfg) {
  DeterminantOptions o;
  o.execution = cfg.serial ? Execution::serial : Execution::parallel;
  o.seed = cfg.seed;
  return o;
}

void cmd_hessian(const CliConfig& cfg, const Input& in, AnalysisReport& r, Stopwatch& sw) {
  auto h = hessian_polynomial(in.form.poly, det_options(cfg));
  sw.lap("hessian_ms");
  r.hessian = hessian_json(h, cfg.full);
  if (h.status == HessianStatus::nonzero && !h.degree_law_holds)
    r.failures.push_back("degree law: h(f) is not a form of degree (n+1)(d-2)");
}

void cmd_analyze(const CliConfig& cfg, const Input& in, AnalysisReport& r, Stopwatch& sw) {
  const QPoly& f = in.form.poly;
  auto h = hessian_polynomial(f, det_options(cfg));
  sw.lap("hessian_ms");
  r.hessian = hessian_json(h, cfg.full);
  if (h.status == HessianStatus::nonzero && !h.degree_law_holds)
    r.failures.push_back("degree law: h(f) is not a form of degree (n+1)(d-2)");

  auto div = divisibility_order(f, h.hpoly);
  sw.lap("divisibility_ms");
  r.divisibility = divisibility_json(div, cfg.full);
  if (!div.verified) r.failures.push_back("divisibility: re-multiplication check failed");

  auto rank = generic_parabolic_index(f, sampling_options(cfg));
  sw.lap("sampling_ms");
  for (const auto& rec : rank.records) {
    r.points.push_back(sample_json(rec));
    if (*rec.analysis.ii_rank == rank.sampled_rank &&
        !(rec.fiber_check.containment && rec.fiber_check.tangency_constant))
      r.failures.push_back("fiber check failed at sample " + std::to_string(rec.index));
  }
  r.family = family_json(rank, in.form.n);

  const int sampled_h = rank.implied_h;
  bool segre = div.indeterminate ? sampled_h >= 1 : static_cast<int>(div.order) >= sampled_h;
  r.divisibility["sampled_h"] = sampled_h;
  r.divisibility["segre_consistent"] = segre;
  if (!segre)
    r.failures.push_back(div.indeterminate
                             ? "Segre consistency: indeterminate Hessian but sampled h = 0"
                             : "Segre consistency: divisibility order < sampled h");
  if (!div.indeterminate && static_cast<int>(div.order) > sampled_h)
    r.warnings.push_back("divisibility order exceeds the sampled parabolic index");

  auto irr = irreducibility_smoke_test(f, cfg.seed);
  sw.lap("irreducibility_ms");
  r.input["irreducibility"] = {{"prime", irr.prime},
                               {"lines", irr.lines},
                               {"probably_irreducible", irr.probably_irreducible()},
                               {"repeated_factor", irr.repeated_factor},
                               {"surviving_factor_degrees", irr.surviving_degrees}};
  if (!irr.probably_irreducible())
    r.warnings.push_back("irreducibility smoke test: f may be reducible; results assume an irreducible form");
  if (in.entry && in.entry->expected_h && *in.entry->expected_h != sampled_h)
    r.failures.push_back("catalog expects h = " + std::to_string(*in.entry->expected_h) +
                         ", sampled h = " + std::to_string(sampled_h));
}

int cmd_point(const CliConfig& cfg, const Input& in, AnalysisReport& r, std::ostream& err) {
  if (cfg.at.empty()) throw UsageError("point needs --at x0,x1,...");
  auto p = parse_point(cfg.at);
  if (p.size() != in.form.poly.nvars())
    throw PointError("--at has " + std::to_string(p.size()) + " coordinates, X lives in " +
                     std::to_string(in.form.poly.nvars()) + " variables");
  if (std::all_of(p.begin(), p.end(), [](const mpq_class& c) { return sgn(c) == 0; }))
    throw PointError("the zero vector is not a projective point");
  const HypersurfaceDerivatives<RationalField> d(in.form.poly);
  auto a = analyze_point(d, p);
  Json j = point_json(a);
  int code = kExitOk;
  if (a.status == PointStatus::ok) {
    Rng rng = Rng::for_index(cfg.seed, 0);
    j["fiber_check"] = fiber_check_json(check_fiber(d, a, rng));
    if (a.flex) r.warnings.push_back("flex point: the second fundamental form vanishes");
  } else {
    err << "error: " << (a.status == PointStatus::not_on_hypersurface ? "point not on X" : "point is singular on X")
        << " (" << to_string(a.status) << ")\n";
    code = kExitBadPoint;
  }
  r.points.push_back(j);
  return code;
}

void cmd_focal(const CliConfig& cfg, const Input& in, AnalysisReport& r, Stopwatch& sw) {
  ProbeOptions o;
  o.directions = cfg.directions;
  o.seed = cfg.seed;
  if (cfg.mode == "exact") o.mode = FocalMode::exact;
  else if (cfg.mode == "numeric") o.mode = FocalMode::numeric;
  else throw UsageError("--mode must be exact or numeric");
  if (!(cfg.eps > 0) || !(cfg.rank_tol > 0) || !(cfg.deriv_tol > 0))
    throw UsageError("--eps, --rank-tol and --deriv-tol must be positive");
  o.eps = cfg.eps;
  o.tol.rank_tol = cfg.rank_tol;
  o.tol.deriv_tol = cfg.deriv_tol;
  o.execution = cfg.serial ? Execution::serial : Execution::parallel;
  if (!cfg.at.empty()) o.at = parse_point(cfg.at);
  auto probes = in.entry ? probe_catalog_entry(*in.entry, o) : probe_hypersurface(in.form.poly, o);
  sw.lap("focal_ms");
  const int n = static_cast<int>(in.form.n);
  const int h = probes.front().h;
  auto feas = no_focal_feasible(n, h);
  r.family["no_focal_feasible"] = {{"n", feas.n}, {"h", feas.h}, {"feasible", feas.feasible}};
  for (const auto& p : probes) {
    r.focal.push_back(focal_json(p));
    const std::string tag = "direction " + std::to_string(p.direction_index);
    if (!p.conclusive) {
      r.warnings.push_back(tag + ": inconclusive (" + p.note + ")");
      continue;
    }
    if (!p.bookkeeping_holds()) r.failures.push_back(tag + ": sum/intersection dimensions disagree with rho");
    if (p.sum_dim > n) r.failures.push_back(tag + ": S + S/dw exceeds the tangent hyperplane");
    if (!p.containment_in_tangent) r.failures.push_back(tag + ": S + S/dw not contained in T_P X");
    if (!p.focal_points_singular) r.failures.push_back(tag + ": a focal point is a smooth point of X");
    if (!feas.feasible && p.int_dim < 1)
      r.failures.push_back(tag + ": no focal point although 2h + 2 > n forces one");
  }
  if (std::all_of(probes.begin(), probes.end(), [](const FocalProbeResult& p) { return p.int_dim == 0; }))
    r.warnings.push_back("no focal intersection found in probed directions");
}

int cmd_catalog(const CliConfig& cfg, std::ostream& out) {
  if (cfg.catalog.empty()) {
    for (const auto& name : catalog_names()) {
      auto e = catalog_lookup(name);
      out << name << "\t" << e.description << "\n";
    }
    return kExitOk;
  }
  auto e = catalog_lookup(cfg.catalog);
  out << "# " << e.name << ": " << e.description << "\n";
  if (e.expected_h) out << "# expected h = " << *e.expected_h << "\n";
  out << "# singular locus: " << e.singular_locus << "\n";
  out << print_form(e.form);
  return kExitOk;
}

void add_input_options(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--catalog", cfg.catalog, "built-in hypersurface (see `catalog`)");
  sub->add_option("--input", cfg.input, "form file");
  sub->add_option("file", cfg.positional, "form file");
  sub->add_option("--seed", cfg.seed, "64-bit seed for all randomness")->capture_default_str();
  sub->add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out, "write the report to this file instead of stdout");
  sub->add_flag("--timings", cfg.timings, "record wall-clock timings (output no longer byte-stable)");
  sub->add_flag("--serial", cfg.serial, "disable OpenMP parallelism");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"parahess: Hessians, parabolic points and Gauss fibers of projective hypersurfaces"};
  app.require_subcommand(1);
  auto* hessian = app.add_subcommand("hessian", "Hessian polynomial status and degree");
  auto* analyze = app.add_subcommand("analyze", "full analysis: Hessian, divisibility, sampled parabolic index");
  auto* point = app.add_subcommand("point", "second fundamental form and Gauss fiber at one point");
  auto* focal = app.add_subcommand("focal", "classical focal probes along the fiber family");
  auto* catalog = app.add_subcommand("catalog", "list built-in hypersurfaces or print one");
  for (auto* sub : {hessian, analyze, point, focal}) add_input_options(sub, cfg);
  for (auto* sub : {hessian, analyze}) sub->add_flag("--full", cfg.full, "print h(f) and the cofactor in full");
  analyze->add_option("--samples", cfg.samples, "number of sampled points")->capture_default_str();
  analyze->add_option("--prime", cfg.prime, "analysis prime or 'auto'")->capture_default_str();
  for (auto* sub : {point, focal}) sub->add_option("--at", cfg.at, "point as comma-separated rationals");
  focal->add_option("--directions", cfg.directions, "number of probe directions")->capture_default_str();
  focal->add_option("--mode", cfg.mode, "exact or numeric")
      ->check(CLI::IsMember({"exact", "numeric"}))
      ->capture_default_str();
  focal->add_option("--eps", cfg.eps, "numeric step")->capture_default_str();
  focal->add_option("--rank-tol", cfg.rank_tol, "relative kernel threshold")->capture_default_str();
  focal->add_option("--deriv-tol", cfg.deriv_tol, "derivative rank threshold")->capture_default_str();
  catalog->add_option("name", cfg.catalog, "entry to print as a form file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(cfg, out);
    cfg.subcommand = app.get_subcommands().front()->get_name();
    Stopwatch sw;
    Input in = load_input(cfg);
    sw.lap("parse_ms");
    AnalysisReport report = base_report(cfg, in);
    int code = kExitOk;
    if (hessian->parsed()) cmd_hessian(cfg, in, report, sw);
    else if (analyze->parsed()) cmd_analyze(cfg, in, report, sw);
    else if (point->parsed()) code = cmd_point(cfg, in, report, err);
    else if (focal->parsed()) cmd_focal(cfg, in, report, sw);
    if (cfg.timings) report.timings = sw.laps();
    const std::string text =
        emit_report(report, cfg.format == "text" ? ReportFormat::text : ReportFormat::json);
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file || !(file << text)) throw std::runtime_error("cannot write " + cfg.out);
    }
    for (const auto& f : report.failures) err << "FAILURE: " << f << "\n";
    if (code == kExitOk && !report.failures.empty()) code = kExitInternal;
    return code;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SamplingExhaustedError& e) {
    err << "sampling exhausted: " << e.what() << "\n";
    return kExitSampling;
  } catch (const BadPrimeError& e) {
    err << "sampling exhausted: " << e.what() << "\n";
    return kExitSampling;
  } catch (const PointError& e) {
    err << "bad point: " << e.what() << "\n";
    return kExitBadPoint;
  } catch (const NotApplicableError& e) {
    err << "not applicable: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace parahess
