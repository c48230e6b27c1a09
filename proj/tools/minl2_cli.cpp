// Scenario driver: reads a JSON scenario config, runs one operation from
// the library, and emits deterministic CSV (stdout or --out prefix.csv +
// prefix.jsonl). Exit 0 on pass, 1 on a violated verdict or numerical
// failure, 2 on config/usage errors. Wall time goes to stderr only.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "minl2/bank.hpp"
#include "minl2/polydisc.hpp"

using json = nlohmann::json;
using namespace minl2;

namespace {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config parse: ") + e.what());
  }
}

Complex get_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(where + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

double get_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

DomainSpec parse_domain(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("domain: expected {kind, [q]}");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "disk") return DomainSpec::disk();
  if (kind == "annulus") {
    if (!j.contains("q")) throw ParseError("domain: annulus needs q");
    double q = get_number(j["q"], "domain.q");
    if (!(q > 0.0 && q < 1.0)) throw ParseError("domain.q: need 0 < q < 1");
    return DomainSpec::annulus(q);
  }
  throw ParseError("domain.kind: expected disk or annulus");
}

Complex interior_point(const DomainSpec& d, const json& j,
                       const std::string& where) {
  Complex z = get_complex(j, where);
  if (!d.contains(z, 1e-9)) throw ParseError(where + ": point outside domain");
  return z;
}

std::vector<PolePart> parse_poles(const DomainSpec& d, const json& j,
                                  const std::string& where,
                                  const char* weight_key) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<PolePart> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    std::string at = where + "[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("z"))
      throw ParseError(at + ": expected {z, " + weight_key + "}");
    PolePart p;
    p.z = interior_point(d, e["z"], at + ".z");
    p.p = e.contains(weight_key) ? get_number(e[weight_key], at) : 1.0;
    if (!(p.p > 0.0)) throw ParseError(at + ": weight must be positive");
    out.push_back(p);
  }
  return out;
}

PsiSpec parse_psi(const DomainSpec& d, const json& cfg) {
  if (!cfg.contains("psi") || !cfg["psi"].contains("poles"))
    throw ParseError("psi.poles: required");
  return PsiSpec(d, parse_poles(d, cfg["psi"]["poles"], "psi.poles", "p"));
}

PhiSpec parse_phi(const DomainSpec& d, const json& cfg) {
  if (!cfg.contains("phi")) return PhiSpec(d);
  const json& j = cfg["phi"];
  std::vector<PolePart> green;
  if (j.contains("green")) green = parse_poles(d, j["green"], "phi.green", "q");
  std::optional<HarmonicExtension> u;
  if (j.contains("harmonic_samples")) {
    std::vector<std::vector<double>> samples;
    for (const auto& comp : j["harmonic_samples"])
      samples.push_back(comp.get<std::vector<double>>());
    u = harmonic_extension(d, samples);
  }
  std::vector<Complex> roots;
  if (j.contains("roots"))
    for (size_t i = 0; i < j["roots"].size(); ++i)
      roots.push_back(interior_point(d, j["roots"][i],
                                     "phi.roots[" + std::to_string(i) + "]"));
  return PhiSpec(d, std::move(green), std::move(u), std::move(roots));
}

GainFunction parse_gain(const json& cfg) {
  if (!cfg.contains("gain")) return GainFunction::constant1();
  const json& j = cfg["gain"];
  std::string kind = j.value("kind", "constant1");
  if (kind == "constant1") return GainFunction::constant1();
  if (kind == "exponential")
    return GainFunction::exponential(get_number(j.at("a"), "gain.a"));
  if (kind == "tabulated")
    return GainFunction::tabulated(j.at("t").get<std::vector<double>>(),
                                   j.at("c").get<std::vector<double>>());
  throw ParseError("gain.kind: expected constant1, exponential or tabulated");
}

JetConstraints parse_jets(const DomainSpec& d, const json& cfg) {
  if (!cfg.contains("jets")) throw ParseError("jets: required");
  JetConstraints jets;
  const json& arr = cfg["jets"];
  for (size_t i = 0; i < arr.size(); ++i) {
    const json& e = arr[i];
    std::string at = "jets[" + std::to_string(i) + "]";
    JetPoint jp;
    jp.z = interior_point(d, e.at("z"), at + ".z");
    jp.k = e.value("k", 0);
    if (jp.k < 0) throw ParseError(at + ".k: must be >= 0");
    if (!e.contains("a")) throw ParseError(at + ".a: required");
    for (size_t l = 0; l < e["a"].size(); ++l)
      jp.a.push_back(get_complex(e["a"][l], at + ".a"));
    if ((int)jp.a.size() != jp.k + 1)
      throw ParseError(at + ".a: need k+1 coefficients");
    jets.push_back(std::move(jp));
  }
  if (jets.empty()) throw ParseError("jets: need at least one point");
  return jets;
}

ProductDomain parse_product(const json& cfg) {
  if (!cfg.contains("product") || !cfg["product"].contains("factors"))
    throw ParseError("product.factors: required");
  std::vector<FactorData> factors;
  const json& arr = cfg["product"]["factors"];
  for (size_t i = 0; i < arr.size(); ++i) {
    const json& e = arr[i];
    std::string at = "product.factors[" + std::to_string(i) + "]";
    DomainSpec d = parse_domain(e.at("domain"));
    std::vector<PolePart> poles =
        parse_poles(d, e.at("poles"), at + ".poles", "p");
    if (poles.empty()) throw ParseError(at + ".poles: need at least one");
    PhiSpec phi = parse_phi(d, e);
    factors.push_back({d, std::move(poles), std::move(phi)});
  }
  if (factors.empty()) throw ParseError("product.factors: empty");
  return ProductDomain(std::move(factors));
}

IdealSpec parse_ideal(const json& cfg, int n) {
  if (!cfg.contains("ideal")) throw ParseError("ideal: required");
  const json& j = cfg["ideal"];
  std::string kind = j.value("kind", "maximal");
  if (kind == "maximal") {
    std::vector<Complex> vals;
    for (size_t i = 0; i < j.at("values").size(); ++i)
      vals.push_back(get_complex(j["values"][i], "ideal.values"));
    return IdealSpec::maximal(std::move(vals));
  }
  if (kind == "staircase") {
    std::vector<std::vector<IdealSpec::Coeff>> coeffs;
    for (const auto& per_beta : j.at("coeffs")) {
      std::vector<IdealSpec::Coeff> cs;
      for (const auto& e : per_beta) {
        IdealSpec::Coeff c;
        c.alpha = e.at("alpha").get<std::vector<int>>();
        if ((int)c.alpha.size() != n)
          throw ParseError("ideal.coeffs: alpha length must match factors");
        c.d = get_complex(e.at("d"), "ideal.coeffs.d");
        cs.push_back(std::move(c));
      }
      coeffs.push_back(std::move(cs));
    }
    return IdealSpec::staircase(std::move(coeffs));
  }
  throw ParseError("ideal.kind: expected maximal or staircase");
}

std::string relation_verdict(bool holds, bool equality) {
  return !holds ? "violated" : equality ? "equality" : "strict";
}

struct Options {
  std::string config;
  std::string out;
  int resolution = 0;
  int degree = 0;
  double tolerance = 1e-6;
  std::string normalization = "paper_p2";
  bool smoke = false;

  SolveOptions solve() const {
    SolveOptions o;
    if (resolution > 0) {
      o.area_ntheta = resolution;
      o.area_nr = std::max(resolution / 4, 8);
      o.boundary_n = std::max(resolution, 256);
    }
    if (degree > 0) o.max_degree = degree;
    if (tolerance > 0) o.tol = std::min(tolerance, 1e-6);
    return o;
  }
};

void emit_min(std::vector<ReportRow>& rows, const std::string& scenario,
              const std::string& op, double value, bool converged,
              double residual) {
  ReportRow r{scenario, op,
              {{"value", value},
               {"converged", converged ? 1.0 : 0.0},
               {"residual", residual}},
              converged ? "n/a" : "violated"};
  rows.push_back(std::move(r));
}

// --- subcommand handlers; each returns false on a violated verdict ---

bool run_green(const Options& opt, std::vector<ReportRow>& rows) {
  json cfg = load_config(opt.config);
  DomainSpec d = parse_domain(cfg.at("domain"));
  Complex w = interior_point(d, cfg.at("pole"), "pole");
  GreenPole g(d, w);
  ReportRow r{"green", "green", {{"capacity", g.capacity()}}, "n/a"};
  if (cfg.contains("eval"))
    for (size_t i = 0; i < cfg["eval"].size(); ++i) {
      Complex z = interior_point(d, cfg["eval"][i], "eval");
      r.values.emplace_back("value" + std::to_string(i), g.value(z));
    }
  rows.push_back(std::move(r));
  return true;
}

bool run_minimize(const std::string& space, const Options& opt,
                  std::vector<ReportRow>& rows) {
  json cfg = load_config(opt.config);
  SolveOptions so = opt.solve();
  if (cfg.contains("product")) {
    ProductDomain M = parse_product(cfg);
    if (space == "shilov") {
      std::vector<BoundaryFn> lambda;
      if (cfg.contains("lambda")) {
        for (const auto& v : cfg["lambda"]) {
          double c = get_number(v, "lambda");
          if (!(c > 0.0)) throw ParseError("lambda: must be positive");
          lambda.push_back([c](int, double) { return c; });
        }
      } else {
        for (int j = 0; j < M.n(); ++j)
          lambda.push_back([](int, double) { return 1.0; });
      }
      if ((int)lambda.size() != M.n())
        throw ParseError("lambda: one entry per factor");
      std::vector<Complex> values;
      for (const auto& v : cfg.at("values"))
        values.push_back(get_complex(v, "values"));
      auto r = shilov_min(M, lambda, values, so);
      emit_min(rows, "product", "shilov_min", r.value, r.converged, r.residual);
      return r.converged;
    }
    IdealSpec ideal = parse_ideal(cfg, M.n());
    if (space == "hardy") {
      auto r = hardy_dM_min(M, ideal, so);
      emit_min(rows, "product", "hardy_dM_min", r.value, r.converged,
               r.residual);
      return r.converged;
    }
    GainFunction c = parse_gain(cfg);
    double t = cfg.value("t", 0.0);
    auto r = bergman_min_product(M, c, ideal, t, so);
    emit_min(rows, "product", "bergman_min", r.value, r.converged, r.residual);
    return r.converged;
  }
  DomainSpec d = parse_domain(cfg.at("domain"));
  PsiSpec psi = parse_psi(d, cfg);
  PhiSpec phi = parse_phi(d, cfg);
  JetConstraints jets = parse_jets(d, cfg);
  if (space == "hardy") {
    auto r = hardy_min(d, rho_boundary(phi, psi), jets, so);
    emit_min(rows, "single", "hardy_min", r.value, r.converged, r.residual);
    return r.converged;
  }
  if (space == "shilov")
    throw ParseError("shilov: product configuration required");
  GainFunction c = parse_gain(cfg);
  double t = cfg.value("t", 0.0);
  auto r = bergman_min(phi, psi, c, jets, t, so);
  emit_min(rows, "single", "bergman_min", r.value, r.converged, r.residual);
  return r.converged;
}

GCurve curve_from_config(const json& cfg, const Options& opt) {
  DomainSpec d = parse_domain(cfg.at("domain"));
  PsiSpec psi = parse_psi(d, cfg);
  PhiSpec phi = parse_phi(d, cfg);
  GainFunction c = parse_gain(cfg);
  JetConstraints jets = parse_jets(d, cfg);
  std::vector<double> grid;
  if (cfg.contains("t_grid"))
    grid = cfg["t_grid"].get<std::vector<double>>();
  else
    for (int i = 0; i < 9; ++i) grid.push_back(0.25 * i);
  for (double t : grid)
    if (t < 0.0) throw ParseError("t_grid: t must be >= 0");
  return g_curve(phi, psi, c, jets, grid, opt.solve());
}

bool run_gcurve(const Options& opt, std::vector<ReportRow>& rows) {
  GCurve curve = curve_from_config(load_config(opt.config), opt);
  bool ok = true;
  for (const auto& p : curve.points) {
    emit_min(rows, "gcurve", "bergman_min", p.G, p.min.converged,
             p.min.residual);
    rows.back().values.insert(rows.back().values.begin(),
                              {{"t", p.t}, {"r", p.r}});
    ok = ok && p.min.converged;
  }
  return ok;
}

bool run_concavity(const Options& opt, std::vector<ReportRow>& rows) {
  GCurve curve = curve_from_config(load_config(opt.config), opt);
  ConcavityReport rep = concavity_report(curve, opt.tolerance);
  ReportRow r{"gcurve",
              "concavity",
              {{"max_chord_defect", rep.max_chord_defect},
               {"max_abs_chord_defect", rep.max_abs_chord_defect},
               {"linear", rep.linear ? 1.0 : 0.0},
               {"decay_ok", rep.decay_ok ? 1.0 : 0.0}},
              rep.concave ? (rep.linear ? "equality" : "strict") : "violated"};
  rows.push_back(std::move(r));
  return rep.concave;
}

bool run_relation(const std::string& which, const Options& opt,
                  std::vector<ReportRow>& rows) {
  json cfg = load_config(opt.config);
  SolveOptions so = opt.solve();
  if (which == "thm1") {
    DomainSpec d = parse_domain(cfg.at("domain"));
    PsiSpec psi = parse_psi(d, cfg);
    PhiSpec phi = parse_phi(d, cfg);
    GainFunction c = parse_gain(cfg);
    JetConstraints jets = parse_jets(d, cfg);
    auto rep = theorem1_relation(phi, psi, c, jets, so);
    rows.push_back({"single",
                    "relation",
                    {{"M_H", rep.M_H},
                     {"M", rep.M},
                     {"integral_c", rep.integral_c},
                     {"bound", rep.bound},
                     {"gap", rep.gap}},
                    relation_verdict(rep.holds, rep.equality)});
    if (rep.equality) {
      auto cert = equality_certificate(phi, psi, jets,
                                       d.kind == DomainKind::Disk);
      rows.push_back({"single",
                      "equality_certificate",
                      {{"stmt1", cert.stmt1 ? 1.0 : 0.0},
                       {"stmt2", cert.stmt2 ? 1.0 : 0.0},
                       {"stmt3", cert.stmt3 ? 1.0 : 0.0},
                       {"stmt4", cert.stmt4 ? 1.0 : 0.0},
                       {"character_defect", cert.character_defect}},
                      cert.verdict ? "equality" : "violated"});
      return rep.holds && cert.verdict;
    }
    return rep.holds;
  }
  if (which == "thm21") {
    ProductDomain M = parse_product(cfg);
    IdealSpec ideal = parse_ideal(cfg, M.n());
    GainFunction c = parse_gain(cfg);
    auto rep = theorem21_relation(M, c, ideal, so);
    rows.push_back({"product",
                    "relation",
                    {{"M_H", rep.M_H},
                     {"M", rep.M},
                     {"integral_c", rep.integral_c},
                     {"bound", rep.bound},
                     {"gap", rep.gap},
                     {"linear", rep.linear ? 1.0 : 0.0}},
                    relation_verdict(rep.holds, rep.equality)});
    return rep.holds;
  }
  if (which == "thm31") {
    ShilovScenario sc;
    if (!cfg.contains("factors")) throw ParseError("factors: required");
    for (size_t i = 0; i < cfg["factors"].size(); ++i) {
      const json& e = cfg["factors"][i];
      std::string at = "factors[" + std::to_string(i) + "]";
      DomainSpec d = parse_domain(e.at("domain"));
      std::vector<Complex> pts, hv;
      for (const auto& z : e.at("points"))
        pts.push_back(interior_point(d, z, at + ".points"));
      for (const auto& h : e.at("h")) hv.push_back(get_complex(h, at + ".h"));
      if (pts.empty() || pts.size() != hv.size())
        throw ParseError(at + ": points/h size mismatch");
      sc.domains.push_back(d);
      sc.points.push_back(std::move(pts));
      sc.h_values.push_back(std::move(hv));
      sc.phis.push_back(parse_phi(d, e));
    }
    Normalization norm = opt.normalization == "p1" ? Normalization::P1
                                                   : Normalization::PaperP2;
    auto rep = theorem31_relation(sc, norm, so);
    rows.push_back({"shilov",
                    "relation",
                    {{"M_S", rep.M_S},
                     {"M_H", rep.M_H},
                     {"bound", rep.bound},
                     {"gap", rep.gap},
                     {"statements_hold", rep.statements_hold ? 1.0 : 0.0}},
                    relation_verdict(rep.holds, rep.equality)});
    return rep.holds;
  }
  throw ParseError("relation: expected thm1, thm21 or thm31");
}

bool run_saitoh(const Options& opt, std::vector<ReportRow>& rows) {
  json cfg = load_config(opt.config);
  DomainSpec d = parse_domain(cfg.at("domain"));
  std::vector<Complex> pts;
  if (cfg.contains("points"))
    for (const auto& z : cfg["points"])
      pts.push_back(interior_point(d, z, "points"));
  else
    pts.push_back(interior_point(d, cfg.at("point"), "point"));
  bool ok = true;
  SolveOptions so = opt.solve();
  for (size_t i = 0; i < pts.size(); ++i) {
    auto rep = saitoh_gap(d, pts[i], so);
    // the kernel inequality K_hat >= pi B, equal exactly on the disk
    bool equal = std::abs(rep.gap) <=
                 std::max(opt.tolerance * rep.piB, 10.0 * rep.error_estimate);
    bool holds = equal || rep.gap > 0.0;
    rows.push_back({"saitoh",
                    "kernel_gap_" + std::to_string(i),
                    {{"K_hat", rep.K_hat},
                     {"piB", rep.piB},
                     {"gap", rep.gap},
                     {"error_estimate", rep.error_estimate}},
                    relation_verdict(holds, equal)});
    ok = ok && holds;
  }
  return ok;
}

bool run_extend(const std::string& which, const Options& opt,
                std::vector<ReportRow>& rows) {
  json cfg = load_config(opt.config);
  SolveOptions so = opt.solve();
  if (which == "cor21") {
    ProductDomain M = parse_product(cfg);
    IdealSpec ideal = parse_ideal(cfg, M.n());
    auto rep = cor21_bound(M, ideal, so);
    rows.push_back({"product",
                    "extension_bound",
                    {{"M_H", rep.M_H},
                     {"RHS_printed", rep.RHS_printed},
                     {"RHS_derived", rep.RHS_derived}},
                    relation_verdict(rep.holds, rep.attains_derived)});
    return rep.holds;
  }
  if (which != "cor11")
    throw ParseError("extend: expected cor11 or cor21");
  DomainSpec d = parse_domain(cfg.at("domain"));
  std::vector<Complex> points;
  std::vector<int> ks;
  std::vector<Complex> as;
  for (size_t i = 0; i < cfg.at("jets").size(); ++i) {
    const json& e = cfg["jets"][i];
    points.push_back(interior_point(d, e.at("z"), "jets.z"));
    ks.push_back(e.value("k", 0));
    as.push_back(get_complex(e.at("top"), "jets.top"));
  }
  std::vector<std::vector<double>> lambda;
  if (cfg.contains("lambda_samples"))
    for (const auto& comp : cfg["lambda_samples"])
      lambda.push_back(comp.get<std::vector<double>>());
  else
    for (int c = 0; c < d.components(); ++c)
      lambda.push_back(std::vector<double>(256, 1.0));
  auto rep = extension_bound(d, points, ks, as, lambda, so);
  rows.push_back({"single",
                  "extension_bound",
                  {{"M_H", rep.M_H},
                   {"RHS_printed", rep.RHS_printed},
                   {"RHS_derived", rep.RHS_derived}},
                  relation_verdict(rep.holds, rep.attains_derived)});
  return rep.holds;
}

bool run_split(const Options& opt, std::vector<ReportRow>& rows) {
  json cfg = load_config(opt.config);
  ProductDomain M = parse_product(cfg);
  SplitScenario sc;
  if (!cfg.contains("points")) throw ParseError("points: required");
  for (size_t j = 0; j < cfg["points"].size(); ++j) {
    std::vector<Complex> pts;
    for (const auto& z : cfg["points"][j])
      pts.push_back(interior_point(M.factor((int)j).domain, z, "points"));
    sc.points.push_back(std::move(pts));
  }
  if (sc.points.size() != 2) throw ParseError("points: need two factor lists");
  const json& h = cfg.at("h");
  sc.h.resize(sc.points[0].size(), sc.points[1].size());
  if (h.size() != sc.points[0].size()) throw ParseError("h: row mismatch");
  for (size_t i = 0; i < h.size(); ++i) {
    if (h[i].size() != sc.points[1].size())
      throw ParseError("h: column mismatch");
    for (size_t j = 0; j < h[i].size(); ++j)
      sc.h(i, j) = get_complex(h[i][j], "h");
  }
  auto rep = product_split_check(M, sc, opt.solve());
  double worst = std::max({rep.shilov_defect, rep.face_defect,
                           rep.bergman_defect});
  bool ok = worst <= opt.tolerance;
  rows.push_back({"product",
                  "split_check",
                  {{"shilov_defect", rep.shilov_defect},
                   {"face_defect", rep.face_defect},
                   {"bergman_defect", rep.bergman_defect}},
                  ok ? "equality" : "violated"});
  return ok;
}

void write_outputs(const Options& opt, const std::vector<ReportRow>& rows) {
  if (opt.out.empty()) {
    write_csv(std::cout, rows);
    return;
  }
  std::ofstream csv(opt.out + ".csv");
  if (!csv) throw ParseError("cannot write " + opt.out + ".csv");
  write_csv(csv, rows);
  std::ofstream jsonl(opt.out + ".jsonl");
  if (!jsonl) throw ParseError("cannot write " + opt.out + ".jsonl");
  write_jsonl(jsonl, rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal L2 integral laboratory"};
  app.require_subcommand(1);

  Options opt;
  std::string mode;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* c = sub->add_option("--config,config", opt.config,
                              "scenario config (JSON)");
    if (needs_config) c->required();
    sub->add_option("--out", opt.out, "output prefix (.csv and .jsonl)");
    sub->add_option("--resolution", opt.resolution, "quadrature resolution");
    sub->add_option("--degree", opt.degree, "max basis degree");
    sub->add_option("--tolerance", opt.tolerance, "verdict tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--normalization", opt.normalization,
                    "paper_p2 or p1")
        ->check(CLI::IsMember({"paper_p2", "p1"}));
  };

  auto* green = app.add_subcommand("green", "Green function and capacity");
  add_common(green, true);
  auto* minimize = app.add_subcommand("minimize", "minimal integral");
  minimize->add_option("space", mode, "bergman|hardy|shilov")
      ->required()
      ->check(CLI::IsMember({"bergman", "hardy", "shilov"}));
  add_common(minimize, true);
  auto* gcurve = app.add_subcommand("gcurve", "G(t) sweep");
  add_common(gcurve, true);
  auto* concavity = app.add_subcommand("concavity", "concavity of G vs r");
  add_common(concavity, true);
  auto* relation = app.add_subcommand("relation", "boundary/area relation");
  relation->add_option("which", mode, "thm1|thm21|thm31")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm21", "thm31"}));
  add_common(relation, true);
  auto* saitoh = app.add_subcommand("saitoh", "kernel inequality gap");
  add_common(saitoh, true);
  auto* extend = app.add_subcommand("extend", "optimal extension constants");
  extend->add_option("which", mode, "cor11|cor21")
      ->required()
      ->check(CLI::IsMember({"cor11", "cor21"}));
  add_common(extend, true);
  auto* split = app.add_subcommand("split-check", "product splitting lemmas");
  add_common(split, true);
  auto* bank = app.add_subcommand("bank", "regression scenario bank");
  add_common(bank, false);
  bank->add_flag("--smoke", opt.smoke, "reduced resolution, wider tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  std::vector<ReportRow> rows;
  bool ok = true;
  int failures = 0;
  try {
    if (green->parsed()) ok = run_green(opt, rows);
    else if (minimize->parsed()) ok = run_minimize(mode, opt, rows);
    else if (gcurve->parsed()) ok = run_gcurve(opt, rows);
    else if (concavity->parsed()) ok = run_concavity(opt, rows);
    else if (relation->parsed()) ok = run_relation(mode, opt, rows);
    else if (saitoh->parsed()) ok = run_saitoh(opt, rows);
    else if (extend->parsed()) ok = run_extend(mode, opt, rows);
    else if (split->parsed()) ok = run_split(opt, rows);
    else if (bank->parsed()) {
      failures = run_acceptance(std::cout, opt.smoke, &rows);
      ok = failures == 0;
    }
    write_outputs(opt, rows);
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  auto t1 = std::chrono::steady_clock::now();
  std::fprintf(stderr, "wall %.3f s\n",
               std::chrono::duration<double>(t1 - t0).count());
  return ok ? 0 : 1;
}
