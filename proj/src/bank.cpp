#include "minl2/bank.hpp"

#include <cmath>
#include <random>

#include "minl2/polydisc.hpp"

namespace minl2 {

namespace {

struct BankCtx {
  SolveOptions opt;
  double tol6;   // nominal 1e-6 thresholds
  int coarea_res;
  std::vector<ReportRow>* rows = nullptr;

  void emit(ReportRow row) {
    if (rows) rows->push_back(std::move(row));
  }
};

BankCtx make_ctx(bool smoke, std::vector<ReportRow>* rows) {
  BankCtx ctx;
  if (smoke) {
    ctx.opt.area_nr = 24;
    ctx.opt.area_ntheta = 96;
    ctx.opt.boundary_n = 512;
    ctx.opt.max_degree = 64;
    ctx.opt.tol = 1e-7;
    ctx.tol6 = 1e-4;
    ctx.coarea_res = 256;
  } else {
    ctx.tol6 = 1e-6;
    ctx.coarea_res = 1024;
  }
  ctx.rows = rows;
  return ctx;
}

const Complex kZero(0.0, 0.0);

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1.0});
}

// 1: disk equality case of the boundary/interior relation
bool crit_disk_equality(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  PhiSpec phi(disk);
  PsiSpec psi(disk, {{kZero, 1.0}});
  JetConstraints jets = {{kZero, 0, {Complex(1.0, 0.0)}}};
  auto rep = theorem1_relation(phi, psi, GainFunction::constant1(), jets,
                               ctx.opt);
  bool ok = close_rel(rep.M, kPi, ctx.tol6) &&
            close_rel(rep.M_H, 1.0, ctx.tol6) &&
            std::abs(rep.gap) <= ctx.tol6 && rep.equality;
  ctx.emit({"disk_equality", "relation_thm1",
            {{"M", rep.M}, {"M_H", rep.M_H}, {"bound", rep.bound},
             {"gap", rep.gap}},
            ok ? "equality" : "violated"});
  return ok;
}

// 2: exponential gain variant
bool crit_gain_variant(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  PhiSpec phi(disk);
  PsiSpec psi(disk, {{kZero, 1.0}});
  JetConstraints jets = {{kZero, 0, {Complex(1.0, 0.0)}}};
  auto rep = theorem1_relation(phi, psi, GainFunction::exponential(1.0),
                               jets, ctx.opt);
  bool ok = close_rel(rep.M, kPi / 2.0, ctx.tol6) &&
            close_rel(rep.integral_c, 0.5, 1e-12) &&
            close_rel(rep.M_H, 1.0, ctx.tol6) &&
            std::abs(rep.gap) <= ctx.tol6;
  ctx.emit({"disk_exp_gain", "relation_thm1",
            {{"M", rep.M}, {"integral_c", rep.integral_c},
             {"M_H", rep.M_H}, {"gap", rep.gap}},
            ok ? "equality" : "violated"});
  return ok;
}

// 3: linearity of the reparametrized minimal integral, and concavity for
// a two-pole scenario, via second differences on a uniform r grid
bool crit_linearity(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  auto c = GainFunction::constant1();
  auto second_differences = [&](const PsiSpec& psi,
                                const JetConstraints& jets, double& g0) {
    PhiSpec phi(disk);
    std::vector<double> G(9);
    double r_lo = std::exp(-2.0);
    for (int i = 0; i < 9; ++i) {
      double r = 1.0 - i * (1.0 - r_lo) / 8.0;
      double t = -std::log(r);
      G[i] = bergman_min(phi, psi, c, jets, t, ctx.opt).value;
    }
    g0 = G[0];
    std::vector<double> d2(7);
    for (int i = 1; i <= 7; ++i)
      d2[i - 1] = G[i - 1] + G[i + 1] - 2.0 * G[i];
    return d2;
  };

  double g0 = 0.0;
  JetConstraints one = {{kZero, 0, {Complex(1.0, 0.0)}}};
  auto d2a = second_differences(PsiSpec(disk, {{kZero, 1.0}}), one, g0);
  double max_abs = 0.0;
  for (double d : d2a) max_abs = std::max(max_abs, std::abs(d));
  bool lin_ok = max_abs <= ctx.tol6 * kPi;

  Complex z1(0.4, 0.0);
  JetConstraints two = {{kZero, 0, {Complex(1.0, 0.0)}},
                        {z1, 0, {Complex(1.0, 0.0)}}};
  double g0b = 0.0;
  auto d2b = second_differences(
      PsiSpec(disk, {{kZero, 1.0}, {z1, 1.0}}), two, g0b);
  double max_pos = 0.0;
  for (double d : d2b) max_pos = std::max(max_pos, d);
  bool conc_ok = max_pos <= ctx.tol6 * g0b;

  ctx.emit({"g_curve", "concavity",
            {{"max_abs_d2_linear", max_abs}, {"max_pos_d2_two_pole", max_pos},
             {"G0_two_pole", g0b}},
            lin_ok && conc_ok ? "equality" : "violated"});
  return lin_ok && conc_ok;
}

// 4: the kernel inequality, equality on the disk, strict on the annulus
bool crit_saitoh(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  bool ok = true;
  double worst = 0.0;
  for (const Complex& z :
       {kZero, Complex(0.5, 0.0), Complex(0.3, 0.4)}) {
    auto rep = saitoh_gap(disk, z, ctx.opt);
    worst = std::max(worst, std::abs(rep.gap));
    if (std::abs(rep.gap) > ctx.tol6) ok = false;
  }
  auto ann = saitoh_gap(DomainSpec::annulus(0.25), Complex(0.5, 0.0),
                        ctx.opt);
  bool strict = ann.gap > 10.0 * ann.error_estimate;
  ctx.emit({"saitoh", "kernel_gap",
            {{"disk_worst_gap", worst}, {"annulus_gap", ann.gap},
             {"annulus_error", ann.error_estimate}},
            ok && strict ? "strict" : "violated"});
  return ok && strict;
}

// 5: extremal-function attainment on three disk scenarios
bool crit_extremal(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  PhiSpec phi(disk);
  auto c = GainFunction::constant1();
  struct Case {
    PsiSpec psi;
    JetConstraints jets;
  };
  Complex z1(0.5, 0.0);
  std::vector<Case> cases;
  cases.push_back({PsiSpec(disk, {{kZero, 1.0}}),
                   {{kZero, 0, {Complex(1.0, 0.0)}}}});
  cases.push_back({PsiSpec(disk, {{kZero, 2.0}}),
                   {{kZero, 1, {kZero, Complex(1.0, 0.0)}}}});
  // two-point jets matching the ratio-limit values so equality holds
  cases.push_back({PsiSpec(disk, {{kZero, 1.0}, {z1, 1.0}}),
                   {{kZero, 0, {Complex(-0.5, 0.0)}},
                    {z1, 0, {Complex(2.0 / 3.0, 0.0)}}}});

  bool ok = true;
  double worst_jet = 0.0, worst_area = 0.0, worst_bdry = 0.0;
  for (const auto& cs : cases) {
    auto ex = extremal_disk(phi, cs.psi, c, cs.jets, ctx.opt);
    double M = bergman_min(phi, cs.psi, c, cs.jets, 0.0, ctx.opt).value;
    double MH =
        hardy_min(disk, rho_boundary(phi, cs.psi), cs.jets, ctx.opt).value;
    worst_jet = std::max(worst_jet, ex.jet_residual);
    double da = std::abs(ex.area_value - M) / M;
    double db = std::abs(ex.boundary_value - MH) / MH;
    worst_area = std::max(worst_area, da);
    worst_bdry = std::max(worst_bdry, db);
    if (ex.jet_residual > 1e-10 || da > ctx.tol6 || db > ctx.tol6)
      ok = false;
  }
  ctx.emit({"extremal_disk", "attainment",
            {{"worst_jet_residual", worst_jet},
             {"worst_area_rel", worst_area},
             {"worst_boundary_rel", worst_bdry}},
            ok ? "equality" : "violated"});
  return ok;
}

// 6: closed-form monomial sublevel integrals against the product solver
bool crit_monomial_oracle(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  auto c = GainFunction::constant1();
  struct Combo {
    std::vector<double> p;
    std::vector<int> alpha;
    Complex d;
    double t;
  };
  std::vector<Combo> combos = {
      {{2, 2}, {0, 0}, Complex(1, 0), 0.0},
      {{2, 2}, {0, 0}, Complex(1, 0), 1.0},
      {{4, 4}, {1, 0}, Complex(1, 0), 0.5},
      {{4, 4}, {1, 1}, Complex(2, 0), 0.0},
      {{2, 4}, {0, 1}, Complex(1, 0), 2.0},
      {{3, 3, 3}, {0, 0, 0}, Complex(1, 0), 2.0},
  };
  bool ok = true;
  double worst = 0.0;
  for (const auto& cb : combos) {
    std::vector<FactorData> fs;
    for (double p : cb.p) fs.push_back({disk, {{kZero, p}}, PhiSpec(disk)});
    ProductDomain M(std::move(fs));
    IdealSpec ideal = IdealSpec::staircase({{{cb.alpha, cb.d}}});
    SolveOptions opt = ctx.opt;
    if (cb.p.size() > 2) opt.max_degree = 8;  // keep the tensor basis small
    double got = bergman_min_product(M, c, ideal, cb.t, opt).value;
    double want = monomial_sublevel_integral(cb.p, {{cb.alpha, cb.d}}, cb.t);
    double rel = std::abs(got - want) / want;
    worst = std::max(worst, rel);
    if (rel > ctx.tol6) ok = false;
  }
  ctx.emit({"monomial_sublevel", "oracle",
            {{"worst_rel_error", worst}},
            ok ? "equality" : "violated"});
  return ok;
}

// 7: the three product-splitting lemmas on a bidisc and annulus x disk
bool crit_splitting(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  bool ok = true;
  double worst = 0.0;
  {
    std::vector<FactorData> fs;
    fs.push_back(
        {disk, {{kZero, 1.0}, {Complex(0.5, 0.0), 1.0}}, PhiSpec(disk)});
    fs.push_back({disk, {{Complex(0.3, 0.0), 1.0}}, PhiSpec(disk)});
    ProductDomain M(std::move(fs));
    SplitScenario sc;
    sc.points = {{kZero, Complex(0.5, 0.0)}, {Complex(0.3, 0.0)}};
    sc.h = Eigen::MatrixXcd::Ones(2, 1);
    auto rep = product_split_check(M, sc, ctx.opt);
    worst = std::max({worst, rep.shilov_defect, rep.face_defect,
                      rep.bergman_defect});
  }
  {
    DomainSpec ann = DomainSpec::annulus(0.25);
    std::vector<FactorData> fs;
    fs.push_back({ann, {{Complex(0.5, 0.0), 1.0}}, PhiSpec(ann)});
    fs.push_back({disk, {{kZero, 1.0}}, PhiSpec(disk)});
    ProductDomain M(std::move(fs));
    SplitScenario sc;
    sc.points = {{Complex(0.5, 0.0)}, {kZero}};
    sc.h = Eigen::MatrixXcd::Ones(1, 1);
    auto rep = product_split_check(M, sc, ctx.opt);
    worst = std::max({worst, rep.shilov_defect, rep.face_defect,
                      rep.bergman_defect});
  }
  ok = worst <= ctx.tol6;
  ctx.emit({"product_split", "lemma_defects",
            {{"worst_defect", worst}},
            ok ? "equality" : "violated"});
  return ok;
}

// 8: product relation equality on the bidisc, strict under a perturbed phi
bool crit_thm21(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  IdealSpec ideal = IdealSpec::staircase(
      {{{std::vector<int>{0, 0}, Complex(1.0, 0.0)}}});
  auto c = GainFunction::constant1();

  std::vector<FactorData> fs;
  fs.push_back({disk, {{kZero, 2.0}}, PhiSpec(disk)});
  fs.push_back({disk, {{kZero, 2.0}}, PhiSpec(disk)});
  ProductDomain M(std::move(fs));
  auto rep = theorem21_relation(M, c, ideal, ctx.opt);
  bool ok = close_rel(rep.M, kPi * kPi, ctx.tol6) &&
            close_rel(rep.bound, kPi, ctx.tol6) &&
            close_rel(rep.M_H, kPi, ctx.tol6) &&
            std::abs(rep.gap) <= ctx.tol6 * rep.bound && rep.linear;

  std::vector<FactorData> fp;
  fp.push_back({disk, {{kZero, 2.0}},
                PhiSpec(disk, {{Complex(0.3, 0.0), 0.5}})});
  fp.push_back({disk, {{kZero, 2.0}}, PhiSpec(disk)});
  ProductDomain Mp(std::move(fp));
  auto pert = theorem21_relation(Mp, c, ideal, ctx.opt);
  bool strict = pert.holds && pert.gap > 1e-3 * pert.bound;

  ctx.emit({"bidisc_relation", "relation_thm21",
            {{"M", rep.M}, {"M_H", rep.M_H}, {"bound", rep.bound},
             {"gap", rep.gap}, {"perturbed_gap", pert.gap},
             {"perturbed_bound", pert.bound}},
            ok && strict ? "equality" : "violated"});
  return ok && strict;
}

// 9: Shilov relation in both weight normalizations
bool crit_thm31(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  ShilovScenario sc;
  sc.domains = {disk, disk};
  sc.points = {{kZero}, {kZero}};
  sc.h_values = {{Complex(1.0, 0.0)}, {Complex(1.0, 0.0)}};
  sc.phis = {PhiSpec(disk), PhiSpec(disk)};
  auto p1 = theorem31_relation(sc, Normalization::P1, ctx.opt);
  auto p2 = theorem31_relation(sc, Normalization::PaperP2, ctx.opt);
  bool ok1 = close_rel(p1.M_S, 1.0, ctx.tol6) &&
             close_rel(p1.M_H, kTwoPi, ctx.tol6) &&
             close_rel(p1.bound, 1.0, ctx.tol6) && p1.equality;
  bool ok2 = close_rel(p2.M_S, 0.25, ctx.tol6) &&
             close_rel(p2.bound, 0.5, ctx.tol6) && p2.holds &&
             !p2.equality;
  ctx.emit({"shilov_relation", "relation_thm31",
            {{"p1_M_S", p1.M_S}, {"p1_M_H", p1.M_H}, {"p1_bound", p1.bound},
             {"p2_M_S", p2.M_S}, {"p2_bound", p2.bound}},
            ok1 && ok2 ? "strict" : "violated"});
  return ok1 && ok2;
}

// 10: optimal extension constants, single domain and bidisc
bool crit_extension(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  std::vector<std::vector<double>> lam = {std::vector<double>(64, 1.0)};
  auto r0 = extension_bound(disk, {kZero}, {0}, {Complex(1.0, 0.0)}, lam,
                            ctx.opt);
  auto r1 = extension_bound(disk, {kZero}, {1}, {Complex(1.0, 0.0)}, lam,
                            ctx.opt);
  bool ok1 = close_rel(r0.M_H, 1.0, ctx.tol6) && r0.attains_derived &&
             r0.holds && close_rel(r1.M_H, 0.5, ctx.tol6) &&
             r1.attains_derived && r1.holds;

  std::vector<FactorData> fs;
  fs.push_back({disk, {{kZero, 2.0}}, PhiSpec(disk)});
  fs.push_back({disk, {{kZero, 2.0}}, PhiSpec(disk)});
  ProductDomain M(std::move(fs));
  IdealSpec ideal = IdealSpec::staircase(
      {{{std::vector<int>{0, 0}, Complex(1.0, 0.0)}}});
  auto r2 = cor21_bound(M, ideal, ctx.opt);
  bool ok2 = close_rel(r2.M_H, kPi, ctx.tol6) &&
             close_rel(r2.RHS_printed, 4.0 * kPi, ctx.tol6) &&
             r2.attains_derived && r2.holds;
  ctx.emit({"extension_constants", "extend",
            {{"disk_k0_M_H", r0.M_H}, {"disk_k1_M_H", r1.M_H},
             {"bidisc_M_H", r2.M_H}, {"bidisc_printed", r2.RHS_printed}},
            ok1 && ok2 ? "equality" : "violated"});
  return ok1 && ok2;
}

// 11: structural properties of the least-norm solver
bool crit_properties(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  Complex z1(0.5, 0.0);
  PhiSpec phi(disk);
  PsiSpec psi(disk, {{kZero, 1.0}, {z1, 1.0}});
  JetConstraints jets = {{kZero, 0, {Complex(1.0, 0.0)}},
                         {z1, 0, {Complex(0.5, 0.5)}}};
  auto c = GainFunction::constant1();

  // homogeneity: jets scaled by 3 scale the value by exactly 9
  JetConstraints jets3 = jets;
  for (auto& j : jets3)
    for (auto& a : j.a) a *= 3.0;
  double v1 = bergman_min(phi, psi, c, jets, 0.0, ctx.opt).value;
  double v3 = bergman_min(phi, psi, c, jets3, 0.0, ctx.opt).value;
  double homo = std::abs(v3 - 9.0 * v1) / (9.0 * v1);
  bool homo_ok = homo <= 1e-10;

  // orthogonality of the minimizer against random feasible alternatives
  auto minr = bergman_min(phi, psi, c, jets, 0.0, ctx.opt);
  AreaGrid grid =
      AreaGrid::tensor(disk, ctx.opt.area_nr, ctx.opt.area_ntheta);
  Eigen::MatrixXcd G =
      area_gram(minr.basis, grid, rho_tilde_area(phi, psi, c));
  ConstraintSystem cons = jet_constraints(minr.basis, jets);
  Eigen::MatrixXcd AAh = cons.A * cons.A.adjoint();
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(AAh);
  std::mt19937 rng(11);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst_orth = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXcd r(G.rows());
    for (int i = 0; i < r.size(); ++i) r(i) = Complex(gauss(rng), gauss(rng));
    Eigen::VectorXcd alt =
        minr.coefficients + r - cons.A.adjoint() * ldlt.solve(cons.A * r);
    worst_orth =
        std::max(worst_orth, orthogonality_residual(minr, alt, G, cons));
  }
  bool orth_ok = worst_orth <= 1e-8;

  // value invariance under a permutation of the basis columns
  int B = static_cast<int>(G.rows());
  std::vector<int> perm(B);
  for (int i = 0; i < B; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Eigen::MatrixXcd Gp(B, B);
  Eigen::MatrixXcd Ap(cons.A.rows(), B);
  for (int i = 0; i < B; ++i) {
    Ap.col(i) = cons.A.col(perm[i]);
    for (int j = 0; j < B; ++j) Gp(i, j) = G(perm[i], perm[j]);
  }
  double vp = least_norm_solve(Gp, {Ap, cons.b}, minr.basis).value;
  double v0 = least_norm_solve(G, cons, minr.basis).value;
  double permdiff = std::abs(vp - v0) / v0;
  bool perm_ok = permdiff <= 1e-10;

  // monotone decrease of the minimum in the basis degree
  bool mono_ok = true;
  double prev = 0.0;
  bool have_prev = false;
  AreaFn w = rho_tilde_area(phi, psi, c);
  for (int N : {8, 16, 32, 64}) {
    BasisSpec basis{BasisSpec::Kind::Monomial, N};
    double v = least_norm_solve(area_gram(basis, grid, w),
                                jet_constraints(basis, jets), basis)
                   .value;
    if (have_prev && v > prev * (1.0 + 1e-12)) mono_ok = false;
    prev = v;
    have_prev = true;
  }

  bool ok = homo_ok && orth_ok && perm_ok && mono_ok;
  ctx.emit({"solver_properties", "properties",
            {{"homogeneity_rel", homo}, {"worst_orthogonality", worst_orth},
             {"permutation_rel", permdiff}},
            ok ? "equality" : "violated"});
  return ok;
}

// 12: the coarea identity at high resolution, halving under refinement
bool crit_coarea(BankCtx& ctx) {
  DomainSpec disk = DomainSpec::disk();
  PsiSpec psi(disk, {{Complex(0.3, 0.0), 1.0}});
  AreaFn g = [](const Complex& z) { return std::exp(z.real()); };
  auto fine = coarea_check(g, psi, 0.6, ctx.coarea_res);
  auto half = coarea_check(g, psi, 0.6, ctx.coarea_res / 2);
  double scale = std::max(std::abs(fine.lhs), 1.0);
  bool ok = fine.defect <= 1e-4 * scale &&
            fine.defect <= 0.6 * half.defect + 1e-12;
  ctx.emit({"coarea", "cross_check",
            {{"lhs", fine.lhs}, {"rhs", fine.rhs}, {"defect", fine.defect},
             {"coarse_defect", half.defect}},
            ok ? "equality" : "violated"});
  return ok;
}

}  // namespace

int run_acceptance(std::ostream& out, bool smoke,
                   std::vector<ReportRow>* rows) {
  BankCtx ctx = make_ctx(smoke, rows);
  struct Item {
    const char* name;
    bool (*fn)(BankCtx&);
  };
  const Item items[] = {
      {"disk equality relation", crit_disk_equality},
      {"exponential gain variant", crit_gain_variant},
      {"linearity and concavity of G", crit_linearity},
      {"kernel inequality (disk equality, annulus strict)", crit_saitoh},
      {"extremal attainment on the disk", crit_extremal},
      {"monomial sublevel oracle", crit_monomial_oracle},
      {"product splitting lemmas", crit_splitting},
      {"bidisc relation equality and perturbed gap", crit_thm21},
      {"Shilov relation in both normalizations", crit_thm31},
      {"optimal extension constants", crit_extension},
      {"solver property suite", crit_properties},
      {"coarea cross-check", crit_coarea},
  };
  int failures = 0;
  int n = 1;
  for (const auto& item : items) {
    bool pass = false;
    std::string note;
    try {
      pass = item.fn(ctx);
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    if (!pass) ++failures;
    out << "criterion " << n << ' ' << (pass ? "PASS" : "FAIL") << ": "
        << item.name << note << '\n';
    ++n;
  }
  return failures;
}

}  // namespace minl2
