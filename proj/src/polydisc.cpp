#include "minl2/polydisc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

namespace minl2 {

namespace {

[[noreturn]] void fail(const char* msg) { throw std::runtime_error(msg); }

// continued-fraction rationalization; exact for the small rational p's
// that staircase data uses
std::pair<long long, long long> rationalize(double x) {
  if (!(x > 0.0)) fail("range");
  long long a = 1, b = 0, c = 0, d = 1;  // convergents
  double v = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    long long q = static_cast<long long>(fl);
    long long na = q * a + b, nc = q * c + d;
    if (na > 1000000 || nc > 1000000) break;
    b = a;
    a = na;
    d = c;
    c = nc;
    if (std::abs(x - double(a) / double(c)) < 1e-12 * x) break;
    double frac = v - fl;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  return {a, c};
}

// sign of sum_j (alpha_j+1)/p_j - 1 by exact integer arithmetic
int staircase_compare(const std::vector<double>& p,
                      const std::vector<int>& alpha) {
  const size_t n = p.size();
  if (alpha.size() != n) fail("grid mismatch");
  std::vector<std::pair<long long, long long>> r(n);
  for (size_t j = 0; j < n; ++j) r[j] = rationalize(p[j]);
  __int128 den = 1;
  for (size_t j = 0; j < n; ++j) den *= r[j].first;  // prod a_j
  __int128 num = 0;
  for (size_t j = 0; j < n; ++j) {
    __int128 term = (__int128)(alpha[j] + 1) * r[j].second;
    for (size_t l = 0; l < n; ++l)
      if (l != j) term *= r[l].first;
    num += term;
  }
  if (num > den) return 1;
  if (num < den) return -1;
  return 0;
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<std::vector<int>> factor_schedules(const ProductDomain& M,
                                               int max_degree) {
  // per step, a degree per factor; smaller than the single-domain schedule
  // to keep the tensor basis size in check
  std::vector<std::vector<int>> steps(3);
  for (int s = 0; s < 3; ++s) {
    for (int j = 0; j < M.n(); ++j) {
      int base = M.factor(j).domain.kind == DomainKind::Disk ? 8 : 4;
      steps[s].push_back(std::min(base << s, max_degree));
    }
  }
  return steps;
}

Eigen::MatrixXcd kron_all(const std::vector<Eigen::MatrixXcd>& gs) {
  Eigen::MatrixXcd G = gs[0];
  for (size_t j = 1; j < gs.size(); ++j)
    G = Eigen::kroneckerProduct(G, gs[j]).eval();
  return G;
}

ProductMinResult converge_product(
    const ProductDomain& M,
    const std::function<Eigen::MatrixXcd(const TensorBasis&)>& gram_fn,
    const std::function<ConstraintSystem(const TensorBasis&)>& cons_fn,
    const SolveOptions& opt) {
  ProductMinResult res;
  bool have_prev = false;
  double prev = 0.0;
  for (const auto& degs : factor_schedules(M, opt.max_degree)) {
    TensorBasis basis;
    for (int j = 0; j < M.n(); ++j)
      basis.factors.push_back(BasisSpec::for_domain(M.factor(j).domain,
                                                    degs[j]));
    auto cons = cons_fn(basis);
    MinResult r = least_norm_solve(gram_fn(basis), cons,
                                   BasisSpec{BasisSpec::Kind::Monomial,
                                             basis.size() - 1});
    res.value = r.value;
    res.coefficients = r.coefficients;
    res.basis = basis;
    res.residual = r.residual;
    if (have_prev && std::abs(res.value - prev) <=
                         opt.tol * std::max(std::abs(res.value), 1e-30)) {
      res.converged = true;
      return res;
    }
    prev = res.value;
    have_prev = true;
  }
  return res;
}

AreaFn phi_weight(const PhiSpec& phi) {
  return [phi](const Complex& z) { return std::exp(-phi.value(z)); };
}

// constraint rows for an ideal over the full beta grid
ConstraintSystem ideal_constraints(const ProductDomain& M,
                                   const TensorBasis& basis,
                                   const IdealSpec& ideal) {
  const int n = M.n();
  struct Row {
    std::vector<Complex> z;
    std::vector<int> alpha;
    Complex b;
  };
  std::vector<Row> rows;
  for (int bidx = 0; bidx < M.beta_count(); ++bidx) {
    auto beta = M.beta_unflatten(bidx);
    auto z = M.beta_point(beta);
    if (ideal.kind == IdealSpec::Kind::MaximalIdeal) {
      if (static_cast<int>(ideal.values.size()) != M.beta_count())
        fail("grid mismatch");
      rows.push_back({z, std::vector<int>(n, 0), ideal.values[bidx]});
    } else {
      if (static_cast<int>(ideal.coeffs.size()) != M.beta_count())
        fail("grid mismatch");
      auto sets = ideal_staircase(M.beta_p(beta));
      for (const auto& alpha : sets.complement) {
        Complex d(0.0, 0.0);
        for (const auto& co : ideal.coeffs[bidx])
          if (co.alpha == alpha) d = co.d;
        long long fct = 1;
        for (int j = 0; j < n; ++j) fct *= factorial(alpha[j]);
        rows.push_back({z, alpha, d * double(fct)});
      }
    }
  }
  ConstraintSystem cs;
  cs.A.resize(static_cast<int>(rows.size()), basis.size());
  cs.b.resize(static_cast<int>(rows.size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int i = 0; i < basis.size(); ++i)
      cs.A(static_cast<int>(r), i) =
          basis.derivative(i, rows[r].z, rows[r].alpha);
    cs.b(static_cast<int>(r)) = rows[r].b;
  }
  return cs;
}

// Kronecker Gram of the factors over the per-factor regions {2 psi_j < -s}
Eigen::MatrixXcd sublevel_kron_gram(const ProductDomain& M,
                                    const TensorBasis& basis, double s,
                                    int n_r, int n_theta) {
  std::vector<Eigen::MatrixXcd> gs;
  for (int j = 0; j < M.n(); ++j) {
    AreaGrid grid =
        s > 0.0 ? AreaGrid::sublevel(M.psi_factor(j), s, n_r, n_theta)
                : AreaGrid::tensor(M.factor(j).domain, n_r, n_theta);
    gs.push_back(area_gram(basis.factors[j], grid,
                           phi_weight(M.factor(j).phi)));
  }
  return kron_all(gs);
}

bool radial_single_point(const ProductDomain& M) {
  for (int j = 0; j < M.n(); ++j) {
    const FactorData& f = M.factor(j);
    if (f.domain.kind != DomainKind::Disk) return false;
    if (f.poles.size() != 1 || std::abs(f.poles[0].z) > 1e-14) return false;
    if (f.phi.harmonic_part() || !f.phi.zero_roots().empty()) return false;
    for (const auto& gp : f.phi.green_part())
      if (std::abs(gp.z) > 1e-14) return false;
  }
  return true;
}

// exact diagonal path: for radial data the sublevel mass of a monomial
// decays as e^{-kappa s}, so each diagonal entry is a 1-D gain integral
ProductMinResult bergman_radial(const ProductDomain& M, const GainFunction& c,
                                const IdealSpec& ideal, double t) {
  const int n = M.n();
  if (ideal.kind != IdealSpec::Kind::Staircase || M.beta_count() != 1)
    fail("splitting requires product data");
  std::vector<double> p = M.beta_p(M.beta_unflatten(0));
  std::vector<double> q(n, 0.0);
  for (int j = 0; j < n; ++j)
    q[j] = M.factor(j).phi.green_coefficient_at(Complex(0.0, 0.0));

  auto sets = ideal_staircase(p);
  int max_deg = 0;
  for (const auto& alpha : sets.complement)
    for (int j = 0; j < n; ++j) max_deg = std::max(max_deg, alpha[j]);

  ProductMinResult res;
  for (int j = 0; j < n; ++j)
    res.basis.factors.push_back(
        BasisSpec{BasisSpec::Kind::Monomial, max_deg});
  res.coefficients = Eigen::VectorXcd::Zero(res.basis.size());
  for (const auto& alpha : sets.complement) {
    Complex d(0.0, 0.0);
    for (const auto& co : ideal.coeffs[0])
      if (co.alpha == alpha) d = co.d;
    if (std::abs(d) == 0.0) continue;
    double kappa = 0.0, a0 = 1.0;
    for (int j = 0; j < n; ++j) {
      double a = alpha[j] - q[j];
      if (a <= -1.0 + 1e-12) fail("infeasible or redundant constraints");
      kappa += (a + 1.0) / p[j];
      a0 *= kPi / (a + 1.0);
    }
    res.value += std::norm(d) * a0 * kappa * c.weighted_tail(kappa, t);
    int flat = 0;
    for (int j = 0; j < n; ++j) flat = flat * (max_deg + 1) + alpha[j];
    res.coefficients(flat) = d;
  }
  res.converged = true;
  return res;
}

// Gram sum for the face norm: face j carries the boundary weight
// (d psi_j / d v)^{-1} e^{-phi_j}, the other factors their area weights
Eigen::MatrixXcd hardy_face_gram(const ProductDomain& M,
                                 const TensorBasis& basis,
                                 const SolveOptions& opt) {
  const int n = M.n();
  std::vector<Eigen::MatrixXcd> area(n), bdry(n);
  for (int j = 0; j < n; ++j) {
    AreaGrid ag =
        AreaGrid::tensor(M.factor(j).domain, opt.area_nr, opt.area_ntheta);
    area[j] = area_gram(basis.factors[j], ag, phi_weight(M.factor(j).phi));
    BoundaryGrid bg = BoundaryGrid::make(M.factor(j).domain, opt.boundary_n);
    bdry[j] = boundary_gram(basis.factors[j], bg,
                            rho_boundary(M.factor(j).phi, M.psi_factor(j)));
  }
  Eigen::MatrixXcd G =
      Eigen::MatrixXcd::Zero(basis.size(), basis.size());
  for (int j = 0; j < n; ++j) {
    std::vector<Eigen::MatrixXcd> gs;
    for (int l = 0; l < n; ++l) gs.push_back(l == j ? bdry[l] : area[l]);
    G += kron_all(gs);
  }
  return G;
}

double relative_defect(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

// 1-D least-norm solve over a schedule, for the split-lemma factors
double solve_1d(const DomainSpec& d,
                const std::function<Eigen::MatrixXcd(const BasisSpec&)>& gf,
                const JetConstraints& jets, const SolveOptions& opt) {
  double prev = 0.0;
  bool have_prev = false;
  std::vector<int> degs = d.kind == DomainKind::Disk
                              ? std::vector<int>{16, 32, 64}
                              : std::vector<int>{8, 16, 32};
  double value = 0.0;
  for (int N : degs) {
    BasisSpec basis = BasisSpec::for_domain(d, std::min(N, opt.max_degree));
    value = least_norm_solve(gf(basis), jet_constraints(basis, jets), basis)
                .value;
    if (have_prev &&
        std::abs(value - prev) <= opt.tol * std::max(std::abs(value), 1e-30))
      return value;
    prev = value;
    have_prev = true;
  }
  return value;
}

}  // namespace

ProductDomain::ProductDomain(std::vector<FactorData> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) fail("range");
  for (const auto& f : factors_) {
    if (f.poles.empty()) fail("range");
    psis_.emplace_back(f.domain, f.poles);
  }
}

double ProductDomain::psi(const std::vector<Complex>& z) const {
  if (static_cast<int>(z.size()) != n()) fail("grid mismatch");
  double m = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < n(); ++j) m = std::max(m, psis_[j].value(z[j]));
  return m;
}

double ProductDomain::phi(const std::vector<Complex>& z) const {
  if (static_cast<int>(z.size()) != n()) fail("grid mismatch");
  double s = 0.0;
  for (int j = 0; j < n(); ++j) s += factors_[j].phi.value(z[j]);
  return s;
}

int ProductDomain::beta_count() const {
  int c = 1;
  for (const auto& f : factors_) c *= static_cast<int>(f.poles.size());
  return c;
}

std::vector<int> ProductDomain::beta_unflatten(int b) const {
  std::vector<int> beta(n());
  for (int j = n() - 1; j >= 0; --j) {
    int m = static_cast<int>(factors_[j].poles.size());
    beta[j] = b % m;
    b /= m;
  }
  return beta;
}

std::vector<Complex> ProductDomain::beta_point(
    const std::vector<int>& beta) const {
  std::vector<Complex> z(n());
  for (int j = 0; j < n(); ++j) z[j] = factors_[j].poles[beta[j]].z;
  return z;
}

std::vector<double> ProductDomain::beta_p(const std::vector<int>& beta) const {
  std::vector<double> p(n());
  for (int j = 0; j < n(); ++j) p[j] = factors_[j].poles[beta[j]].p;
  return p;
}

int TensorBasis::size() const {
  int s = 1;
  for (const auto& f : factors) s *= f.size();
  return s;
}

std::vector<int> TensorBasis::unflatten(int i) const {
  std::vector<int> idx(factors.size());
  for (int j = static_cast<int>(factors.size()) - 1; j >= 0; --j) {
    idx[j] = i % factors[j].size();
    i /= factors[j].size();
  }
  return idx;
}

Complex TensorBasis::derivative(int i, const std::vector<Complex>& z,
                                const std::vector<int>& order) const {
  auto idx = unflatten(i);
  Complex v(1.0, 0.0);
  for (size_t j = 0; j < factors.size(); ++j)
    v *= factors[j].derivative(idx[j], z[j], order[j]);
  return v;
}

Complex TensorBasis::eval(int i, const std::vector<Complex>& z) const {
  return derivative(i, z, std::vector<int>(factors.size(), 0));
}

Complex ProductMinResult::evaluate(const std::vector<Complex>& z) const {
  Complex s(0.0, 0.0);
  for (int i = 0; i < coefficients.size(); ++i)
    s += coefficients(i) * basis.eval(i, z);
  return s;
}

StaircaseSets ideal_staircase(const std::vector<double>& p) {
  const size_t n = p.size();
  StaircaseSets sets;
  // the complement requires (alpha_j+1)/p_j <= 1 termwise
  std::vector<int> cap(n);
  for (size_t j = 0; j < n; ++j)
    cap[j] = std::max(0, static_cast<int>(std::floor(p[j] + 1e-12)) - 1);
  std::vector<int> alpha(n, 0);
  for (;;) {
    int cmp = staircase_compare(p, alpha);
    if (cmp <= 0) sets.complement.push_back(alpha);
    if (cmp == 0) sets.E.push_back(alpha);
    size_t j = n;
    while (j > 0) {
      --j;
      if (alpha[j] < cap[j]) {
        ++alpha[j];
        std::fill(alpha.begin() + j + 1, alpha.end(), 0);
        break;
      }
      if (j == 0) return sets;
    }
    if (n == 0) return sets;
  }
}

bool staircase_contains(const std::vector<double>& p,
                        const std::vector<int>& alpha) {
  return staircase_compare(p, alpha) > 0;
}

IdealSpec IdealSpec::maximal(std::vector<Complex> values) {
  IdealSpec s;
  s.kind = Kind::MaximalIdeal;
  s.values = std::move(values);
  return s;
}

IdealSpec IdealSpec::staircase(std::vector<std::vector<Coeff>> coeffs) {
  IdealSpec s;
  s.kind = Kind::Staircase;
  s.coeffs = std::move(coeffs);
  return s;
}

ProductMinResult bergman_min_product(const ProductDomain& M,
                                     const GainFunction& c,
                                     const IdealSpec& ideal, double t,
                                     const SolveOptions& opt) {
  c.validate();
  if (t < 0.0) fail("range");
  auto cons_fn = [&](const TensorBasis& b) {
    return ideal_constraints(M, b, ideal);
  };
  if (c.kind() == GainFunction::Kind::Constant1) {
    auto gram_fn = [&](const TensorBasis& b) {
      return sublevel_kron_gram(M, b, t, opt.area_nr, opt.area_ntheta);
    };
    return converge_product(M, gram_fn, cons_fn, opt);
  }
  if (radial_single_point(M) &&
      ideal.kind == IdealSpec::Kind::Staircase && M.beta_count() == 1)
    return bergman_radial(M, c, ideal, t);

  // level-sliced fallback: the weight c(-2 psi) is constant on shells
  // between product sublevel regions, so slice in s and use exact
  // Kronecker Grams for each shell
  const int n_levels = 120;
  const double span = 25.0;
  const int nr = std::max(opt.area_nr / 2, 16);
  const int nth = std::max(opt.area_ntheta / 2, 64);
  auto gram_fn = [&](const TensorBasis& b) {
    double ds = span / n_levels;
    Eigen::MatrixXcd prev = sublevel_kron_gram(M, b, t, nr, nth);
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(b.size(), b.size());
    for (int k = 0; k < n_levels; ++k) {
      double s1 = t + (k + 1) * ds;
      Eigen::MatrixXcd next = sublevel_kron_gram(M, b, s1, nr, nth);
      G += c.value(t + (k + 0.5) * ds) * (prev - next);
      prev = std::move(next);
    }
    G += c.value(t + span) * prev;
    return G;
  };
  return converge_product(M, gram_fn, cons_fn, opt);
}

ProductMinResult hardy_dM_min(const ProductDomain& M, const IdealSpec& ideal,
                              const SolveOptions& opt) {
  auto gram_fn = [&](const TensorBasis& b) {
    return hardy_face_gram(M, b, opt);
  };
  auto cons_fn = [&](const TensorBasis& b) {
    return ideal_constraints(M, b, ideal);
  };
  return converge_product(M, gram_fn, cons_fn, opt);
}

ProductMinResult shilov_min(const ProductDomain& M,
                            const std::vector<BoundaryFn>& lambda,
                            const std::vector<Complex>& values,
                            const SolveOptions& opt) {
  if (static_cast<int>(lambda.size()) != M.n()) fail("grid mismatch");
  auto gram_fn = [&](const TensorBasis& b) {
    std::vector<Eigen::MatrixXcd> gs;
    for (int j = 0; j < M.n(); ++j) {
      BoundaryGrid bg = BoundaryGrid::make(M.factor(j).domain,
                                           opt.boundary_n);
      gs.push_back(boundary_gram(b.factors[j], bg, lambda[j]));
    }
    return kron_all(gs);
  };
  auto cons_fn = [&](const TensorBasis& b) {
    return ideal_constraints(M, b, IdealSpec::maximal(values));
  };
  return converge_product(M, gram_fn, cons_fn, opt);
}

SplitReport product_split_check(const ProductDomain& M,
                                const SplitScenario& sc,
                                const SolveOptions& opt) {
  if (M.n() != 2 || sc.points.size() != 2) fail("grid mismatch");
  const int m0 = static_cast<int>(sc.points[0].size());
  const int m1 = static_cast<int>(sc.points[1].size());
  if (sc.h.rows() != m0 || sc.h.cols() != m1) fail("grid mismatch");

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      sc.h, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.singularValues().size() > 1 &&
      svd.singularValues()(1) > 1e-10 * svd.singularValues()(0))
    fail("splitting requires product data");
  Eigen::VectorXcd h0 = svd.singularValues()(0) * svd.matrixU().col(0);
  Eigen::VectorXcd h1 = svd.matrixV().col(0).conjugate();

  // constraint data: all product points with the (separable) values
  auto product_cons = [&](const TensorBasis& b) {
    ConstraintSystem cs;
    cs.A.resize(m0 * m1, b.size());
    cs.b.resize(m0 * m1);
    int r = 0;
    for (int i0 = 0; i0 < m0; ++i0)
      for (int i1 = 0; i1 < m1; ++i1) {
        std::vector<Complex> z = {sc.points[0][i0], sc.points[1][i1]};
        for (int i = 0; i < b.size(); ++i) cs.A(r, i) = b.eval(i, z);
        cs.b(r) = sc.h(i0, i1);
        ++r;
      }
    return cs;
  };

  JetConstraints jets0, jets1;
  for (int i = 0; i < m0; ++i)
    jets0.push_back({sc.points[0][i], 0, {h0(i)}});
  for (int i = 0; i < m1; ++i)
    jets1.push_back({sc.points[1][i], 0, {h1(i)}});

  BoundaryFn one_b = [](int, double) { return 1.0; };
  AreaFn one_a = [](const Complex&) { return 1.0; };
  const DomainSpec d0 = M.factor(0).domain, d1 = M.factor(1).domain;

  auto bdry_g = [&](const DomainSpec& d, const BasisSpec& b) {
    return boundary_gram(b, BoundaryGrid::make(d, opt.boundary_n), one_b);
  };
  auto area_g = [&](const DomainSpec& d, const BasisSpec& b) {
    return area_gram(b, AreaGrid::tensor(d, opt.area_nr, opt.area_ntheta),
                     one_a);
  };

  SplitReport rep;
  // Shilov norm against the product of the 1-D boundary minima
  {
    std::vector<BoundaryFn> lam = {one_b, one_b};
    std::vector<Complex> values(m0 * m1);
    for (int i0 = 0; i0 < m0; ++i0)
      for (int i1 = 0; i1 < m1; ++i1)
        values[i0 * m1 + i1] = sc.h(i0, i1);
    double lhs = shilov_min(M, lam, values, opt).value;
    double rhs = hardy_min(d0, one_b, jets0, opt).value *
                 hardy_min(d1, one_b, jets1, opt).value;
    rep.shilov_defect = relative_defect(lhs, rhs);
  }
  // single-face norm (boundary x area) against 1-D boundary x 1-D area
  {
    auto gram_fn = [&](const TensorBasis& b) {
      return Eigen::kroneckerProduct(bdry_g(d0, b.factors[0]),
                                     area_g(d1, b.factors[1]))
          .eval();
    };
    double lhs = converge_product(M, gram_fn, product_cons, opt).value;
    double rhs =
        hardy_min(d0, one_b, jets0, opt).value *
        solve_1d(d1, [&](const BasisSpec& b) { return area_g(d1, b); },
                 jets1, opt);
    rep.face_defect = relative_defect(lhs, rhs);
  }
  // area norm against the product of the 1-D area minima
  {
    auto gram_fn = [&](const TensorBasis& b) {
      return Eigen::kroneckerProduct(area_g(d0, b.factors[0]),
                                     area_g(d1, b.factors[1]))
          .eval();
    };
    double lhs = converge_product(M, gram_fn, product_cons, opt).value;
    double rhs =
        solve_1d(d0, [&](const BasisSpec& b) { return area_g(d0, b); },
                 jets0, opt) *
        solve_1d(d1, [&](const BasisSpec& b) { return area_g(d1, b); },
                 jets1, opt);
    rep.bergman_defect = relative_defect(lhs, rhs);
  }
  return rep;
}

Theorem21Report theorem21_relation(const ProductDomain& M,
                                   const GainFunction& c,
                                   const IdealSpec& ideal,
                                   const SolveOptions& opt) {
  Theorem21Report rep;
  rep.integral_c = c.validate();
  rep.M = bergman_min_product(M, c, ideal, 0.0, opt).value;
  rep.M_H = hardy_dM_min(M, ideal, opt).value;
  rep.bound = rep.M / (kPi * rep.integral_c);
  rep.gap = rep.bound - rep.M_H;
  rep.holds = rep.gap >= -1e-6 * rep.bound;
  rep.equality = std::abs(rep.gap) <= 1e-6 * rep.bound;

  GCurve curve;
  curve.h0 = rep.integral_c;
  for (double t : {0.0, 0.4, 0.8, 1.2, 1.6}) {
    GCurvePoint p;
    p.t = t;
    p.r = c.tail(t);
    p.G = t == 0.0 ? rep.M : bergman_min_product(M, c, ideal, t, opt).value;
    curve.points.push_back(std::move(p));
  }
  rep.linear = concavity_report(curve, 1e-4).linear;
  return rep;
}

Theorem31Report theorem31_relation(const ShilovScenario& sc,
                                   Normalization norm,
                                   const SolveOptions& opt) {
  const int n = static_cast<int>(sc.domains.size());
  if (static_cast<int>(sc.points.size()) != n ||
      static_cast<int>(sc.h_values.size()) != n ||
      static_cast<int>(sc.phis.size()) != n)
    fail("grid mismatch");
  const double coeff = norm == Normalization::PaperP2 ? 2.0 : 1.0;

  std::vector<FactorData> factors;
  for (int j = 0; j < n; ++j) {
    std::vector<PolePart> poles;
    for (const auto& z : sc.points[j]) poles.push_back({z, coeff});
    factors.push_back({sc.domains[j], poles, sc.phis[j]});
  }
  ProductDomain M(std::move(factors));

  std::vector<Complex> values(M.beta_count());
  for (int b = 0; b < M.beta_count(); ++b) {
    auto beta = M.beta_unflatten(b);
    Complex v(1.0, 0.0);
    for (int j = 0; j < n; ++j) v *= sc.h_values[j][beta[j]];
    values[b] = v;
  }

  Theorem31Report rep;
  rep.M_H = hardy_dM_min(M, IdealSpec::maximal(values), opt).value;
  std::vector<BoundaryFn> lambda;
  for (int j = 0; j < n; ++j)
    lambda.push_back(rho_boundary(M.factor(j).phi, M.psi_factor(j)));
  rep.M_S = shilov_min(M, lambda, values, opt).value;
  rep.bound = rep.M_H / (n * std::pow(kPi, n - 1));
  rep.gap = rep.bound - rep.M_S;
  rep.holds = rep.gap >= -1e-6 * rep.bound;
  rep.equality = std::abs(rep.gap) <= 1e-6 * rep.bound;

  rep.statements_hold = true;
  for (int j = 0; j < n; ++j) {
    FactorStatement st;
    const PhiSpec& phi = sc.phis[j];
    st.harmonic_phi =
        phi.green_part().empty() && phi.zero_roots().empty();
    const DomainSpec& d = sc.domains[j];
    if (d.kind == DomainKind::Disk) {
      st.characters_match = true;
    } else {
      double raw = 0.0;
      for (const auto& z : sc.points[j])
        raw += kTwoPi * std::log(std::abs(z)) / std::log(d.q);
      if (phi.harmonic_part()) raw += phi.harmonic_part()->inner_period();
      raw = std::fmod(raw, kTwoPi);
      if (raw > kPi) raw -= kTwoPi;
      if (raw <= -kPi) raw += kTwoPi;
      st.character_defect = std::abs(raw);
      st.characters_match = st.character_defect <= 1e-6;
    }
    if (d.kind == DomainKind::Disk && st.harmonic_phi) {
      st.ratio_checked = true;
      st.ratio_constant = true;
      std::vector<Complex> ratios;
      for (size_t k = 0; k < sc.points[j].size(); ++k) {
        Complex zk = sc.points[j][k];
        Complex fu(1.0, 0.0);
        if (phi.harmonic_part())
          fu = std::exp(phi.harmonic_part()->completion(zk));
        Complex limit = fu / (1.0 - std::norm(zk));
        for (size_t k2 = 0; k2 < sc.points[j].size(); ++k2)
          if (k2 != k) limit *= BlaschkeFactor(sc.points[j][k2]).value(zk);
        Complex h = sc.h_values[j][k];
        if (std::abs(h) < 1e-300) {
          st.ratio_constant = false;
          break;
        }
        ratios.push_back(limit / h);
      }
      if (st.ratio_constant && !ratios.empty()) {
        st.c_j = ratios[0];
        for (const auto& r : ratios)
          st.spread = std::max(st.spread,
                               std::abs(r - st.c_j) / std::abs(st.c_j));
        if (st.spread > 1e-6) st.ratio_constant = false;
      }
    }
    rep.statements_hold = rep.statements_hold && st.harmonic_phi &&
                          st.characters_match &&
                          (!st.ratio_checked || st.ratio_constant);
    rep.statements.push_back(std::move(st));
  }
  return rep;
}

ProductExtensionReport cor21_bound(const ProductDomain& M,
                                   const IdealSpec& ideal,
                                   const SolveOptions& opt) {
  if (ideal.kind != IdealSpec::Kind::Staircase) fail("grid mismatch");
  const int n = M.n();

  ProductExtensionReport rep;
  for (int j = 0; j < n; ++j) {
    const FactorData& f = M.factor(j);
    std::vector<double> row;
    for (size_t k = 0; k < f.poles.size(); ++k) {
      double cap = GreenPole(f.domain, f.poles[k].z).capacity();
      double cross = 0.0;
      for (size_t k1 = 0; k1 < f.poles.size(); ++k1)
        if (k1 != k)
          cross += f.poles[k1].p *
                   green_value(f.domain, f.poles[k].z, f.poles[k1].z);
      row.push_back(cap * std::exp(cross / f.poles[k].p));
    }
    rep.c_jk.push_back(std::move(row));
  }

  const double constant = std::pow(2.0, n) * std::pow(kPi, n - 1);
  for (int b = 0; b < M.beta_count(); ++b) {
    auto beta = M.beta_unflatten(b);
    auto p = M.beta_p(beta);
    auto z = M.beta_point(beta);
    double ephi = std::exp(-M.phi(z));
    for (const auto& co : ideal.coeffs[b]) {
      if (staircase_compare(p, co.alpha) != 0) continue;  // only E_beta
      double denom = 1.0;
      for (int j = 0; j < n; ++j) {
        denom *= co.alpha[j] + 1.0;
        denom *= std::pow(rep.c_jk[j][beta[j]], 2.0 * co.alpha[j] + 2.0);
      }
      rep.RHS_printed += std::norm(co.d) * constant * ephi / denom;
    }
  }
  rep.RHS_derived = rep.RHS_printed / std::pow(2.0, n);

  rep.M_H = hardy_dM_min(M, ideal, opt).value;
  rep.holds = rep.M_H <= rep.RHS_printed * (1.0 + 1e-6);
  rep.attains_derived =
      std::abs(rep.M_H - rep.RHS_derived) <= 1e-6 * rep.RHS_derived;
  return rep;
}

ProductUniformReport uniform_jet_extension_product(const ProductDomain& M,
                                                   int k, int trials,
                                                   unsigned seed,
                                                   const SolveOptions& opt) {
  if (trials < 10) fail("range");
  const int n = M.n();
  std::vector<std::vector<int>> L;
  {
    std::vector<int> alpha(n, 0);
    for (;;) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += alpha[j];
      if (s <= k) L.push_back(alpha);
      int j = n;
      bool done = true;
      while (j > 0) {
        --j;
        if (alpha[j] < k) {
          ++alpha[j];
          std::fill(alpha.begin() + j + 1, alpha.end(), 0);
          done = false;
          break;
        }
      }
      if (done) break;
    }
  }

  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto gram_fn = [&](const TensorBasis& b) {
    return hardy_face_gram(M, b, opt);
  };

  ProductUniformReport rep;
  rep.trials = trials;
  for (int tr = 0; tr < trials; ++tr) {
    // targets for the raw derivatives d^alpha f(z_beta)
    std::vector<Complex> a(M.beta_count() * L.size());
    double norm2 = 0.0;
    for (auto& v : a) {
      v = Complex(gauss(rng), gauss(rng));
      norm2 += std::norm(v);
    }
    auto cons_fn = [&](const TensorBasis& basis) {
      ConstraintSystem cs;
      cs.A.resize(static_cast<int>(a.size()), basis.size());
      cs.b.resize(static_cast<int>(a.size()));
      int r = 0;
      for (int bidx = 0; bidx < M.beta_count(); ++bidx) {
        auto z = M.beta_point(M.beta_unflatten(bidx));
        for (const auto& alpha : L) {
          for (int i = 0; i < basis.size(); ++i)
            cs.A(r, i) = basis.derivative(i, z, alpha);
          cs.b(r) = a[r];
          ++r;
        }
      }
      return cs;
    };
    double v = converge_product(M, gram_fn, cons_fn, opt).value;
    if (!std::isfinite(v)) fail("weight singularity on grid");
    rep.C_hat = std::max(rep.C_hat, v / norm2);
    if (tr == 0) {
      for (auto& x : a) x *= 2.0;
      double v2 = converge_product(M, gram_fn, cons_fn, opt).value;
      rep.worst_homogeneity =
          std::abs(v2 - 4.0 * v) / std::max(v, 1e-300);
    }
  }
  return rep;
}

}  // namespace minl2
