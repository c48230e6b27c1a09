#include "minl2/minimize.hpp"

#include <cmath>

namespace minl2 {

namespace {

[[noreturn]] void fail(const char* msg) { throw std::runtime_error(msg); }

Eigen::MatrixXcd weighted_vandermonde(const BasisSpec& basis,
                                      const std::vector<Complex>& nodes,
                                      const std::vector<double>& wr) {
  const int B = basis.size();
  const int M = static_cast<int>(nodes.size());
  Eigen::MatrixXcd P(M, B);
  for (int m = 0; m < M; ++m) {
    if (!(wr[m] >= 0.0) || !std::isfinite(wr[m]))
      fail("weight singularity on grid");
    double s = std::sqrt(wr[m]);
    const Complex& z = nodes[m];
    if (basis.kind == BasisSpec::Kind::Monomial) {
      Complex zp = 1.0;
      for (int i = 0; i < B; ++i) {
        P(m, i) = s * zp;
        zp *= z;
      }
    } else {
      const int N = basis.degree;
      Complex zi = 1.0 / z;
      Complex zp = 1.0;
      P(m, N) = s;
      for (int n = 1; n <= N; ++n) {
        zp *= z;
        P(m, N + n) = s * zp;
      }
      zp = 1.0;
      for (int n = 1; n <= N; ++n) {
        zp *= zi;
        P(m, N - n) = s * zp;
      }
    }
  }
  return P;
}

std::vector<int> degree_schedule(const DomainSpec& d, int max_degree) {
  std::vector<int> all = d.kind == DomainKind::Disk
                             ? std::vector<int>{16, 32, 64, 128}
                             : std::vector<int>{8, 16, 32, 64};
  std::vector<int> out;
  for (int n : all)
    if (n <= max_degree) out.push_back(n);
  if (out.empty()) out.push_back(max_degree);
  return out;
}

MinResult converge(
    const DomainSpec& d,
    const std::function<Eigen::MatrixXcd(const BasisSpec&)>& gram_fn,
    const JetConstraints& jets, const SolveOptions& opt) {
  MinResult res;
  bool have_prev = false;
  double prev = 0.0;
  for (int N : degree_schedule(d, opt.max_degree)) {
    BasisSpec basis = BasisSpec::for_domain(d, N);
    auto cons = jet_constraints(basis, jets);
    res = least_norm_solve(gram_fn(basis), cons, basis);
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

}  // namespace

BasisSpec BasisSpec::for_domain(const DomainSpec& d, int N) {
  return {d.kind == DomainKind::Disk ? Kind::Monomial : Kind::Laurent, N};
}

Complex BasisSpec::eval(int i, const Complex& z) const {
  return derivative(i, z, 0);
}

Complex BasisSpec::derivative(int i, const Complex& z, int order) const {
  int n = exponent(i);
  double coeff = 1.0;
  for (int l = 0; l < order; ++l) coeff *= n - l;
  if (coeff == 0.0) return {0.0, 0.0};
  int m = n - order;
  Complex zp(1.0, 0.0);
  if (m >= 0) {
    for (int k = 0; k < m; ++k) zp *= z;
  } else {
    Complex zi = 1.0 / z;
    for (int k = 0; k < -m; ++k) zp *= zi;
  }
  return coeff * zp;
}

Complex MinResult::evaluate(const Complex& z) const {
  Complex s(0.0, 0.0);
  for (int i = 0; i < coefficients.size(); ++i)
    s += coefficients(i) * basis.eval(i, z);
  return s;
}

Eigen::MatrixXcd area_gram(const BasisSpec& basis, const AreaGrid& grid,
                           const AreaFn& weight) {
  std::vector<double> wr(grid.nodes.size());
  for (size_t m = 0; m < grid.nodes.size(); ++m)
    wr[m] = grid.weights[m] * weight(grid.nodes[m]);
  Eigen::MatrixXcd P = weighted_vandermonde(basis, grid.nodes, wr);
  return P.adjoint() * P;
}

Eigen::MatrixXcd boundary_gram(const BasisSpec& basis,
                               const BoundaryGrid& grid,
                               const BoundaryFn& weight) {
  std::vector<Complex> nodes;
  std::vector<double> wr;
  for (int c = 0; c < grid.domain.components(); ++c) {
    double R = grid.domain.component_radius(c);
    for (int i = 0; i < grid.n; ++i) {
      double th = grid.theta(i);
      nodes.push_back(std::polar(R, th));
      // |dz| = R dtheta, with the 1/(2 pi) normalization
      wr.push_back(weight(c, th) * R / grid.n);
    }
  }
  Eigen::MatrixXcd P = weighted_vandermonde(basis, nodes, wr);
  return P.adjoint() * P;
}

ConstraintSystem jet_constraints(const BasisSpec& basis,
                                 const JetConstraints& jets) {
  int rows = 0;
  for (const auto& j : jets) rows += j.k + 1;
  ConstraintSystem cs;
  cs.A.resize(rows, basis.size());
  cs.b.resize(rows);
  int r = 0;
  for (const auto& j : jets) {
    if (static_cast<int>(j.a.size()) != j.k + 1) fail("grid mismatch");
    double lfact = 1.0;
    for (int l = 0; l <= j.k; ++l) {
      if (l > 0) lfact *= l;
      for (int i = 0; i < basis.size(); ++i)
        cs.A(r, i) = basis.derivative(i, j.z, l);
      cs.b(r) = lfact * j.a[l];
      ++r;
    }
  }
  return cs;
}

MinResult least_norm_solve(const Eigen::MatrixXcd& gram,
                           const ConstraintSystem& cons,
                           const BasisSpec& basis) {
  const int B = static_cast<int>(gram.rows());
  MinResult res;
  res.basis = basis;
  if (!gram.allFinite() || !cons.A.allFinite())
    fail("weight singularity on grid");
  if (cons.A.rows() == 0) {
    res.coefficients = Eigen::VectorXcd::Zero(B);
    return res;
  }
  // column equilibration so the degeneracy test sees linear dependence,
  // not just scale spread
  Eigen::VectorXd scale(B);
  for (int i = 0; i < B; ++i) {
    double d = gram(i, i).real();
    if (!(d > 0.0)) fail("basis degenerate at this resolution");
    scale(i) = 1.0 / std::sqrt(d);
  }
  Eigen::MatrixXcd G = scale.asDiagonal() * gram * scale.asDiagonal();
  Eigen::MatrixXcd A = cons.A * scale.asDiagonal();

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(A);
  if (qr.rank() < A.rows()) fail("infeasible or redundant constraints");

  Eigen::LDLT<Eigen::MatrixXcd> ldlt(G);
  Eigen::VectorXd D = ldlt.vectorD().real();
  if (D.minCoeff() <= 1e-13 * D.maxCoeff())
    fail("basis degenerate at this resolution");

  Eigen::MatrixXcd GiAs = ldlt.solve(A.adjoint());
  Eigen::MatrixXcd S = A * GiAs;
  Eigen::LDLT<Eigen::MatrixXcd> sldlt(S);
  Eigen::VectorXcd y = sldlt.solve(cons.b);
  res.value = (cons.b.adjoint() * y)(0).real();
  Eigen::VectorXcd cz = GiAs * y;
  res.coefficients = scale.asDiagonal() * cz;
  res.residual = (cons.A * res.coefficients - cons.b).norm();
  return res;
}

MinResult bergman_min(const PhiSpec& phi, const PsiSpec& psi,
                      const GainFunction& c, const JetConstraints& jets,
                      double t, const SolveOptions& opt) {
  c.validate();
  lelong_check(phi, psi, jets);
  AreaGrid grid = t > 0.0
                      ? AreaGrid::sublevel(psi, t, opt.area_nr,
                                           opt.area_ntheta)
                      : AreaGrid::tensor(psi.domain(), opt.area_nr,
                                         opt.area_ntheta);
  AreaFn w = rho_tilde_area(phi, psi, c);
  auto gram_fn = [&](const BasisSpec& b) { return area_gram(b, grid, w); };
  return converge(psi.domain(), gram_fn, jets, opt);
}

MinResult hardy_min(const DomainSpec& d, const BoundaryFn& rho,
                    const JetConstraints& jets, const SolveOptions& opt) {
  BoundaryGrid grid = BoundaryGrid::make(d, opt.boundary_n);
  auto gram_fn = [&](const BasisSpec& b) {
    return boundary_gram(b, grid, rho);
  };
  return converge(d, gram_fn, jets, opt);
}

double kernel_bergman(const DomainSpec& d, const Complex& z,
                      const SolveOptions& opt) {
  d.require_interior(z);
  AreaGrid grid = AreaGrid::tensor(d, opt.area_nr, opt.area_ntheta);
  AreaFn one = [](const Complex&) { return 1.0; };
  JetConstraints jets = {{z, 0, {Complex(1.0, 0.0)}}};
  auto gram_fn = [&](const BasisSpec& b) { return area_gram(b, grid, one); };
  return 1.0 / converge(d, gram_fn, jets, opt).value;
}

double kernel_conjugate_hardy(const DomainSpec& d, const Complex& z,
                              const SolveOptions& opt) {
  d.require_interior(z);
  GreenPole gp(d, z);
  BoundaryFn rho = [gp](int c, double th) {
    return 1.0 / gp.normal_derivative(c, th);
  };
  JetConstraints jets = {{z, 0, {Complex(1.0, 0.0)}}};
  return 1.0 / hardy_min(d, rho, jets, opt).value;
}

double orthogonality_residual(const MinResult& min,
                              const Eigen::VectorXcd& alternative,
                              const Eigen::MatrixXcd& gram,
                              const ConstraintSystem& cons) {
  if ((cons.A * alternative - cons.b).norm() > 1e-8 * (1.0 + cons.b.norm()))
    fail("constraint residual too large");
  const Eigen::VectorXcd& c = min.coefficients;
  double num = std::abs(((alternative - c).adjoint() * gram * c)(0));
  double den = (c.adjoint() * gram * c)(0).real();
  return num / den;
}

}  // namespace minl2
