// Constrained least-norm solves over finite holomorphic bases: Gram
// assembly against boundary/area measures, jet constraint rows, the
// normal-equation solver, and the minimal-integral front ends whose
// reciprocals are the Bergman and conjugate Hardy kernels.

#pragma once

#include <Eigen/Dense>

#include "minl2/quadrature.hpp"

namespace minl2 {

struct BasisSpec {
  enum class Kind { Monomial, Laurent };
  Kind kind = Kind::Monomial;
  int degree = 16;  // Monomial: exponents 0..N; Laurent: -N..N

  static BasisSpec for_domain(const DomainSpec& d, int N);
  int size() const {
    return kind == Kind::Monomial ? degree + 1 : 2 * degree + 1;
  }
  int exponent(int i) const {
    return kind == Kind::Monomial ? i : i - degree;
  }
  Complex eval(int i, const Complex& z) const;
  // exact l-th derivative (falling factorial), valid for negative exponents
  Complex derivative(int i, const Complex& z, int order) const;
};

struct MinResult {
  double value = 0.0;
  Eigen::VectorXcd coefficients;
  BasisSpec basis;
  bool converged = false;
  double residual = 0.0;

  Complex evaluate(const Complex& z) const;
};

Eigen::MatrixXcd area_gram(const BasisSpec& basis, const AreaGrid& grid,
                           const AreaFn& weight);
Eigen::MatrixXcd boundary_gram(const BasisSpec& basis,
                               const BoundaryGrid& grid,
                               const BoundaryFn& weight);

struct ConstraintSystem {
  Eigen::MatrixXcd A;
  Eigen::VectorXcd b;
};
// rows f^{(l)}(z_j) = l! a_{j,l}
ConstraintSystem jet_constraints(const BasisSpec& basis,
                                 const JetConstraints& jets);

// minimize c* G c subject to A c = b
MinResult least_norm_solve(const Eigen::MatrixXcd& gram,
                           const ConstraintSystem& cons,
                           const BasisSpec& basis);

struct SolveOptions {
  int area_nr = 48;
  int area_ntheta = 192;
  int boundary_n = 1024;
  int max_degree = 128;
  double tol = 1e-8;
};

// G(t): area Gram with e^{-phi} c(-2 psi) over {2 psi < -t}
MinResult bergman_min(const PhiSpec& phi, const PsiSpec& psi,
                      const GainFunction& c, const JetConstraints& jets,
                      double t, const SolveOptions& opt = {});
// boundary Gram with the given weight
MinResult hardy_min(const DomainSpec& d, const BoundaryFn& rho,
                    const JetConstraints& jets,
                    const SolveOptions& opt = {});

double kernel_bergman(const DomainSpec& d, const Complex& z,
                      const SolveOptions& opt = {});
double kernel_conjugate_hardy(const DomainSpec& d, const Complex& z,
                              const SolveOptions& opt = {});

// |<alt - c, c>_G| / <c, c>_G for a feasible alternative
double orthogonality_residual(const MinResult& min,
                              const Eigen::VectorXcd& alternative,
                              const Eigen::MatrixXcd& gram,
                              const ConstraintSystem& cons);

}  // namespace minl2
