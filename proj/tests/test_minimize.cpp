#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minl2/minimize.hpp"

using namespace minl2;
using doctest::Approx;

namespace {
DomainSpec disk = DomainSpec::disk();
PsiSpec psi0() { return PsiSpec(disk, {{Complex(0, 0), 1.0}}); }
JetConstraints jet1() { return {{Complex(0, 0), 0, {Complex(1, 0)}}}; }
}  // namespace

TEST_CASE("bergman minimum oracles") {
  PhiSpec phi(disk);
  auto psi = psi0();
  auto c1 = GainFunction::constant1();
  auto m = bergman_min(phi, psi, c1, jet1(), 0.0);
  CHECK(m.converged);
  CHECK(m.value == Approx(kPi).epsilon(1e-8));
  auto me = bergman_min(phi, psi, GainFunction::exponential(1.0), jet1(), 0.0);
  CHECK(me.value == Approx(kPi / 2.0).epsilon(1e-8));
  auto mt = bergman_min(phi, psi, c1, jet1(), 1.0);
  CHECK(mt.value == Approx(kPi * std::exp(-1.0)).epsilon(1e-8));
}

TEST_CASE("hardy minimum oracle") {
  PhiSpec phi(disk);
  auto psi = psi0();
  auto h = hardy_min(disk, rho_boundary(phi, psi), jet1());
  CHECK(h.converged);
  CHECK(h.value == Approx(1.0).epsilon(1e-10));
  // quadratic homogeneity: tripling the data multiplies the value by 9
  auto h3 = hardy_min(disk, rho_boundary(phi, psi),
                      {{Complex(0, 0), 0, {Complex(3, 0)}}});
  CHECK(h3.value == Approx(9.0).epsilon(1e-12));
}

TEST_CASE("kernels") {
  CHECK(kernel_bergman(disk, Complex(0.5, 0.0)) ==
        Approx(1.0 / (kPi * 0.75 * 0.75)).epsilon(1e-8));
  CHECK(kernel_conjugate_hardy(disk, Complex(0.5, 0.0)) ==
        Approx(1.0 / (0.75 * 0.75)).epsilon(1e-8));
  // annulus: strict kernel inequality K > pi B
  DomainSpec ann = DomainSpec::annulus(0.25);
  double K = kernel_conjugate_hardy(ann, Complex(0.5, 0.0));
  double B = kernel_bergman(ann, Complex(0.5, 0.0));
  CHECK(K > kPi * B);
}

TEST_CASE("orthogonality of the minimizer") {
  PhiSpec phi(disk);
  auto psi = psi0();
  auto m = bergman_min(phi, psi, GainFunction::constant1(), jet1(), 0.0);
  auto grid = AreaGrid::sublevel(psi, 0.0, 48, 192);
  auto gram = area_gram(m.basis, grid,
                        rho_tilde_area(phi, psi, GainFunction::constant1()));
  auto cons = jet_constraints(m.basis, jet1());
  Eigen::VectorXcd alt = m.coefficients;
  alt(1) += Complex(0.3, -0.2);  // still satisfies f(0) = 1
  CHECK(orthogonality_residual(m, alt, gram, cons) < 1e-8);
}

TEST_CASE("error contract") {
  BasisSpec basis = BasisSpec::for_domain(disk, 8);
  CHECK_THROWS_WITH(
      jet_constraints(basis, {{Complex(0, 0), 1, {Complex(1, 0)}}}),
      "grid mismatch");
  // duplicated inconsistent constraint rows are rank deficient
  auto cons = jet_constraints(basis, {{Complex(0, 0), 0, {Complex(1, 0)}},
                                      {Complex(0, 0), 0, {Complex(2, 0)}}});
  Eigen::MatrixXcd gram =
      Eigen::MatrixXcd::Identity(basis.size(), basis.size());
  CHECK_THROWS_WITH(least_norm_solve(gram, cons, basis),
                    "infeasible or redundant constraints");
  // zero Gram has no usable pivots
  Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
  auto one = jet_constraints(basis, {{Complex(0, 0), 0, {Complex(1, 0)}}});
  CHECK_THROWS_WITH(least_norm_solve(zero, one, basis),
                    "basis degenerate at this resolution");
  // Lelong condition: psi too weak for the requested jet
  PhiSpec phi(disk);
  PsiSpec weak(disk, {{Complex(0, 0), 0.5}});
  CHECK_THROWS_WITH(
      bergman_min(phi, weak, GainFunction::constant1(), jet1(), 0.0),
      "Lelong condition failed at 0");
}
