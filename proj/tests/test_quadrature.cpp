#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minl2/quadrature.hpp"

using namespace minl2;
using doctest::Approx;

TEST_CASE("gauss-legendre exactness") {
  std::vector<double> x, w;
  gauss_legendre(5, x, w);
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], 8);
  CHECK(s == Approx(2.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("area quadrature on the disk") {
  DomainSpec disk = DomainSpec::disk();
  auto grid = AreaGrid::tensor(disk, 48, 192);
  CHECK(integrate_area(grid, [](const Complex&) { return 1.0; }) ==
        Approx(kPi).epsilon(1e-10));
  CHECK(integrate_area(grid, [](const Complex& z) { return std::norm(z); }) ==
        Approx(kPi / 2.0).epsilon(1e-10));
}

TEST_CASE("sublevel region of the basic pole") {
  DomainSpec disk = DomainSpec::disk();
  PsiSpec psi(disk, {{Complex(0, 0), 1.0}});
  // {2 log|z| < -1} is the disk of radius e^{-1/2}, area pi/e
  auto sg = AreaGrid::sublevel(psi, 1.0, 48, 192);
  CHECK(integrate_area(sg, [](const Complex&) { return 1.0; }) ==
        Approx(kPi * std::exp(-1.0)).epsilon(1e-9));
}

TEST_CASE("boundary quadrature normalization") {
  BoundaryFn one = [](int, double) { return 1.0; };
  auto gd = BoundaryGrid::make(DomainSpec::disk(), 256);
  CHECK(integrate_boundary(gd, one, one) == Approx(1.0).epsilon(1e-13));
  auto ga = BoundaryGrid::make(DomainSpec::annulus(0.25), 256);
  CHECK(integrate_boundary(ga, one, one) == Approx(1.25).epsilon(1e-13));
}

TEST_CASE("coarea cross-check refines") {
  DomainSpec disk = DomainSpec::disk();
  PsiSpec psi(disk, {{Complex(0, 0), 1.0}});
  auto g = [](const Complex&) { return 1.0; };
  auto c1 = coarea_check(g, psi, 0.8, 256);
  CHECK(c1.lhs == Approx(kPi * (1.0 - 0.64)).epsilon(1e-6));
  CHECK(c1.defect <= 1e-4 * c1.lhs);
  auto c2 = coarea_check(g, psi, 0.8, 512);
  CHECK(c2.defect <= c1.defect + 1e-12);
}

TEST_CASE("monomial sublevel integral") {
  CHECK(monomial_sublevel_integral({1.0}, {{{0}, Complex(1, 0)}}, 1.0) ==
        Approx(kPi * std::exp(-1.0)).epsilon(1e-14));
  // orthogonal terms add
  double v = monomial_sublevel_integral(
      {2.0, 2.0}, {{{0, 0}, Complex(1, 0)}, {{1, 0}, Complex(2, 0)}}, 0.0);
  CHECK(v == Approx(kPi * kPi + 4.0 * kPi * kPi / 2.0).epsilon(1e-13));
}

TEST_CASE("error contract") {
  DomainSpec disk = DomainSpec::disk();
  PsiSpec psi(disk, {{Complex(0, 0), 1.0}});
  CHECK_THROWS_WITH(AreaGrid::sublevel(psi, -1.0, 8, 16), "range");
  CHECK_THROWS_WITH(monomial_sublevel_integral({1.0, 1.0},
                                               {{{0}, Complex(1, 0)}}, 0.0),
                    "grid mismatch");
  auto g = [](const Complex&) { return 1.0; };
  CHECK_THROWS_WITH(coarea_check(g, psi, 1.5, 64), "range");
  auto grid = AreaGrid::tensor(disk, 8, 16);
  CHECK_THROWS_WITH(grid.masked(std::vector<char>(3, 1)), "grid mismatch");
  CHECK_THROWS_WITH(integrate_area(grid, std::vector<double>(3, 0.0)),
                    "grid mismatch");
}
