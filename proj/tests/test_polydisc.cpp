#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minl2/polydisc.hpp"

using namespace minl2;
using doctest::Approx;

namespace {
DomainSpec disk = DomainSpec::disk();
Complex z0(0.0, 0.0);

ProductDomain bidisc(double p) {
  std::vector<FactorData> fs;
  fs.push_back({disk, {{z0, p}}, PhiSpec(disk)});
  fs.push_back({disk, {{z0, p}}, PhiSpec(disk)});
  return ProductDomain(std::move(fs));
}

IdealSpec constant_jet(Complex d = Complex(1, 0)) {
  return IdealSpec::staircase({{{{0, 0}, d}}});
}
}  // namespace

TEST_CASE("staircase sets by exact rational arithmetic") {
  auto s2 = ideal_staircase({2.0, 2.0});
  REQUIRE(s2.complement.size() == 1);
  CHECK(s2.complement[0] == std::vector<int>{0, 0});
  CHECK(staircase_contains({2.0, 2.0}, {1, 0}));
  CHECK_FALSE(staircase_contains({2.0, 2.0}, {0, 0}));

  auto s4 = ideal_staircase({4.0, 4.0});
  CHECK(s4.E.size() == 3);  // (0,2), (1,1), (2,0)
  CHECK(s4.complement.size() == 6);

  auto s3 = ideal_staircase({3.0, 3.0});
  CHECK(s3.E.size() == 2);  // (0,1), (1,0)
  CHECK(s3.complement.size() == 3);

  auto s1 = ideal_staircase({3.0});
  CHECK(s1.complement.size() == 3);  // jets of order 0..2
}

TEST_CASE("bergman product minimum vs monomial oracle") {
  auto M = bidisc(2.0);
  auto c1 = GainFunction::constant1();
  auto r0 = bergman_min_product(M, c1, constant_jet(), 0.0);
  CHECK(r0.converged);
  CHECK(r0.value == Approx(kPi * kPi).epsilon(1e-10));
  auto r1 = bergman_min_product(M, c1, constant_jet(), 0.7);
  CHECK(r1.value ==
        Approx(monomial_sublevel_integral({2, 2}, {{{0, 0}, Complex(1, 0)}},
                                          0.7))
            .epsilon(1e-10));
  // radial data with an exponential gain uses the exact layered formula
  auto re = bergman_min_product(M, GainFunction::exponential(1.0),
                                constant_jet(), 0.0);
  CHECK(re.value == Approx(kPi * kPi / 2.0).epsilon(1e-10));
}

TEST_CASE("face and shilov minima") {
  auto M1 = bidisc(1.0);
  auto h1 = hardy_dM_min(M1, IdealSpec::maximal({Complex(1, 0)}));
  CHECK(h1.value == Approx(kTwoPi).epsilon(1e-8));
  auto M2 = bidisc(2.0);
  auto h2 = hardy_dM_min(M2, IdealSpec::maximal({Complex(1, 0)}));
  CHECK(h2.value == Approx(kPi).epsilon(1e-8));
  auto h3 = hardy_dM_min(M2, IdealSpec::maximal({Complex(3, 0)}));
  CHECK(h3.value / h2.value == Approx(9.0).epsilon(1e-10));

  BoundaryFn one = [](int, double) { return 1.0; };
  BoundaryFn half = [](int, double) { return 0.5; };
  auto s1 = shilov_min(M1, {one, one}, {Complex(1, 0)});
  CHECK(s1.value == Approx(1.0).epsilon(1e-10));
  auto s2 = shilov_min(M1, {half, half}, {Complex(1, 0)});
  CHECK(s2.value == Approx(0.25).epsilon(1e-10));
}

TEST_CASE("splitting lemmas") {
  std::vector<FactorData> fs;
  fs.push_back({disk, {{z0, 1.0}, {Complex(0.5, 0.0), 1.0}}, PhiSpec(disk)});
  fs.push_back({disk, {{Complex(0.3, 0.0), 1.0}}, PhiSpec(disk)});
  ProductDomain M(std::move(fs));
  SplitScenario sc;
  sc.points = {{z0, Complex(0.5, 0.0)}, {Complex(0.3, 0.0)}};
  sc.h = Eigen::MatrixXcd::Ones(2, 1);
  auto rep = product_split_check(M, sc);
  CHECK(rep.shilov_defect < 1e-6);
  CHECK(rep.face_defect < 1e-6);
  CHECK(rep.bergman_defect < 1e-6);

  DomainSpec ann = DomainSpec::annulus(0.25);
  std::vector<FactorData> fa;
  fa.push_back({ann, {{Complex(0.5, 0.0), 1.0}}, PhiSpec(ann)});
  fa.push_back({disk, {{z0, 1.0}}, PhiSpec(disk)});
  ProductDomain Ma(std::move(fa));
  SplitScenario sa;
  sa.points = {{Complex(0.5, 0.0)}, {z0}};
  sa.h = Eigen::MatrixXcd::Ones(1, 1);
  auto ra = product_split_check(Ma, sa);
  CHECK(ra.shilov_defect < 1e-6);
  CHECK(ra.face_defect < 1e-6);
  CHECK(ra.bergman_defect < 1e-6);
}

TEST_CASE("product relation and extension bound") {
  auto M = bidisc(2.0);
  auto rel = theorem21_relation(M, GainFunction::constant1(), constant_jet());
  CHECK(rel.M == Approx(kPi * kPi).epsilon(1e-8));
  CHECK(rel.M_H == Approx(kPi).epsilon(1e-8));
  CHECK(rel.bound == Approx(kPi).epsilon(1e-8));
  CHECK(rel.equality);
  CHECK(rel.linear);

  auto ext = cor21_bound(M, constant_jet());
  CHECK(ext.RHS_printed == Approx(4.0 * kPi).epsilon(1e-8));
  CHECK(ext.M_H == Approx(kPi).epsilon(1e-8));
  CHECK(ext.holds);
  CHECK(ext.attains_derived);
}

TEST_CASE("shilov relation in both normalizations") {
  ShilovScenario sc;
  sc.domains = {disk, disk};
  sc.points = {{z0}, {z0}};
  sc.h_values = {{Complex(1, 0)}, {Complex(1, 0)}};
  sc.phis = {PhiSpec(disk), PhiSpec(disk)};
  auto p1 = theorem31_relation(sc, Normalization::P1);
  CHECK(p1.M_S == Approx(1.0).epsilon(1e-8));
  CHECK(p1.M_H == Approx(kTwoPi).epsilon(1e-8));
  CHECK(p1.bound == Approx(1.0).epsilon(1e-8));
  CHECK(p1.equality);
  CHECK(p1.statements_hold);
  auto p2 = theorem31_relation(sc, Normalization::PaperP2);
  CHECK(p2.M_S == Approx(0.25).epsilon(1e-8));
  CHECK(p2.bound == Approx(0.5).epsilon(1e-8));
  CHECK(p2.holds);
  CHECK_FALSE(p2.equality);
}

TEST_CASE("uniform product extension") {
  auto M = bidisc(1.0);
  auto rep = uniform_jet_extension_product(M, 0, 10);
  CHECK(rep.C_hat > 0.0);
  CHECK(rep.worst_homogeneity < 1e-8);
}

TEST_CASE("error contract") {
  auto M = bidisc(1.0);
  BoundaryFn one = [](int, double) { return 1.0; };
  CHECK_THROWS_WITH(shilov_min(M, {one}, {Complex(1, 0)}), "grid mismatch");
  CHECK_THROWS_WITH(cor21_bound(M, IdealSpec::maximal({Complex(1, 0)})),
                    "grid mismatch");
  CHECK_THROWS_WITH(uniform_jet_extension_product(M, 0, 3), "range");
  // non-separable target data cannot be split
  std::vector<FactorData> fs;
  fs.push_back({disk, {{z0, 1.0}, {Complex(0.5, 0.0), 1.0}}, PhiSpec(disk)});
  fs.push_back({disk, {{Complex(0.3, 0.0), 1.0}, {Complex(-0.2, 0.0), 1.0}},
                PhiSpec(disk)});
  ProductDomain M2(std::move(fs));
  SplitScenario sc;
  sc.points = {{z0, Complex(0.5, 0.0)},
               {Complex(0.3, 0.0), Complex(-0.2, 0.0)}};
  sc.h = Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS_WITH(product_split_check(M2, sc),
                    "splitting requires product data");
}
