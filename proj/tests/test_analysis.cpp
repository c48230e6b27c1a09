#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minl2/analysis.hpp"

using namespace minl2;
using doctest::Approx;

namespace {
DomainSpec disk = DomainSpec::disk();
PsiSpec psi0() { return PsiSpec(disk, {{Complex(0, 0), 1.0}}); }
JetConstraints jet1() { return {{Complex(0, 0), 0, {Complex(1, 0)}}}; }
}  // namespace

TEST_CASE("boundary/area relation: disk equality") {
  PhiSpec phi(disk);
  auto psi = psi0();
  auto rep = theorem1_relation(phi, psi, GainFunction::constant1(), jet1());
  CHECK(rep.M == Approx(kPi).epsilon(1e-8));
  CHECK(rep.M_H == Approx(1.0).epsilon(1e-8));
  CHECK(rep.bound == Approx(1.0).epsilon(1e-8));
  CHECK(rep.holds);
  CHECK(rep.equality);
}

TEST_CASE("boundary/area relation: exponential gain") {
  PhiSpec phi(disk);
  auto psi = psi0();
  auto rep = theorem1_relation(phi, psi, GainFunction::exponential(1.0),
                               jet1());
  CHECK(rep.M == Approx(kPi / 2.0).epsilon(1e-8));
  CHECK(rep.integral_c == Approx(0.5).epsilon(1e-12));
  CHECK(rep.equality);
}

TEST_CASE("G(t) curve is linear in r for the model case") {
  PhiSpec phi(disk);
  auto psi = psi0();
  std::vector<double> grid;
  for (int i = 0; i < 9; ++i) grid.push_back(0.25 * i);
  auto curve =
      g_curve(phi, psi, GainFunction::constant1(), jet1(), grid);
  for (const auto& p : curve.points)
    CHECK(p.G == Approx(kPi * std::exp(-p.t)).epsilon(1e-7));
  auto rep = concavity_report(curve);
  CHECK(rep.concave);
  CHECK(rep.linear);
  CHECK(rep.decay_ok);
}

TEST_CASE("equality certificate at the model point") {
  PhiSpec phi(disk);
  auto psi = psi0();
  auto cert = equality_certificate(phi, psi, jet1(), true);
  CHECK(cert.stmt1);
  CHECK(cert.stmt2);
  CHECK(cert.stmt3);
  CHECK(cert.stmt4);
  CHECK(cert.verdict);
  CHECK(cert.c0.real() == Approx(1.0).epsilon(1e-8));
  CHECK(cert.c0_spread < 1e-6);
}

TEST_CASE("extremal function reproduces both minima") {
  PhiSpec phi(disk);
  auto psi = psi0();
  auto ex = extremal_disk(phi, psi, GainFunction::constant1(), jet1());
  CHECK(ex.jet_residual < 1e-10);
  CHECK(std::abs(ex.F0(Complex(0.3, 0.2)) - Complex(1, 0)) < 1e-10);
  CHECK(ex.area_value == Approx(kPi).epsilon(1e-8));
  CHECK(ex.boundary_value == Approx(1.0).epsilon(1e-8));
}

TEST_CASE("kernel gap: disk equality, annulus strict") {
  auto rd = saitoh_gap(disk, Complex(0.5, 0.0));
  CHECK(std::abs(rd.gap) <= 1e-6 * rd.piB);
  DomainSpec ann = DomainSpec::annulus(0.25);
  auto ra = saitoh_gap(ann, Complex(0.5, 0.0));
  CHECK(ra.gap > 10.0 * ra.error_estimate);
  CHECK(ra.K_hat == Approx(5.1689).epsilon(1e-3));
}

TEST_CASE("optimal extension constants") {
  auto r0 = extension_bound(disk, {Complex(0, 0)}, {0}, {Complex(1, 0)},
                            {std::vector<double>(256, 1.0)});
  CHECK(r0.M_H == Approx(1.0).epsilon(1e-8));
  CHECK(r0.RHS_derived == Approx(1.0).epsilon(1e-8));
  CHECK(r0.RHS_printed == Approx(2.0).epsilon(1e-8));
  CHECK(r0.holds);
  CHECK(r0.attains_derived);
  auto r1 = extension_bound(disk, {Complex(0, 0)}, {1}, {Complex(1, 0)},
                            {std::vector<double>(256, 1.0)});
  CHECK(r1.M_H == Approx(0.5).epsilon(1e-8));
  CHECK(r1.attains_derived);
}

TEST_CASE("uniform jet extension is data-homogeneous") {
  auto rep = uniform_jet_extension(disk, {Complex(0, 0), Complex(0.4, 0)}, 0,
                                   10);
  CHECK(rep.trials == 10);
  CHECK(rep.C_hat > 0.0);
  CHECK(rep.worst_homogeneity < 1e-8);
}

TEST_CASE("error contract") {
  DomainSpec ann = DomainSpec::annulus(0.25);
  PhiSpec phi(ann);
  PsiSpec psi(ann, {{Complex(0.5, 0.0), 1.0}});
  JetConstraints jets = {{Complex(0.5, 0.0), 0, {Complex(1, 0)}}};
  CHECK_THROWS_WITH(equality_certificate(phi, psi, jets, true),
                    "statement (4) computable only on the disk");
  CHECK_THROWS_WITH(uniform_jet_extension(disk, {Complex(0, 0)}, 0, 3),
                    "range");
}
