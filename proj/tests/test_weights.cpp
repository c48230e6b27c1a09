#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minl2/weights.hpp"

using namespace minl2;
using doctest::Approx;

TEST_CASE("gain admissibility and tails") {
  auto c1 = GainFunction::constant1();
  CHECK(c1.validate() == Approx(1.0).epsilon(1e-14));
  CHECK(c1.tail(1.0) == Approx(std::exp(-1.0)).epsilon(1e-14));

  auto ce = GainFunction::exponential(1.0);
  CHECK(ce.validate() == Approx(0.5).epsilon(1e-14));
  // h(t) = e^{-2t}/2, so h^{-1}(1/8) = log 2
  CHECK(ce.tail_inverse(0.125) == Approx(std::log(2.0)).epsilon(1e-9));

  // c(t) = e^t keeps c e^{-t} constant: admissible, integral ~ 6 on [0,5]
  std::vector<double> t, c;
  for (int i = 0; i < 200; ++i) {
    t.push_back(5.0 * i / 199);
    c.push_back(std::exp(t.back()));
  }
  auto ct = GainFunction::tabulated(t, c);
  CHECK(ct.validate() == Approx(6.0).epsilon(0.02));

  // c(t) = e^{2t} makes c e^{-t} increase: rejected
  for (auto& x : c) x = x * x;
  CHECK_THROWS_WITH(GainFunction::tabulated(t, c).validate(),
                    doctest::Contains("inadmissible gain"));
}

TEST_CASE("weighted tails") {
  auto c1 = GainFunction::constant1();
  CHECK(c1.weighted_tail(2.0, 1.0) ==
        Approx(std::exp(-2.0) / 2.0).epsilon(1e-14));
  auto ce = GainFunction::exponential(1.0);
  CHECK(ce.weighted_tail(2.0, 0.0) == Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_WITH(c1.weighted_tail(-1.0, 0.0), "range");
  CHECK_THROWS_WITH(c1.tail_inverse(2.0), "range");
}

TEST_CASE("boundary weight for the basic pole") {
  DomainSpec disk = DomainSpec::disk();
  PsiSpec psi(disk, {{Complex(0, 0), 1.0}});
  PhiSpec phi(disk);
  auto rho = rho_boundary(phi, psi);
  // dG/dv = 1 on the unit circle for the pole at 0
  CHECK(rho(0, 0.3) == Approx(1.0).epsilon(1e-10));
  auto rt = rho_tilde_area(phi, psi, GainFunction::constant1());
  CHECK(rt(Complex(0.5, 0.0)) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("lelong bookkeeping") {
  DomainSpec disk = DomainSpec::disk();
  PhiSpec phi(disk);
  JetConstraints jets = {{Complex(0, 0), 0, {Complex(1, 0)}}};
  PsiSpec psi(disk, {{Complex(0, 0), 1.0}});
  auto rep = lelong_check(phi, psi, jets);
  CHECK(rep.mass[0] == Approx(2.0));
  CHECK(rep.required[0] == Approx(2.0));

  PsiSpec weak(disk, {{Complex(0, 0), 0.5}});
  CHECK_THROWS_WITH(lelong_check(phi, weak, jets),
                    "Lelong condition failed at 0");
}

TEST_CASE("error contract") {
  DomainSpec disk = DomainSpec::disk();
  CHECK_THROWS_WITH(
      PsiSpec(disk, {{Complex(0.2, 0), 1.0}, {Complex(0.2, 0), 1.0}}),
      "coincident poles");
  CHECK_THROWS_WITH(GainFunction::exponential(-1.0).validate(),
                    doctest::Contains("inadmissible gain"));
  CHECK_THROWS_WITH(GainFunction::tabulated({0.0}, {1.0}), "grid mismatch");
}
