#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minl2/domain.hpp"

using namespace minl2;
using doctest::Approx;

TEST_CASE("disk green closed form") {
  DomainSpec disk = DomainSpec::disk();
  CHECK(green_value(disk, 0.5, 0.0) == Approx(std::log(0.5)).epsilon(1e-12));
  // G(z,w) = G(w,z)
  Complex z(0.3, 0.2), w(-0.1, 0.4);
  CHECK(green_value(disk, z, w) == Approx(green_value(disk, w, z)));
  // vanishes on |z|=1
  CHECK(std::abs(green_value(disk, std::polar(1.0, 0.7), w)) < 1e-12);
  // c_beta(z) = 1/(1-|z|^2)
  CHECK(log_capacity(disk, 0.5) == Approx(4.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("annulus green: symmetry, boundary, series stability") {
  DomainSpec ann = DomainSpec::annulus(0.5);
  Complex z(0.75, 0.0), w(0.6, 0.1);
  double g64 = green_value(ann, z, w, 64);
  double g128 = green_value(ann, z, w, 128);
  CHECK(g64 == Approx(g128).epsilon(1e-12));
  CHECK(g64 == Approx(green_value(ann, w, z)).epsilon(1e-10));
  CHECK(std::abs(green_value(ann, Complex(1.0, 0.0), Complex(0.7, 0.0))) <
        1e-10);
  CHECK(std::abs(green_value(ann, std::polar(0.5, 1.0), Complex(0.7, 0.0))) <
        1e-10);
}

TEST_CASE("harmonic extension oracles") {
  DomainSpec ann = DomainSpec::annulus(0.5);
  int N = 128;
  std::vector<std::vector<double>> data(2, std::vector<double>(N));
  for (int i = 0; i < N; ++i) {
    data[0][i] = 1.0;
    data[1][i] = 0.0;
  }
  auto he = harmonic_extension(ann, data);
  // harmonic measure of the outer circle: log(r/q)/log(1/q)
  CHECK(he.value(Complex(0.7, 0.0)) ==
        Approx(std::log(0.7 / 0.5) / std::log(2.0)).epsilon(1e-10));
  CHECK(he.inner_period() == Approx(-kTwoPi / std::log(2.0)).epsilon(1e-10));

  DomainSpec disk = DomainSpec::disk();
  std::vector<std::vector<double>> dd(1, std::vector<double>(N));
  for (int i = 0; i < N; ++i) dd[0][i] = std::cos(kTwoPi * i / N);
  auto hd = harmonic_extension(disk, dd);
  CHECK(hd.value(Complex(0.3, 0.2)) == Approx(0.3).epsilon(1e-10));
  // completion of Re z is z itself
  Complex f = hd.completion(Complex(0.3, 0.2));
  CHECK(f.real() == Approx(0.3).epsilon(1e-10));
  CHECK(f.imag() == Approx(0.2).epsilon(1e-10));
}

TEST_CASE("green interaction weights") {
  DomainSpec disk = DomainSpec::disk();
  auto t = green_interaction(disk, {Complex(0, 0), Complex(0.4, 0)},
                             {1.0, 1.0});
  // exp(-2 log 0.4) = 6.25 for both points
  CHECK(t[0] == Approx(6.25).epsilon(1e-10));
  CHECK(t[1] == Approx(6.25).epsilon(1e-10));
}

TEST_CASE("blaschke factor") {
  BlaschkeFactor B(Complex(0.3, 0.1));
  CHECK(std::abs(B.value(Complex(0.3, 0.1))) < 1e-15);
  CHECK(std::abs(B.value(std::polar(1.0, 0.4))) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("error contract") {
  DomainSpec disk = DomainSpec::disk();
  GreenPole g(disk, Complex(0.5, 0.0));
  CHECK_THROWS_WITH(g.value(Complex(0.5, 0.0)), "pole");
  CHECK_THROWS_WITH(g.value(Complex(2.0, 0.0)), "out of domain");
  CHECK_THROWS_WITH(DomainSpec::annulus(1.5), "out of domain");
  std::vector<std::vector<double>> bad = {std::vector<double>(8, 0.0),
                                          std::vector<double>(16, 0.0)};
  CHECK_THROWS_WITH(harmonic_extension(DomainSpec::annulus(0.5), bad),
                    "grid mismatch");
  CHECK_THROWS_WITH(
      green_interaction(disk, {Complex(0.2, 0), Complex(0.2, 0)}, {1.0, 1.0}),
      "coincident poles");
}
