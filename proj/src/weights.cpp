#include "minl2/weights.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace minl2 {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

constexpr double kMatchTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

double simpson(const std::function<double(double)>& f, double a, double b,
               int n) {
  // n even subintervals
  double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

PsiSpec::PsiSpec(DomainSpec domain, std::vector<PolePart> poles,
                 int series_order)
    : dom_(domain), poles_(std::move(poles)) {
  for (size_t i = 0; i < poles_.size(); ++i) {
    if (!(poles_[i].p > 0.0)) fail("inadmissible gain: p <= 0");
    for (size_t j = i + 1; j < poles_.size(); ++j)
      if (std::abs(poles_[i].z - poles_[j].z) < kMatchTol)
        fail("coincident poles");
  }
  greens_.reserve(poles_.size());
  for (const auto& pp : poles_) greens_.emplace_back(dom_, pp.z, series_order);
}

double PsiSpec::value(const Complex& z) const {
  for (const auto& pp : poles_)
    if (std::abs(z - pp.z) < 1e-14) return -kInf;
  double s = 0.0;
  for (size_t i = 0; i < greens_.size(); ++i)
    s += poles_[i].p * greens_[i].value(z);
  return s;
}

double PsiSpec::normal_derivative(int component, double theta) const {
  double s = 0.0;
  for (size_t i = 0; i < greens_.size(); ++i)
    s += poles_[i].p * greens_[i].normal_derivative(component, theta);
  return s;
}

Complex PsiSpec::gradient(const Complex& z) const {
  Complex g(0.0, 0.0);
  for (size_t i = 0; i < greens_.size(); ++i)
    g += poles_[i].p * greens_[i].gradient(z);
  return g;
}

double PsiSpec::pole_coefficient_at(const Complex& z) const {
  for (const auto& pp : poles_)
    if (std::abs(z - pp.z) < kMatchTol) return pp.p;
  return 0.0;
}

PhiSpec::PhiSpec(DomainSpec domain) : dom_(domain) {}

PhiSpec::PhiSpec(DomainSpec domain, std::vector<PolePart> green_part,
                 std::optional<HarmonicExtension> harmonic_part,
                 std::vector<Complex> zero_roots, int series_order)
    : dom_(domain),
      green_part_(std::move(green_part)),
      harmonic_(std::move(harmonic_part)),
      roots_(std::move(zero_roots)) {
  greens_.reserve(green_part_.size());
  for (const auto& gp : green_part_) {
    if (gp.p < 0.0) fail("Lelong condition failed at green part");
    greens_.emplace_back(dom_, gp.z, series_order);
  }
}

double PhiSpec::value(const Complex& z) const {
  double v = 0.0;
  for (size_t i = 0; i < greens_.size(); ++i) {
    if (std::abs(z - green_part_[i].z) < 1e-14) return -kInf;
    v += 2.0 * green_part_[i].p * greens_[i].value(z);
  }
  if (harmonic_) v += 2.0 * harmonic_->value(z);
  for (const auto& r : roots_) v += 2.0 * std::log(std::abs(z - r));
  return v;
}

double PhiSpec::green_coefficient_at(const Complex& z) const {
  double q = 0.0;
  for (const auto& gp : green_part_)
    if (std::abs(z - gp.z) < kMatchTol) q += gp.p;
  return q;
}

int PhiSpec::zero_order_at(const Complex& z) const {
  int n = 0;
  for (const auto& r : roots_)
    if (std::abs(z - r) < kMatchTol) ++n;
  return n;
}

bool PhiSpec::trivial() const {
  return green_part_.empty() && !harmonic_ && roots_.empty();
}

GainFunction GainFunction::constant1() {
  GainFunction g;
  g.kind_ = Kind::Constant1;
  return g;
}

GainFunction GainFunction::exponential(double a) {
  if (!(a > 0.0)) fail("inadmissible gain: exponent must be positive");
  GainFunction g;
  g.kind_ = Kind::Exponential;
  g.a_ = a;
  return g;
}

GainFunction GainFunction::tabulated(std::vector<double> t,
                                     std::vector<double> c) {
  if (t.size() != c.size() || t.size() < 2) fail("grid mismatch");
  for (size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1])) fail("inadmissible gain: t grid not increasing");
  if (t.front() != 0.0) fail("inadmissible gain: grid must start at t=0");
  GainFunction g;
  g.kind_ = Kind::Tabulated;
  g.ts_ = std::move(t);
  g.cs_ = std::move(c);
  return g;
}

double GainFunction::value(double t) const {
  switch (kind_) {
    case Kind::Constant1:
      return 1.0;
    case Kind::Exponential:
      return std::exp(-a_ * t);
    case Kind::Tabulated:
      break;
  }
  if (t <= ts_.front()) return cs_.front();
  if (t >= ts_.back()) return cs_.back();
  size_t i = 1;
  while (ts_[i] < t) ++i;
  double t0 = ts_[i - 1], t1 = ts_[i];
  double w;
  if (t0 > 0.0)
    w = (std::log(t) - std::log(t0)) / (std::log(t1) - std::log(t0));
  else
    w = (t - t0) / (t1 - t0);
  return (1.0 - w) * cs_[i - 1] + w * cs_[i];
}

double GainFunction::validate() const {
  if (std::abs(value(0.0) - 1.0) > 1e-9)
    fail("inadmissible gain: c(0) != 1");
  // c(t) e^{-t} non-increasing on a 1024-point log grid; tiny relative
  // slack absorbs interpolation overshoot of tabulated data
  double tmax = 10.0;
  if (kind_ == Kind::Tabulated) tmax = std::max(tmax, ts_.back() + 5.0);
  double prev = value(0.0);
  for (int k = 0; k < 1024; ++k) {
    double t = 1e-4 * std::pow(tmax / 1e-4, k / 1023.0);
    double v = value(t) * std::exp(-t);
    // relative slack absorbs the piecewise-linear interpolation overshoot
    // of tabulated borderline data such as c(t) = e^t
    if (v > prev * (1.0 + 1e-3) + 1e-300)
      fail("inadmissible gain: c(t)e^{-t} increasing");
    prev = v;
  }
  double I = integral();
  if (!std::isfinite(I)) fail("inadmissible gain: divergent integral");
  return I;
}

double GainFunction::integral() const { return tail(0.0); }

double GainFunction::tail(double t) const {
  switch (kind_) {
    case Kind::Constant1:
      return std::exp(-t);
    case Kind::Exponential:
      return std::exp(-(1.0 + a_) * t) / (1.0 + a_);
    case Kind::Tabulated:
      break;
  }
  double T = ts_.back();
  if (t >= T) return cs_.back() * std::exp(-t);
  auto f = [this](double s) { return value(s) * std::exp(-s); };
  return simpson(f, t, T, 4096) + cs_.back() * std::exp(-T);
}

double GainFunction::weighted_tail(double kappa, double t) const {
  if (!(kappa > 0.0)) fail("range");
  switch (kind_) {
    case Kind::Constant1:
      return std::exp(-kappa * t) / kappa;
    case Kind::Exponential:
      return std::exp(-(kappa + a_) * t) / (kappa + a_);
    case Kind::Tabulated:
      break;
  }
  double T = ts_.back();
  if (t >= T) return cs_.back() * std::exp(-kappa * t) / kappa;
  auto f = [this, kappa](double s) { return value(s) * std::exp(-kappa * s); };
  return simpson(f, t, T, 4096) + cs_.back() * std::exp(-kappa * T) / kappa;
}

double GainFunction::tail_inverse(double r) const {
  double h0 = tail(0.0);
  if (!(r > 0.0 && r <= h0 * (1.0 + 1e-12))) fail("range");
  if (r >= h0) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (tail(hi) > r) {
    hi *= 2.0;
    if (hi > 1e6) fail("range");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    double mid = 0.5 * (lo + hi);
    (tail(mid) > r ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

AreaFn rho_tilde_area(const PhiSpec& phi, const PsiSpec& psi,
                      const GainFunction& c) {
  return [phi, psi, c](const Complex& z) {
    double p = phi.value(z);
    double s = psi.value(z);
    return std::exp(-p) * c.value(-2.0 * s);
  };
}

BoundaryFn rho_boundary(const PhiSpec& phi, const PsiSpec& psi) {
  DomainSpec d = phi.domain();
  return [phi, psi, d](int component, double theta) {
    Complex z = std::polar(d.component_radius(component), theta);
    double dv = psi.normal_derivative(component, theta);
    return std::exp(-phi.value(z)) / dv;
  };
}

LelongReport lelong_check(const PhiSpec& phi, const PsiSpec& psi,
                          const JetConstraints& jets) {
  LelongReport rep;
  for (size_t j = 0; j < jets.size(); ++j) {
    double mass = 2.0 * phi.green_coefficient_at(jets[j].z) +
                  2.0 * psi.pole_coefficient_at(jets[j].z) +
                  2.0 * phi.zero_order_at(jets[j].z);
    double need = 2.0 * (jets[j].k + 1);
    rep.mass.push_back(mass);
    rep.required.push_back(need);
    if (mass + 1e-12 < need)
      fail("Lelong condition failed at " + std::to_string(j));
  }
  return rep;
}

}  // namespace minl2
