#include "minl2/domain.hpp"

#include <algorithm>
#include <cmath>

namespace minl2 {

namespace {

[[noreturn]] void fail(const char* msg) { throw std::runtime_error(msg); }

// plain DFT of real samples; n-th coefficient (1/N) sum f_i e^{-i n theta_i}
std::vector<Complex> fourier_coefficients(const std::vector<double>& f,
                                          int max_n) {
  const int N = static_cast<int>(f.size());
  std::vector<Complex> c(max_n + 1, Complex(0.0, 0.0));
  for (int n = 0; n <= max_n; ++n) {
    Complex s(0.0, 0.0);
    for (int i = 0; i < N; ++i) {
      double th = kTwoPi * i / N;
      s += f[i] * std::polar(1.0, -n * th);
    }
    c[n] = s / static_cast<double>(N);
  }
  return c;
}

}  // namespace

DomainSpec DomainSpec::annulus(double q) {
  if (!(q > 0.0 && q < 1.0)) fail("out of domain");
  return {DomainKind::Annulus, q};
}

bool DomainSpec::contains(const Complex& z, double margin) const {
  double r = std::abs(z);
  if (kind == DomainKind::Disk) return r < 1.0 - margin;
  return r < 1.0 - margin && r > q + margin;
}

void DomainSpec::require_interior(const Complex& z) const {
  if (!contains(z)) fail("out of domain");
}

HarmonicExtension::HarmonicExtension(
    DomainSpec domain, const std::vector<std::vector<double>>& samples)
    : dom_(domain) {
  if (static_cast<int>(samples.size()) != dom_.components())
    fail("grid mismatch");
  const int N = static_cast<int>(samples[0].size());
  if (N < 2) fail("grid mismatch");
  for (const auto& s : samples)
    if (static_cast<int>(s.size()) != N) fail("grid mismatch");

  const int H = N / 2 - 1;  // highest retained harmonic
  auto outer = fourier_coefficients(samples[0], std::max(H, 0));
  a0_ = outer[0].real();
  alpha_.assign(H, Complex(0.0, 0.0));
  beta_.assign(H, Complex(0.0, 0.0));
  if (dom_.kind == DomainKind::Disk) {
    for (int n = 1; n <= H; ++n) alpha_[n - 1] = outer[n];
  } else {
    auto inner = fourier_coefficients(samples[1], std::max(H, 0));
    b0_ = (inner[0].real() - a0_) / std::log(dom_.q);
    for (int n = 1; n <= H; ++n) {
      double qn = std::pow(dom_.q, n);
      double det = 1.0 - qn * qn;
      alpha_[n - 1] = (outer[n] - qn * inner[n]) / det;
      beta_[n - 1] = (inner[n] - qn * outer[n]) / det;
    }
  }
}

double HarmonicExtension::value(const Complex& z) const {
  // u = a0 + b0 log|z| + 2 Re Phi(z) with the holomorphic series
  // Phi(z) = sum_n alpha_n z^n + conj(beta_n) q^n z^-n
  double r = std::abs(z);
  double u = a0_;
  if (b0_ != 0.0) u += b0_ * std::log(r);
  Complex zn(1.0, 0.0);
  Complex zinv = (r > 0.0) ? 1.0 / z : Complex(0.0, 0.0);
  Complex zmn(1.0, 0.0);
  for (size_t i = 0; i < alpha_.size(); ++i) {
    zn *= z;
    zmn *= zinv;
    Complex term = alpha_[i] * zn;
    if (dom_.kind == DomainKind::Annulus)
      term += std::conj(beta_[i]) * std::pow(dom_.q, double(i + 1)) * zmn;
    u += 2.0 * term.real();
  }
  return u;
}

Complex HarmonicExtension::gradient(const Complex& z) const {
  Complex dphi(0.0, 0.0);
  Complex zn(1.0, 0.0);
  Complex zinv = 1.0 / z;
  Complex zmn = zinv;
  for (size_t i = 0; i < alpha_.size(); ++i) {
    double n = double(i + 1);
    dphi += n * alpha_[i] * zn;
    if (dom_.kind == DomainKind::Annulus)
      dphi -= n * std::conj(beta_[i]) * std::pow(dom_.q, n) * zmn * zinv;
    zn *= z;
    zmn *= zinv;
  }
  Complex g = 2.0 * std::conj(dphi);
  if (b0_ != 0.0) g += b0_ * z / std::norm(z);
  return g;
}

double HarmonicExtension::normal_derivative(int component, double theta) const {
  double R = dom_.component_radius(component);
  Complex z = std::polar(R, theta);
  Complex n = std::polar(1.0, theta);
  if (component == 1) n = -n;  // outer normal points toward the origin
  Complex g = gradient(z);
  return (std::conj(n) * g).real();
}

double HarmonicExtension::inner_period() const {
  if (dom_.kind == DomainKind::Disk) return 0.0;
  // du/dv = -du/dr on |z|=q; only the b0 log|z| part has nonzero circulation
  return -kTwoPi * b0_;
}

Complex HarmonicExtension::completion(const Complex& z) const {
  if (dom_.kind != DomainKind::Disk)
    fail("character obstruction: use character_defect");
  Complex f(a0_, 0.0);
  Complex zn(1.0, 0.0);
  for (size_t i = 0; i < alpha_.size(); ++i) {
    zn *= z;
    f += 2.0 * alpha_[i] * zn;
  }
  return f;
}

HarmonicExtension harmonic_extension(
    DomainSpec domain, const std::vector<std::vector<double>>& samples) {
  return HarmonicExtension(domain, samples);
}

GreenPole::GreenPole(DomainSpec domain, Complex w, int series_order)
    : dom_(domain), w_(w), order_(series_order) {
  dom_.require_interior(w_);
  if (dom_.kind == DomainKind::Annulus) {
    const int N = 4 * order_;
    std::vector<std::vector<double>> data(2, std::vector<double>(N));
    for (int c = 0; c < 2; ++c) {
      double R = dom_.component_radius(c);
      for (int i = 0; i < N; ++i) {
        Complex zeta = std::polar(R, kTwoPi * i / N);
        data[c][i] = -std::log(std::abs(zeta - w_));
      }
    }
    corr_ = HarmonicExtension(dom_, data);
  }
}

double GreenPole::value(const Complex& z) const {
  if (std::abs(z - w_) < 1e-14) fail("pole");
  if (std::abs(z) > 1.0 + 1e-12 ||
      (dom_.kind == DomainKind::Annulus && std::abs(z) < dom_.q - 1e-12))
    fail("out of domain");
  double g = std::log(std::abs(z - w_));
  if (dom_.kind == DomainKind::Disk)
    g -= std::log(std::abs(1.0 - std::conj(w_) * z));
  else
    g += corr_.value(z);
  return g;
}

Complex GreenPole::gradient(const Complex& z) const {
  if (std::abs(z - w_) < 1e-14) fail("pole");
  if (dom_.kind == DomainKind::Disk) {
    Complex h = 1.0 / (z - w_) + std::conj(w_) / (1.0 - std::conj(w_) * z);
    return std::conj(h);
  }
  return (z - w_) / std::norm(z - w_) + corr_.gradient(z);
}

double GreenPole::normal_derivative(int component, double theta) const {
  double R = dom_.component_radius(component);
  Complex z = std::polar(R, theta);
  Complex n = std::polar(1.0, theta);
  if (component == 1) n = -n;
  return (std::conj(n) * gradient(z)).real();
}

double GreenPole::capacity() const {
  // regular part g(eps) = G(w + eps*dir, w) - log eps, extrapolated to 0
  Complex dir(1.0, 0.0);
  if (dom_.kind == DomainKind::Annulus) {
    // step radially toward the middle of the annulus to stay interior
    double r = std::abs(w_);
    dir = (r > std::sqrt(dom_.q)) ? -w_ / r : w_ / r;
  } else if (std::abs(w_) > 0.9) {
    dir = -w_ / std::abs(w_);
  }
  std::vector<double> eps = {1e-3, 1e-4, 1e-5, 1e-6};
  std::vector<double> g(eps.size());
  for (size_t k = 0; k < eps.size(); ++k)
    g[k] = value(w_ + eps[k] * dir) - std::log(eps[k]);
  // Neville tableau evaluated at eps = 0
  std::vector<double> p = g;
  for (size_t m = 1; m < eps.size(); ++m)
    for (size_t k = 0; k + m < eps.size(); ++k)
      p[k] = (eps[k + m] * p[k] - eps[k] * p[k + 1]) / (eps[k + m] - eps[k]);
  return std::exp(p[0]);
}

double green_value(const DomainSpec& d, const Complex& z, const Complex& w,
                   int series_order) {
  return GreenPole(d, w, series_order).value(z);
}

double green_normal_derivative(const DomainSpec& d, int component,
                               double theta, const Complex& w,
                               int series_order) {
  return GreenPole(d, w, series_order).normal_derivative(component, theta);
}

double log_capacity(const DomainSpec& d, const Complex& z, int series_order) {
  return GreenPole(d, z, series_order).capacity();
}

std::vector<double> green_interaction(const DomainSpec& d,
                                      const std::vector<Complex>& points,
                                      const std::vector<double>& weights,
                                      int series_order) {
  const size_t m = points.size();
  if (weights.size() != m) fail("grid mismatch");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (std::abs(points[i] - points[j]) < 1e-12) fail("coincident poles");
  std::vector<double> t(m, 1.0);
  for (size_t j = 0; j < m; ++j) {
    double s = 0.0;
    for (size_t j1 = 0; j1 < m; ++j1)
      if (j1 != j) s += weights[j1] * green_value(d, points[j], points[j1],
                                                 series_order);
    t[j] = std::exp(-2.0 * s);
  }
  return t;
}

BlaschkeFactor::BlaschkeFactor(Complex z0_) : z0(z0_) {
  if (std::abs(z0) >= 1.0) fail("out of domain");
}

Complex BlaschkeFactor::value(const Complex& z) const {
  return (z - z0) / (1.0 - std::conj(z0) * z);
}

Complex BlaschkeFactor::derivative(const Complex& z) const {
  Complex d = 1.0 - std::conj(z0) * z;
  return (1.0 - std::norm(z0)) / (d * d);
}

Complex BlaschkeFactor::log_derivative(const Complex& z) const {
  return (1.0 - std::norm(z0)) / ((z - z0) * (1.0 - std::conj(z0) * z));
}

HolomorphicExponent::HolomorphicExponent(const HarmonicExtension& u) : u_(u) {
  if (u.domain().kind != DomainKind::Disk)
    fail("character obstruction: use character_defect");
}

Complex HolomorphicExponent::value(const Complex& z) const {
  return std::exp(u_.completion(z));
}

}  // namespace minl2
