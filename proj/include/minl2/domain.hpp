// Planar domains (unit disk, annulus q<|z|<1), their Green functions,
// harmonic extensions of boundary data, logarithmic capacities and the
// disk's multiplicative building blocks (Blaschke factors, analytic
// completions of harmonic functions).

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace minl2 {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class DomainKind { Disk, Annulus };

struct DomainSpec {
  DomainKind kind = DomainKind::Disk;
  double q = 0.0;  // inner radius, annulus only

  static DomainSpec disk() { return {DomainKind::Disk, 0.0}; }
  static DomainSpec annulus(double q);

  int components() const { return kind == DomainKind::Disk ? 1 : 2; }
  // component 0 is |z|=1, component 1 is |z|=q
  double component_radius(int c) const { return c == 0 ? 1.0 : q; }
  double inner_radius() const { return kind == DomainKind::Disk ? 0.0 : q; }
  bool contains(const Complex& z, double margin = 0.0) const;
  void require_interior(const Complex& z) const;
};

// Harmonic function on the closed domain, reconstructed from uniformly
// sampled boundary data by a Fourier coefficient solve. On the disk the
// basis is {1, z^n, conj(z)^n}; on the annulus {1, log|z|, z^n, conj(z)^n,
// z^-n, conj(z)^-n}.
class HarmonicExtension {
 public:
  HarmonicExtension() = default;
  // samples[c][i] = data at theta_i = 2*pi*i/N on component c. All
  // components must use the same N ("grid mismatch" otherwise).
  HarmonicExtension(DomainSpec domain,
                    const std::vector<std::vector<double>>& samples);

  double value(const Complex& z) const;
  // real gradient (du/dx, du/dy) packed as a complex number
  Complex gradient(const Complex& z) const;
  double normal_derivative(int component, double theta) const;
  // annulus: conjugate period around the inner boundary, oint du/dv ds
  double inner_period() const;
  // disk only: holomorphic f with Re f = u and Im f(0) = 0
  Complex completion(const Complex& z) const;

  const DomainSpec& domain() const { return dom_; }

 private:
  DomainSpec dom_;
  double a0_ = 0.0, b0_ = 0.0;               // constant and log|z| parts
  std::vector<Complex> alpha_, beta_;        // n = 1..N terms
};

HarmonicExtension harmonic_extension(
    DomainSpec domain, const std::vector<std::vector<double>>& samples);

// Green function with a fixed pole. Disk: closed Moebius form. Annulus:
// log|z-w| plus the harmonic correction solved from boundary data
// -log|.-w| with a Fourier expansion truncated at series_order.
class GreenPole {
 public:
  GreenPole(DomainSpec domain, Complex w, int series_order = 64);

  double value(const Complex& z) const;
  Complex gradient(const Complex& z) const;
  double normal_derivative(int component, double theta) const;
  // c_beta(w) = exp lim (G(z,w) - log|z-w|), via offsets 1e-3..1e-6 and
  // polynomial extrapolation of the regular part
  double capacity() const;

  const Complex& pole() const { return w_; }
  const DomainSpec& domain() const { return dom_; }
  int series_order() const { return order_; }

 private:
  DomainSpec dom_;
  Complex w_;
  int order_;
  HarmonicExtension corr_;  // annulus only
};

double green_value(const DomainSpec& d, const Complex& z, const Complex& w,
                   int series_order = 64);
double green_normal_derivative(const DomainSpec& d, int component,
                               double theta, const Complex& w,
                               int series_order = 64);
double log_capacity(const DomainSpec& d, const Complex& z,
                    int series_order = 64);
// t_j = exp(-2 sum_{j1 != j} m_{j1} G(z_j, z_{j1})) with m = k+1 weights
std::vector<double> green_interaction(const DomainSpec& d,
                                      const std::vector<Complex>& points,
                                      const std::vector<double>& weights,
                                      int series_order = 64);

struct BlaschkeFactor {
  Complex z0;
  explicit BlaschkeFactor(Complex z0_);
  Complex value(const Complex& z) const;
  Complex derivative(const Complex& z) const;
  Complex log_derivative(const Complex& z) const;  // B'/B
};

// f_u = exp(u + i*conj_u) on the disk, |f_u| = e^u
class HolomorphicExponent {
 public:
  explicit HolomorphicExponent(const HarmonicExtension& u);
  Complex value(const Complex& z) const;

 private:
  HarmonicExtension u_;
};

}  // namespace minl2
