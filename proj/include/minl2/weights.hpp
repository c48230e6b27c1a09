// Weight data for the minimal-integral problems: the negative potential
// psi = sum p_j G(.,z_j), the weight phi = 2*sum q_j G + 2u + 2 log|g|,
// admissible gain functions c(t) with their tail reparametrization h, and
// the derived boundary/area weights.

#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "minl2/domain.hpp"

namespace minl2 {

struct JetPoint {
  Complex z;
  int k = 0;                 // jet order; constrains f, f', .., f^(k)
  std::vector<Complex> a;    // target Taylor coefficients a_0..a_k
};
using JetConstraints = std::vector<JetPoint>;

struct PolePart {
  Complex z;
  double p = 1.0;
};

class PsiSpec {
 public:
  PsiSpec(DomainSpec domain, std::vector<PolePart> poles,
          int series_order = 64);

  // -inf at a pole
  double value(const Complex& z) const;
  double normal_derivative(int component, double theta) const;
  Complex gradient(const Complex& z) const;
  double pole_coefficient_at(const Complex& z) const;  // p_j or 0

  const DomainSpec& domain() const { return dom_; }
  const std::vector<PolePart>& poles() const { return poles_; }

 private:
  DomainSpec dom_;
  std::vector<PolePart> poles_;
  std::vector<GreenPole> greens_;
};

// phi = 2*sum q_j G(.,z_j) + 2u + 2 log|g|, g = prod (z - root)
class PhiSpec {
 public:
  explicit PhiSpec(DomainSpec domain);
  PhiSpec(DomainSpec domain, std::vector<PolePart> green_part,
          std::optional<HarmonicExtension> harmonic_part = std::nullopt,
          std::vector<Complex> zero_roots = {}, int series_order = 64);

  double value(const Complex& z) const;  // -inf at poles/zeros
  double green_coefficient_at(const Complex& z) const;  // q_j or 0
  int zero_order_at(const Complex& z) const;
  bool trivial() const;

  const DomainSpec& domain() const { return dom_; }
  const std::vector<PolePart>& green_part() const { return green_part_; }
  const std::optional<HarmonicExtension>& harmonic_part() const {
    return harmonic_;
  }
  const std::vector<Complex>& zero_roots() const { return roots_; }

 private:
  DomainSpec dom_;
  std::vector<PolePart> green_part_;
  std::optional<HarmonicExtension> harmonic_;
  std::vector<Complex> roots_;
  std::vector<GreenPole> greens_;
};

class GainFunction {
 public:
  enum class Kind { Constant1, Exponential, Tabulated };

  static GainFunction constant1();
  static GainFunction exponential(double a);
  // samples (t_i, c_i), t strictly increasing from 0; linear interpolation
  // in log t between positive nodes, constant extension beyond the last
  static GainFunction tabulated(std::vector<double> t, std::vector<double> c);

  double value(double t) const;
  // integral_0_inf of c(t) e^{-t} dt; also runs the admissibility checks
  double validate() const;
  double integral() const;
  double tail(double t) const;          // h(t) = int_t^inf c e^{-s} ds
  double tail_inverse(double r) const;  // bisection to 1e-12
  // int_t^inf c(s) e^{-kappa s} ds, analytic tails per kind
  double weighted_tail(double kappa, double t) const;

  Kind kind() const { return kind_; }
  double exponent() const { return a_; }

 private:
  GainFunction() = default;
  Kind kind_ = Kind::Constant1;
  double a_ = 0.0;
  std::vector<double> ts_, cs_;
};

// evaluators consumed by the quadrature/minimizer modules
using AreaFn = std::function<double(const Complex&)>;
using BoundaryFn = std::function<double(int, double)>;  // component, theta

// rho_tilde = e^{-phi} c(-2 psi) on the interior
AreaFn rho_tilde_area(const PhiSpec& phi, const PsiSpec& psi,
                      const GainFunction& c);
// rho = e^{-phi} (dpsi/dv)^{-1} on the boundary
BoundaryFn rho_boundary(const PhiSpec& phi, const PsiSpec& psi);

// Lelong-number bookkeeping: 2q_j + 2p_j + 2 ord_{z_j}(g) >= 2(k_j+1) at
// every constrained point, by exact coefficient arithmetic
struct LelongReport {
  std::vector<double> mass;      // v(dd^c(phi+2psi), z_j)
  std::vector<double> required;  // 2(k_j+1)
};
LelongReport lelong_check(const PhiSpec& phi, const PsiSpec& psi,
                          const JetConstraints& jets);

}  // namespace minl2
