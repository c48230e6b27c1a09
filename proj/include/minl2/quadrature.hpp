// Boundary and area quadrature on the disk and annulus, sublevel-set
// regions for {2 psi < -t}, the coarea cross-check, and the exact
// monomial sublevel integral.

#pragma once

#include "minl2/weights.hpp"

namespace minl2 {

// Gauss-Legendre nodes/weights on (-1, 1)
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

struct BoundaryGrid {
  DomainSpec domain;
  int n = 0;  // uniform theta nodes per component
  static BoundaryGrid make(DomainSpec d, int n_theta);
  double theta(int i) const { return kTwoPi * i / n; }
};

// (1/2pi) sum_components oint f * weight |dz|
double integrate_boundary(const BoundaryGrid& g, const BoundaryFn& f,
                          const BoundaryFn& weight);
Complex integrate_boundary_c(const BoundaryGrid& g,
                             const std::function<Complex(int, double)>& f,
                             const BoundaryFn& weight);

// Polar quadrature: uniform trapezoid in theta, Gauss-Legendre in r over
// the radial intervals of the region along each ray.
struct AreaGrid {
  DomainSpec domain;
  std::vector<Complex> nodes;
  std::vector<double> weights;  // include the r dr dtheta jacobian

  // full domain
  static AreaGrid tensor(DomainSpec d, int n_r, int n_theta);
  // region {2 psi < -t}, radial intervals located by bisection per ray
  static AreaGrid sublevel(const PsiSpec& psi, double t, int n_r,
                           int n_theta);
  // region {psi > level} (level < 0), used by the coarea check
  static AreaGrid superlevel(const PsiSpec& psi, double level, int n_r,
                             int n_theta);

  // node indicator of {2 psi < -t}, for nesting checks on a fixed grid
  std::vector<char> sublevel_mask(const PsiSpec& psi, double t) const;
  AreaGrid masked(const std::vector<char>& keep) const;
};

double integrate_area(const AreaGrid& g, const AreaFn& f);
Complex integrate_area_c(const AreaGrid& g,
                         const std::function<Complex(const Complex&)>& f);
// node-sampled variant; sample count must match ("grid mismatch")
double integrate_area(const AreaGrid& g, const std::vector<double>& samples);

struct CoareaResult {
  double lhs = 0.0;   // integral of g over {psi >= log r}
  double rhs = 0.0;   // integral over t of the level-curve flux of g/|grad psi|
  double defect = 0.0;
};
// resolution drives rays/radial nodes; level count is resolution/8
CoareaResult coarea_check(const AreaFn& g, const PsiSpec& psi, double r,
                          int resolution);

struct MonomialTerm {
  std::vector<int> alpha;
  Complex b{1.0, 0.0};
};
// sum_alpha |b|^2 e^{-sum_j ((alpha_j+1)/p_j) t} pi^n / prod(alpha_j+1)
double monomial_sublevel_integral(const std::vector<double>& p,
                                  const std::vector<MonomialTerm>& terms,
                                  double t);

}  // namespace minl2
