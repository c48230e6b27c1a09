// Single-domain theorem engines: G(t) sweeps with concavity/linearity
// verdicts, the boundary-vs-area minimal-integral relation with equality
// certificates, the extremal-function formula on the disk, the kernel gap,
// and the optimal extension constants.

#pragma once

#include "minl2/minimize.hpp"

namespace minl2 {

struct GCurvePoint {
  double t = 0.0;
  double r = 0.0;  // h(t)
  double G = 0.0;
  MinResult min;
};

struct GCurve {
  std::vector<GCurvePoint> points;
  double h0 = 1.0;  // h(0) = integral of c e^{-t}
};

GCurve g_curve(const PhiSpec& phi, const PsiSpec& psi, const GainFunction& c,
               const JetConstraints& jets, const std::vector<double>& t_grid,
               const SolveOptions& opt = {});

struct ConcavityReport {
  bool concave = false;
  bool linear = false;
  // chord defects of G as a function of r (positive above chords)
  double max_chord_defect = 0.0;  // largest positive (concavity scale)
  double max_abs_chord_defect = 0.0;
  bool decay_ok = false;  // G(t_max) consistent with G -> 0 as r -> 0
  double eps = 0.0;       // threshold used
};
ConcavityReport concavity_report(const GCurve& curve,
                                 double eps_rel = 1e-6);

struct RelationReport {
  double M_H = 0.0;
  double M = 0.0;
  double integral_c = 1.0;
  double bound = 0.0;  // M / (pi * integral_c)
  double gap = 0.0;    // bound - M_H
  bool holds = false;      // gap >= -1e-6 * bound
  bool equality = false;   // |gap| <= 1e-6 * bound
};
RelationReport theorem1_relation(const PhiSpec& phi, const PsiSpec& psi,
                                 const GainFunction& c,
                                 const JetConstraints& jets,
                                 const SolveOptions& opt = {});

struct EqualityCertificate {
  bool stmt1 = false;  // phi + 2 psi == 2 sum (k_j+1) G + 2u symbolically
  bool stmt2 = false;  // psi poles exactly at the constrained points
  bool stmt3 = false;  // character condition (disk: always; annulus: defect)
  bool stmt4 = false;  // ratio limits give a constant c0 (disk only)
  bool stmt4_checked = false;
  double character_defect = 0.0;
  Complex c0{0.0, 0.0};
  double c0_spread = 0.0;
  bool verdict = false;
};
// request_stmt4 = true insists on the ratio-limit check, which only the
// disk supports ("statement (4) computable only on the disk" elsewhere)
EqualityCertificate equality_certificate(const PhiSpec& phi,
                                         const PsiSpec& psi,
                                         const JetConstraints& jets,
                                         bool request_stmt4 = false);

struct ExtremalResult {
  std::function<Complex(const Complex&)> F0;
  Complex c0{0.0, 0.0};
  double jet_residual = 0.0;       // max |F0^(l)(z_j)/l! - a_{j,l}|
  double area_value = 0.0;         // int |F0|^2 rho_tilde
  double boundary_value = 0.0;     // (1/2pi) oint |F0|^2 rho
};
ExtremalResult extremal_disk(const PhiSpec& phi, const PsiSpec& psi,
                             const GainFunction& c,
                             const JetConstraints& jets,
                             const SolveOptions& opt = {});

struct SaitohReport {
  double K_hat = 0.0;
  double piB = 0.0;
  double gap = 0.0;
  double error_estimate = 0.0;
};
SaitohReport saitoh_gap(const DomainSpec& d, const Complex& z,
                        const SolveOptions& opt = {});

struct ExtensionBoundReport {
  double M_H = 0.0;
  double RHS_derived = 0.0;
  double RHS_printed = 0.0;  // 2x, as stated in the source inequality
  std::vector<double> t_j, c_beta, lambda_j, alpha_j;
  bool holds = false;            // M_H <= RHS_printed (1 + 1e-6)
  bool attains_derived = false;  // |M_H - RHS_derived| <= 1e-6 rel
};
// lambda given as boundary samples (uniform per component); its interior
// values use the log-harmonic extension exp(harmonic ext of log lambda)
ExtensionBoundReport extension_bound(
    const DomainSpec& d, const std::vector<Complex>& points,
    const std::vector<int>& ks, const std::vector<Complex>& as,
    const std::vector<std::vector<double>>& lambda_samples,
    const SolveOptions& opt = {});

struct UniformExtensionReport {
  double C_hat = 0.0;
  double worst_homogeneity = 0.0;  // |value(2a) - 4 value(a)| / value(a)
  int trials = 0;
};
UniformExtensionReport uniform_jet_extension(const DomainSpec& d,
                                             const std::vector<Complex>& points,
                                             int k, int trials,
                                             unsigned seed = 7,
                                             const SolveOptions& opt = {});

}  // namespace minl2
