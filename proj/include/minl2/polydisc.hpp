// Product-domain machinery: tensor bases over products of disks/annuli,
// staircase ideals by exact rational arithmetic, the face and Shilov norms,
// the product minimal integrals, the splitting lemmas, and the product
// relation/extension reports.

#pragma once

#include "minl2/analysis.hpp"

namespace minl2 {

struct FactorData {
  DomainSpec domain;
  std::vector<PolePart> poles;  // z_{j,k}, p_{j,k}
  PhiSpec phi;
};

// M = D_1 x ... x D_n with psi = max_j sum_k p_{j,k} G_j and phi = sum phi_j
class ProductDomain {
 public:
  explicit ProductDomain(std::vector<FactorData> factors);

  int n() const { return static_cast<int>(factors_.size()); }
  const FactorData& factor(int j) const { return factors_[j]; }
  const PsiSpec& psi_factor(int j) const { return psis_[j]; }

  double psi(const std::vector<Complex>& z) const;  // max over factors
  double phi(const std::vector<Complex>& z) const;  // sum over factors

  // the constraint grid Z_0: all combinations of per-factor pole points,
  // flattened with factor 0 slowest (matching the tensor basis order)
  int beta_count() const;
  std::vector<int> beta_unflatten(int b) const;
  std::vector<Complex> beta_point(const std::vector<int>& beta) const;
  std::vector<double> beta_p(const std::vector<int>& beta) const;

 private:
  std::vector<FactorData> factors_;
  std::vector<PsiSpec> psis_;
};

// monomial tensor basis; flat index runs with factor 0 slowest, matching
// the Kronecker product order of the per-factor Grams
struct TensorBasis {
  std::vector<BasisSpec> factors;

  int size() const;
  std::vector<int> unflatten(int i) const;
  Complex derivative(int i, const std::vector<Complex>& z,
                     const std::vector<int>& order) const;
  Complex eval(int i, const std::vector<Complex>& z) const;
};

struct ProductMinResult {
  double value = 0.0;
  Eigen::VectorXcd coefficients;
  TensorBasis basis;
  bool converged = false;
  double residual = 0.0;

  Complex evaluate(const std::vector<Complex>& z) const;
};

// exponent sets of the monomial ideal attached to 2 psi at a grid point:
// a monomial w^alpha lies in the ideal iff sum_j (alpha_j+1)/p_j > 1;
// E holds the equality exponents, complement the constrained ones (<= 1)
struct StaircaseSets {
  std::vector<std::vector<int>> E;
  std::vector<std::vector<int>> complement;
};
StaircaseSets ideal_staircase(const std::vector<double>& p);
// exact rational membership test: sum_j (alpha_j+1)/p_j > 1
bool staircase_contains(const std::vector<double>& p,
                        const std::vector<int>& alpha);

struct IdealSpec {
  enum class Kind { MaximalIdeal, Staircase };
  Kind kind = Kind::MaximalIdeal;

  // MaximalIdeal: target value f(z_beta) per flattened beta
  std::vector<Complex> values;

  struct Coeff {
    std::vector<int> alpha;
    Complex d;
  };
  // Staircase: Taylor coefficients d_{beta,alpha} per flattened beta;
  // complement exponents not listed are pinned to zero
  std::vector<std::vector<Coeff>> coeffs;

  static IdealSpec maximal(std::vector<Complex> values);
  static IdealSpec staircase(std::vector<std::vector<Coeff>> coeffs);
};

// min int_{2psi<-t} |f|^2 c(-2 psi) prod e^{-phi_j} under the ideal
// constraints; c == 1 uses exact per-factor sublevel Grams (the region
// factors as a product), radial single-point data uses the exact layered
// formula, anything else falls back to masked tensor quadrature
ProductMinResult bergman_min_product(const ProductDomain& M,
                                     const GainFunction& c,
                                     const IdealSpec& ideal, double t,
                                     const SolveOptions& opt = {});

// min sum_j face norms, face j carrying the weight
// (sum_k p_{j,k} dG_j/dv)^{-1} e^{-phi_j} x prod_{l!=j} e^{-phi_l}
ProductMinResult hardy_dM_min(const ProductDomain& M, const IdealSpec& ideal,
                              const SolveOptions& opt = {});

// min (1/(2 pi)^n) int_S |f|^2 prod lambda_j under point-value constraints
ProductMinResult shilov_min(const ProductDomain& M,
                            const std::vector<BoundaryFn>& lambda,
                            const std::vector<Complex>& values,
                            const SolveOptions& opt = {});

// two-factor splitting lemmas with unit weights: the Shilov, single-face
// Hardy, and Bergman minima against the products of their 1-D factors
struct SplitScenario {
  std::vector<std::vector<Complex>> points;  // per factor
  Eigen::MatrixXcd h;  // target values at points[0][i] x points[1][j]
};
struct SplitReport {
  double shilov_defect = 0.0;
  double face_defect = 0.0;
  double bergman_defect = 0.0;
};
SplitReport product_split_check(const ProductDomain& M,
                                const SplitScenario& sc,
                                const SolveOptions& opt = {});

struct Theorem21Report {
  double M_H = 0.0;
  double M = 0.0;
  double integral_c = 1.0;
  double bound = 0.0;  // M / (pi * integral_c)
  double gap = 0.0;
  bool holds = false;
  bool equality = false;
  bool linear = false;  // G(h^{-1}(r)) linear on the sampled curve
};
Theorem21Report theorem21_relation(const ProductDomain& M,
                                   const GainFunction& c,
                                   const IdealSpec& ideal,
                                   const SolveOptions& opt = {});

enum class Normalization { PaperP2, P1 };

struct FactorStatement {
  bool harmonic_phi = false;     // phi_j purely harmonic
  double character_defect = 0.0; // annulus factors; 0 on the disk
  bool characters_match = false;
  bool ratio_checked = false;    // only disk factors support the formula
  bool ratio_constant = false;
  Complex c_j{0.0, 0.0};
  double spread = 0.0;
};

struct ShilovScenario {
  std::vector<DomainSpec> domains;
  std::vector<std::vector<Complex>> points;    // Z_j per factor
  std::vector<std::vector<Complex>> h_values;  // h_j at those points
  std::vector<PhiSpec> phis;
};

struct Theorem31Report {
  double M_S = 0.0;
  double M_H = 0.0;
  double bound = 0.0;  // M_H / (n pi^{n-1})
  double gap = 0.0;
  bool holds = false;
  bool equality = false;
  std::vector<FactorStatement> statements;
  bool statements_hold = false;
};
// normalization PaperP2 uses coefficient 2 in psi_j and the weights as
// printed; P1 uses coefficient 1; both are reported side by side upstream
Theorem31Report theorem31_relation(const ShilovScenario& sc,
                                   Normalization norm,
                                   const SolveOptions& opt = {});

struct ProductExtensionReport {
  double M_H = 0.0;
  double RHS_derived = 0.0;
  double RHS_printed = 0.0;  // with the 2^n pi^{n-1} constant as stated
  std::vector<std::vector<double>> c_jk;
  bool holds = false;
  bool attains_derived = false;
};
ProductExtensionReport cor21_bound(const ProductDomain& M,
                                   const IdealSpec& ideal,
                                   const SolveOptions& opt = {});

struct ProductUniformReport {
  double C_hat = 0.0;
  double worst_homogeneity = 0.0;
  int trials = 0;
};
// random targets over L_k = {sum alpha_j <= k} at every grid point
ProductUniformReport uniform_jet_extension_product(const ProductDomain& M,
                                                   int k, int trials,
                                                   unsigned seed = 7,
                                                   const SolveOptions& opt = {});

}  // namespace minl2
