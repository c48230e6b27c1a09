#include "minl2/quadrature.hpp"

#include <cmath>

namespace minl2 {

namespace {

[[noreturn]] void fail(const char* msg) { throw std::runtime_error(msg); }

// radial intervals where s(r) < 0 on (r_lo, r_hi), located by scanning and
// bisection of the sign changes
std::vector<std::pair<double, double>> negative_intervals(
    const std::function<double(double)>& s, double r_lo, double r_hi,
    int n_scan) {
  std::vector<double> r(n_scan + 1), v(n_scan + 1);
  for (int k = 0; k <= n_scan; ++k) {
    r[k] = r_lo + (r_hi - r_lo) * k / n_scan;
    double rr = std::min(std::max(r[k], r_lo + 1e-13), r_hi - 1e-13);
    v[k] = s(rr);
  }
  auto bisect = [&](double a, double b) {
    // s(a), s(b) have opposite sign
    double fa = s(std::min(std::max(a, r_lo + 1e-13), r_hi - 1e-13));
    for (int it = 0; it < 100 && b - a > 1e-14; ++it) {
      double m = 0.5 * (a + b);
      double fm = s(m);
      if ((fa < 0.0) == (fm < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    return 0.5 * (a + b);
  };
  std::vector<std::pair<double, double>> out;
  bool inside = v[0] < 0.0;
  double start = inside ? r_lo : 0.0;
  for (int k = 1; k <= n_scan; ++k) {
    bool neg = v[k] < 0.0;
    if (neg && !inside) {
      start = bisect(r[k - 1], r[k]);
      inside = true;
    } else if (!neg && inside) {
      out.emplace_back(start, bisect(r[k - 1], r[k]));
      inside = false;
    }
  }
  if (inside) out.emplace_back(start, r_hi);
  return out;
}

AreaGrid ray_adapted(const DomainSpec& d,
                     const std::function<double(const Complex&)>& s,
                     int n_r, int n_theta) {
  std::vector<double> gx, gw;
  gauss_legendre(n_r, gx, gw);
  AreaGrid g;
  g.domain = d;
  double r_lo = d.inner_radius();
  double dth = kTwoPi / n_theta;
  for (int i = 0; i < n_theta; ++i) {
    double th = dth * i;
    Complex dir = std::polar(1.0, th);
    auto ray = [&](double r) { return s(r * dir); };
    auto intervals = negative_intervals(ray, r_lo, 1.0, 256);
    for (const auto& [a, b] : intervals) {
      double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      for (int k = 0; k < n_r; ++k) {
        double r = mid + half * gx[k];
        g.nodes.push_back(r * dir);
        g.weights.push_back(half * gw[k] * r * dth);
      }
    }
  }
  return g;
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton from the Chebyshev-based initial guess
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    double ww = 2.0 / ((1.0 - t * t) * dp * dp);
    w[i] = ww;
    w[n - 1 - i] = ww;
  }
}

BoundaryGrid BoundaryGrid::make(DomainSpec d, int n_theta) {
  if (n_theta < 2) fail("grid mismatch");
  return {d, n_theta};
}

double integrate_boundary(const BoundaryGrid& g, const BoundaryFn& f,
                          const BoundaryFn& weight) {
  double total = 0.0;
  for (int c = 0; c < g.domain.components(); ++c) {
    double R = g.domain.component_radius(c);
    double s = 0.0;
    for (int i = 0; i < g.n; ++i) {
      double th = g.theta(i);
      s += f(c, th) * weight(c, th);
    }
    total += s * R * (kTwoPi / g.n);
  }
  return total / kTwoPi;
}

Complex integrate_boundary_c(const BoundaryGrid& g,
                             const std::function<Complex(int, double)>& f,
                             const BoundaryFn& weight) {
  Complex total(0.0, 0.0);
  for (int c = 0; c < g.domain.components(); ++c) {
    double R = g.domain.component_radius(c);
    Complex s(0.0, 0.0);
    for (int i = 0; i < g.n; ++i) {
      double th = g.theta(i);
      s += f(c, th) * weight(c, th);
    }
    total += s * R * (kTwoPi / g.n);
  }
  return total / kTwoPi;
}

AreaGrid AreaGrid::tensor(DomainSpec d, int n_r, int n_theta) {
  std::vector<double> gx, gw;
  gauss_legendre(n_r, gx, gw);
  AreaGrid g;
  g.domain = d;
  double r_lo = d.inner_radius();
  double mid = 0.5 * (r_lo + 1.0), half = 0.5 * (1.0 - r_lo);
  double dth = kTwoPi / n_theta;
  for (int i = 0; i < n_theta; ++i) {
    Complex dir = std::polar(1.0, dth * i);
    for (int k = 0; k < n_r; ++k) {
      double r = mid + half * gx[k];
      g.nodes.push_back(r * dir);
      g.weights.push_back(half * gw[k] * r * dth);
    }
  }
  return g;
}

AreaGrid AreaGrid::sublevel(const PsiSpec& psi, double t, int n_r,
                            int n_theta) {
  if (t < 0.0) fail("range");
  auto s = [&psi, t](const Complex& z) { return 2.0 * psi.value(z) + t; };
  return ray_adapted(psi.domain(), s, n_r, n_theta);
}

AreaGrid AreaGrid::superlevel(const PsiSpec& psi, double level, int n_r,
                              int n_theta) {
  auto s = [&psi, level](const Complex& z) { return level - psi.value(z); };
  return ray_adapted(psi.domain(), s, n_r, n_theta);
}

std::vector<char> AreaGrid::sublevel_mask(const PsiSpec& psi,
                                          double t) const {
  std::vector<char> keep(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i)
    keep[i] = 2.0 * psi.value(nodes[i]) < -t ? 1 : 0;
  return keep;
}

AreaGrid AreaGrid::masked(const std::vector<char>& keep) const {
  if (keep.size() != nodes.size()) fail("grid mismatch");
  AreaGrid g;
  g.domain = domain;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (keep[i]) {
      g.nodes.push_back(nodes[i]);
      g.weights.push_back(weights[i]);
    }
  return g;
}

double integrate_area(const AreaGrid& g, const AreaFn& f) {
  double s = 0.0;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    s += g.weights[i] * f(g.nodes[i]);
  return s;
}

Complex integrate_area_c(const AreaGrid& g,
                         const std::function<Complex(const Complex&)>& f) {
  Complex s(0.0, 0.0);
  for (size_t i = 0; i < g.nodes.size(); ++i)
    s += g.weights[i] * f(g.nodes[i]);
  return s;
}

double integrate_area(const AreaGrid& g, const std::vector<double>& samples) {
  if (samples.size() != g.nodes.size()) fail("grid mismatch");
  double s = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) s += g.weights[i] * samples[i];
  return s;
}

CoareaResult coarea_check(const AreaFn& g, const PsiSpec& psi, double r,
                          int resolution) {
  if (!(r > 0.0 && r < 1.0)) fail("range");
  const double level = std::log(r);
  const int n_theta = resolution;
  const int n_r = std::max(resolution / 16, 16);

  CoareaResult res;
  res.lhs = integrate_area(AreaGrid::superlevel(psi, level, n_r, n_theta), g);

  // rhs: trace the level curve {psi = t} by one radial root per ray (the
  // outermost crossing), integrate g/|grad psi| along it, then midpoint
  // rule in t
  const int n_levels = std::max(resolution / 8, 8);
  double dth = kTwoPi / n_theta;
  auto level_flux = [&](double t) {
    std::vector<double> R(n_theta), val(n_theta);
    for (int i = 0; i < n_theta; ++i) {
      Complex dir = std::polar(1.0, dth * i);
      double lo = psi.domain().inner_radius(), hi = 1.0;
      // outermost crossing: psi > t near the boundary, scan inward
      const int n_scan = 512;
      int found = -1;
      double prev_r = hi - 1e-13;
      double prev_v = psi.value(prev_r * dir) - t;
      for (int k = 1; k <= n_scan; ++k) {
        double rr = hi - (hi - lo) * k / n_scan;
        rr = std::max(rr, lo + 1e-13);
        double v = psi.value(rr * dir) - t;
        if (prev_v > 0.0 && v <= 0.0) {
          // bisect [rr, prev_r]
          double a = rr, b = prev_r;
          for (int it = 0; it < 100 && b - a > 1e-14; ++it) {
            double m = 0.5 * (a + b);
            (psi.value(m * dir) - t <= 0.0 ? a : b) = m;
          }
          R[i] = 0.5 * (a + b);
          found = k;
          break;
        }
        prev_r = rr;
        prev_v = v;
      }
      if (found < 0) fail("resolution too coarse");
      Complex z = R[i] * dir;
      val[i] = g(z) / std::abs(psi.gradient(z));
    }
    double s = 0.0;
    for (int i = 0; i < n_theta; ++i) {
      double Rp = (R[(i + 1) % n_theta] - R[(i + n_theta - 1) % n_theta]) /
                  (2.0 * dth);
      s += val[i] * std::sqrt(Rp * Rp + R[i] * R[i]) * dth;
    }
    return s;
  };

  double dt = -level / n_levels;
  for (int m = 0; m < n_levels; ++m)
    res.rhs += level_flux(level + (m + 0.5) * dt) * dt;
  res.defect = std::abs(res.lhs - res.rhs);
  return res;
}

double monomial_sublevel_integral(const std::vector<double>& p,
                                  const std::vector<MonomialTerm>& terms,
                                  double t) {
  if (t < 0.0) fail("range");
  const size_t n = p.size();
  double total = 0.0;
  for (const auto& term : terms) {
    if (term.alpha.size() != n) fail("grid mismatch");
    double expo = 0.0, denom = 1.0;
    for (size_t j = 0; j < n; ++j) {
      expo += (term.alpha[j] + 1) / p[j];
      denom *= term.alpha[j] + 1;
    }
    total += std::norm(term.b) * std::exp(-expo * t) *
             std::pow(kPi, double(n)) / denom;
  }
  return total;
}

}  // namespace minl2
