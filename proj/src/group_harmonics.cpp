#include "liewave/group_harmonics.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "liewave/error.hpp"

namespace liewave {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_interior_theta(double theta) {
  if (!(theta > 0.0 && theta < kPi) || std::sin(theta) == 0.0)
    fail(ErrorCode::domain, "Euler angle theta must lie strictly inside (0, pi)");
}

void require_su2(const RepIndex& rep) {
  if (rep.group != GroupKind::su2)
    fail(ErrorCode::invalid_argument,
         "wigner_matrix needs an SU(2) index; use torus_character for torus reps");
}

// Diagonal phase matrices diag(e^{-i m_k angle}).
Eigen::VectorXcd phases(const RepIndex& rep, double angle) {
  Eigen::VectorXcd p(rep.dim());
  for (int k = 0; k < rep.dim(); ++k) p(k) = std::polar(1.0, -rep.m(k) * angle);
  return p;
}

Eigen::VectorXd magnetic(const RepIndex& rep) {
  Eigen::VectorXd m(rep.dim());
  for (int k = 0; k < rep.dim(); ++k) m(k) = rep.m(k);
  return m;
}

}  // namespace

EulerAngles canonical_euler(double phi, double theta, double psi) {
  require_interior_theta(theta);
  const double shift = std::floor(phi / kTwoPi) * kTwoPi;
  phi -= shift;
  psi -= shift;
  if (phi >= kTwoPi) phi -= kTwoPi;
  psi = psi - std::floor((psi + kTwoPi) / (2.0 * kTwoPi)) * (2.0 * kTwoPi);
  if (psi >= kTwoPi) psi -= 2.0 * kTwoPi;
  return {phi, theta, psi};
}

namespace su2 {

SmallD::SmallD(int two_ell) : two_ell_(two_ell) {
  if (two_ell < 0) fail(ErrorCode::invalid_argument, "2*ell must be nonnegative");
  const int d = two_ell + 1;
  const double ell = 0.5 * two_ell;
  generator_ = Eigen::MatrixXd::Zero(d, d);
  m_.resize(d);
  for (int i = 0; i < d; ++i) m_(i) = -ell + i;
  for (int i = 0; i + 1 < d; ++i) {
    // <m_{i+1}| J_+ |m_i>
    const double c = std::sqrt(ell * (ell + 1.0) - m_(i) * (m_(i) + 1.0));
    generator_(i, i + 1) = 0.5 * c;
    generator_(i + 1, i) = -0.5 * c;
  }
  // Jy = i B is Hermitian with spectrum {m}; the eigenvalues are snapped to
  // their exact values after the solve.
  const Eigen::MatrixXcd jy = Complex(0.0, 1.0) * generator_.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(jy);
  if (es.info() != Eigen::Success) fail(ErrorCode::verification, "Jy eigensolve failed");
  for (int i = 0; i < d; ++i) {
    if (std::abs(es.eigenvalues()(i) - m_(i)) > 1e-8)
      fail(ErrorCode::verification, "Jy spectrum deviates from the magnetic numbers");
  }
  eigvecs_ = es.eigenvectors();
}

Eigen::MatrixXd SmallD::at(double theta) const {
  const int d = dim();
  Eigen::VectorXcd ph(d);
  for (int i = 0; i < d; ++i) ph(i) = std::polar(1.0, -theta * m_(i));
  const Eigen::MatrixXcd r = eigvecs_ * ph.asDiagonal() * eigvecs_.adjoint();
  return r.real();
}

const SmallD& small_d(int two_ell) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<SmallD>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[two_ell];
  if (!slot) slot = std::make_unique<SmallD>(two_ell);
  return *slot;
}

CMatrix wigner_matrix(const RepIndex& rep, const EulerAngles& g) {
  require_su2(rep);
  const Eigen::MatrixXd d = small_d(rep.two_ell).at(g.theta);
  return phases(rep, g.phi).asDiagonal() * d.cast<Complex>() * phases(rep, g.psi).asDiagonal();
}

WignerJet wigner_jet(const RepIndex& rep, const EulerAngles& g) {
  require_su2(rep);
  const SmallD& sd = small_d(rep.two_ell);
  const Eigen::MatrixXd d0 = sd.at(g.theta);
  const Eigen::MatrixXd d1 = sd.generator() * d0;
  const Eigen::MatrixXd d2 = sd.generator() * d1;
  const Eigen::VectorXcd pl = phases(rep, g.phi);
  const Eigen::VectorXcd pr = phases(rep, g.psi);
  const auto left = pl.asDiagonal();
  const auto right = pr.asDiagonal();
  const Eigen::VectorXcd mi = Complex(0.0, -1.0) * magnetic(rep).cast<Complex>();  // -i m

  WignerJet j;
  j.value = left * d0.cast<Complex>() * right;
  j.d_theta = left * d1.cast<Complex>() * right;
  j.d_thetatheta = left * d2.cast<Complex>() * right;
  j.d_phi = mi.asDiagonal() * j.value;
  j.d_psi = j.value * mi.asDiagonal();
  j.d_phiphi = mi.asDiagonal() * j.d_phi;
  j.d_psipsi = j.d_psi * mi.asDiagonal();
  j.d_phipsi = mi.asDiagonal() * j.d_psi;
  j.d_phitheta = mi.asDiagonal() * j.d_theta;
  j.d_thetapsi = j.d_theta * mi.asDiagonal();
  return j;
}

Eigen::Matrix2cd element(const EulerAngles& g) {
  return wigner_matrix(RepIndex::su2(1), g);
}

EulerAngles euler_from_element(const Eigen::Matrix2cd& u) {
  const double theta = 2.0 * std::atan2(std::abs(u(0, 1)), std::abs(u(0, 0)));
  const double sum_half = std::arg(u(0, 0));   // (phi + psi) / 2
  const double diff_half = std::arg(u(0, 1));  // (phi - psi) / 2
  return canonical_euler(sum_half + diff_half, theta, sum_half - diff_half);
}

EulerAngles multiply(const EulerAngles& g1, const EulerAngles& g2) {
  return euler_from_element(element(g1) * element(g2));
}

}  // namespace su2

Complex torus_character(const RepIndex& rep, const std::vector<double>& x) {
  if (rep.group != GroupKind::torus || rep.k.size() != x.size())
    fail(ErrorCode::invalid_argument, "torus_character: index/point dimension mismatch");
  double phase = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) phase += rep.k[i] * x[i];
  return std::polar(1.0, phase);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) fail(ErrorCode::invalid_argument, "Gauss-Legendre needs n >= 1");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute P_n' at the converged root for the weight.
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -z;
    nodes[static_cast<std::size_t>(n - 1 - i)] = z;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

QuadratureGrid haar_quadrature(const Band& band) {
  if (band.limit < 0) fail(ErrorCode::invalid_argument, "band limit must be nonnegative");
  QuadratureGrid q;
  q.band = band;
  if (band.group == GroupKind::su2) {
    const int two = band.limit;
    const int n_phi = two + 2;
    const int n_psi = 2 * two + 2;
    const int n_theta = two / 2 + 2;
    std::vector<double> x, wx;
    gauss_legendre(n_theta, x, wx);
    for (int a = 0; a < n_phi; ++a) q.phis.push_back(kTwoPi * a / n_phi);
    for (int b = 0; b < n_psi; ++b) q.psis.push_back(-kTwoPi + 2.0 * kTwoPi * b / n_psi);
    for (int k = 0; k < n_theta; ++k) {
      // theta ascending <=> cos(theta) descending
      q.thetas.push_back(std::acos(x[static_cast<std::size_t>(n_theta - 1 - k)]));
      q.theta_weights.push_back(wx[static_cast<std::size_t>(n_theta - 1 - k)]);
    }
    const double norm = 1.0 / (2.0 * n_phi * n_psi);
    q.nodes.reserve(static_cast<std::size_t>(n_phi * n_psi * n_theta));
    for (int k = 0; k < n_theta; ++k)
      for (int b = 0; b < n_psi; ++b)
        for (int a = 0; a < n_phi; ++a) {
          q.nodes.push_back({q.phis[static_cast<std::size_t>(a)], q.thetas[static_cast<std::size_t>(k)],
                             q.psis[static_cast<std::size_t>(b)]});
          q.weights.push_back(q.theta_weights[static_cast<std::size_t>(k)] * norm);
        }
    return q;
  }
  const int n = 2 * band.limit + 1;
  q.torus_points = n;
  std::size_t total = 1;
  for (int d = 0; d < band.torus_dim; ++d) total *= static_cast<std::size_t>(n);
  q.torus_nodes.reserve(total);
  const double w = 1.0 / static_cast<double>(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<double> x(static_cast<std::size_t>(band.torus_dim));
    std::size_t rem = idx;
    for (int d = band.torus_dim - 1; d >= 0; --d) {
      x[static_cast<std::size_t>(d)] = kTwoPi * static_cast<double>(rem % n) / n;
      rem /= static_cast<std::size_t>(n);
    }
    q.torus_nodes.push_back(std::move(x));
    q.weights.push_back(w);
  }
  return q;
}

// ---------------------------------------------------------------------------

Complex EulerOperator::apply(const EulerDerivatives& d) const {
  return phiphi * d.d_phiphi + phitheta * d.d_phitheta + phipsi * d.d_phipsi +
         thetatheta * d.d_thetatheta + thetapsi * d.d_thetapsi + psipsi * d.d_psipsi +
         phi * d.d_phi + theta * d.d_theta + psi * d.d_psi + zero * d.f;
}

CMatrix EulerOperator::apply(const su2::WignerJet& j) const {
  return phiphi * j.d_phiphi + phitheta * j.d_phitheta + phipsi * j.d_phipsi +
         thetatheta * j.d_thetatheta + thetapsi * j.d_thetapsi + psipsi * j.d_psipsi +
         phi * j.d_phi + theta * j.d_theta + psi * j.d_psi + zero * j.value;
}

EulerOperator sublaplacian_euler(const EulerAngles& g) {
  require_interior_theta(g.theta);
  const double s = std::sin(g.theta), c = std::cos(g.theta);
  EulerOperator op;
  op.phiphi = 1.0 / (s * s);
  op.phipsi = -2.0 * c / (s * s);
  op.psipsi = 1.0 / (s * s) - 1.0;
  op.thetatheta = 1.0;
  op.theta = c / s;
  return op;
}

EulerOperator laplacian_euler(const EulerAngles& g) {
  EulerOperator op = sublaplacian_euler(g);
  op.psipsi += 1.0;
  return op;
}

EulerOperator d_psi_euler(const EulerAngles&) {
  EulerOperator op;
  op.psi = 1.0;
  return op;
}

EulerOperator identity_euler(const EulerAngles&) {
  EulerOperator op;
  op.zero = 1.0;
  return op;
}

VectorFieldAt field_x(const EulerAngles& g) {
  require_interior_theta(g.theta);
  const double st = std::sin(g.theta), ct = std::cos(g.theta);
  const double sp = std::sin(g.psi), cp = std::cos(g.psi);
  VectorFieldAt v;
  v.a[0] = -cp / st;
  v.a[1] = sp;
  v.a[2] = ct * cp / st;
  v.da_dtheta[0] = cp * ct / (st * st);
  v.da_dtheta[2] = -cp / (st * st);
  v.da_dpsi[0] = sp / st;
  v.da_dpsi[1] = cp;
  v.da_dpsi[2] = -ct * sp / st;
  return v;
}

VectorFieldAt field_y(const EulerAngles& g) {
  require_interior_theta(g.theta);
  const double st = std::sin(g.theta), ct = std::cos(g.theta);
  const double sp = std::sin(g.psi), cp = std::cos(g.psi);
  VectorFieldAt v;
  v.a[0] = sp / st;
  v.a[1] = cp;
  v.a[2] = -ct * sp / st;
  v.da_dtheta[0] = -sp * ct / (st * st);
  v.da_dtheta[2] = sp / (st * st);
  v.da_dpsi[0] = cp / st;
  v.da_dpsi[1] = -sp;
  v.da_dpsi[2] = -ct * cp / st;
  return v;
}

VectorFieldAt field_z(const EulerAngles&) {
  VectorFieldAt v;
  v.a[2] = 1.0;
  return v;
}

namespace {

// Directional derivative u(v^j) of the coefficient v^j; coefficients do not
// depend on phi.
double derivative_along(const VectorFieldAt& u, const VectorFieldAt& v, int j) {
  return u.a[1] * v.da_dtheta[j] + u.a[2] * v.da_dpsi[j];
}

}  // namespace

EulerOperator compose(const VectorFieldAt& u, const VectorFieldAt& v) {
  EulerOperator op;
  op.phiphi = u.a[0] * v.a[0];
  op.thetatheta = u.a[1] * v.a[1];
  op.psipsi = u.a[2] * v.a[2];
  op.phitheta = u.a[0] * v.a[1] + u.a[1] * v.a[0];
  op.phipsi = u.a[0] * v.a[2] + u.a[2] * v.a[0];
  op.thetapsi = u.a[1] * v.a[2] + u.a[2] * v.a[1];
  op.phi = derivative_along(u, v, 0);
  op.theta = derivative_along(u, v, 1);
  op.psi = derivative_along(u, v, 2);
  return op;
}

EulerOperator bracket(const VectorFieldAt& u, const VectorFieldAt& v) {
  EulerOperator op;
  op.phi = derivative_along(u, v, 0) - derivative_along(v, u, 0);
  op.theta = derivative_along(u, v, 1) - derivative_along(v, u, 1);
  op.psi = derivative_along(u, v, 2) - derivative_along(v, u, 2);
  return op;
}

EulerDerivatives band_limited_derivatives(const FourierCoefficients& coeffs, const EulerAngles& g) {
  require_interior_theta(g.theta);
  EulerDerivatives out{};
  auto tr = [](const CMatrix& a, const CMatrix& b) { return (a.cwiseProduct(b.transpose())).sum(); };
  for (const auto& [rep, block] : coeffs.blocks()) {
    const su2::WignerJet j = su2::wigner_jet(rep, g);
    const double d = rep.dim();
    out.f += d * tr(j.value, block);
    out.d_phi += d * tr(j.d_phi, block);
    out.d_theta += d * tr(j.d_theta, block);
    out.d_psi += d * tr(j.d_psi, block);
    out.d_phiphi += d * tr(j.d_phiphi, block);
    out.d_phitheta += d * tr(j.d_phitheta, block);
    out.d_phipsi += d * tr(j.d_phipsi, block);
    out.d_thetatheta += d * tr(j.d_thetatheta, block);
    out.d_thetapsi += d * tr(j.d_thetapsi, block);
    out.d_psipsi += d * tr(j.d_psipsi, block);
  }
  return out;
}

std::vector<Complex> apply_operator_pointwise(const EulerOperatorField& op,
                                              const FourierCoefficients& coeffs,
                                              const std::vector<EulerAngles>& points) {
  if (coeffs.band().group != GroupKind::su2)
    fail(ErrorCode::invalid_argument, "Euler-angle operators act on SU(2) functions only");
  std::vector<Complex> out;
  out.reserve(points.size());
  for (const auto& g : points) out.push_back(op(g).apply(band_limited_derivatives(coeffs, g)));
  return out;
}

std::vector<Complex> apply_sublaplacian_pointwise(const FourierCoefficients& coeffs,
                                                  const std::vector<EulerAngles>& points) {
  return apply_operator_pointwise(sublaplacian_euler, coeffs, points);
}

Complex apply_operator_callable(const EulerOperatorField& op,
                                const std::function<Complex(const EulerAngles&)>& f,
                                const EulerAngles& g, double h) {
  require_interior_theta(g.theta);
  if (g.theta - 2.0 * h <= 0.0 || g.theta + 2.0 * h >= kPi)
    fail(ErrorCode::domain, "finite-difference stencil crosses sin(theta) = 0");
  auto at = [&](double dphi, double dtheta, double dpsi) {
    return f(EulerAngles{g.phi + dphi, g.theta + dtheta, g.psi + dpsi});
  };
  auto shift = [](int axis, double t) {
    double v[3] = {0, 0, 0};
    v[axis] = t;
    return std::array<double, 3>{v[0], v[1], v[2]};
  };
  const double c1[4] = {1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12};
  const double o1[4] = {-2, -1, 1, 2};
  const Complex f0 = at(0, 0, 0);
  EulerDerivatives d{};
  d.f = f0;
  Complex* first[3] = {&d.d_phi, &d.d_theta, &d.d_psi};
  Complex* second[3] = {&d.d_phiphi, &d.d_thetatheta, &d.d_psipsi};
  for (int ax = 0; ax < 3; ++ax) {
    Complex s1 = 0, s2 = -30.0 * f0;
    for (int k = 0; k < 4; ++k) {
      const auto s = shift(ax, o1[k] * h);
      const Complex v = at(s[0], s[1], s[2]);
      s1 += c1[k] * v;
      s2 += (std::abs(o1[k]) == 1 ? 16.0 : -1.0) * v;
    }
    *first[ax] = s1 / h;
    *second[ax] = s2 / (12.0 * h * h);
  }
  auto mixed = [&](int a, int b) {
    Complex s = 0;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const auto sa = shift(a, o1[i] * h);
        const auto sb = shift(b, o1[k] * h);
        s += c1[i] * c1[k] * at(sa[0] + sb[0], sa[1] + sb[1], sa[2] + sb[2]);
      }
    return s / (h * h);
  };
  d.d_phitheta = mixed(0, 1);
  d.d_phipsi = mixed(0, 2);
  d.d_thetapsi = mixed(1, 2);
  return op(g).apply(d);
}

}  // namespace liewave
