#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "liewave/coefficients.hpp"
#include "liewave/rep_index.hpp"

namespace liewave {

/// z-y-z Euler angles: g = exp(-i phi Jz) exp(-i theta Jy) exp(-i psi Jz).
/// Ranges phi in [0, 2pi), theta in (0, pi), psi in [-2pi, 2pi) cover SU(2)
/// once up to a null set.
struct EulerAngles {
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;
};

/// Wraps phi and psi into their canonical ranges (a joint shift keeps the
/// group element fixed) and rejects theta outside (0, pi).
EulerAngles canonical_euler(double phi, double theta, double psi);

namespace su2 {

/// Spectral data for the small Wigner matrix d^ell(theta) = exp(theta B),
/// B = (J_- - J_+)/2. Built once per spin from the eigendecomposition of Jy,
/// so the derivative d' = B d is exact rather than a finite difference.
class SmallD {
 public:
  explicit SmallD(int two_ell);

  int two_ell() const { return two_ell_; }
  int dim() const { return two_ell_ + 1; }
  Eigen::MatrixXd at(double theta) const;
  const Eigen::MatrixXd& generator() const { return generator_; }

 private:
  int two_ell_;
  Eigen::MatrixXd generator_;
  Eigen::MatrixXcd eigvecs_;
  Eigen::VectorXd m_;
};

/// Shared immutable SmallD instance for a spin (thread-safe lazy cache).
const SmallD& small_d(int two_ell);

/// d_xi x d_xi matrix xi(g) with entries e^{-i m_i phi} d_ij(theta) e^{-i m_j psi}.
CMatrix wigner_matrix(const RepIndex& rep, const EulerAngles& g);

/// First and second Euler-angle partial derivatives of xi(g), evaluated
/// exactly through the trigonometric-polynomial structure of the entries.
struct WignerJet {
  CMatrix value, d_phi, d_theta, d_psi;
  CMatrix d_phiphi, d_phitheta, d_phipsi, d_thetatheta, d_thetapsi, d_psipsi;
};
WignerJet wigner_jet(const RepIndex& rep, const EulerAngles& g);

/// SU(2) element in the spin-1/2 representation, basis ordered m = -1/2, +1/2.
Eigen::Matrix2cd element(const EulerAngles& g);
/// Inverse of `element` (generic points, sin(theta) != 0).
EulerAngles euler_from_element(const Eigen::Matrix2cd& u);
/// Euler angles of the product g1 g2.
EulerAngles multiply(const EulerAngles& g1, const EulerAngles& g2);

}  // namespace su2

/// Torus character e^{i k.x}.
Complex torus_character(const RepIndex& rep, const std::vector<double>& x);

/// Tensor-product quadrature for the normalised Haar measure. SU(2): uniform
/// trapezoid in phi and psi, Gauss-Legendre in cos(theta). Torus: uniform
/// trapezoid per axis. Exact for products of two matrix entries inside `band`.
struct QuadratureGrid {
  Band band;
  // SU(2) axes and flattened nodes, node index = (it * n_psi + ipsi) * n_phi + iphi.
  std::vector<double> phis, thetas, theta_weights, psis;
  std::vector<EulerAngles> nodes;
  // Torus: points per axis and flattened lexicographic nodes.
  int torus_points = 0;
  std::vector<std::vector<double>> torus_nodes;
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
};

QuadratureGrid haar_quadrature(const Band& band);

/// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// ---------------------------------------------------------------------------
// Euler-angle differential operators (pointwise oracle).

/// Values of f and its first and second partials at a point.
struct EulerDerivatives {
  Complex f, d_phi, d_theta, d_psi;
  Complex d_phiphi, d_phitheta, d_phipsi, d_thetatheta, d_thetapsi, d_psipsi;
};

/// Coefficients of a linear differential operator of order <= 2 frozen at one
/// point of the Euler chart.
struct EulerOperator {
  double phiphi = 0, phitheta = 0, phipsi = 0, thetatheta = 0, thetapsi = 0, psipsi = 0;
  double phi = 0, theta = 0, psi = 0, zero = 0;

  Complex apply(const EulerDerivatives& d) const;
  CMatrix apply(const su2::WignerJet& jet) const;
};

using EulerOperatorField = std::function<EulerOperator(const EulerAngles&)>;

/// X^2 + Y^2 written out in Euler angles.
EulerOperator sublaplacian_euler(const EulerAngles& g);
/// Full Laplacian: the sub-Laplacian plus the square of the third field d/dpsi.
EulerOperator laplacian_euler(const EulerAngles& g);
/// d/dpsi, the left-invariant field completing X, Y to a basis.
EulerOperator d_psi_euler(const EulerAngles& g);
EulerOperator identity_euler(const EulerAngles& g);

/// Left-invariant vector field a^phi d_phi + a^theta d_theta + a^psi d_psi with
/// the partials of its coefficients (they depend on theta and psi only).
struct VectorFieldAt {
  double a[3] = {0, 0, 0};       // components along (phi, theta, psi)
  double da_dtheta[3] = {0, 0, 0};
  double da_dpsi[3] = {0, 0, 0};
};
using VectorField = std::function<VectorFieldAt(const EulerAngles&)>;

VectorFieldAt field_x(const EulerAngles& g);
VectorFieldAt field_y(const EulerAngles& g);
VectorFieldAt field_z(const EulerAngles& g);

/// Second-order operator U V (apply V first).
EulerOperator compose(const VectorFieldAt& u, const VectorFieldAt& v);
/// First-order operator [U, V] = U V - V U.
EulerOperator bracket(const VectorFieldAt& u, const VectorFieldAt& v);

/// Derivatives of a band-limited function f = sum d_xi Tr(xi(g) f^(xi)).
EulerDerivatives band_limited_derivatives(const FourierCoefficients& coeffs, const EulerAngles& g);

/// Applies an Euler-angle operator to a band-limited function at each point.
std::vector<Complex> apply_operator_pointwise(const EulerOperatorField& op,
                                              const FourierCoefficients& coeffs,
                                              const std::vector<EulerAngles>& points);

/// Sub-Laplacian of a band-limited function evaluated at `points`.
std::vector<Complex> apply_sublaplacian_pointwise(const FourierCoefficients& coeffs,
                                                  const std::vector<EulerAngles>& points);

/// Same operator on an arbitrary callable, with 4th-order central differences
/// of step h in each Euler angle.
Complex apply_operator_callable(const EulerOperatorField& op,
                                const std::function<Complex(const EulerAngles&)>& f,
                                const EulerAngles& g, double h = 1e-3);

}  // namespace liewave
