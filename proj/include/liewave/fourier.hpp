#pragma once

#include <memory>
#include <span>
#include <vector>

#include "liewave/coefficients.hpp"
#include "liewave/group_harmonics.hpp"

namespace liewave {

/// Values of a function at the nodes of a quadrature grid.
struct FunctionSamples {
  std::shared_ptr<const QuadratureGrid> grid;
  std::vector<Complex> values;
};

/// f^(xi) = int f(x) xi(x)^* dx for every xi in `band`, by quadrature. The
/// grid must be exact for `band` (same group, at least the same limit).
/// SU(2) uses separable sums over phi, psi and then theta.
FourierCoefficients forward_transform(const FunctionSamples& f, const Band& band, int workers = 1);

/// f(x) = sum d_xi Tr(xi(x) f^(xi)) at arbitrary SU(2) points.
std::vector<Complex> inverse_transform(const FourierCoefficients& coeffs,
                                       const std::vector<EulerAngles>& points);
/// Torus version at points x in [0, 2pi)^n.
std::vector<Complex> inverse_transform(const FourierCoefficients& coeffs,
                                       const std::vector<std::vector<double>>& points);
/// Evaluation at every node of `grid` (separable on SU(2)).
FunctionSamples synthesize(const FourierCoefficients& coeffs, std::shared_ptr<const QuadratureGrid> grid);

/// (sum d_xi ||f^(xi)||_HS^2)^{1/2}
double plancherel_norm(const FourierCoefficients& coeffs);

/// (sum_nodes w |f|^2)^{1/2}
double quadrature_l2_norm(const FunctionSamples& f);

}  // namespace liewave
