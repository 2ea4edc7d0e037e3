#pragma once

#include <complex>
#include <map>

#include <Eigen/Dense>

#include "liewave/rep_index.hpp"

namespace liewave {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Matrix-valued Fourier coefficients f^(xi), one d_xi x d_xi block per
/// representation. Absent keys are zero blocks. Iteration follows the
/// canonical RepIndex order.
class FourierCoefficients {
 public:
  FourierCoefficients() = default;
  explicit FourierCoefficients(Band band) : band_(band) {}

  const Band& band() const { return band_; }

  /// Block for `rep`, created as zeros on first access.
  CMatrix& at(const RepIndex& rep);
  /// Read-only block; returns nullptr when absent.
  const CMatrix* find(const RepIndex& rep) const;
  void set(const RepIndex& rep, CMatrix block);

  const std::map<RepIndex, CMatrix>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }

  FourierCoefficients& operator+=(const FourierCoefficients& other);
  FourierCoefficients& operator*=(Complex c);

  /// Band with every representation filled by zeros.
  static FourierCoefficients zeros(const Band& band);

 private:
  Band band_{};
  std::map<RepIndex, CMatrix> blocks_;
};

FourierCoefficients operator+(FourierCoefficients a, const FourierCoefficients& b);
FourierCoefficients operator*(Complex c, FourierCoefficients a);

/// Largest entrywise |a - b| over the union of both supports.
double max_abs_difference(const FourierCoefficients& a, const FourierCoefficients& b);

}  // namespace liewave
