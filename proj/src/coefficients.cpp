#include "liewave/coefficients.hpp"

#include <algorithm>

#include "liewave/error.hpp"

namespace liewave {

CMatrix& FourierCoefficients::at(const RepIndex& rep) {
  auto it = blocks_.find(rep);
  if (it == blocks_.end()) it = blocks_.emplace(rep, CMatrix::Zero(rep.dim(), rep.dim())).first;
  return it->second;
}

const CMatrix* FourierCoefficients::find(const RepIndex& rep) const {
  auto it = blocks_.find(rep);
  return it == blocks_.end() ? nullptr : &it->second;
}

void FourierCoefficients::set(const RepIndex& rep, CMatrix block) {
  if (block.rows() != rep.dim() || block.cols() != rep.dim())
    fail(ErrorCode::invalid_argument, "coefficient block for " + rep.label() + " must be " +
                                          std::to_string(rep.dim()) + "x" + std::to_string(rep.dim()));
  if (!band_.contains(rep))
    fail(ErrorCode::invalid_argument, "representation " + rep.label() + " lies outside the band");
  blocks_[rep] = std::move(block);
}

FourierCoefficients& FourierCoefficients::operator+=(const FourierCoefficients& other) {
  for (const auto& [rep, block] : other.blocks_) at(rep) += block;
  return *this;
}

FourierCoefficients& FourierCoefficients::operator*=(Complex c) {
  for (auto& [rep, block] : blocks_) block *= c;
  return *this;
}

FourierCoefficients FourierCoefficients::zeros(const Band& band) {
  FourierCoefficients f(band);
  for (const auto& rep : band.reps()) f.at(rep);
  return f;
}

FourierCoefficients operator+(FourierCoefficients a, const FourierCoefficients& b) {
  a += b;
  return a;
}

FourierCoefficients operator*(Complex c, FourierCoefficients a) {
  a *= c;
  return a;
}

double max_abs_difference(const FourierCoefficients& a, const FourierCoefficients& b) {
  double worst = 0.0;
  for (const auto& [rep, block] : a.blocks()) {
    const CMatrix* other = b.find(rep);
    const double d = other ? (block - *other).cwiseAbs().maxCoeff() : block.cwiseAbs().maxCoeff();
    worst = std::max(worst, d);
  }
  for (const auto& [rep, block] : b.blocks())
    if (!a.find(rep)) worst = std::max(worst, block.cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace liewave
