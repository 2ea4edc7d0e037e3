#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liewave/coefficients.hpp"
#include "liewave/group_harmonics.hpp"

namespace liewave {

/// Diagonal symbol sigma_{-L}(xi) = diag(nu_j(xi)^2). Row j of a coefficient
/// block evolves with nu_j.
struct DiagonalSymbol {
  Band band;
  std::string name;
  int hormander_order = 1;
  std::map<RepIndex, std::vector<double>> nu_squared;

  const std::vector<double>& nu2(const RepIndex& rep) const;
  double nu(const RepIndex& rep, int j) const;
  double jap(const RepIndex& rep) const { return rep.jap(); }
};

DiagonalSymbol laplacian_symbol(const Band& band);

/// Tabulated nu_mu^2 = ell(ell+1) - mu^2 for X^2 + Y^2 on SU(2), r = 2.
/// With verify = true every spin is checked against the Euler-angle oracle
/// and a deviation above 1e-6 throws ErrorCode::verification.
DiagonalSymbol sublaplacian_symbol(const Band& band, bool verify = false);

struct OracleCheck {
  double max_deviation = 0.0;     // |extracted - tabulated| over entries
  double max_off_diagonal = 0.0;
  double max_variation = 0.0;     // spread of the symbol over sample points
  int reps_checked = 0;
  bool pass = false;
};

/// Extracts the sub-Laplacian symbol at `points_per_rep` random points for every
/// spin of `band` and compares with the closed form.
OracleCheck verify_sublaplacian_symbol(const Band& band, int points_per_rep = 4, std::uint64_t seed = 0);

/// sigma_T(g, xi) = xi(g)^* (T xi)(g).
CMatrix extract_symbol(const EulerOperatorField& op, const RepIndex& rep, const EulerAngles& g);

struct HormanderReport {
  int r = 1;
  double c_lower = 0.0;
  double c_upper = 0.0;
  double c_lower_half_band = 0.0;
  bool pass = false;
};

/// c_lower = min (nu_j+1)/<xi>^{1/r}, c_upper = max (nu_j+1)/<xi>. Passing also
/// requires that c_lower does not keep falling: its value over the full band
/// must stay within 5% of the value over the lower half band.
HormanderReport check_hormander_bounds(const DiagonalSymbol& sym, int r = 0);

}  // namespace liewave
