#pragma once

#include <compare>
#include <string>
#include <vector>

namespace liewave {

enum class GroupKind { su2, torus };

std::string to_string(GroupKind g);
GroupKind group_from_string(const std::string& name);

/// A point of the unitary dual. SU(2) irreps are labelled by 2*ell so that
/// half-integer spins stay exact; torus characters by an integer vector k.
struct RepIndex {
  GroupKind group = GroupKind::su2;
  int two_ell = 0;
  std::vector<int> k;

  static RepIndex su2(int two_ell);
  static RepIndex torus(std::vector<int> k);

  int dim() const { return group == GroupKind::su2 ? two_ell + 1 : 1; }
  double ell() const { return 0.5 * two_ell; }
  /// |xi|^2, the eigenvalue of -Laplacian on this representation.
  double laplacian_eigenvalue() const;
  /// <xi> = (1 + |xi|^2)^{1/2}
  double jap() const;
  /// Magnetic quantum number of basis vector i (SU(2) only): m_i = -ell + i.
  double m(int i) const { return -0.5 * two_ell + i; }

  std::string label() const;

  auto operator<=>(const RepIndex&) const = default;
  bool operator==(const RepIndex&) const = default;
};

/// A finite band of the dual: all SU(2) spins with 2*ell <= limit (optionally
/// integer spins only), or all torus characters with max|k_i| <= limit.
struct Band {
  GroupKind group = GroupKind::su2;
  int limit = 0;
  int torus_dim = 1;
  bool integer_only = false;

  static Band su2(int two_lmax, bool integer_only = false) {
    return Band{GroupKind::su2, two_lmax, 1, integer_only};
  }
  static Band torus(int kmax, int dim = 1) { return Band{GroupKind::torus, kmax, dim, false}; }

  std::vector<RepIndex> reps() const;
  bool contains(const RepIndex& rep) const;
  bool operator==(const Band&) const = default;
};

}  // namespace liewave
