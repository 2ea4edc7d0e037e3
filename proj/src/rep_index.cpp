#include "liewave/rep_index.hpp"

#include <cmath>
#include <cstdlib>

#include "liewave/error.hpp"

namespace liewave {

std::string to_string(GroupKind g) { return g == GroupKind::su2 ? "su2" : "torus"; }

GroupKind group_from_string(const std::string& name) {
  if (name == "su2" || name == "SU2") return GroupKind::su2;
  if (name == "torus") return GroupKind::torus;
  fail(ErrorCode::invalid_argument, "unknown group '" + name + "' (expected su2 or torus)");
}

RepIndex RepIndex::su2(int two_ell) {
  if (two_ell < 0) fail(ErrorCode::invalid_argument, "2*ell must be nonnegative");
  RepIndex r;
  r.group = GroupKind::su2;
  r.two_ell = two_ell;
  return r;
}

RepIndex RepIndex::torus(std::vector<int> k) {
  if (k.empty()) fail(ErrorCode::invalid_argument, "torus index needs at least one component");
  RepIndex r;
  r.group = GroupKind::torus;
  r.k = std::move(k);
  return r;
}

double RepIndex::laplacian_eigenvalue() const {
  if (group == GroupKind::su2) return ell() * (ell() + 1.0);
  double s = 0.0;
  for (int ki : k) s += static_cast<double>(ki) * ki;
  return s;
}

double RepIndex::jap() const { return std::sqrt(1.0 + laplacian_eigenvalue()); }

std::string RepIndex::label() const {
  if (group == GroupKind::su2) {
    if (two_ell % 2 == 0) return "l=" + std::to_string(two_ell / 2);
    return "l=" + std::to_string(two_ell) + "/2";
  }
  std::string s = "k=(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

std::vector<RepIndex> Band::reps() const {
  std::vector<RepIndex> out;
  if (group == GroupKind::su2) {
    for (int t = 0; t <= limit; t += integer_only ? 2 : 1) out.push_back(RepIndex::su2(t));
    return out;
  }
  // Lexicographic enumeration of [-limit, limit]^dim.
  std::vector<int> k(static_cast<std::size_t>(torus_dim), -limit);
  while (true) {
    out.push_back(RepIndex::torus(k));
    int pos = torus_dim - 1;
    while (pos >= 0 && k[static_cast<std::size_t>(pos)] == limit) {
      k[static_cast<std::size_t>(pos)] = -limit;
      --pos;
    }
    if (pos < 0) break;
    ++k[static_cast<std::size_t>(pos)];
  }
  return out;
}

bool Band::contains(const RepIndex& rep) const {
  if (rep.group != group) return false;
  if (group == GroupKind::su2)
    return rep.two_ell <= limit && (!integer_only || rep.two_ell % 2 == 0);
  if (static_cast<int>(rep.k.size()) != torus_dim) return false;
  for (int ki : rep.k)
    if (std::abs(ki) > limit) return false;
  return true;
}

}  // namespace liewave
